#include "autgrowth/words.hpp"

#include <algorithm>

#include "autgrowth/errors.hpp"

namespace ag {

GroupWord GroupWord::parse(const std::string& text) {
  std::vector<Letter> ls;
  ls.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      ls.push_back(Letter{static_cast<int8_t>(c - 'a'), 1});
    } else if (c >= 'A' && c <= 'Z') {
      ls.push_back(Letter{static_cast<int8_t>(c - 'A'), -1});
    } else if (c == ' ' || c == '\t') {
      continue;
    } else {
      throw format_error(std::string("bad word character: '") + c + "'");
    }
  }
  return GroupWord(std::move(ls));
}

std::string GroupWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (const Letter& l : letters_) {
    char base = l.sign > 0 ? 'a' : 'A';
    s.push_back(static_cast<char>(base + l.gen));
  }
  return s;
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> ls(letters_.rbegin(), letters_.rend());
  for (Letter& l : ls) l = l.inverse();
  return GroupWord(std::move(ls));
}

GroupWord GroupWord::concat(const GroupWord& other) const {
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
  return GroupWord(std::move(ls));
}

bool GroupWord::operator<(const GroupWord& other) const {
  if (letters_.size() != other.letters_.size()) return letters_.size() < other.letters_.size();
  return std::lexicographical_compare(letters_.begin(), letters_.end(), other.letters_.begin(),
                                      other.letters_.end(), letter_less);
}

GroupWord free_reduce(const GroupWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return GroupWord(std::move(out));
}

CyclicReduction cyclic_reduce(const GroupWord& w) {
  const auto& ls = w.letters();
  size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  GroupWord core(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi));
  GroupWord conj(std::vector<Letter>(ls.begin() + hi, ls.end()));
  return CyclicReduction{std::move(core), std::move(conj)};
}

GroupWord rotate(const GroupWord& w, size_t by) {
  if (w.empty()) return w;
  by %= w.size();
  std::vector<Letter> ls(w.letters().begin() + by, w.letters().end());
  ls.insert(ls.end(), w.letters().begin(), w.letters().begin() + by);
  return GroupWord(std::move(ls));
}

CyclicWord cyclic_canonical(const GroupWord& w) {
  if (w.empty()) return CyclicWord{w, 1};
  GroupWord best = w;
  size_t distinct = 1;
  for (size_t i = 1; i < w.size(); ++i) {
    GroupWord r = rotate(w, i);
    if (r == w) {
      // rotations repeat with period i; distinct count is i
      distinct = i;
      break;
    }
  }
  if (distinct == 1 && w.size() > 1) distinct = w.size();
  for (size_t i = 1; i < w.size(); ++i) {
    GroupWord r = rotate(w, i);
    if (r < best) best = r;
  }
  return CyclicWord{std::move(best), distinct};
}

}  // namespace ag
