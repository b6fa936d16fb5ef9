#include "autgrowth/growth.hpp"

#include <cmath>
#include <istream>
#include <sstream>

#include "autgrowth/errors.hpp"

namespace ag {

const char* to_string(TableKind k) {
  switch (k) {
    case TableKind::exact: return "exact";
    case TableKind::upper_bound: return "upper_bound";
    case TableKind::lower_bound: return "lower_bound";
  }
  return "?";
}

static TableKind kind_from_string(const std::string& s) {
  if (s == "exact") return TableKind::exact;
  if (s == "upper_bound") return TableKind::upper_bound;
  if (s == "lower_bound") return TableKind::lower_bound;
  throw format_error("bad table kind: " + s);
}

void GrowthTable::validate() const {
  if (cumulative) {
    for (size_t n = 1; n < counts.size(); ++n)
      AG_CHECK(counts[n] >= counts[n - 1], "cumulative table must be non-decreasing");
  }
}

std::string GrowthTable::csv() const {
  std::ostringstream os;
  os << "n,count,kind,cumulative\n";
  for (size_t n = 0; n < counts.size(); ++n)
    os << n << "," << counts[n] << "," << to_string(kind) << "," << (cumulative ? 1 : 0) << "\n";
  return os.str();
}

GrowthTable GrowthTable::from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("n,count", 0) != 0)
    throw format_error("missing growth table CSV header");
  GrowthTable t;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string n_s, c_s, k_s, cum_s;
    if (!std::getline(ls, n_s, ',') || !std::getline(ls, c_s, ',') ||
        !std::getline(ls, k_s, ',') || !std::getline(ls, cum_s, ','))
      throw format_error("bad growth table row: " + line);
    size_t n = std::stoul(n_s);
    if (n != t.counts.size()) throw format_error("non-contiguous growth table rows");
    t.counts.push_back(std::stoull(c_s));
    t.kind = kind_from_string(k_s);
    t.cumulative = cum_s == "1" || cum_s == "true";
  }
  return t;
}

std::vector<uint64_t> GrowthTable::histogram() const {
  AG_CHECK(cumulative, "histogram needs a cumulative table");
  std::vector<uint64_t> h(counts.size(), 0);
  for (size_t n = 0; n < counts.size(); ++n) h[n] = counts[n] - (n ? counts[n - 1] : 0);
  return h;
}

GrowthTable GrowthTable::cumulative_from_histogram(const std::vector<uint64_t>& h, TableKind kind) {
  GrowthTable t;
  t.kind = kind;
  t.cumulative = true;
  uint64_t acc = 0;
  for (uint64_t v : h) {
    acc += v;
    t.counts.push_back(acc);
  }
  return t;
}

GrowthTable product_growth(const std::vector<uint64_t>& h_hist, const std::vector<uint64_t>& k_hist,
                           TableKind h_kind, TableKind k_kind) {
  GrowthTable t;
  t.cumulative = true;
  // Exactness only survives when both factors are exact.
  t.kind = (h_kind == TableKind::exact && k_kind == TableKind::exact) ? TableKind::exact
           : (h_kind == TableKind::lower_bound || k_kind == TableKind::lower_bound)
               ? TableKind::lower_bound
               : TableKind::upper_bound;
  size_t n_max = h_hist.size() + k_hist.size();
  n_max = n_max >= 2 ? n_max - 2 : 0;
  t.counts.assign(n_max + 1, 0);
  for (size_t i = 0; i < h_hist.size(); ++i) {
    if (h_hist[i] == 0) continue;
    for (size_t j = 0; j < k_hist.size(); ++j) {
      if (k_hist[j] == 0) continue;
      t.counts[i + j] += h_hist[i] * k_hist[j];
    }
  }
  for (size_t n = 1; n <= n_max; ++n) t.counts[n] += t.counts[n - 1];
  return t;
}

CompareOutcome compare_growth(const GrowthTable& f, const GrowthTable& g, uint64_t lambda_max) {
  AG_CHECK(f.cumulative && g.cumulative, "compare_growth needs cumulative tables");
  for (uint64_t lambda = 1; lambda <= lambda_max; ++lambda) {
    bool ok = true;
    for (size_t n = 0; n < f.counts.size() && ok; ++n) {
      uint64_t arg = lambda * n + lambda;
      uint64_t gv = g.counts.at(std::min<size_t>(arg, g.max_n()));
      if (f.counts[n] > lambda * gv + lambda) ok = false;
    }
    if (ok) return CompareOutcome{CompareResult::precedes, lambda};
  }
  return CompareOutcome{CompareResult::incomparable_at_this_lambda, std::nullopt};
}

RateEstimate estimate_rate(const GrowthTable& t) {
  AG_CHECK(t.counts.size() >= 8, "estimate_rate needs a table of length >= 8");
  size_t lo = t.counts.size() / 2;
  RateEstimate e;
  std::vector<double> xs_log, xs_lin, ys;
  for (size_t n = lo; n < t.counts.size(); ++n) {
    if (t.counts[n] == 0 || n == 0) {
      e.skipped_zero_points = true;
      continue;
    }
    xs_log.push_back(std::log(static_cast<double>(n)));
    xs_lin.push_back(static_cast<double>(n));
    ys.push_back(std::log(static_cast<double>(t.counts[n])));
  }
  auto slope = [](const std::vector<double>& xs, const std::vector<double>& ys) {
    double n = static_cast<double>(xs.size());
    if (n < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };
  e.poly_degree = slope(xs_log, ys);
  e.exp_rate = slope(xs_lin, ys);
  return e;
}

}  // namespace ag
