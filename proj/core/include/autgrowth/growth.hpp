#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ag {

enum class TableKind { exact, upper_bound, lower_bound };

const char* to_string(TableKind k);

// Counts indexed by length 0..N. Cumulative tables are non-decreasing.
struct GrowthTable {
  std::vector<uint64_t> counts;
  TableKind kind = TableKind::exact;
  bool cumulative = true;

  size_t max_n() const { return counts.empty() ? 0 : counts.size() - 1; }
  uint64_t at(size_t n) const { return counts.at(n); }

  void validate() const;  // throws internal_error on invariant violation
  std::string csv() const;
  static GrowthTable from_csv(std::istream& in);

  // Per-length histogram from a cumulative table (first differences).
  std::vector<uint64_t> histogram() const;
  static GrowthTable cumulative_from_histogram(const std::vector<uint64_t>& h, TableKind kind);
};

// counts[n] = #{(i,j) : i + j <= n} weighted by the two exact-length orbit
// histograms. Orbit lengths add across a direct product with the union
// generating set, so this is the product table of the factors.
GrowthTable product_growth(const std::vector<uint64_t>& h_hist,
                           const std::vector<uint64_t>& k_hist,
                           TableKind h_kind = TableKind::exact,
                           TableKind k_kind = TableKind::exact);

enum class CompareResult { precedes, incomparable_at_this_lambda };

// Finite-range evidence for f \preceq g: some lambda <= lambda_max has
// f(n) <= lambda * g(lambda*n + lambda) + lambda for all n in f's range,
// with g clamped at its last entry. Never a proof of the asymptotic claim.
struct CompareOutcome {
  CompareResult result;
  std::optional<uint64_t> witness_lambda;
};
CompareOutcome compare_growth(const GrowthTable& f, const GrowthTable& g, uint64_t lambda_max);

// Least-squares slope of log(counts) against log(n) (polynomial degree) and
// against n (exponential rate), over the upper half of the range. Zero
// counts are skipped and flagged.
struct RateEstimate {
  double poly_degree = 0.0;
  double exp_rate = 0.0;
  bool skipped_zero_points = false;
};
RateEstimate estimate_rate(const GrowthTable& t);

}  // namespace ag
