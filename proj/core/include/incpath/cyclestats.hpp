#ifndef INCPATH_CYCLESTATS_HPP
#define INCPATH_CYCLESTATS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "incpath/numeric.hpp"

namespace incpath {

enum class Precision { rational, floating };

std::string_view to_string(Precision precision) noexcept;
// Accepts "rational", "float".
Precision parse_precision(std::string_view text);

inline constexpr std::size_t rational_cycle_cap = 200;
inline constexpr std::size_t float_cycle_cap = 5000;

// Distribution of L_k, the longest cycle of a uniform permutation of k
// elements. Entries are indexed by s = 0..k; index 0 is always zero.
struct CycleLengthTable {
  std::size_t k = 0;
  Precision precision = Precision::rational;
  std::vector<double> pmf;
  std::vector<double> cdf;
  // Filled in rational mode only.
  std::vector<Rational> exact_pmf;
  std::vector<Rational> exact_cdf;
};

// Bottom-up evaluation of
//   Pr[L_n = s] = sum_{j=1}^{floor(n/s)} Pr[L_{n-sj} <= s-1] / (j! s^j).
// Rational mode runs the recurrence on integer permutation counts and
// divides by k! at the end. Throws capacity_error above the mode's cap.
CycleLengthTable longest_cycle_distribution(std::size_t k, Precision precision = Precision::rational);

// alpha_k = E[1/L_k + ... + 1/k].
struct AlphaValue {
  double value = 0.0;
  std::optional<Rational> exact;
};

// Rational when k <= rational_cycle_cap, floating otherwise.
AlphaValue alpha(std::size_t k);
AlphaValue alpha(std::size_t k, Precision precision);

// 1 - exp(-1/alpha_k): the path fraction reached by k-greedy.
double predicted_fraction(std::size_t k);

// E[L_k / k].
double golomb_dickman_estimate(std::size_t k);

struct AlphaRow {
  std::size_t k = 0;
  double alpha = 0.0;
  double predicted_fraction = 0.0;
  double mean_ratio = 0.0;
  std::optional<Rational> exact_alpha;
  std::optional<Rational> exact_mean_ratio;
};

// Rows for k = 1..k_max from a single sweep of the recurrence.
std::vector<AlphaRow> alpha_table(std::size_t k_max, Precision precision);

// First-order Richardson extrapolation 2*alpha_{2m} - alpha_m using the
// largest m with 2m <= rows.size(). Assumes alpha_k = alpha + c/k + ...
double richardson_alpha_estimate(const std::vector<AlphaRow>& rows);

// Columns: k,alpha_k,predicted_fraction,mean_ratio
void write_alpha_csv(std::ostream& out, const std::vector<AlphaRow>& rows);

struct EmpiricalPmf {
  std::size_t k = 0;
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> counts;  // indexed by s = 0..k

  double mass(std::size_t s) const { return static_cast<double>(counts.at(s)) / static_cast<double>(trials); }
};

// Largest table size of a Chinese restaurant process with k customers:
// customer j opens a new table with probability 1/j, otherwise sits next
// to a uniformly chosen earlier customer. Deterministic in the seed.
EmpiricalPmf sample_longest_cycle(std::size_t k, std::uint64_t trials, std::uint64_t seed);

}  // namespace incpath

#endif  // INCPATH_CYCLESTATS_HPP
