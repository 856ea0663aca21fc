#include "incpath/cyclestats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "incpath/errors.hpp"
#include "incpath/rng.hpp"

namespace incpath {

std::string_view to_string(Precision precision) noexcept {
  return precision == Precision::rational ? "rational" : "float";
}

Precision parse_precision(std::string_view text) {
  if (text == "rational") return Precision::rational;
  if (text == "float" || text == "floating") return Precision::floating;
  throw std::invalid_argument("unknown precision '" + std::string(text) + "'");
}

namespace {

void check_capacity(std::size_t k, Precision precision) {
  if (k < 1) throw std::invalid_argument("cycle statistics need k >= 1");
  const std::size_t cap = precision == Precision::rational ? rational_cycle_cap : float_cycle_cap;
  if (k > cap) {
    throw capacity_error("k=" + std::to_string(k) + " exceeds the " + std::string(to_string(precision)) +
                         " cap of " + std::to_string(cap));
  }
}

// Neumaier summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// at_most[m][s] = number of permutations of m elements whose cycles all
// have length <= s, for 0 <= s, m <= k. Uses
//   #{L_m = s} = sum_j m! / ((m-sj)! j! s^j) * at_most[m-sj][s-1],
// the integer form of the probability recurrence.
std::vector<std::vector<Integer>> cycle_count_table(std::size_t k) {
  const auto fact = factorial_table(k);
  std::vector<std::vector<Integer>> at_most(k + 1, std::vector<Integer>(k + 1));
  for (std::size_t s = 0; s <= k; ++s) at_most[0][s] = 1;
  for (std::size_t m = 1; m <= k; ++m) at_most[m][0] = 0;

  Integer term, denom, power;
  for (std::size_t s = 1; s <= k; ++s) {
    for (std::size_t m = 1; m <= k; ++m) {
      Integer exactly = 0;
      power = 1;
      for (std::size_t j = 1; j * s <= m; ++j) {
        power *= s;
        denom = fact[m - s * j] * fact[j] * power;
        mpz_divexact(term.backend().data(), fact[m].backend().data(), denom.backend().data());
        exactly += term * at_most[m - s * j][s - 1];
      }
      at_most[m][s] = at_most[m][s - 1] + exactly;
    }
  }
  return at_most;
}

// Sweeps s = 1..k keeping one column of Pr[L_m <= s] for all m <= k and
// reports Pr[L_m = s] for every m through `visit(s, m, mass)`.
template <class Visit>
void float_sweep(std::size_t k, Visit&& visit) {
  std::vector<double> below(k + 1, 0.0);  // Pr[L_m <= s-1]
  std::vector<double> next(k + 1, 0.0);
  below[0] = 1.0;
  std::vector<double> weight;  // 1 / (j! s^j)
  for (std::size_t s = 1; s <= k; ++s) {
    weight.assign(k / s + 1, 0.0);
    weight[0] = 1.0;
    for (std::size_t j = 1; j < weight.size(); ++j) {
      weight[j] = weight[j - 1] / (static_cast<double>(j) * static_cast<double>(s));
    }
    next[0] = 1.0;
    for (std::size_t m = 1; m <= k; ++m) {
      CompensatedSum exactly;
      for (std::size_t j = 1; j * s <= m; ++j) {
        if (weight[j] == 0.0) break;
        exactly.add(weight[j] * below[m - s * j]);
      }
      const double mass = exactly.value();
      next[m] = below[m] + mass;
      visit(s, m, mass);
    }
    std::swap(below, next);
  }
}

}  // namespace

CycleLengthTable longest_cycle_distribution(std::size_t k, Precision precision) {
  check_capacity(k, precision);
  CycleLengthTable table;
  table.k = k;
  table.precision = precision;
  table.pmf.assign(k + 1, 0.0);
  table.cdf.assign(k + 1, 0.0);

  if (precision == Precision::rational) {
    const auto counts = cycle_count_table(k);
    const Integer total = factorial(k);
    table.exact_pmf.assign(k + 1, Rational(0));
    table.exact_cdf.assign(k + 1, Rational(0));
    for (std::size_t s = 1; s <= k; ++s) {
      table.exact_cdf[s] = Rational(counts[k][s], total);
      table.exact_pmf[s] = Rational(counts[k][s] - counts[k][s - 1], total);
      table.pmf[s] = to_double(table.exact_pmf[s]);
      table.cdf[s] = to_double(table.exact_cdf[s]);
    }
    return table;
  }

  float_sweep(k, [&](std::size_t s, std::size_t m, double mass) {
    if (m == k) table.pmf[s] = mass;
  });
  CompensatedSum running;
  for (std::size_t s = 1; s <= k; ++s) {
    running.add(table.pmf[s]);
    table.cdf[s] = running.value();
  }
  return table;
}

std::vector<AlphaRow> alpha_table(std::size_t k_max, Precision precision) {
  check_capacity(k_max, precision);
  std::vector<AlphaRow> rows(k_max);

  if (precision == Precision::rational) {
    // alpha_m = sum_{i=1}^m Pr[L_m <= i] / i, since 1/L + ... + 1/m counts
    // each i >= L once. Likewise E[L_m] = sum_{i=0}^{m-1} Pr[L_m > i].
    const auto counts = cycle_count_table(k_max);
    Integer lcm = 1;
    Integer fact = 1;
    for (std::size_t m = 1; m <= k_max; ++m) {
      fact *= m;
      lcm = boost::multiprecision::lcm(lcm, Integer(m));
      Integer alpha_num = 0;
      Integer mean_num = 0;
      for (std::size_t i = 1; i <= m; ++i) {
        alpha_num += counts[m][i] * (lcm / i);
        mean_num += fact - counts[m][i - 1];
      }
      auto& row = rows[m - 1];
      row.k = m;
      row.exact_alpha = Rational(alpha_num, fact * lcm);
      row.exact_mean_ratio = Rational(mean_num, fact * m);
      row.alpha = to_double(*row.exact_alpha);
      row.mean_ratio = to_double(*row.exact_mean_ratio);
      row.predicted_fraction = 1.0 - std::exp(-1.0 / row.alpha);
    }
    return rows;
  }

  std::vector<double> harmonic(k_max + 1, 0.0);
  for (std::size_t i = 1; i <= k_max; ++i) harmonic[i] = harmonic[i - 1] + 1.0 / static_cast<double>(i);
  std::vector<CompensatedSum> alpha_sum(k_max + 1);
  std::vector<CompensatedSum> mean_sum(k_max + 1);
  float_sweep(k_max, [&](std::size_t s, std::size_t m, double mass) {
    if (mass == 0.0) return;
    // H_m - H_{s-1} summed directly for short tails keeps full precision.
    double tail = 0.0;
    if (m - s < 64) {
      for (std::size_t i = m; i >= s; --i) tail += 1.0 / static_cast<double>(i);
    } else {
      tail = harmonic[m] - harmonic[s - 1];
    }
    alpha_sum[m].add(mass * tail);
    mean_sum[m].add(mass * static_cast<double>(s));
  });
  for (std::size_t m = 1; m <= k_max; ++m) {
    auto& row = rows[m - 1];
    row.k = m;
    row.alpha = alpha_sum[m].value();
    row.mean_ratio = mean_sum[m].value() / static_cast<double>(m);
    row.predicted_fraction = 1.0 - std::exp(-1.0 / row.alpha);
  }
  return rows;
}

AlphaValue alpha(std::size_t k, Precision precision) {
  check_capacity(k, precision);
  if (precision == Precision::rational) {
    const auto table = longest_cycle_distribution(k, Precision::rational);
    // sum_s Pr[L_k = s] * (H_k - H_{s-1}), with H_0 = 0.
    Rational result = 0;
    Rational tail = 0;
    for (std::size_t s = k; s >= 1; --s) {
      tail += Rational(1, s);
      result += table.exact_pmf[s] * tail;
    }
    return AlphaValue{to_double(result), result};
  }
  const auto rows = alpha_table(k, Precision::floating);
  return AlphaValue{rows.back().alpha, std::nullopt};
}

AlphaValue alpha(std::size_t k) {
  return alpha(k, k <= rational_cycle_cap ? Precision::rational : Precision::floating);
}

double predicted_fraction(std::size_t k) { return 1.0 - std::exp(-1.0 / alpha(k).value); }

double golomb_dickman_estimate(std::size_t k) {
  const Precision precision = k <= rational_cycle_cap ? Precision::rational : Precision::floating;
  const auto table = longest_cycle_distribution(k, precision);
  if (precision == Precision::rational) {
    Rational mean = 0;
    for (std::size_t s = 1; s <= k; ++s) mean += table.exact_pmf[s] * s;
    return to_double(mean / k);
  }
  CompensatedSum mean;
  for (std::size_t s = 1; s <= k; ++s) mean.add(table.pmf[s] * static_cast<double>(s));
  return mean.value() / static_cast<double>(k);
}

double richardson_alpha_estimate(const std::vector<AlphaRow>& rows) {
  if (rows.size() < 2) throw std::invalid_argument("richardson_alpha_estimate: need at least two rows");
  const std::size_t m = rows.size() / 2;
  return 2.0 * rows[2 * m - 1].alpha - rows[m - 1].alpha;
}

void write_alpha_csv(std::ostream& out, const std::vector<AlphaRow>& rows) {
  out << "k,alpha_k,predicted_fraction,mean_ratio\n";
  char buffer[128];
  for (const auto& r : rows) {
    std::snprintf(buffer, sizeof buffer, "%zu,%.17g,%.17g,%.17g\n", r.k, r.alpha, r.predicted_fraction,
                  r.mean_ratio);
    out << buffer;
  }
}

EmpiricalPmf sample_longest_cycle(std::size_t k, std::uint64_t trials, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("sample_longest_cycle: k must be at least 1");
  if (trials < 1) throw std::invalid_argument("sample_longest_cycle: trials must be at least 1");
  EmpiricalPmf result;
  result.k = k;
  result.trials = trials;
  result.counts.assign(k + 1, 0);

  Rng rng(seed);
  std::vector<std::size_t> table_of(k);
  std::vector<std::size_t> table_size;
  table_size.reserve(k);
  for (std::uint64_t t = 0; t < trials; ++t) {
    table_size.clear();
    std::size_t largest = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      const auto pick = static_cast<std::size_t>(uniform_below(rng, j));
      std::size_t table;
      if (pick == j - 1) {
        table = table_size.size();
        table_size.push_back(0);
      } else {
        table = table_of[pick];
      }
      table_of[j - 1] = table;
      largest = std::max(largest, ++table_size[table]);
    }
    ++result.counts[largest];
  }
  return result;
}

}  // namespace incpath
