#include "incpath/secondmoment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "incpath/errors.hpp"

namespace incpath {

namespace {

std::size_t check_hamiltonian(std::span<const Vertex> a, std::span<const Vertex> b) {
  const std::size_t n = a.size();
  if (n < 2) throw std::invalid_argument("Hamiltonian sequences need n >= 2");
  if (b.size() != n) throw std::invalid_argument("Hamiltonian sequences differ in length");
  std::vector<bool> seen_a(n, false), seen_b(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] >= n || seen_a[a[i]] || b[i] >= n || seen_b[b[i]]) {
      throw std::invalid_argument("vertex sequence is not a permutation of 0..n-1");
    }
    seen_a[a[i]] = true;
    seen_b[b[i]] = true;
  }
  return n;
}

// Position of each edge of a along b, or -1.
std::vector<long> shared_positions(std::span<const Vertex> a, std::span<const Vertex> b, std::size_t n) {
  std::vector<long> pos_in_b(edge_count(n), -1);
  for (std::size_t j = 0; j + 1 < n; ++j) pos_in_b[edge_index_unchecked(b[j], b[j + 1], n)] = static_cast<long>(j);
  std::vector<long> result(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) result[i] = pos_in_b[edge_index_unchecked(a[i], a[i + 1], n)];
  return result;
}

template <class Count>
bool interleavings(const std::vector<long>& a_in_b, const std::vector<bool>& b_shared, Count& out) {
  const std::size_t m = a_in_b.size();
  std::vector<Count> dp((m + 1) * (m + 1), Count(0));
  auto at = [&](std::size_t i, std::size_t j) -> Count& { return dp[i * (m + 1) + j]; };
  at(0, 0) = 1;
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      const Count here = at(i, j);
      if (here == 0) continue;
      auto push = [&](std::size_t ni, std::size_t nj) {
        if constexpr (std::is_same_v<Count, std::uint64_t>) {
          return !__builtin_add_overflow(at(ni, nj), here, &at(ni, nj));
        } else {
          at(ni, nj) += here;
          return true;
        }
      };
      if (i < m && a_in_b[i] < 0 && !push(i + 1, j)) return false;
      if (j < m && !b_shared[j] && !push(i, j + 1)) return false;
      if (i < m && j < m && a_in_b[i] == static_cast<long>(j) && !push(i + 1, j + 1)) return false;
    }
  }
  out = at(m, m);
  return true;
}

Integer extension_count_unchecked(std::span<const Vertex> a, std::span<const Vertex> b, std::size_t n) {
  const auto a_in_b = shared_positions(a, b, n);
  std::vector<bool> b_shared(n - 1, false);
  for (long p : a_in_b) {
    if (p >= 0) b_shared[static_cast<std::size_t>(p)] = true;
  }
  std::uint64_t small = 0;
  if (interleavings(a_in_b, b_shared, small)) return Integer(small);
  Integer big = 0;
  interleavings(a_in_b, b_shared, big);
  return big;
}

ProfileSignature classify_unchecked(std::span<const Vertex> a, std::span<const Vertex> b, std::size_t n) {
  const auto a_in_b = shared_positions(a, b, n);
  ProfileSignature sig;
  std::size_t run = 0;
  auto close_run = [&] {
    if (run == 0) return;
    ++sig.k;
    if (run == 1) ++sig.l;
    run = 0;
  };
  for (long p : a_in_b) {
    if (p >= 0) {
      ++sig.c;
      ++run;
    } else {
      close_run();
    }
  }
  close_run();
  return sig;
}

void check_moment_n(std::size_t n) {
  if (n < 2) throw std::invalid_argument("moment computations need n >= 2");
  if (n > moment_cap) {
    throw capacity_error("n=" + std::to_string(n) + " exceeds the moment enumeration cap of " +
                         std::to_string(moment_cap));
  }
}

void check_signature(std::size_t c, std::size_t k, std::size_t l, std::size_t n) {
  const bool ok = n >= 2 && c <= n - 1 && k <= c && k <= n - c && l <= k && l + c >= 2 * k && (c == 0) == (k == 0);
  if (!ok) {
    throw std::invalid_argument("signature (" + std::to_string(c) + "," + std::to_string(k) + "," +
                                std::to_string(l) + ") cannot occur at n=" + std::to_string(n));
  }
}

// (2m+k)! / (m! m! k!) with m = n - c - 1.
Integer profile_multinomial(std::size_t c, std::size_t k, std::size_t n) {
  const std::size_t m = n - c - 1;
  return factorial(2 * m + k) / (factorial(m) * factorial(m) * factorial(k));
}

Integer power_of_two(std::size_t e) { return Integer(1) << static_cast<unsigned>(e); }

// sum over c in [lo, hi] of
//   sum_{k,l} bound(c,k,l) * n! (n-c-k)! / (2n-c-2)!
// with the per-l bound, or the aggregated one when `aggregated` is set.
Rational profile_sum(std::size_t n, std::size_t lo, std::size_t hi, bool aggregated) {
  const auto fact = factorial_table(2 * n);
  Rational total = 0;
  for (std::size_t c = lo; c <= hi && c <= n - 1; ++c) {
    const std::size_t m = n - c - 1;
    Integer inner = 0;
    const std::size_t k_max = std::min(c, n - c);
    for (std::size_t k = c == 0 ? 0 : 1; k <= k_max; ++k) {
      Integer profiles = 0;
      if (aggregated) {
        profiles = power_of_two(k) * composition_count(static_cast<long long>(c), static_cast<long long>(k), 1);
      } else {
        const std::size_t l_min = 2 * k > c ? 2 * k - c : 0;
        for (std::size_t l = l_min; l <= k; ++l) {
          profiles += power_of_two(l) * binomial(static_cast<long long>(k), static_cast<long long>(l)) *
                      composition_count(static_cast<long long>(c - l), static_cast<long long>(k - l), 2);
        }
      }
      if (profiles == 0) continue;
      inner += profiles * (fact[2 * m + k] / (fact[m] * fact[m] * fact[k])) * fact[n - c - k];
    }
    total += Rational(inner * fact[n], fact[2 * n - c - 2]);
  }
  return total;
}

}  // namespace

ProfileSignature classify_pair(std::span<const Vertex> a, std::span<const Vertex> b) {
  return classify_unchecked(a, b, check_hamiltonian(a, b));
}

Integer linear_extension_count(std::span<const Vertex> a, std::span<const Vertex> b) {
  return extension_count_unchecked(a, b, check_hamiltonian(a, b));
}

Rational pair_probability(std::span<const Vertex> a, std::span<const Vertex> b) {
  const std::size_t n = check_hamiltonian(a, b);
  const auto sig = classify_unchecked(a, b, n);
  return Rational(extension_count_unchecked(a, b, n), factorial(2 * (n - 1) - sig.c));
}

ProfileCensus profile_census(std::size_t n, CensusMethod method) {
  check_moment_n(n);
  const Integer scale = method == CensusMethod::symmetry_reduced ? factorial(n) : Integer(1);

  ProfileCensus census;
  std::vector<Vertex> a(n), b(n);
  std::iota(a.begin(), a.end(), Vertex{0});
  auto visit_b = [&] {
    std::iota(b.begin(), b.end(), Vertex{0});
    do {
      const auto sig = classify_unchecked(a, b, n);
      auto& entry = census[sig];
      entry.pair_count += scale;
      entry.extension_sum += scale * extension_count_unchecked(a, b, n);
    } while (std::next_permutation(b.begin(), b.end()));
  };
  if (method == CensusMethod::symmetry_reduced) {
    visit_b();
  } else {
    do {
      visit_b();
    } while (std::next_permutation(a.begin(), a.end()));
  }
  for (auto& [sig, entry] : census) entry.mass = Rational(entry.extension_sum, factorial(2 * n - sig.c - 2));
  return census;
}

MomentReport exact_moments(std::size_t n) {
  check_moment_n(n);
  MomentReport report;
  report.n = n;
  report.first_moment = Rational(factorial(n), factorial(n - 1));
  report.census = profile_census(n, CensusMethod::symmetry_reduced);
  for (const auto& [sig, entry] : report.census) report.second_moment += entry.mass;
  return report;
}

Integer labeled_profile_bound(std::size_t c, std::size_t k, std::size_t l, std::size_t n) {
  check_signature(c, k, l, n);
  return power_of_two(l) * binomial(static_cast<long long>(k), static_cast<long long>(l)) *
         composition_count(static_cast<long long>(c - l), static_cast<long long>(k - l), 2) *
         profile_multinomial(c, k, n);
}

Integer labeled_profile_bound_aggregated(std::size_t c, std::size_t k, std::size_t n) {
  const bool ok = n >= 2 && c <= n - 1 && k <= c && k <= n - c && (c == 0) == (k == 0);
  if (!ok) {
    throw std::invalid_argument("(c,k)=(" + std::to_string(c) + "," + std::to_string(k) +
                                ") cannot occur at n=" + std::to_string(n));
  }
  return power_of_two(k) * composition_count(static_cast<long long>(c), static_cast<long long>(k), 1) *
         profile_multinomial(c, k, n);
}

Integer embedding_bound(std::size_t c, std::size_t k, std::size_t n) {
  if (n < 2 || c > n - 1 || k > c || k > n - c) {
    throw std::invalid_argument("embedding_bound: (c,k)=(" + std::to_string(c) + "," + std::to_string(k) +
                                ") out of range for n=" + std::to_string(n));
  }
  return factorial(n) * factorial(n - c - k);
}

SecondMomentSums s_sum_bounds(std::size_t n) {
  if (n < 10) throw std::invalid_argument("s_sum_bounds: n must be at least 10");
  SecondMomentSums sums;
  sums.n = n;
  sums.small_c_max = static_cast<std::size_t>(std::floor(std::log(static_cast<double>(n))));
  sums.middle_c_max = 9 * n / 10;
  sums.s1_without_poisson = profile_sum(n, 0, sums.small_c_max, false);
  sums.s1_value = HighPrecision(sums.s1_without_poisson) * boost::multiprecision::exp(HighPrecision(-2));
  sums.s2_bound = profile_sum(n, sums.small_c_max + 1, sums.middle_c_max, true);
  sums.s3_bound = profile_sum(n, sums.middle_c_max + 1, n - 1, true);
  return sums;
}

Rational constant_c_partial_exact(std::size_t c_max) {
  // Every term is C(k,l) * comp * 2^{l+k} / (2^c k!); scale by 2^{c_max} c_max!.
  const auto fact = factorial_table(c_max);
  Integer numerator = 0;
  for (std::size_t c = 0; c <= c_max; ++c) {
    for (std::size_t k = 0; k <= c; ++k) {
      const Integer weight = fact[c_max] / fact[k];
      const std::size_t l_min = 2 * k > c ? 2 * k - c : 0;
      for (std::size_t l = l_min; l <= k; ++l) {
        const Integer comp = composition_count(static_cast<long long>(c - l), static_cast<long long>(k - l), 2);
        if (comp == 0) continue;
        numerator += binomial(static_cast<long long>(k), static_cast<long long>(l)) * comp * weight *
                     power_of_two(l + k + c_max - c);
      }
    }
  }
  return Rational(numerator, power_of_two(c_max) * fact[c_max]);
}

HighPrecision constant_c_partial(std::size_t c_max) { return HighPrecision(constant_c_partial_exact(c_max)); }

void write_census_csv(std::ostream& out, const ProfileCensus& census) {
  out << "c,k,l,pair_count,mass_numerator,mass_denominator\n";
  for (const auto& [sig, entry] : census) {
    out << sig.c << ',' << sig.k << ',' << sig.l << ',' << entry.pair_count << ','
        << numerator(entry.mass) << ',' << denominator(entry.mass) << '\n';
  }
}

nlohmann::json rational_to_json(const Rational& q) {
  return nlohmann::json{{"numerator", numerator(q).str()}, {"denominator", denominator(q).str()},
                        {"approx", to_double(q)}};
}

nlohmann::json to_json(const MomentReport& report) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& [sig, entry] : report.census) {
    const Integer bound = labeled_profile_bound(sig.c, sig.k, sig.l, report.n) * embedding_bound(sig.c, sig.k, report.n);
    classes.push_back({{"c", sig.c},
                       {"k", sig.k},
                       {"l", sig.l},
                       {"pair_count", entry.pair_count.str()},
                       {"extension_sum", entry.extension_sum.str()},
                       {"mass", rational_to_json(entry.mass)},
                       {"bound", bound.str()},
                       {"bound_ratio", to_double(Rational(entry.extension_sum, bound))}});
  }
  return nlohmann::json{{"n", report.n},
                        {"first_moment", rational_to_json(report.first_moment)},
                        {"second_moment", rational_to_json(report.second_moment)},
                        {"pairs", "ordered pairs of vertex sequences; each undirected path is counted in both directions"},
                        {"census", std::move(classes)}};
}

}  // namespace incpath
