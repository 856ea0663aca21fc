#ifndef INCPATH_SECONDMOMENT_HPP
#define INCPATH_SECONDMOMENT_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>

#include <nlohmann/json.hpp>

#include "incpath/numeric.hpp"
#include "incpath/ordering.hpp"

namespace incpath {

inline constexpr std::size_t moment_cap = 7;

// Intersection profile summary of an ordered pair of Hamiltonian vertex
// sequences: c shared edges forming k common segments, l of which are a
// single edge.
struct ProfileSignature {
  std::size_t c = 0;
  std::size_t k = 0;
  std::size_t l = 0;

  friend auto operator<=>(const ProfileSignature&, const ProfileSignature&) = default;
};

// Throws std::invalid_argument unless a and b are permutations of 0..n-1
// for the same n >= 2.
ProfileSignature classify_pair(std::span<const Vertex> a, std::span<const Vertex> b);

// Linear extensions of the poset formed by the edge chains of a and b
// (traversal order) with shared edges identified. Zero when the shared
// edges appear in different relative orders.
Integer linear_extension_count(std::span<const Vertex> a, std::span<const Vertex> b);

// Probability that a uniform edge ordering makes both a and b increasing:
// linear_extension_count / (2(n-1) - c)!.
Rational pair_probability(std::span<const Vertex> a, std::span<const Vertex> b);

struct CensusEntry {
  Integer pair_count = 0;      // ordered pairs (A, B) in the class
  Integer extension_sum = 0;   // sum of linear_extension_count over those pairs
  Rational mass = 0;           // extension_sum / (2n - c - 2)!: the class's share of E[H_n^2]
};

using ProfileCensus = std::map<ProfileSignature, CensusEntry>;

enum class CensusMethod {
  // Fix A to the identity sequence and scale by n!; every class statistic
  // is invariant under relabelling the vertices of both paths at once.
  symmetry_reduced,
  // Every one of the (n!)^2 ordered pairs.
  full_enumeration,
};

// Throws capacity_error for n > moment_cap, std::invalid_argument for n < 2.
ProfileCensus profile_census(std::size_t n, CensusMethod method = CensusMethod::symmetry_reduced);

struct MomentReport {
  std::size_t n = 0;
  Rational first_moment = 0;
  Rational second_moment = 0;
  ProfileCensus census;
};

// E[H_n] = n! / (n-1)! and E[H_n^2] = sum over ordered pairs of
// pair_probability, with the census that produced it.
MomentReport exact_moments(std::size_t n);

// Bound on the number of labelled profiles with signature (c, k, l):
//   2^l C(k,l) C(c-k-1, k-l-1) (2(n-c-1)+k)! / ((n-c-1)!^2 k!)
// where the middle binomial is read as the number of compositions of c-l
// into k-l parts of size >= 2 (so 1 when k = l = c, 0 when impossible).
// Throws std::invalid_argument for signatures that cannot occur at this n.
Integer labeled_profile_bound(std::size_t c, std::size_t k, std::size_t l, std::size_t n);

// The l-free relaxation 2^k C(c-1, k-1) (2(n-c-1)+k)! / ((n-c-1)!^2 k!).
Integer labeled_profile_bound_aggregated(std::size_t c, std::size_t k, std::size_t n);

// n! (n-c-k)!: pairs of paths fitting one unlabelled profile.
Integer embedding_bound(std::size_t c, std::size_t k, std::size_t n);

struct SecondMomentSums {
  std::size_t n = 0;
  std::size_t small_c_max = 0;   // floor(ln n)
  std::size_t middle_c_max = 0;  // floor(9n/10)
  Rational s1_without_poisson;   // S1 right-hand side before the e^{-2} factor
  HighPrecision s1_value;        // e^{-2} * s1_without_poisson
  Rational s2_bound;
  Rational s3_bound;
};

// Exact evaluation of the three parts of the second-moment sum: the
// small-c part with the per-l bound, the middle and large-c parts with the
// aggregated bound. Throws std::invalid_argument for n < 10.
SecondMomentSums s_sum_bounds(std::size_t n);

// Partial sums over c <= c_max of
//   sum_{k,l} C(k,l) C(c-k-1, k-l-1) 2^{l-c+k} / k!
// which tend to e^3.
Rational constant_c_partial_exact(std::size_t c_max);
HighPrecision constant_c_partial(std::size_t c_max);

// Columns: c,k,l,pair_count,mass_numerator,mass_denominator
void write_census_csv(std::ostream& out, const ProfileCensus& census);

nlohmann::json rational_to_json(const Rational& q);
nlohmann::json to_json(const MomentReport& report);

}  // namespace incpath

#endif  // INCPATH_SECONDMOMENT_HPP
