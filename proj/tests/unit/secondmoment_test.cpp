#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "incpath/errors.hpp"
#include "incpath/rng.hpp"
#include "incpath/secondmoment.hpp"
#include "oracles.hpp"

using namespace incpath;

namespace {

using Seq = std::vector<Vertex>;

Seq identity(std::size_t n) {
  Seq a(n);
  std::iota(a.begin(), a.end(), Vertex{0});
  return a;
}

Seq shuffled(std::size_t n, Rng& rng) {
  Seq a = identity(n);
  for (std::size_t i = n; i > 1; --i) std::swap(a[i - 1], a[uniform_below(rng, i)]);
  return a;
}

// Fraction of all orderings of K_n under which both sequences increase.
Rational enumerated_pair_probability(const Seq& a, const Seq& b) {
  std::uint64_t hits = 0, total = 0;
  oracle::for_each_ordering(a.size(), [&](const EdgeOrdering& f) {
    ++total;
    if (oracle::increasing(f, a) && oracle::increasing(f, b)) ++hits;
  });
  return Rational(hits, total);
}

// A pair on nine vertices sharing the segment 1-2-3 and the single edge
// 6-7, which B walks backwards.
const Seq figure_a{0, 1, 2, 3, 4, 5, 6, 7, 8};
const Seq figure_b{0, 4, 1, 2, 3, 5, 7, 6, 8};

}  // namespace

TEST(ClassifyPair, Examples) {
  for (std::size_t n : {3u, 5u, 9u}) {
    EXPECT_EQ(classify_pair(identity(n), identity(n)), (ProfileSignature{n - 1, 1, 0}));
  }
  EXPECT_EQ(classify_pair(figure_a, figure_b), (ProfileSignature{3, 2, 1}));
  EXPECT_EQ(classify_pair(Seq{0, 1, 2, 3}, Seq{1, 3, 0, 2}), (ProfileSignature{0, 0, 0}));
}

TEST(ClassifyPair, RejectsNonHamiltonianInput) {
  EXPECT_THROW(classify_pair(Seq{0, 1, 1}, Seq{0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(classify_pair(Seq{0, 1, 2}, Seq{0, 1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(classify_pair(Seq{0, 1, 3}, Seq{0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(classify_pair(Seq{0}, Seq{0}), std::invalid_argument);
  EXPECT_THROW(pair_probability(Seq{0, 2, 2}, Seq{0, 1, 2}), std::invalid_argument);
}

TEST(ClassifyPair, InvariantUnderRelabelingAndSatisfiesConstraints) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + uniform_below(rng, 8);
    const Seq a = shuffled(n, rng);
    const Seq b = shuffled(n, rng);
    const Seq relabel = shuffled(n, rng);
    Seq ra, rb;
    for (Vertex v : a) ra.push_back(relabel[v]);
    for (Vertex v : b) rb.push_back(relabel[v]);
    const auto sig = classify_pair(a, b);
    EXPECT_EQ(classify_pair(ra, rb), sig);
    EXPECT_EQ(classify_pair(b, a).c, sig.c);
    EXPECT_LE(sig.k, sig.c);
    EXPECT_LE(sig.k, n - sig.c);
    EXPECT_LE(sig.l, sig.k);
    EXPECT_GE(sig.l + sig.c, 2 * sig.k);
  }
}

TEST(PairProbability, Examples) {
  EXPECT_EQ(pair_probability(identity(4), identity(4)), Rational(1, 6));
  EXPECT_EQ(pair_probability(Seq{0, 1, 2, 3}, Seq{1, 3, 0, 2}), Rational(1, 36));
  EXPECT_EQ(linear_extension_count(Seq{0, 1, 2, 3}, Seq{1, 3, 0, 2}), 20);
  // shared two-edge segment 0-1-2 walked in opposite directions
  EXPECT_EQ(pair_probability(Seq{0, 1, 2, 3}, Seq{2, 1, 0, 3}), 0);
  EXPECT_EQ(pair_probability(Seq{0, 1, 2, 3}, Seq{3, 2, 1, 0}), 0);
}

TEST(PairProbability, FigurePair) {
  // Shared edges appear in the same order in both walks, so only the
  // private edges interleave: 01 against 04,41 before 12 (3 ways); 34,45,56
  // against 35,57 between 23 and 67 (10 ways); 78 against 68 after (2 ways).
  EXPECT_EQ(linear_extension_count(figure_a, figure_b), 3 * 10 * 2);
  EXPECT_EQ(pair_probability(figure_a, figure_b), Rational(60, factorial(13)));
}

TEST(PairProbability, MatchesOrderingEnumeration) {
  Rng rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    const Seq a = shuffled(4, rng);
    const Seq b = shuffled(4, rng);
    EXPECT_EQ(pair_probability(a, b), enumerated_pair_probability(a, b));
  }
}

TEST(PairProbability, SymmetricAndDiagonal) {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 10);
    const Seq a = shuffled(n, rng);
    const Seq b = shuffled(n, rng);
    EXPECT_EQ(pair_probability(a, b), pair_probability(b, a));
    EXPECT_EQ(pair_probability(a, a), Rational(1, factorial(n - 1)));
  }
}

TEST(ExactMoments, FourVertices) {
  const auto report = exact_moments(4);
  EXPECT_EQ(report.first_moment, 4);

  Rational sum_h = 0, sum_h2 = 0;
  std::uint64_t orderings = 0;
  oracle::for_each_ordering(4, [&](const EdgeOrdering& f) {
    const auto h = oracle::ham_count(f);
    sum_h += h;
    sum_h2 += h * h;
    ++orderings;
  });
  EXPECT_EQ(sum_h / orderings, 4);
  EXPECT_EQ(report.second_moment, sum_h2 / orderings);
}

TEST(ExactMoments, JensenAndCap) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto report = exact_moments(n);
    EXPECT_EQ(report.first_moment, n);
    EXPECT_GE(report.second_moment, report.first_moment * report.first_moment);
  }
  EXPECT_THROW(exact_moments(8), capacity_error);
  EXPECT_THROW(profile_census(8), capacity_error);
}

TEST(Census, CompleteAndRecombines) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto census = profile_census(n);
    Integer pairs = 0;
    Rational second = 0;
    for (const auto& [sig, entry] : census) {
      pairs += entry.pair_count;
      second += Rational(entry.extension_sum, factorial(2 * n - sig.c - 2));
      EXPECT_EQ(entry.mass, Rational(entry.extension_sum, factorial(2 * n - sig.c - 2)));
    }
    EXPECT_EQ(pairs, factorial(n) * factorial(n));
    EXPECT_EQ(second, exact_moments(n).second_moment);
  }
}

TEST(Census, SymmetryReductionMatchesFullEnumeration) {
  for (std::size_t n : {4u, 5u}) {
    const auto reduced = profile_census(n, CensusMethod::symmetry_reduced);
    const auto full = profile_census(n, CensusMethod::full_enumeration);
    ASSERT_EQ(reduced.size(), full.size());
    for (const auto& [sig, entry] : full) {
      ASSERT_TRUE(reduced.count(sig));
      EXPECT_EQ(reduced.at(sig).pair_count, entry.pair_count);
      EXPECT_EQ(reduced.at(sig).extension_sum, entry.extension_sum);
    }
  }
}

TEST(Census, FullSegmentClassHoldsPathAndReverse) {
  // B = A and B = reverse(A) both share every edge as one segment.
  const auto census = profile_census(5, CensusMethod::full_enumeration);
  EXPECT_EQ(census.at(ProfileSignature{4, 1, 0}).pair_count, 2 * factorial(5));
  EXPECT_EQ(census.at(ProfileSignature{4, 1, 0}).extension_sum, factorial(5));
}

TEST(Census, BoundsHoldAtSix) {
  for (const auto& [sig, entry] : profile_census(6)) {
    const Integer bound = labeled_profile_bound(sig.c, sig.k, sig.l, 6) * embedding_bound(sig.c, sig.k, 6);
    EXPECT_LE(entry.extension_sum, bound) << sig.c << "," << sig.k << "," << sig.l;
  }
  // Raw pair counts also include pairs with no common labelling, such as a
  // path and its reversal, which the bound does not cover.
  const auto census = profile_census(6);
  EXPECT_EQ(census.at(ProfileSignature{5, 1, 0}).pair_count,
            2 * labeled_profile_bound(5, 1, 0, 6) * embedding_bound(5, 1, 6));
}

TEST(Census, CsvExport) {
  std::ostringstream out;
  write_census_csv(out, profile_census(3));
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "c,k,l,pair_count,mass_numerator,mass_denominator");
  // n = 3: the identical and reversed pairs form class (2,1,0): 12 pairs,
  // 6 of them increasing with probability 1/2.
  EXPECT_NE(text.find("\n2,1,0,12,3,1\n"), std::string::npos);
}

TEST(MomentReportJson, RationalsAsStrings) {
  const auto json = to_json(exact_moments(4));
  EXPECT_EQ(json["first_moment"]["numerator"], "4");
  EXPECT_EQ(json["first_moment"]["denominator"], "1");
  const Rational second(Integer(json["second_moment"]["numerator"].get<std::string>()),
                        Integer(json["second_moment"]["denominator"].get<std::string>()));
  EXPECT_EQ(second, exact_moments(4).second_moment);
  EXPECT_FALSE(json["census"].empty());
}

TEST(ProfileBounds, CompositionConvention) {
  const std::size_t n = 9;
  auto factor = [&](std::size_t c, std::size_t k, std::size_t l) {
    const Integer rest = (Integer(1) << static_cast<unsigned>(l)) * binomial(k, l) *
                         (factorial(2 * (n - c - 1) + k) /
                          (factorial(n - c - 1) * factorial(n - c - 1) * factorial(k)));
    return Rational(labeled_profile_bound(c, k, l, n), rest);
  };
  EXPECT_EQ(factor(2, 1, 0), 1);
  EXPECT_EQ(factor(1, 1, 1), 1);
  EXPECT_EQ(factor(5, 2, 0), binomial(2, 1));
  EXPECT_EQ(labeled_profile_bound(0, 0, 0, 4), factorial(6) / (factorial(3) * factorial(3)));
}

TEST(ProfileBounds, RejectsImpossibleSignatures) {
  EXPECT_THROW(labeled_profile_bound(2, 2, 0, 6), std::invalid_argument);  // l < 2k - c
  EXPECT_THROW(labeled_profile_bound(6, 1, 0, 6), std::invalid_argument);  // c > n - 1
  EXPECT_THROW(labeled_profile_bound(3, 1, 2, 6), std::invalid_argument);  // l > k
  EXPECT_THROW(labeled_profile_bound(1, 0, 0, 6), std::invalid_argument);
  EXPECT_THROW(embedding_bound(4, 3, 6), std::invalid_argument);           // k > n - c
  EXPECT_THROW(embedding_bound(6, 1, 6), std::invalid_argument);
}

TEST(ProfileBounds, AggregatedIdentity) {
  for (std::size_t c = 1; c <= 12; ++c) {
    for (std::size_t k = 1; k <= c; ++k) {
      const std::size_t n = c + k + 1;
      Integer plain = 0;
      Integer sum = 0;
      for (std::size_t l = (2 * k > c ? 2 * k - c : 0); l <= k; ++l) {
        plain += binomial(k, l) * composition_count(c - l, k - l, 2);
        sum += labeled_profile_bound(c, k, l, n);
      }
      EXPECT_EQ(plain, binomial(c - 1, k - 1)) << c << " " << k;
      EXPECT_LE(sum, labeled_profile_bound_aggregated(c, k, n));
    }
  }
}

TEST(EmbeddingBound, Examples) {
  EXPECT_EQ(embedding_bound(0, 0, 5), 120 * 120);
  EXPECT_EQ(embedding_bound(2, 1, 5), 240);
}

TEST(SSums, BasicShape) {
  EXPECT_THROW(s_sum_bounds(9), std::invalid_argument);
  const auto s = s_sum_bounds(20);
  EXPECT_EQ(s.small_c_max, 2u);
  EXPECT_EQ(s.middle_c_max, 18u);
  EXPECT_GE(s.s1_without_poisson, 0);
  EXPECT_GE(s.s2_bound, 0);
  EXPECT_GE(s.s3_bound, 0);
  EXPECT_NEAR(static_cast<double>(s.s1_value), to_double(s.s1_without_poisson) * std::exp(-2.0),
              1e-9 * static_cast<double>(s.s1_value));
}

TEST(SSums, SmallPartNearENSquared) {
  const auto s = s_sum_bounds(100);
  const double ratio = static_cast<double>(s.s1_value) / (std::exp(1.0) * 100.0 * 100.0);
  EXPECT_GE(ratio, 0.5);
  EXPECT_LE(ratio, 2.0);
}

TEST(ConstantC, PartialSums) {
  EXPECT_EQ(constant_c_partial_exact(0), 1);
  Rational previous = 0;
  for (std::size_t c = 0; c <= 30; ++c) {
    const Rational current = constant_c_partial_exact(c);
    EXPECT_GE(current, previous);
    previous = current;
  }
  const HighPrecision e3 = boost::multiprecision::exp(HighPrecision(3));
  EXPECT_LT(static_cast<double>(abs(constant_c_partial(80) - e3)), 1e-6);
  EXPECT_GE(std::numeric_limits<HighPrecision>::digits10, 30);
}
