#include "incpath/numeric.hpp"

namespace incpath {

std::vector<Integer> factorial_table(std::size_t max) {
  std::vector<Integer> table(max + 1);
  table[0] = 1;
  for (std::size_t i = 1; i <= max; ++i) table[i] = table[i - 1] * i;
  return table;
}

Integer factorial(std::size_t n) {
  Integer result = 1;
  for (std::size_t i = 2; i <= n; ++i) result *= i;
  return result;
}

Integer binomial(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  Integer result;
  mpz_bin_uiui(result.backend().data(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return result;
}

Integer composition_count(long long total, long long parts, long long min_part) {
  if (parts == 0) return total == 0 ? 1 : 0;
  if (parts < 0 || total < parts * min_part) return 0;
  // Subtract min_part - 1 from each part to reduce to compositions into
  // positive parts: C(total - parts*(min_part-1) - 1, parts - 1).
  return binomial(total - parts * (min_part - 1) - 1, parts - 1);
}

std::string to_fraction_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace incpath
