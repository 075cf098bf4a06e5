#include "catalan/formulas.hpp"

#include <string>

#include "catalan/error.hpp"

namespace catalan {

namespace {

void require_positive(std::size_t n) {
  if (n == 0) throw Error(Errc::index_out_of_range, "interval counts are defined for n >= 1");
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (a % b != 0) throw Error(Errc::internal, "closed form is not an integer");
  return a / b;
}

}  // namespace

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

BigInt catalan_number(std::size_t n) { return binomial(2 * n, n) / (n + 1); }

BigInt stanley_by_catalan(std::size_t n) {
  return catalan_number(n + 2) * catalan_number(n) - catalan_number(n + 1) * catalan_number(n + 1);
}

BigInt stanley_by_factorials(std::size_t n) {
  return exact_div(6 * factorial(2 * n) * factorial(2 * n + 2),
                   factorial(n) * factorial(n + 1) * factorial(n + 2) * factorial(n + 3));
}

BigInt formula_stanley(std::size_t n) {
  require_positive(n);
  BigInt a = stanley_by_catalan(n);
  if (a != stanley_by_factorials(n)) throw Error(Errc::internal, "the two Stanley closed forms disagree at n = " + std::to_string(n));
  return a;
}

BigInt formula_tamari(std::size_t n) {
  require_positive(n);
  return exact_div(2 * factorial(4 * n + 1), factorial(n + 1) * factorial(3 * n + 2));
}

BigInt formula_kreweras(std::size_t n) {
  require_positive(n);
  return exact_div(binomial(3 * n, n), BigInt(2 * n + 1));
}

BigInt formula(LatticeKind kind, std::size_t n) {
  switch (kind) {
    case LatticeKind::stanley: return formula_stanley(n);
    case LatticeKind::tamari: return formula_tamari(n);
    case LatticeKind::kreweras: return formula_kreweras(n);
  }
  throw Error(Errc::internal, "unknown lattice");
}

}  // namespace catalan
