#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

#include "catalan/lattices.hpp"

namespace catalan {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t k);
BigInt catalan_number(std::size_t n);

// C_{n+2} C_n - C_{n+1}^2.
BigInt stanley_by_catalan(std::size_t n);
// 6 (2n)! (2n+2)! / (n! (n+1)! (n+2)! (n+3)!).
BigInt stanley_by_factorials(std::size_t n);

// Number of intervals of size n; n >= 1. formula_stanley evaluates both
// closed forms and throws Errc::internal if they disagree.
BigInt formula_stanley(std::size_t n);
BigInt formula_tamari(std::size_t n);    // 2 (4n+1)! / ((n+1)! (3n+2)!)
BigInt formula_kreweras(std::size_t n);  // binom(3n, n) / (2n+1)
BigInt formula(LatticeKind kind, std::size_t n);

}  // namespace catalan
