#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weilzeta/matrix.hpp"

namespace weilzeta {

/// Integer polynomial, coefficients from degree 0 upward, no trailing zeros.
using IntPoly = std::vector<Int>;

void trim(IntPoly& f);
int degree(const IntPoly& f);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
Rat poly_eval(const IntPoly& f, const Rat& x);
/// f(u^n).
IntPoly poly_inflate(const IntPoly& f, unsigned n);

/// det(x I - A), monic of degree n.
IntPoly charpoly(const IntMatrix& A);

/// det(I - u A) = reversed characteristic polynomial.
IntPoly reciprocal_charpoly(const IntMatrix& A);

/// Splits f = (1 - u)^r g with g(1) != 0; f must be nonzero.
std::pair<int, IntPoly> split_one_minus_u(IntPoly f);

std::string poly_to_string(const IntPoly& f, const std::string& var = "u");

}  // namespace weilzeta
