#pragma once

#include "frobkit/multipoly.hpp"

#include <optional>
#include <vector>

namespace frobkit {

using MatQ = std::vector<std::vector<Rational>>;
using VecQ = std::vector<Rational>;
using MatP = std::vector<std::vector<MultiPoly>>;

MatQ identity_matrix(int n);
bool mat_equal(const MatQ& a, const MatQ& b);
MatQ mat_mul(const MatQ& a, const MatQ& b);
VecQ mat_apply(const MatQ& a, const VecQ& x);

// Exact Gaussian elimination over the rationals.
Rational det(MatQ a);
std::optional<MatQ> invert(MatQ a);
std::optional<VecQ> solve(MatQ a, VecQ b);

// Division-free cofactor expansion; fine at the small dimensions used here.
MultiPoly det_poly(const MatP& a);
MatP adjugate_poly(const MatP& a);

// Characteristic polynomial coefficients c_0..c_n of det(x I - A),
// c_n = 1, via Faddeev-LeVerrier (exact over the rationals).
VecQ char_poly(const MatQ& a);

// True when the univariate polynomial (coefficients low-to-high) is
// squarefree, i.e. gcd with its derivative is constant. Euclidean algorithm.
bool squarefree(const VecQ& coeffs);

}  // namespace frobkit
