#pragma once

#include "frobkit/check_report.hpp"
#include "frobkit/frobenius.hpp"

#include <cstdint>

namespace frobkit {

struct AlgebraElement {
    VecQ coords;

    AlgebraElement() = default;
    explicit AlgebraElement(VecQ c) : coords(std::move(c)) {}
    int dim() const { return static_cast<int>(coords.size()); }
    std::string str() const;
    bool operator==(const AlgebraElement&) const = default;
};

// Commutative unital algebra on one tangent fiber: c[i][j][k] are the
// structure constants of the product at a point, unit the coordinates of e.
struct FiberAlgebra {
    int n = 0;
    std::vector<std::vector<VecQ>> c;
    VecQ unit;
};

FiberAlgebra algebra_at(const StructureTensor& tensor, const RationalPoint& pt);

AlgebraElement multiply(const FiberAlgebra& a, const AlgebraElement& x, const AlgebraElement& y);

// Multiplication operator M_x with (M_x)^k_j = sum_i c[i][j][k] x^i.
MatQ mult_operator(const FiberAlgebra& a, const AlgebraElement& x);

// Solves x * u = unit; throws NotInvertible when det M_x = 0.
AlgebraElement invert(const FiberAlgebra& a, const AlgebraElement& x);

// det M_{E(t)} as a polynomial; vanishes exactly on the discriminant.
MultiPoly discriminant_det(const StructureTensor& tensor, const FrobeniusSpec& spec);

// Squarefree characteristic polynomial of a sampled element. Deterministic
// in (trials, seed).
bool is_semisimple(const FiberAlgebra& a, int trials, std::uint64_t seed);

CheckReport check_frobenius_algebra(const FiberAlgebra& a, const MatQ& g);

}  // namespace frobkit
