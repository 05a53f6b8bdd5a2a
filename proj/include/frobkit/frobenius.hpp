#pragma once

#include "frobkit/check_report.hpp"
#include "frobkit/fields.hpp"
#include "frobkit/linalg.hpp"
#include "frobkit/multipoly.hpp"

#include <vector>

namespace frobkit {

// Potential / constant metric / affine Euler field / charge, all in flat
// coordinates with unit field e = d/dt^1. The constructor enforces dimensions
// and a symmetric invertible metric; the Euler normalization constraints
// (a^i_1 = delta^i_1, b^1 = 0) are deliberately *checked*, not assumed, so
// degenerate duality inputs like E = e stay constructible.
struct FrobeniusSpec {
    int n;
    MultiPoly potential;
    MatQ metric;
    MatQ euler_a;
    VecQ euler_b;
    Rational charge;
    MatQ metric_inv;  // cached at construction

    FrobeniusSpec(int n, MultiPoly potential, MatQ metric, MatQ euler_a, VecQ euler_b,
                  Rational charge);

    // E^i(t) = sum_j a^i_j t^j + b^i.
    PolyVectorField euler_field() const;
    // E(p) as plain coordinates.
    VecQ euler_at(const RationalPoint& pt) const;
};

// C_ijk, C^k_ij, C^{ij}_k. Stored as t[i][j][k], 0-based, with the raised
// index last in each variant.
struct StructureTensor {
    int n;
    std::vector<std::vector<std::vector<MultiPoly>>> lower;  // C_ijk
    std::vector<std::vector<std::vector<MultiPoly>>> mixed;  // C^k_ij -> mixed[i][j][k]
    std::vector<std::vector<std::vector<MultiPoly>>> upper;  // C^{ij}_k -> upper[i][j][k]
};

struct QuasiHomogeneityReport {
    MultiPoly residual;  // E F - (3-d) F
    MatQ A;
    VecQ B;
    Rational c0;
    bool pass = false;
};

StructureTensor structure_constants(const FrobeniusSpec& spec);
CheckReport check_metric_normalization(const FrobeniusSpec& spec);
CheckReport check_wdvv(const FrobeniusSpec& spec);
QuasiHomogeneityReport check_quasi_homogeneity(const FrobeniusSpec& spec);
CheckReport check_euler_conditions(const FrobeniusSpec& spec, const StructureTensor& tensor);

// C(X,Y,Z) = sum C_ijk X^i Y^j Z^k.
MultiPoly c_cubic(const StructureTensor& tensor, const FrobeniusSpec& spec,
                  const PolyVectorField& x, const PolyVectorField& y, const PolyVectorField& z);

}  // namespace frobkit
