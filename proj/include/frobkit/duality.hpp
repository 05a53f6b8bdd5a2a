#pragma once

#include "frobkit/algebroid.hpp"
#include "frobkit/fiber_algebra.hpp"
#include "frobkit/rng.hpp"

#include <cstdint>
#include <vector>

namespace frobkit {

// (T*M, <>, U, rho1): product C^{ij}_k, unit U_j = eta_{1j}, anchor eta^{inv}.
struct CotangentFrobenius {
    int n = 0;
    Tensor3P product;            // product[i][j][k] = C^{ij}_k
    std::vector<Rational> unit;  // U_j
    Anchor rho1;
};

// rho2 with rational-function entries and the discriminant polynomial.
struct CotangentAlmostFrobenius {
    int n = 0;
    std::vector<std::vector<RationalFunction>> rho2_rf;  // rho2[i][j]
    MultiPoly discriminant;
    std::vector<RationalFunction> euler_inv;  // E^{-1} components (adjugate / det)
};

struct DualStructure {
    int n = 0;
    std::vector<std::vector<std::vector<RationalFunction>>> star;  // star[i][j][k]
    MatP dual_metric_inv;                                          // g^{ij}
};

struct ChainSpec {
    FrobeniusSpec base;
    StructureTensor tensor;
    std::vector<PolyVectorField> identities;  // E_0, E_1, ... (affine)
};

CotangentFrobenius build_cotangent_frobenius(const FrobeniusSpec& spec,
                                             const StructureTensor& tensor);
CotangentAlmostFrobenius build_cotangent_almost_frobenius(const FrobeniusSpec& spec,
                                                          const StructureTensor& tensor);
DualStructure dual_product(const FrobeniusSpec& spec, const StructureTensor& tensor);

// g(x,y) = eta(E^{-1} . x, y) at pt; throws NotInvertible on the discriminant.
Rational dual_metric_at(const FrobeniusSpec& spec, const StructureTensor& tensor,
                        const RationalPoint& pt, const AlgebraElement& x,
                        const AlgebraElement& y);

// Matrix of rho2 o rho1^{-1} at pt, computed through the cotangent anchors
// (adjugate/determinant route, independent of the fiber-algebra solve).
MatQ duality_map_at(const FrobeniusSpec& spec, const StructureTensor& tensor,
                    const RationalPoint& pt);

// Both Theorem clauses at every usable point: D(x.y) = x*y and the metric
// clause through two independent routes. On-discriminant points are skipped
// and reported through `skipped` when provided.
CheckReport check_theorem1(const FrobeniusSpec& spec, const StructureTensor& tensor,
                           const std::vector<RationalPoint>& points, int samples,
                           std::uint64_t seed, std::vector<RationalPoint>* skipped = nullptr);

// I = (E0^{-1(*0)})^2 *0 (E1^{-1(*1)}): the element with x *2 y = x *0 y *0 I.
AlgebraElement pseudo_eventual_identity_at(const StructureTensor& tensor, const RationalPoint& pt,
                                           const PolyVectorField& e0, const PolyVectorField& e1);

CheckReport check_prop1_at(const StructureTensor& tensor, const RationalPoint& pt,
                           const PolyVectorField& e0, const PolyVectorField& e1);

CheckReport check_prop2_at(const StructureTensor& tensor, const RationalPoint& pt,
                           const std::vector<PolyVectorField>& identities,
                           int samples = 5, std::uint64_t seed = kDefaultSeed);

// Fiber algebras of *_0..*_depth at pt; throws NotInvertible naming the stage.
std::vector<FiberAlgebra> chain_products_at(const StructureTensor& tensor, const RationalPoint& pt,
                                            const std::vector<PolyVectorField>& identities,
                                            int depth);

}  // namespace frobkit
