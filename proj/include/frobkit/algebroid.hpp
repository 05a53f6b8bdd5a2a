#pragma once

#include "frobkit/check_report.hpp"
#include "frobkit/fields.hpp"
#include "frobkit/frobenius.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace frobkit {

// rho(alpha)^i = sum_j matrix[i][j] alpha_j  (n x r).
struct Anchor {
    int n = 0;
    int r = 0;
    MatP matrix;

    static Anchor identity(int n);
    static Anchor constant(const MatQ& m);
    PolyVectorField apply(const PolyOneForm& alpha) const;
    bool is_constant() const;
    std::optional<MatQ> constant_matrix() const;
};

// Pi^{ij}(t), antisymmetric (validated at construction).
struct PoissonBivector {
    int n = 0;
    MatP components;

    PoissonBivector() = default;
    PoissonBivector(int n, MatP comps);  // throws unless antisymmetric
    // Anchor Pi#: alpha -> sum_i alpha_i Pi^{ij} d/dt^j.
    PolyVectorField sharp(const PolyOneForm& alpha) const;
};

enum class BracketRule { coordinate_lie, anchor_pullback, poisson_koszul };

using Tensor3P = std::vector<std::vector<std::vector<MultiPoly>>>;

struct FAlgebroidSpec {
    int n = 0;
    int r = 0;
    Tensor3P product;               // D^k_ij(t), symmetric in (i,j)
    std::vector<MultiPoly> unit;    // U
    Anchor anchor;
    BracketRule bracket_rule = BracketRule::coordinate_lie;
    std::optional<PoissonBivector> bivector;  // for poisson_koszul
};

// P_X(Y,Z) = [X, Y.Z] - [X,Y].Z - Y.[X,Z] for the square case r = n.
PolyVectorField hm_defect(const Tensor3P& product, const PolyVectorField& x,
                          const PolyVectorField& y, const PolyVectorField& z);

// Product of sections through a structure-constant tensor.
PolyVectorField product_apply(const Tensor3P& product, const PolyVectorField& x,
                              const PolyVectorField& y);

CheckReport check_hertling_manin(const Tensor3P& product,
                                 const std::vector<PolyVectorField>& test_fields);

CheckReport check_f_algebroid(const FAlgebroidSpec& spec, const Tensor3P& base_product,
                              const std::vector<PolyOneForm>& test_sections,
                              const std::vector<MultiPoly>& test_functions);

FAlgebroidSpec tangent_f_algebroid(const FrobeniusSpec& spec, const StructureTensor& tensor);

// rho^{-1}([rho a, rho b]) for a constant invertible anchor.
PolyOneForm pullback_bracket(const Anchor& anchor, const PolyOneForm& alpha,
                             const PolyOneForm& beta);

// Koszul bracket [a,b] = L_{Pi#a} b - L_{Pi#b} a - d(Pi(a,b)).
PolyOneForm koszul_bracket(const PoissonBivector& pi, const PolyOneForm& alpha,
                           const PolyOneForm& beta);

// Lie derivative of a one-form: (L_X b)_j = sum_i (X^i d_i b_j + b_i d_j X^i).
PolyOneForm lie_derivative_form(const PolyVectorField& x, const PolyOneForm& beta);

using BracketFn = std::function<PolyOneForm(const PolyOneForm&, const PolyOneForm&)>;
using AnchorFn = std::function<PolyVectorField(const PolyOneForm&)>;

// Antisymmetry, Jacobi, Leibniz, anchor homomorphism, evaluated in that order
// over basis sections plus the supplied test data; reports the first failure.
CheckReport check_lie_algebroid(int r, const BracketFn& bracket, const AnchorFn& anchor,
                                const std::vector<PolyOneForm>& test_sections,
                                const std::vector<MultiPoly>& test_functions);

// Default Leibniz test functions {1, t^i, t^i t^j}.
std::vector<MultiPoly> default_test_functions(int n);

}  // namespace frobkit
