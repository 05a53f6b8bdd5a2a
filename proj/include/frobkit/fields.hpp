#pragma once

#include "frobkit/multipoly.hpp"
#include "frobkit/rational_function.hpp"

#include <vector>

namespace frobkit {

// X = sum_i X^i(t) d/dt^i with polynomial components.
struct PolyVectorField {
    std::vector<MultiPoly> components;

    PolyVectorField() = default;
    explicit PolyVectorField(std::vector<MultiPoly> c) : components(std::move(c)) {}
    static PolyVectorField basis(int n, int i);  // d/dt^i, 1-based
    static PolyVectorField constant(int n, const std::vector<Rational>& coords);
    int dim() const { return static_cast<int>(components.size()); }
    bool is_zero() const;
    std::string str() const;
    bool operator==(const PolyVectorField&) const = default;
};

// alpha = sum_i alpha_i(t) dt^i.
struct PolyOneForm {
    std::vector<MultiPoly> components;

    PolyOneForm() = default;
    explicit PolyOneForm(std::vector<MultiPoly> c) : components(std::move(c)) {}
    static PolyOneForm basis(int n, int i);  // dt^i, 1-based
    int dim() const { return static_cast<int>(components.size()); }
    bool is_zero() const;
    std::string str() const;
    bool operator==(const PolyOneForm&) const = default;
};

// Vector field with rational-function components; carries the dual product's
// symbolic identities off the discriminant.
struct RfVectorField {
    std::vector<RationalFunction> components;

    RfVectorField() = default;
    explicit RfVectorField(std::vector<RationalFunction> c) : components(std::move(c)) {}
    static RfVectorField from_poly(const PolyVectorField& x);
    int dim() const { return static_cast<int>(components.size()); }
    bool rf_is_zero() const;
};

// Coordinate Lie bracket [X,Y]^j = sum_i (X^i d_i Y^j - Y^i d_i X^j).
PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y);
// Same formula extended to rational-function components via the quotient rule.
RfVectorField lie_bracket_rf(const RfVectorField& x, const RfVectorField& y);

// Directional derivative X(f).
MultiPoly apply_field(const PolyVectorField& x, const MultiPoly& f);

bool rf_field_equal(const RfVectorField& x, const RfVectorField& y);

}  // namespace frobkit
