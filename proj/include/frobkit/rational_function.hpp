#pragma once

#include "frobkit/multipoly.hpp"

namespace frobkit {

// Formal quotient of polynomials. No canonical form: equality is by
// cross-multiplication, so no multivariate gcd is ever needed. Denominators
// produced by the duality pipeline are powers of one discriminant polynomial;
// the arithmetic below keeps them shared wherever the operands already agree,
// which is what stops cross-multiplied degrees from exploding.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(MultiPoly n);                   // n / 1
    RationalFunction(MultiPoly n, MultiPoly d);               // throws on zero denominator

    static RationalFunction zero(int vars);
    static RationalFunction one(int vars);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    int vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator-() const;

    // Quotient-rule derivative with respect to t^i (1-based).
    RationalFunction derivative(int i) const;

    // Exact evaluation; throws std::domain_error if the denominator vanishes.
    Rational evaluate(const RationalPoint& pt) const;

    std::string str() const;

private:
    MultiPoly num_{0};
    MultiPoly den_{0};
};

bool rf_equal(const RationalFunction& x, const RationalFunction& y);
RationalFunction rf_arith(const RationalFunction& x, const RationalFunction& y, ArithKind kind);

}  // namespace frobkit
