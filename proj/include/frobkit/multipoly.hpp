#pragma once

#include "frobkit/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace frobkit {

// A point in flat coordinates (t^1, ..., t^n).
struct RationalPoint {
    std::vector<Rational> coords;

    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}
    int dim() const { return static_cast<int>(coords.size()); }
    std::string str() const;
    bool operator==(const RationalPoint&) const = default;
};

// Sparse multivariate polynomial over Rational in variables t^1..t^n.
// Terms map exponent vectors (length n) to nonzero coefficients; iteration
// order is lexicographic on the exponent vector, which keeps every derived
// artifact (witness strings, reports) deterministic.
class MultiPoly {
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, Rational>;

    explicit MultiPoly(int n = 0) : n_(n) {}

    static MultiPoly constant(int n, const Rational& c);
    // 1-based variable index.
    static MultiPoly variable(int n, int i);
    static MultiPoly monomial(int n, Exps exps, const Rational& c);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int total_degree() const;  // 0 for the zero polynomial

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Rational& c) const;
    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    // Formal partial derivative with respect to t^i (1-based).
    MultiPoly derivative(int i) const;
    Rational evaluate(const RationalPoint& pt) const;

    // Coefficient of a given exponent vector (0 if absent).
    Rational coeff(const Exps& e) const;

    // Deterministic rendering, e.g. "t2^4 + 1/2 t1^2 t2" (term order = lex
    // on the exponent vector).
    std::string str() const;

private:
    int n_;
    TermMap terms_;

    void add_term(const Exps& e, const Rational& c);
    friend MultiPoly poly_sum_impl(const MultiPoly&, const MultiPoly&, int sign);
};

enum class ArithKind { add, sub, mul };

// Spec-surface wrappers. Mismatched variable counts / out-of-range indices
// throw std::invalid_argument.
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithKind kind);
MultiPoly partial_derivative(const MultiPoly& p, int i);
Rational evaluate(const MultiPoly& p, const RationalPoint& pt);

}  // namespace frobkit
