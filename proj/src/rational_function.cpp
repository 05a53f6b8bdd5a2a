#include "frobkit/rational_function.hpp"

#include <stdexcept>

namespace frobkit {

namespace {
MultiPoly one_poly(int vars) { return MultiPoly::constant(vars, Rational(1)); }
}  // namespace

RationalFunction::RationalFunction(MultiPoly n) : num_(std::move(n)), den_(one_poly(num_.vars())) {}

RationalFunction::RationalFunction(MultiPoly n, MultiPoly d)
    : num_(std::move(n)), den_(std::move(d)) {
    if (num_.vars() != den_.vars()) throw std::invalid_argument("variable-count mismatch");
    if (den_.is_zero()) throw std::invalid_argument("zero denominator polynomial");
    // 0/q -> 0/1 keeps zeros cheap without needing any gcd machinery.
    if (num_.is_zero()) den_ = one_poly(num_.vars());
}

RationalFunction RationalFunction::zero(int vars) {
    return RationalFunction(MultiPoly(vars), one_poly(vars));
}

RationalFunction RationalFunction::one(int vars) {
    return RationalFunction(one_poly(vars), one_poly(vars));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    // Shared or trivial denominators stay shared; this is what keeps the
    // duality pipeline's denominators at small powers of one discriminant.
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    if (o.den_ == one_poly(vars())) return RationalFunction(num_ + o.num_ * den_, den_);
    if (den_ == one_poly(vars())) return RationalFunction(o.num_ + num_ * o.den_, o.den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ - o.num_, den_);
    if (o.den_ == one_poly(vars())) return RationalFunction(num_ - o.num_ * den_, den_);
    if (den_ == one_poly(vars())) return RationalFunction(num_ * o.den_ - o.num_, o.den_);
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (num_.is_zero() || o.num_.is_zero()) return zero(vars());
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::derivative(int i) const {
    if (den_ == one_poly(vars())) return RationalFunction(num_.derivative(i), den_);
    return RationalFunction(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
}

Rational RationalFunction::evaluate(const RationalPoint& pt) const {
    Rational d = den_.evaluate(pt);
    if (d == 0) throw std::domain_error("rational function denominator vanishes at " + pt.str());
    return num_.evaluate(pt) / d;
}

std::string RationalFunction::str() const {
    if (den_ == one_poly(vars())) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

bool rf_equal(const RationalFunction& x, const RationalFunction& y) {
    if (x.den() == y.den()) return x.num() == y.num();
    return (x.num() * y.den() - y.num() * x.den()).is_zero();
}

RationalFunction rf_arith(const RationalFunction& x, const RationalFunction& y, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return x + y;
        case ArithKind::sub: return x - y;
        case ArithKind::mul: return x * y;
    }
    throw std::invalid_argument("unknown arithmetic kind");
}

}  // namespace frobkit
