#include "frobkit/fields.hpp"
#include "frobkit/rng.hpp"

#include <sstream>

namespace frobkit {

MultiPoly DetRng::poly(int n, int deg, int num_abs, int den_max) {
    // Walk all exponent tuples of total degree <= deg; include each monomial
    // with probability 1/2 so the samples are not dense every time.
    MultiPoly out(n);
    std::vector<int> exps(n, 0);
    struct Walk {
        DetRng& rng;
        MultiPoly& out;
        int n, deg, num_abs, den_max;
        void run(std::vector<int>& exps, int pos, int remaining) {
            if (pos == n) {
                if (rng.next_u64() % 2 == 0) return;
                Rational c = rng.rational(num_abs, den_max);
                if (c == 0) return;
                out = out + MultiPoly::monomial(n, exps, c);
                return;
            }
            for (int e = 0; e <= remaining; ++e) {
                exps[pos] = e;
                run(exps, pos + 1, remaining - e);
            }
            exps[pos] = 0;
        }
    } walk{*this, out, n, deg, num_abs, den_max};
    walk.run(exps, 0, deg);
    return out;
}

std::vector<MultiPoly> DetRng::components(int n, int deg, int num_abs, int den_max) {
    std::vector<MultiPoly> c;
    c.reserve(n);
    for (int i = 0; i < n; ++i) c.push_back(poly(n, deg, num_abs, den_max));
    return c;
}

PolyVectorField PolyVectorField::basis(int n, int i) {
    std::vector<MultiPoly> c(n, MultiPoly(n));
    c[i - 1] = MultiPoly::constant(n, Rational(1));
    return PolyVectorField(std::move(c));
}

PolyVectorField PolyVectorField::constant(int n, const std::vector<Rational>& coords) {
    std::vector<MultiPoly> c;
    c.reserve(n);
    for (int i = 0; i < n; ++i) c.push_back(MultiPoly::constant(n, coords[i]));
    return PolyVectorField(std::move(c));
}

bool PolyVectorField::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

std::string PolyVectorField::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) os << ", ";
        os << components[i].str();
    }
    os << ")";
    return os.str();
}

PolyOneForm PolyOneForm::basis(int n, int i) {
    std::vector<MultiPoly> c(n, MultiPoly(n));
    c[i - 1] = MultiPoly::constant(n, Rational(1));
    return PolyOneForm(std::move(c));
}

bool PolyOneForm::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

std::string PolyOneForm::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) os << ", ";
        os << components[i].str();
    }
    os << ")";
    return os.str();
}

RfVectorField RfVectorField::from_poly(const PolyVectorField& x) {
    std::vector<RationalFunction> c;
    c.reserve(x.components.size());
    for (const auto& p : x.components) c.emplace_back(p);
    return RfVectorField(std::move(c));
}

bool RfVectorField::rf_is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y) {
    int n = x.dim();
    std::vector<MultiPoly> out;
    out.reserve(n);
    for (int j = 0; j < n; ++j) {
        MultiPoly comp(n);
        for (int i = 0; i < n; ++i) {
            comp = comp + x.components[i] * y.components[j].derivative(i + 1);
            comp = comp - y.components[i] * x.components[j].derivative(i + 1);
        }
        out.push_back(std::move(comp));
    }
    return PolyVectorField(std::move(out));
}

RfVectorField lie_bracket_rf(const RfVectorField& x, const RfVectorField& y) {
    int n = x.dim();
    std::vector<RationalFunction> out;
    out.reserve(n);
    for (int j = 0; j < n; ++j) {
        RationalFunction comp = RationalFunction::zero(x.components[0].vars());
        for (int i = 0; i < n; ++i) {
            comp = comp + x.components[i] * y.components[j].derivative(i + 1);
            comp = comp - y.components[i] * x.components[j].derivative(i + 1);
        }
        out.push_back(std::move(comp));
    }
    return RfVectorField(std::move(out));
}

MultiPoly apply_field(const PolyVectorField& x, const MultiPoly& f) {
    int n = x.dim();
    MultiPoly out(f.vars());
    for (int i = 0; i < n; ++i) out = out + x.components[i] * f.derivative(i + 1);
    return out;
}

bool rf_field_equal(const RfVectorField& x, const RfVectorField& y) {
    if (x.dim() != y.dim()) return false;
    for (int i = 0; i < x.dim(); ++i)
        if (!rf_equal(x.components[i], y.components[i])) return false;
    return true;
}

}  // namespace frobkit
