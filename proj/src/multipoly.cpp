#include "frobkit/multipoly.hpp"

#include <cctype>
#include <sstream>

namespace frobkit {

Rational parse_rational(std::string_view s) {
    auto is_digits = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = s;
    bool neg = false;
    if (!body.empty() && body.front() == '-') {
        neg = true;
        body.remove_prefix(1);
    }
    std::string_view num = body, den;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
        if (!is_digits(den))
            throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
    }
    if (!is_digits(num))
        throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
    boost::multiprecision::cpp_int n{std::string(num)};
    boost::multiprecision::cpp_int d = 1;
    if (!den.empty()) {
        d = boost::multiprecision::cpp_int{std::string(den)};
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    }
    Rational q(n, d);
    return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string RationalPoint::str() const {
    std::string out = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ", ";
        out += to_string(coords[i]);
    }
    return out + ")";
}

MultiPoly MultiPoly::constant(int n, const Rational& c) {
    MultiPoly p(n);
    if (c != 0) p.terms_.emplace(Exps(n, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
    Exps e(n, 0);
    e[i - 1] = 1;
    MultiPoly p(n);
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(int n, Exps exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != n)
        throw std::invalid_argument("exponent vector length mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
    MultiPoly p(n);
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    return p;
}

int MultiPoly::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e) d += x;
        if (d > deg) deg = d;
    }
    return deg;
}

void MultiPoly::add_term(const Exps& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable-count mismatch");
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable-count mismatch");
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, Rational(-c));
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable-count mismatch");
    MultiPoly out(n_);
    Exps e(n_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, Rational(-c));
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly out(n_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

MultiPoly MultiPoly::derivative(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("derivative index out of range");
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_) {
        if (e[i - 1] == 0) continue;
        Exps d = e;
        d[i - 1] -= 1;
        out.add_term(d, c * e[i - 1]);
    }
    return out;
}

Rational MultiPoly::evaluate(const RationalPoint& pt) const {
    if (pt.dim() != n_) throw std::invalid_argument("point dimension mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < n_; ++i) {
            for (int k = 0; k < e[i]; ++k) term *= pt.coords[i];
        }
        acc += term;
    }
    return acc;
}

Rational MultiPoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = false;
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (has_vars) mono += " ";
            has_vars = true;
            mono += "t" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (!has_vars) {
            out += to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += to_string(a) + " " + mono;
        }
    }
    return out;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return a + b;
        case ArithKind::sub: return a - b;
        case ArithKind::mul: return a * b;
    }
    throw std::invalid_argument("unknown arithmetic kind");
}

MultiPoly partial_derivative(const MultiPoly& p, int i) { return p.derivative(i); }

Rational evaluate(const MultiPoly& p, const RationalPoint& pt) { return p.evaluate(pt); }

}  // namespace frobkit
