#include "frobkit/fiber_algebra.hpp"

#include "frobkit/rng.hpp"

#include <sstream>
#include <stdexcept>

namespace frobkit {

std::string AlgebraElement::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ", ";
        os << to_string(coords[i]);
    }
    os << ")";
    return os.str();
}

FiberAlgebra algebra_at(const StructureTensor& tensor, const RationalPoint& pt) {
    int n = tensor.n;
    if (pt.dim() != n) throw std::invalid_argument("point dimension mismatch");
    FiberAlgebra a;
    a.n = n;
    a.c.assign(n, std::vector<VecQ>(n, VecQ(n, Rational(0))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) a.c[i][j][k] = tensor.mixed[i][j][k].evaluate(pt);
    a.unit.assign(n, Rational(0));
    a.unit[0] = 1;
    return a;
}

AlgebraElement multiply(const FiberAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
    if (x.dim() != a.n || y.dim() != a.n) throw std::invalid_argument("element dimension mismatch");
    VecQ out(a.n, Rational(0));
    for (int i = 0; i < a.n; ++i) {
        if (x.coords[i] == 0) continue;
        for (int j = 0; j < a.n; ++j) {
            if (y.coords[j] == 0) continue;
            Rational xy = x.coords[i] * y.coords[j];
            for (int k = 0; k < a.n; ++k) out[k] += a.c[i][j][k] * xy;
        }
    }
    return AlgebraElement(std::move(out));
}

MatQ mult_operator(const FiberAlgebra& a, const AlgebraElement& x) {
    MatQ m(a.n, VecQ(a.n, Rational(0)));
    for (int k = 0; k < a.n; ++k)
        for (int j = 0; j < a.n; ++j)
            for (int i = 0; i < a.n; ++i) m[k][j] += a.c[i][j][k] * x.coords[i];
    return m;
}

AlgebraElement invert(const FiberAlgebra& a, const AlgebraElement& x) {
    MatQ m = mult_operator(a, x);
    auto u = solve(std::move(m), a.unit);
    if (!u) throw NotInvertible("element " + x.str() + " is not invertible");
    return AlgebraElement(std::move(*u));
}

MultiPoly discriminant_det(const StructureTensor& tensor, const FrobeniusSpec& spec) {
    int n = spec.n;
    PolyVectorField e = spec.euler_field();
    MatP m(n, std::vector<MultiPoly>(n, MultiPoly(n)));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            MultiPoly acc(n);
            for (int i = 0; i < n; ++i) {
                if (tensor.mixed[i][j][k].is_zero()) continue;
                acc = acc + tensor.mixed[i][j][k] * e.components[i];
            }
            m[k][j] = std::move(acc);
        }
    return det_poly(m);
}

bool is_semisimple(const FiberAlgebra& a, int trials, std::uint64_t seed) {
    DetRng rng(seed);
    for (int t = 0; t < trials; ++t) {
        VecQ z(a.n, Rational(0));
        for (int i = 0; i < a.n; ++i) z[i] = rng.rational();
        MatQ m = mult_operator(a, AlgebraElement(std::move(z)));
        if (squarefree(char_poly(m))) return true;
    }
    return false;
}

CheckReport check_frobenius_algebra(const FiberAlgebra& a, const MatQ& g) {
    const std::string name = "frobenius_algebra";
    int n = a.n;
    auto basis = [&](int i) {
        VecQ c(n, Rational(0));
        c[i] = 1;
        return AlgebraElement(std::move(c));
    };
    auto pair = [&](const AlgebraElement& x, const AlgebraElement& y) {
        Rational s(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += g[i][j] * x.coords[i] * y.coords[j];
        return s;
    };
    AlgebraElement unit(a.unit);
    for (int i = 0; i < n; ++i) {
        AlgebraElement bi = basis(i);
        AlgebraElement ui = multiply(a, unit, bi);
        AlgebraElement iu = multiply(a, bi, unit);
        if (!(ui == bi) || !(iu == bi)) {
            std::ostringstream os;
            os << "unit axiom fails on basis element " << i + 1 << ": e*x = " << ui.str();
            return CheckReport::fail(name, os.str());
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            AlgebraElement xy = multiply(a, basis(i), basis(j));
            AlgebraElement yx = multiply(a, basis(j), basis(i));
            if (!(xy == yx)) {
                std::ostringstream os;
                os << "commutativity fails on (" << i + 1 << "," << j + 1 << ")";
                return CheckReport::fail(name, os.str());
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                AlgebraElement lhs = multiply(a, multiply(a, basis(i), basis(j)), basis(k));
                AlgebraElement rhs = multiply(a, basis(i), multiply(a, basis(j), basis(k)));
                if (!(lhs == rhs)) {
                    std::ostringstream os;
                    os << "associativity fails on (" << i + 1 << "," << j + 1 << "," << k + 1
                       << "): " << lhs.str() << " vs " << rhs.str();
                    return CheckReport::fail(name, os.str());
                }
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Rational lhs = pair(multiply(a, basis(i), basis(j)), basis(k));
                Rational rhs = pair(basis(i), multiply(a, basis(j), basis(k)));
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "invariance fails on (" << i + 1 << "," << j + 1 << "," << k + 1
                       << "): g(x*y,z) = " << to_string(lhs) << ", g(x,y*z) = " << to_string(rhs);
                    return CheckReport::fail(name, os.str());
                }
            }
    return CheckReport::ok(name);
}

}  // namespace frobkit
