#include "frobkit/duality.hpp"

#include <sstream>
#include <stdexcept>

namespace frobkit {

namespace {

// (M_E)^k_j = sum_i C^k_ij E^i as a polynomial matrix.
MatP euler_operator(const FrobeniusSpec& spec, const StructureTensor& tensor) {
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
    return m;
}

VecQ field_at(const PolyVectorField& f, const RationalPoint& pt) {
    VecQ out;
    out.reserve(f.components.size());
    for (const auto& c : f.components) out.push_back(c.evaluate(pt));
    return out;
}

}  // namespace

CotangentFrobenius build_cotangent_frobenius(const FrobeniusSpec& spec,
                                             const StructureTensor& tensor) {
    CotangentFrobenius out;
    out.n = spec.n;
    out.product = tensor.upper;
    out.unit.reserve(spec.n);
    for (int j = 0; j < spec.n; ++j) out.unit.push_back(spec.metric[0][j]);
    out.rho1 = Anchor::constant(spec.metric_inv);
    return out;
}

CotangentAlmostFrobenius build_cotangent_almost_frobenius(const FrobeniusSpec& spec,
                                                          const StructureTensor& tensor) {
    int n = spec.n;
    CotangentAlmostFrobenius out;
    out.n = n;
    MatP m = euler_operator(spec, tensor);
    out.discriminant = det_poly(m);
    if (out.discriminant.is_zero())
        throw std::invalid_argument("discriminant polynomial is identically zero");
    MatP adj = adjugate_poly(m);
    out.euler_inv.reserve(n);
    for (int k = 0; k < n; ++k)
        out.euler_inv.emplace_back(adj[k][0], out.discriminant);
    out.rho2_rf.assign(n, std::vector<RationalFunction>(n, RationalFunction::zero(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MultiPoly num(n);
            for (int k = 0; k < n; ++k) {
                if (tensor.upper[i][j][k].is_zero()) continue;
                num = num + adj[k][0] * tensor.upper[i][j][k];
            }
            out.rho2_rf[i][j] = RationalFunction(std::move(num), out.discriminant);
        }
    return out;
}

DualStructure dual_product(const FrobeniusSpec& spec, const StructureTensor& tensor) {
    int n = spec.n;
    MatP m = euler_operator(spec, tensor);
    MultiPoly disc = det_poly(m);
    if (disc.is_zero()) throw std::invalid_argument("discriminant polynomial is identically zero");
    MatP adj = adjugate_poly(m);
    DualStructure out;
    out.n = n;
    out.star.assign(n, std::vector<std::vector<RationalFunction>>(
                           n, std::vector<RationalFunction>(n, RationalFunction::zero(n))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                MultiPoly num(n);
                for (int mm = 0; mm < n; ++mm) {
                    if (tensor.mixed[i][j][mm].is_zero()) continue;
                    for (int l = 0; l < n; ++l) {
                        if (tensor.mixed[mm][l][k].is_zero() || adj[l][0].is_zero()) continue;
                        num = num + tensor.mixed[i][j][mm] * tensor.mixed[mm][l][k] * adj[l][0];
                    }
                }
                out.star[i][j][k] = RationalFunction(std::move(num), disc);
            }
    PolyVectorField e = spec.euler_field();
    out.dual_metric_inv.assign(n, std::vector<MultiPoly>(n, MultiPoly(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MultiPoly acc(n);
            for (int k = 0; k < n; ++k) {
                if (tensor.upper[i][j][k].is_zero()) continue;
                acc = acc + tensor.upper[i][j][k] * e.components[k];
            }
            out.dual_metric_inv[i][j] = std::move(acc);
        }
    return out;
}

Rational dual_metric_at(const FrobeniusSpec& spec, const StructureTensor& tensor,
                        const RationalPoint& pt, const AlgebraElement& x,
                        const AlgebraElement& y) {
    FiberAlgebra alg = algebra_at(tensor, pt);
    AlgebraElement einv = invert(alg, AlgebraElement(spec.euler_at(pt)));
    AlgebraElement ex = multiply(alg, einv, x);
    Rational s(0);
    for (int i = 0; i < spec.n; ++i)
        for (int j = 0; j < spec.n; ++j) s += spec.metric[i][j] * ex.coords[i] * y.coords[j];
    return s;
}

namespace {

MatQ duality_map_from(const CotangentAlmostFrobenius& caf, const FrobeniusSpec& spec,
                      const RationalPoint& pt) {
    int n = spec.n;
    if (caf.discriminant.evaluate(pt) == 0)
        throw NotInvertible("point " + pt.str() + " lies on the discriminant");
    MatQ rho2(n, VecQ(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rho2[i][j] = caf.rho2_rf[i][j].evaluate(pt);
    return mat_mul(rho2, spec.metric);
}

}  // namespace

MatQ duality_map_at(const FrobeniusSpec& spec, const StructureTensor& tensor,
                    const RationalPoint& pt) {
    CotangentAlmostFrobenius caf = build_cotangent_almost_frobenius(spec, tensor);
    return duality_map_from(caf, spec, pt);
}

CheckReport check_theorem1(const FrobeniusSpec& spec, const StructureTensor& tensor,
                           const std::vector<RationalPoint>& points, int samples,
                           std::uint64_t seed, std::vector<RationalPoint>* skipped) {
    const std::string name = "theorem1";
    int n = spec.n;
    CotangentAlmostFrobenius caf = build_cotangent_almost_frobenius(spec, tensor);
    DetRng rng(seed);
    for (const auto& pt : points) {
        if (caf.discriminant.evaluate(pt) == 0) {
            if (skipped) skipped->push_back(pt);
            continue;
        }
        MatQ dmat = duality_map_from(caf, spec, pt);
        FiberAlgebra alg = algebra_at(tensor, pt);
        AlgebraElement einv = invert(alg, AlgebraElement(spec.euler_at(pt)));
        for (int s = 0; s < samples; ++s) {
            VecQ xc(n, Rational(0)), yc(n, Rational(0));
            for (int i = 0; i < n; ++i) xc[i] = rng.rational();
            for (int i = 0; i < n; ++i) yc[i] = rng.rational();
            AlgebraElement x(std::move(xc)), y(std::move(yc));
            AlgebraElement xy = multiply(alg, x, y);
            // product clause: D through the anchor route vs * through the solve route
            VecQ lhs = mat_apply(dmat, xy.coords);
            AlgebraElement rhs = multiply(alg, xy, einv);
            if (lhs != rhs.coords) {
                std::ostringstream os;
                os << "product clause fails at " << pt.str() << ", sample " << s + 1
                   << ": D(x.y) = " << AlgebraElement(lhs).str() << ", x*y = " << rhs.str();
                return CheckReport::fail(name, os.str());
            }
            // metric clause: eta(E^{-1}.x, y) vs eta(D x, y)
            Rational m1 = dual_metric_at(spec, tensor, pt, x, y);
            VecQ dx = mat_apply(dmat, x.coords);
            Rational m2(0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m2 += spec.metric[i][j] * dx[i] * y.coords[j];
            if (m1 != m2) {
                std::ostringstream os;
                os << "metric clause fails at " << pt.str() << ", sample " << s + 1 << ": "
                   << to_string(m1) << " vs " << to_string(m2);
                return CheckReport::fail(name, os.str());
            }
        }
    }
    return CheckReport::ok(name);
}

std::vector<FiberAlgebra> chain_products_at(const StructureTensor& tensor, const RationalPoint& pt,
                                            const std::vector<PolyVectorField>& identities,
                                            int depth) {
    if (depth < 0) throw std::invalid_argument("negative chain depth");
    if (depth > static_cast<int>(identities.size()))
        throw std::invalid_argument("chain depth exceeds supplied identities");
    std::vector<FiberAlgebra> algs;
    algs.reserve(depth + 1);
    algs.push_back(algebra_at(tensor, pt));
    for (int stage = 0; stage < depth; ++stage) {
        const FiberAlgebra& cur = algs.back();
        AlgebraElement ept(field_at(identities[stage], pt));
        AlgebraElement einv;
        try {
            einv = invert(cur, ept);
        } catch (const NotInvertible& e) {
            std::ostringstream os;
            os << "chain identity " << ept.str() << " not invertible at stage " << stage
               << " (point " << pt.str() << ")";
            throw NotInvertible(os.str(), stage);
        }
        MatQ op = mult_operator(cur, einv);
        FiberAlgebra next;
        next.n = cur.n;
        next.c.assign(cur.n, std::vector<VecQ>(cur.n, VecQ(cur.n, Rational(0))));
        for (int i = 0; i < cur.n; ++i)
            for (int j = 0; j < cur.n; ++j) next.c[i][j] = mat_apply(op, cur.c[i][j]);
        next.unit = ept.coords;
        algs.push_back(std::move(next));
    }
    return algs;
}

AlgebraElement pseudo_eventual_identity_at(const StructureTensor& tensor, const RationalPoint& pt,
                                           const PolyVectorField& e0, const PolyVectorField& e1) {
    std::vector<FiberAlgebra> algs = chain_products_at(tensor, pt, {e0, e1}, 1);
    AlgebraElement e0pt(field_at(e0, pt));
    AlgebraElement e1pt(field_at(e1, pt));
    AlgebraElement e0inv = invert(algs[0], e0pt);
    AlgebraElement e1inv;
    try {
        e1inv = invert(algs[1], e1pt);
    } catch (const NotInvertible& e) {
        throw NotInvertible(std::string(e.what()) + " at stage 1", 1);
    }
    return multiply(algs[0], multiply(algs[0], e0inv, e0inv), e1inv);
}

CheckReport check_prop1_at(const StructureTensor& tensor, const RationalPoint& pt,
                           const PolyVectorField& e0, const PolyVectorField& e1) {
    const std::string name = "prop1";
    std::vector<FiberAlgebra> algs = chain_products_at(tensor, pt, {e0, e1}, 1);
    AlgebraElement e0inv = invert(algs[0], AlgebraElement(field_at(e0, pt)));
    AlgebraElement e1inv;
    try {
        e1inv = invert(algs[1], AlgebraElement(field_at(e1, pt)));
    } catch (const NotInvertible& e) {
        throw NotInvertible(std::string(e.what()) + " at stage 1", 1);
    }
    MatQ d0 = mult_operator(algs[0], e0inv);
    MatQ d1 = mult_operator(algs[1], e1inv);
    MatQ composed = mat_mul(d1, d0);
    AlgebraElement iota = pseudo_eventual_identity_at(tensor, pt, e0, e1);
    MatQ p01 = mult_operator(algs[0], iota);
    if (!mat_equal(composed, p01)) {
        std::ostringstream os;
        os << "D1.D0 differs from pseudo-duality map at " << pt.str();
        return CheckReport::fail(name, os.str());
    }
    return CheckReport::ok(name);
}

CheckReport check_prop2_at(const StructureTensor& tensor, const RationalPoint& pt,
                           const std::vector<PolyVectorField>& identities, int samples,
                           std::uint64_t seed) {
    const std::string name = "prop2";
    if (identities.size() < 3)
        throw std::invalid_argument("three chain identities are required");
    std::vector<FiberAlgebra> algs = chain_products_at(tensor, pt, identities, 3);
    int n = algs[0].n;
    AlgebraElement iota = pseudo_eventual_identity_at(tensor, pt, identities[0], identities[1]);
    AlgebraElement e2pt(field_at(identities[2], pt));
    AlgebraElement e2inv;
    try {
        e2inv = invert(algs[2], e2pt);
    } catch (const NotInvertible& e) {
        throw NotInvertible(std::string(e.what()) + " at stage 2", 2);
    }
    AlgebraElement factor = multiply(algs[0], multiply(algs[0], iota, iota), e2inv);
    DetRng rng(seed);
    for (int s = 0; s < samples; ++s) {
        VecQ xc(n, Rational(0)), yc(n, Rational(0));
        for (int i = 0; i < n; ++i) xc[i] = rng.rational();
        for (int i = 0; i < n; ++i) yc[i] = rng.rational();
        AlgebraElement x(std::move(xc)), y(std::move(yc));
        AlgebraElement lhs = multiply(algs[3], x, y);
        AlgebraElement rhs = multiply(algs[0], multiply(algs[0], x, y), factor);
        if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "closed form fails at " << pt.str() << ", sample " << s + 1 << ": " << lhs.str()
               << " vs " << rhs.str();
            return CheckReport::fail(name, os.str());
        }
    }
    auto basis = [&](int i) {
        VecQ c(n, Rational(0));
        c[i] = 1;
        return AlgebraElement(std::move(c));
    };
    const FiberAlgebra& top = algs[3];
    for (int i = 0; i < n; ++i) {
        AlgebraElement ue = multiply(top, AlgebraElement(top.unit), basis(i));
        if (!(ue == basis(i))) {
            std::ostringstream os;
            os << "unit fails for *3 at " << pt.str() << " on basis " << i + 1;
            return CheckReport::fail(name, os.str());
        }
        for (int j = i; j < n; ++j) {
            AlgebraElement ij = multiply(top, basis(i), basis(j));
            AlgebraElement ji = multiply(top, basis(j), basis(i));
            if (!(ij == ji)) {
                std::ostringstream os;
                os << "commutativity fails for *3 at " << pt.str();
                return CheckReport::fail(name, os.str());
            }
            for (int k = 0; k < n; ++k) {
                AlgebraElement lhs = multiply(top, ij, basis(k));
                AlgebraElement rhs = multiply(top, basis(i), multiply(top, basis(j), basis(k)));
                if (!(lhs == rhs)) {
                    std::ostringstream os;
                    os << "associativity fails for *3 at " << pt.str();
                    return CheckReport::fail(name, os.str());
                }
            }
        }
    }
    return CheckReport::ok(name);
}

}  // namespace frobkit
