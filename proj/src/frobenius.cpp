#include "frobkit/frobenius.hpp"

#include <sstream>
#include <stdexcept>

namespace frobkit {

namespace {

std::string index_pair(int i, int j) {
    std::ostringstream os;
    os << "(i,j)=(" << i << "," << j << ")";
    return os.str();
}

// (X • Y)^k = sum_{i,j} C^k_ij X^i Y^j with polynomial components.
PolyVectorField product(const StructureTensor& t, const PolyVectorField& x,
                        const PolyVectorField& y) {
    int n = t.n;
    std::vector<MultiPoly> out(n, MultiPoly(n));
    for (int i = 0; i < n; ++i) {
        if (x.components[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y.components[j].is_zero()) continue;
            MultiPoly xy = x.components[i] * y.components[j];
            for (int k = 0; k < n; ++k) {
                if (t.mixed[i][j][k].is_zero()) continue;
                out[k] = out[k] + t.mixed[i][j][k] * xy;
            }
        }
    }
    return PolyVectorField(std::move(out));
}

}  // namespace

FrobeniusSpec::FrobeniusSpec(int n_, MultiPoly potential_, MatQ metric_, MatQ euler_a_,
                             VecQ euler_b_, Rational charge_)
    : n(n_),
      potential(std::move(potential_)),
      metric(std::move(metric_)),
      euler_a(std::move(euler_a_)),
      euler_b(std::move(euler_b_)),
      charge(std::move(charge_)) {
    if (n <= 0) throw std::invalid_argument("dimension must be positive");
    if (potential.vars() != n) throw std::invalid_argument("potential variable count mismatch");
    auto square = [&](const MatQ& m) {
        if (static_cast<int>(m.size()) != n) return false;
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != n) return false;
        return true;
    };
    if (!square(metric)) throw std::invalid_argument("metric must be n x n");
    if (!square(euler_a)) throw std::invalid_argument("euler coefficient matrix must be n x n");
    if (static_cast<int>(euler_b.size()) != n)
        throw std::invalid_argument("euler shift must have n entries");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (metric[i][j] != metric[j][i]) throw std::invalid_argument("metric not symmetric");
    auto inv = invert(metric);
    if (!inv) throw std::invalid_argument("metric not invertible");
    metric_inv = std::move(*inv);
}

PolyVectorField FrobeniusSpec::euler_field() const {
    std::vector<MultiPoly> comps;
    comps.reserve(n);
    for (int i = 0; i < n; ++i) {
        MultiPoly c = MultiPoly::constant(n, euler_b[i]);
        for (int j = 0; j < n; ++j) {
            if (euler_a[i][j] == 0) continue;
            c = c + MultiPoly::variable(n, j + 1).scaled(euler_a[i][j]);
        }
        comps.push_back(std::move(c));
    }
    return PolyVectorField(std::move(comps));
}

VecQ FrobeniusSpec::euler_at(const RationalPoint& pt) const {
    VecQ out(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        out[i] = euler_b[i];
        for (int j = 0; j < n; ++j) out[i] += euler_a[i][j] * pt.coords[j];
    }
    return out;
}

StructureTensor structure_constants(const FrobeniusSpec& spec) {
    int n = spec.n;
    StructureTensor t;
    t.n = n;
    auto cube = [&] {
        return std::vector<std::vector<std::vector<MultiPoly>>>(
            n, std::vector<std::vector<MultiPoly>>(n, std::vector<MultiPoly>(n, MultiPoly(n))));
    };
    t.lower = cube();
    t.mixed = cube();
    t.upper = cube();
    std::vector<MultiPoly> first;
    first.reserve(n);
    for (int i = 0; i < n; ++i) first.push_back(spec.potential.derivative(i + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            MultiPoly second = first[i].derivative(j + 1);
            for (int k = j; k < n; ++k) {
                MultiPoly third = second.derivative(k + 1);
                int idx[3] = {i, j, k};
                // fill all distinct permutations
                static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                for (const auto& p : perms)
                    t.lower[idx[p[0]]][idx[p[1]]][idx[p[2]]] = third;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                MultiPoly acc(n);
                for (int l = 0; l < n; ++l) {
                    if (spec.metric_inv[k][l] == 0) continue;
                    acc = acc + t.lower[i][j][l].scaled(spec.metric_inv[k][l]);
                }
                t.mixed[i][j][k] = std::move(acc);
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                MultiPoly acc(n);
                for (int m = 0; m < n; ++m) {
                    if (spec.metric_inv[j][m] == 0) continue;
                    acc = acc + t.mixed[m][k][i].scaled(spec.metric_inv[j][m]);
                }
                t.upper[i][j][k] = std::move(acc);
            }
    return t;
}

CheckReport check_metric_normalization(const FrobeniusSpec& spec) {
    const std::string name = "metric_normalization";
    MultiPoly f1 = spec.potential.derivative(1);
    for (int i = 0; i < spec.n; ++i) {
        MultiPoly f1i = f1.derivative(i + 1);
        for (int j = 0; j < spec.n; ++j) {
            MultiPoly diff = f1i.derivative(j + 1) - MultiPoly::constant(spec.n, spec.metric[i][j]);
            if (!diff.is_zero()) {
                std::ostringstream os;
                os << index_pair(i + 1, j + 1) << ": difference = " << diff.str();
                return CheckReport::fail(name, os.str());
            }
        }
    }
    return CheckReport::ok(name);
}

CheckReport check_wdvv(const FrobeniusSpec& spec) {
    const std::string name = "wdvv";
    int n = spec.n;
    StructureTensor t = structure_constants(spec);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    MultiPoly diff(n);
                    for (int p = 0; p < n; ++p) {
                        diff = diff + t.mixed[i][j][p] * t.lower[p][k][l];
                        diff = diff - t.mixed[l][j][p] * t.lower[p][k][i];
                    }
                    if (!diff.is_zero()) {
                        std::ostringstream os;
                        os << "(i,j,k,l)=(" << i + 1 << "," << j + 1 << "," << k + 1 << ","
                           << l + 1 << "): difference = " << diff.str();
                        return CheckReport::fail(name, os.str());
                    }
                }
    return CheckReport::ok(name);
}

QuasiHomogeneityReport check_quasi_homogeneity(const FrobeniusSpec& spec) {
    int n = spec.n;
    QuasiHomogeneityReport rep{MultiPoly(n), MatQ(n, VecQ(n, Rational(0))), VecQ(n, Rational(0)),
                               Rational(0), false};
    PolyVectorField e = spec.euler_field();
    MultiPoly ef = apply_field(e, spec.potential);
    rep.residual = ef - spec.potential.scaled(Rational(3) - spec.charge);
    if (!rep.residual.is_zero() && rep.residual.total_degree() > 2) return rep;
    rep.pass = true;
    // residual = 1/2 A_ij t^i t^j + B_i t^i + c0 with A symmetric
    std::vector<int> e0(n, 0);
    rep.c0 = rep.residual.coeff(e0);
    for (int i = 0; i < n; ++i) {
        std::vector<int> ei(n, 0);
        ei[i] = 1;
        rep.B[i] = rep.residual.coeff(ei);
        for (int j = i; j < n; ++j) {
            std::vector<int> eij(n, 0);
            eij[i] += 1;
            eij[j] += 1;
            Rational c = rep.residual.coeff(eij);
            if (i == j) {
                rep.A[i][i] = 2 * c;
            } else {
                rep.A[i][j] = c;
                rep.A[j][i] = c;
            }
        }
    }
    return rep;
}

CheckReport check_euler_conditions(const FrobeniusSpec& spec, const StructureTensor& tensor) {
    const std::string name = "euler_conditions";
    int n = spec.n;
    // (i) normalization of the affine data against the unit direction
    for (int i = 0; i < n; ++i) {
        Rational want = (i == 0) ? 1 : 0;
        if (spec.euler_a[i][0] != want) {
            std::ostringstream os;
            os << "condition (i): a^" << i + 1 << "_1 = " << to_string(spec.euler_a[i][0]);
            return CheckReport::fail(name, os.str());
        }
    }
    if (spec.euler_b[0] != 0) {
        std::ostringstream os;
        os << "condition (i): b^1 = " << to_string(spec.euler_b[0]);
        return CheckReport::fail(name, os.str());
    }
    // (ii) L_E acts as the identity on the product of flat fields
    PolyVectorField e = spec.euler_field();
    for (int i = 0; i < n; ++i) {
        PolyVectorField di = PolyVectorField::basis(n, i + 1);
        PolyVectorField e_di = lie_bracket(e, di);
        for (int j = 0; j < n; ++j) {
            PolyVectorField dj = PolyVectorField::basis(n, j + 1);
            PolyVectorField prod = product(tensor, di, dj);
            PolyVectorField lhs = lie_bracket(e, prod);
            PolyVectorField t1 = product(tensor, e_di, dj);
            PolyVectorField t2 = product(tensor, di, lie_bracket(e, dj));
            bool ok = true;
            std::vector<MultiPoly> diff;
            diff.reserve(n);
            for (int k = 0; k < n; ++k) {
                MultiPoly d = lhs.components[k] - t1.components[k] - t2.components[k] -
                              prod.components[k];
                if (!d.is_zero()) ok = false;
                diff.push_back(std::move(d));
            }
            if (!ok) {
                std::ostringstream os;
                os << "condition (ii): " << index_pair(i + 1, j + 1)
                   << ", defect = " << PolyVectorField(diff).str();
                return CheckReport::fail(name, os.str());
            }
        }
    }
    // (iii) flat-coordinate form of L_E g = (2-d) g
    Rational scale = Rational(2) - spec.charge;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational lhs(0);
            for (int k = 0; k < n; ++k)
                lhs += spec.euler_a[k][i] * spec.metric[k][j] +
                       spec.euler_a[k][j] * spec.metric[i][k];
            if (lhs != scale * spec.metric[i][j]) {
                std::ostringstream os;
                os << "condition (iii): " << index_pair(i + 1, j + 1) << ", got "
                   << to_string(lhs) << ", want " << to_string(scale * spec.metric[i][j]);
                return CheckReport::fail(name, os.str());
            }
        }
    return CheckReport::ok(name);
}

MultiPoly c_cubic(const StructureTensor& tensor, const FrobeniusSpec& spec,
                  const PolyVectorField& x, const PolyVectorField& y, const PolyVectorField& z) {
    int n = spec.n;
    if (x.dim() != n || y.dim() != n || z.dim() != n)
        throw std::invalid_argument("field dimension mismatch");
    MultiPoly out(n);
    for (int i = 0; i < n; ++i) {
        if (x.components[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y.components[j].is_zero()) continue;
            MultiPoly xy = x.components[i] * y.components[j];
            for (int k = 0; k < n; ++k) {
                if (tensor.lower[i][j][k].is_zero() || z.components[k].is_zero()) continue;
                out = out + tensor.lower[i][j][k] * xy * z.components[k];
            }
        }
    }
    return out;
}

}  // namespace frobkit
