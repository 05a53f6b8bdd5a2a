#include "frobkit/algebroid.hpp"

#include <sstream>
#include <stdexcept>

namespace frobkit {

namespace {

// Sections and fields share the same component representation; the product
// and bracket helpers below work on raw component vectors.
std::vector<MultiPoly> tensor_product(const Tensor3P& product, const std::vector<MultiPoly>& x,
                                      const std::vector<MultiPoly>& y) {
    int r = static_cast<int>(product.size());
    int n = x.empty() ? 0 : x[0].vars();
    std::vector<MultiPoly> out(r, MultiPoly(n));
    for (int i = 0; i < r; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < r; ++j) {
            if (y[j].is_zero()) continue;
            MultiPoly xy = x[i] * y[j];
            for (int k = 0; k < r; ++k) {
                if (product[i][j][k].is_zero()) continue;
                out[k] = out[k] + product[i][j][k] * xy;
            }
        }
    }
    return out;
}

std::vector<MultiPoly> scale_components(const MultiPoly& f, const std::vector<MultiPoly>& x) {
    std::vector<MultiPoly> out;
    out.reserve(x.size());
    for (const auto& c : x) out.push_back(f * c);
    return out;
}

bool all_zero(const std::vector<MultiPoly>& x) {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

std::string components_str(const std::vector<MultiPoly>& x) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) os << ", ";
        os << x[i].str();
    }
    os << ")";
    return os.str();
}

std::vector<MultiPoly> sub(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
    std::vector<MultiPoly> out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
    return out;
}

}  // namespace

Anchor Anchor::identity(int n) {
    Anchor a;
    a.n = n;
    a.r = n;
    a.matrix.assign(n, std::vector<MultiPoly>(n, MultiPoly(n)));
    for (int i = 0; i < n; ++i) a.matrix[i][i] = MultiPoly::constant(n, Rational(1));
    return a;
}

Anchor Anchor::constant(const MatQ& m) {
    Anchor a;
    a.n = static_cast<int>(m.size());
    a.r = static_cast<int>(m[0].size());
    a.matrix.assign(a.n, std::vector<MultiPoly>(a.r, MultiPoly(a.n)));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.r; ++j) a.matrix[i][j] = MultiPoly::constant(a.n, m[i][j]);
    return a;
}

PolyVectorField Anchor::apply(const PolyOneForm& alpha) const {
    if (alpha.dim() != r) throw std::invalid_argument("section rank mismatch");
    std::vector<MultiPoly> out(n, MultiPoly(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) {
            if (matrix[i][j].is_zero() || alpha.components[j].is_zero()) continue;
            out[i] = out[i] + matrix[i][j] * alpha.components[j];
        }
    return PolyVectorField(std::move(out));
}

bool Anchor::is_constant() const {
    for (const auto& row : matrix)
        for (const auto& e : row)
            if (!e.is_zero() && e.total_degree() > 0) return false;
    return true;
}

std::optional<MatQ> Anchor::constant_matrix() const {
    if (!is_constant()) return std::nullopt;
    MatQ m(n, VecQ(r, Rational(0)));
    std::vector<int> zero(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) m[i][j] = matrix[i][j].coeff(zero);
    return m;
}

PoissonBivector::PoissonBivector(int n_, MatP comps) : n(n_), components(std::move(comps)) {
    if (static_cast<int>(components.size()) != n)
        throw std::invalid_argument("bivector must be n x n");
    for (const auto& row : components)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("bivector must be n x n");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(components[i][j] + components[j][i]).is_zero())
                throw std::invalid_argument("bivector not antisymmetric");
}

PolyVectorField PoissonBivector::sharp(const PolyOneForm& alpha) const {
    std::vector<MultiPoly> out(n, MultiPoly(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (alpha.components[i].is_zero() || components[i][j].is_zero()) continue;
            out[j] = out[j] + alpha.components[i] * components[i][j];
        }
    return PolyVectorField(std::move(out));
}

PolyVectorField product_apply(const Tensor3P& product, const PolyVectorField& x,
                              const PolyVectorField& y) {
    return PolyVectorField(tensor_product(product, x.components, y.components));
}

PolyVectorField hm_defect(const Tensor3P& product, const PolyVectorField& x,
                          const PolyVectorField& y, const PolyVectorField& z) {
    PolyVectorField yz = product_apply(product, y, z);
    PolyVectorField b1 = lie_bracket(x, yz);
    PolyVectorField b2 = product_apply(product, lie_bracket(x, y), z);
    PolyVectorField b3 = product_apply(product, y, lie_bracket(x, z));
    return PolyVectorField(sub(sub(b1.components, b2.components), b3.components));
}

CheckReport check_hertling_manin(const Tensor3P& product,
                                 const std::vector<PolyVectorField>& test_fields) {
    const std::string name = "hertling_manin";
    int n = static_cast<int>(product.size());
    std::vector<PolyVectorField> fields;
    for (int i = 1; i <= n; ++i) fields.push_back(PolyVectorField::basis(n, i));
    fields.insert(fields.end(), test_fields.begin(), test_fields.end());
    int m = static_cast<int>(fields.size());
    // Both sides of the identity are symmetric under swapping (X,Y) and under
    // swapping (Z,W), so a<=b and c<=d lose no coverage. The single-argument
    // defects are shared across the outer pair loop.
    std::vector<std::vector<std::vector<PolyVectorField>>> cache(
        m, std::vector<std::vector<PolyVectorField>>(m, std::vector<PolyVectorField>(m)));
    for (int x = 0; x < m; ++x)
        for (int c = 0; c < m; ++c)
            for (int d = c; d < m; ++d)
                cache[x][c][d] = hm_defect(product, fields[x], fields[c], fields[d]);
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            PolyVectorField xy = product_apply(product, fields[a], fields[b]);
            for (int c = 0; c < m; ++c)
                for (int d = c; d < m; ++d) {
                    PolyVectorField lhs = hm_defect(product, xy, fields[c], fields[d]);
                    std::vector<MultiPoly> rhs =
                        tensor_product(product, fields[a].components, cache[b][c][d].components);
                    std::vector<MultiPoly> rhs2 =
                        tensor_product(product, fields[b].components, cache[a][c][d].components);
                    std::vector<MultiPoly> diff = sub(lhs.components, rhs);
                    diff = sub(diff, rhs2);
                    if (!all_zero(diff)) {
                        std::ostringstream os;
                        os << "(" << a + 1 << "," << b + 1 << "," << c + 1 << "," << d + 1
                           << "): defect = " << components_str(diff);
                        return CheckReport::fail(name, os.str());
                    }
                }
        }
    return CheckReport::ok(name);
}

FAlgebroidSpec tangent_f_algebroid(const FrobeniusSpec& spec, const StructureTensor& tensor) {
    FAlgebroidSpec out;
    out.n = spec.n;
    out.r = spec.n;
    out.product = tensor.mixed;
    out.unit.assign(spec.n, MultiPoly(spec.n));
    out.unit[0] = MultiPoly::constant(spec.n, Rational(1));
    out.anchor = Anchor::identity(spec.n);
    out.bracket_rule = BracketRule::coordinate_lie;
    return out;
}

PolyOneForm pullback_bracket(const Anchor& anchor, const PolyOneForm& alpha,
                             const PolyOneForm& beta) {
    auto cm = anchor.constant_matrix();
    if (!cm) throw std::invalid_argument("anchor is not constant");
    auto inv = invert(*cm);
    if (!inv) throw std::invalid_argument("anchor is not invertible");
    PolyVectorField br = lie_bracket(anchor.apply(alpha), anchor.apply(beta));
    int r = anchor.r;
    std::vector<MultiPoly> out(r, MultiPoly(anchor.n));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < anchor.n; ++i) {
            if ((*inv)[j][i] == 0 || br.components[i].is_zero()) continue;
            out[j] = out[j] + br.components[i].scaled((*inv)[j][i]);
        }
    return PolyOneForm(std::move(out));
}

PolyOneForm lie_derivative_form(const PolyVectorField& x, const PolyOneForm& beta) {
    int n = x.dim();
    std::vector<MultiPoly> out(n, MultiPoly(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            out[j] = out[j] + x.components[i] * beta.components[j].derivative(i + 1);
            out[j] = out[j] + beta.components[i] * x.components[i].derivative(j + 1);
        }
    return PolyOneForm(std::move(out));
}

PolyOneForm koszul_bracket(const PoissonBivector& pi, const PolyOneForm& alpha,
                           const PolyOneForm& beta) {
    int n = pi.n;
    if (alpha.dim() != n || beta.dim() != n) throw std::invalid_argument("form dimension mismatch");
    PolyVectorField pa = pi.sharp(alpha);
    PolyVectorField pb = pi.sharp(beta);
    PolyOneForm la = lie_derivative_form(pa, beta);
    PolyOneForm lb = lie_derivative_form(pb, alpha);
    MultiPoly pairing(n);
    for (int i = 0; i < n; ++i) {
        if (alpha.components[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (pi.components[i][j].is_zero() || beta.components[j].is_zero()) continue;
            pairing = pairing + alpha.components[i] * pi.components[i][j] * beta.components[j];
        }
    }
    std::vector<MultiPoly> out(n, MultiPoly(n));
    for (int j = 0; j < n; ++j)
        out[j] = la.components[j] - lb.components[j] - pairing.derivative(j + 1);
    return PolyOneForm(std::move(out));
}

std::vector<MultiPoly> default_test_functions(int n) {
    std::vector<MultiPoly> fs;
    fs.push_back(MultiPoly::constant(n, Rational(1)));
    for (int i = 1; i <= n; ++i) fs.push_back(MultiPoly::variable(n, i));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            fs.push_back(MultiPoly::variable(n, i) * MultiPoly::variable(n, j));
    return fs;
}

CheckReport check_lie_algebroid(int r, const BracketFn& bracket, const AnchorFn& anchor,
                                const std::vector<PolyOneForm>& test_sections,
                                const std::vector<MultiPoly>& test_functions) {
    const std::string name = "lie_algebroid";
    std::vector<PolyOneForm> secs;
    int n = test_functions.empty() ? r : test_functions[0].vars();
    for (int i = 1; i <= r; ++i) secs.push_back(PolyOneForm::basis(r, i));
    secs.insert(secs.end(), test_sections.begin(), test_sections.end());
    int m = static_cast<int>(secs.size());
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            PolyOneForm ab = bracket(secs[i], secs[j]);
            PolyOneForm ba = bracket(secs[j], secs[i]);
            std::vector<MultiPoly> s;
            s.reserve(r);
            for (int k = 0; k < r; ++k) s.push_back(ab.components[k] + ba.components[k]);
            if (!all_zero(s)) {
                std::ostringstream os;
                os << "antisymmetry fails on sections (" << i + 1 << "," << j + 1
                   << "): defect = " << components_str(s);
                return CheckReport::fail(name, os.str());
            }
        }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                PolyOneForm j1 = bracket(secs[i], bracket(secs[j], secs[k]));
                PolyOneForm j2 = bracket(secs[j], bracket(secs[k], secs[i]));
                PolyOneForm j3 = bracket(secs[k], bracket(secs[i], secs[j]));
                std::vector<MultiPoly> s;
                s.reserve(r);
                for (int c = 0; c < r; ++c)
                    s.push_back(j1.components[c] + j2.components[c] + j3.components[c]);
                if (!all_zero(s)) {
                    std::ostringstream os;
                    os << "jacobi fails on sections (" << i + 1 << "," << j + 1 << "," << k + 1
                       << "): defect = " << components_str(s);
                    return CheckReport::fail(name, os.str());
                }
            }
    for (int i = 0; i < m; ++i) {
        PolyVectorField rho_a = anchor(secs[i]);
        for (int j = 0; j < m; ++j) {
            PolyOneForm ab = bracket(secs[i], secs[j]);
            for (const auto& f : test_functions) {
                PolyOneForm fb(scale_components(f, secs[j].components));
                PolyOneForm lhs = bracket(secs[i], fb);
                MultiPoly af = apply_field(rho_a, f);
                std::vector<MultiPoly> s;
                s.reserve(r);
                for (int k = 0; k < r; ++k)
                    s.push_back(lhs.components[k] - af * secs[j].components[k] -
                                f * ab.components[k]);
                if (!all_zero(s)) {
                    std::ostringstream os;
                    os << "leibniz fails on sections (" << i + 1 << "," << j + 1 << "), f = "
                       << f.str() << ": defect = " << components_str(s);
                    return CheckReport::fail(name, os.str());
                }
            }
        }
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            PolyVectorField lhs = anchor(bracket(secs[i], secs[j]));
            PolyVectorField rhs = lie_bracket(anchor(secs[i]), anchor(secs[j]));
            std::vector<MultiPoly> s = sub(lhs.components, rhs.components);
            if (!all_zero(s)) {
                std::ostringstream os;
                os << "anchor homomorphism fails on sections (" << i + 1 << "," << j + 1
                   << "): defect = " << components_str(s);
                return CheckReport::fail(name, os.str());
            }
        }
    (void)n;
    return CheckReport::ok(name);
}

CheckReport check_f_algebroid(const FAlgebroidSpec& spec, const Tensor3P& base_product,
                              const std::vector<PolyOneForm>& test_sections,
                              const std::vector<MultiPoly>& test_functions) {
    const std::string name = "f_algebroid";
    int r = spec.r;
    BracketFn bracket;
    switch (spec.bracket_rule) {
        case BracketRule::coordinate_lie: {
            if (spec.r != spec.n)
                throw std::invalid_argument("coordinate bracket needs rank = dimension");
            bracket = [](const PolyOneForm& a, const PolyOneForm& b) {
                PolyVectorField br =
                    lie_bracket(PolyVectorField(a.components), PolyVectorField(b.components));
                return PolyOneForm(std::move(br.components));
            };
            break;
        }
        case BracketRule::anchor_pullback: {
            auto cm = spec.anchor.constant_matrix();
            if (!cm || !invert(*cm))
                throw std::invalid_argument("pullback bracket needs a constant invertible anchor");
            const Anchor& anch = spec.anchor;
            bracket = [&anch](const PolyOneForm& a, const PolyOneForm& b) {
                return pullback_bracket(anch, a, b);
            };
            break;
        }
        case BracketRule::poisson_koszul: {
            if (!spec.bivector) throw std::invalid_argument("koszul bracket needs a bivector");
            const PoissonBivector& pi = *spec.bivector;
            bracket = [&pi](const PolyOneForm& a, const PolyOneForm& b) {
                return koszul_bracket(pi, a, b);
            };
            break;
        }
    }
    std::vector<PolyOneForm> secs;
    for (int i = 1; i <= r; ++i) secs.push_back(PolyOneForm::basis(r, i));
    secs.insert(secs.end(), test_sections.begin(), test_sections.end());
    int m = static_cast<int>(secs.size());

    auto fail = [&](const std::string& what) { return CheckReport::fail(name, what); };

    // bracket antisymmetry and Jacobi
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            PolyOneForm ab = bracket(secs[i], secs[j]);
            PolyOneForm ba = bracket(secs[j], secs[i]);
            std::vector<MultiPoly> s;
            for (int k = 0; k < r; ++k) s.push_back(ab.components[k] + ba.components[k]);
            if (!all_zero(s)) {
                std::ostringstream os;
                os << "bracket antisymmetry fails on (" << i + 1 << "," << j + 1
                   << "): " << components_str(s);
                return fail(os.str());
            }
        }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                PolyOneForm j1 = bracket(secs[i], bracket(secs[j], secs[k]));
                PolyOneForm j2 = bracket(secs[j], bracket(secs[k], secs[i]));
                PolyOneForm j3 = bracket(secs[k], bracket(secs[i], secs[j]));
                std::vector<MultiPoly> s;
                for (int c = 0; c < r; ++c)
                    s.push_back(j1.components[c] + j2.components[c] + j3.components[c]);
                if (!all_zero(s)) {
                    std::ostringstream os;
                    os << "bracket jacobi fails on (" << i + 1 << "," << j + 1 << "," << k + 1
                       << "): " << components_str(s);
                    return fail(os.str());
                }
            }
    // product commutativity / associativity / unit
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto ab = tensor_product(spec.product, secs[i].components, secs[j].components);
            auto ba = tensor_product(spec.product, secs[j].components, secs[i].components);
            if (!all_zero(sub(ab, ba))) {
                std::ostringstream os;
                os << "product commutativity fails on (" << i + 1 << "," << j + 1 << ")";
                return fail(os.str());
            }
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                auto ij = tensor_product(spec.product, secs[i].components, secs[j].components);
                auto lhs = tensor_product(spec.product, ij, secs[k].components);
                auto jk = tensor_product(spec.product, secs[j].components, secs[k].components);
                auto rhs = tensor_product(spec.product, secs[i].components, jk);
                auto s = sub(lhs, rhs);
                if (!all_zero(s)) {
                    std::ostringstream os;
                    os << "product associativity fails on (" << i + 1 << "," << j + 1 << ","
                       << k + 1 << "): " << components_str(s);
                    return fail(os.str());
                }
            }
    for (int i = 0; i < m; ++i) {
        auto ua = tensor_product(spec.product, spec.unit, secs[i].components);
        auto s = sub(ua, secs[i].components);
        if (!all_zero(s)) {
            std::ostringstream os;
            os << "unit fails on section " << i + 1 << ": " << components_str(s);
            return fail(os.str());
        }
    }
    // (a) the defect identity for the section product and algebroid bracket
    auto defect = [&](const PolyOneForm& a, const PolyOneForm& b, const PolyOneForm& c) {
        PolyOneForm bc(tensor_product(spec.product, b.components, c.components));
        PolyOneForm t1 = bracket(a, bc);
        auto t2 = tensor_product(spec.product, bracket(a, b).components, c.components);
        auto t3 = tensor_product(spec.product, b.components, bracket(a, c).components);
        return sub(sub(t1.components, t2), t3);
    };
    std::vector<std::vector<std::vector<std::vector<MultiPoly>>>> cache(
        m, std::vector<std::vector<std::vector<MultiPoly>>>(
               m, std::vector<std::vector<MultiPoly>>(m)));
    for (int x = 0; x < m; ++x)
        for (int c = 0; c < m; ++c)
            for (int d = c; d < m; ++d) cache[x][c][d] = defect(secs[x], secs[c], secs[d]);
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            PolyOneForm ab(tensor_product(spec.product, secs[a].components, secs[b].components));
            for (int c = 0; c < m; ++c)
                for (int d = c; d < m; ++d) {
                    auto lhs = defect(ab, secs[c], secs[d]);
                    auto rhs1 = tensor_product(spec.product, secs[a].components, cache[b][c][d]);
                    auto rhs2 = tensor_product(spec.product, secs[b].components, cache[a][c][d]);
                    auto s = sub(sub(lhs, rhs1), rhs2);
                    if (!all_zero(s)) {
                        std::ostringstream os;
                        os << "defect identity fails on (" << a + 1 << "," << b + 1 << ","
                           << c + 1 << "," << d + 1 << "): " << components_str(s);
                        return fail(os.str());
                    }
                }
        }
    // (b) anchor is a product homomorphism onto the base product
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            PolyOneForm ab(tensor_product(spec.product, secs[i].components, secs[j].components));
            PolyVectorField lhs = spec.anchor.apply(ab);
            PolyVectorField rhs = product_apply(base_product, spec.anchor.apply(secs[i]),
                                                spec.anchor.apply(secs[j]));
            auto s = sub(lhs.components, rhs.components);
            if (!all_zero(s)) {
                std::ostringstream os;
                os << "anchor product homomorphism fails on (" << i + 1 << "," << j + 1
                   << "): " << components_str(s);
                return fail(os.str());
            }
        }
    // (c) Leibniz rule
    for (int i = 0; i < m; ++i) {
        PolyVectorField rho_a = spec.anchor.apply(secs[i]);
        for (int j = 0; j < m; ++j) {
            PolyOneForm ab = bracket(secs[i], secs[j]);
            for (const auto& f : test_functions) {
                PolyOneForm fb(scale_components(f, secs[j].components));
                PolyOneForm lhs = bracket(secs[i], fb);
                MultiPoly af = apply_field(rho_a, f);
                std::vector<MultiPoly> s;
                for (int k = 0; k < r; ++k)
                    s.push_back(lhs.components[k] - af * secs[j].components[k] -
                                f * ab.components[k]);
                if (!all_zero(s)) {
                    std::ostringstream os;
                    os << "leibniz fails on (" << i + 1 << "," << j + 1 << "), f = " << f.str()
                       << ": " << components_str(s);
                    return fail(os.str());
                }
            }
        }
    }
    // (d) anchor is a bracket homomorphism
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            PolyVectorField lhs = spec.anchor.apply(bracket(secs[i], secs[j]));
            PolyVectorField rhs =
                lie_bracket(spec.anchor.apply(secs[i]), spec.anchor.apply(secs[j]));
            auto s = sub(lhs.components, rhs.components);
            if (!all_zero(s)) {
                std::ostringstream os;
                os << "bracket homomorphism fails on (" << i + 1 << "," << j + 1
                   << "): " << components_str(s);
                return fail(os.str());
            }
        }
    return CheckReport::ok(name);
}

}  // namespace frobkit
