#include "frobkit/linalg.hpp"

#include <stdexcept>

namespace frobkit {

MatQ identity_matrix(int n) {
    MatQ m(n, VecQ(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

bool mat_equal(const MatQ& a, const MatQ& b) { return a == b; }

MatQ mat_mul(const MatQ& a, const MatQ& b) {
    int n = static_cast<int>(a.size());
    int m = static_cast<int>(b[0].size());
    int k = static_cast<int>(b.size());
    MatQ out(n, VecQ(m, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

VecQ mat_apply(const MatQ& a, const VecQ& x) {
    int n = static_cast<int>(a.size());
    int m = static_cast<int>(x.size());
    VecQ out(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) out[i] += a[i][j] * x[j];
    return out;
}

Rational det(MatQ a) {
    int n = static_cast<int>(a.size());
    Rational d(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            d = -d;
        }
        d *= a[col][col];
        Rational inv = Rational(1) / a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] * inv;
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return d;
}

std::optional<MatQ> invert(MatQ a) {
    int n = static_cast<int>(a.size());
    MatQ inv = identity_matrix(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational f = Rational(1) / a[col][col];
        for (int c = 0; c < n; ++c) {
            a[col][c] *= f;
            inv[col][c] *= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational g = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] -= g * a[col][c];
                inv[r][c] -= g * inv[col][c];
            }
        }
    }
    return inv;
}

std::optional<VecQ> solve(MatQ a, VecQ b) {
    auto inv = invert(std::move(a));
    if (!inv) return std::nullopt;
    return mat_apply(*inv, b);
}

MultiPoly det_poly(const MatP& a) {
    int n = static_cast<int>(a.size());
    if (n == 0) throw std::invalid_argument("empty matrix");
    int vars = a[0][0].vars();
    if (n == 1) return a[0][0];
    MultiPoly acc(vars);
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    // Cofactor expansion along the first row of the submatrix selected by
    // `cols`; recursion depth is tiny for the dimensions in play.
    struct Rec {
        const MatP& m;
        int vars;
        MultiPoly run(int row, std::vector<int> cols) {
            if (cols.size() == 1) return m[row][cols[0]];
            MultiPoly out(vars);
            for (size_t j = 0; j < cols.size(); ++j) {
                if (m[row][cols[j]].is_zero()) continue;
                std::vector<int> rest;
                rest.reserve(cols.size() - 1);
                for (size_t k = 0; k < cols.size(); ++k)
                    if (k != j) rest.push_back(cols[k]);
                MultiPoly minor = run(row + 1, std::move(rest));
                MultiPoly term = m[row][cols[j]] * minor;
                out = (j % 2 == 0) ? out + term : out - term;
            }
            return out;
        }
    } rec{a, vars};
    return rec.run(0, cols);
}

MatP adjugate_poly(const MatP& a) {
    int n = static_cast<int>(a.size());
    int vars = a[0][0].vars();
    MatP adj(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
    if (n == 1) {
        adj[0][0] = MultiPoly::constant(vars, Rational(1));
        return adj;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            MatP minor;
            minor.reserve(n - 1);
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<MultiPoly> row;
                row.reserve(n - 1);
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    row.push_back(a[r][c]);
                }
                minor.push_back(std::move(row));
            }
            MultiPoly cof = det_poly(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[j][i] = cof;  // transpose of the cofactor matrix
        }
    }
    return adj;
}

VecQ char_poly(const MatQ& a) {
    int n = static_cast<int>(a.size());
    // Faddeev-LeVerrier: M_0 = I, c_n = 1;
    // c_{n-k} = -tr(A M_{k-1}) / k, M_k = A M_{k-1} + c_{n-k} I.
    VecQ coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    MatQ m = identity_matrix(n);
    for (int k = 1; k <= n; ++k) {
        MatQ am = mat_mul(a, m);
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += am[i][i];
        Rational c = -tr / k;
        coeffs[n - k] = c;
        m = am;
        for (int i = 0; i < n; ++i) m[i][i] += c;
    }
    return coeffs;
}

namespace {
VecQ poly_mod(VecQ a, const VecQ& b) {
    // remainder of a by b, coefficients low-to-high, b nonzero
    int db = static_cast<int>(b.size()) - 1;
    while (db > 0 && b[db] == 0) --db;
    int da = static_cast<int>(a.size()) - 1;
    while (da > 0 && a[da] == 0) --da;
    while (da >= db && !(da == 0 && a[0] == 0)) {
        Rational f = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        while (da > 0 && a[da] == 0) --da;
        if (da < db) break;
        if (da == 0 && a[0] == 0) break;
    }
    a.resize(da + 1);
    return a;
}

bool is_zero_poly(const VecQ& a) {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}
}  // namespace

bool squarefree(const VecQ& coeffs) {
    int d = static_cast<int>(coeffs.size()) - 1;
    while (d > 0 && coeffs[d] == 0) --d;
    if (d <= 1) return true;
    VecQ f(coeffs.begin(), coeffs.begin() + d + 1);
    VecQ fp(d, Rational(0));
    for (int i = 1; i <= d; ++i) fp[i - 1] = f[i] * i;
    VecQ a = f, b = fp;
    while (!is_zero_poly(b)) {
        VecQ r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int da = static_cast<int>(a.size()) - 1;
    while (da > 0 && a[da] == 0) --da;
    return da == 0;
}

}  // namespace frobkit
