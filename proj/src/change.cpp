#include "macdual/change.hpp"

namespace macdual {

Matrix mat_identity(int n) {
    Matrix I(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i) I[i][i] = Scalar(1);
    return I;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const int n = static_cast<int>(a.size());
    const int k = static_cast<int>(b.size());
    const int m = k ? static_cast<int>(b[0].size()) : 0;
    Matrix out(n, std::vector<Scalar>(m, Scalar(0)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != k)
            throw std::invalid_argument("mat_mul: shape mismatch");
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    }
    return out;
}

Matrix mat_inverse(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    Matrix M = a;
    Matrix inv = mat_identity(n);
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(M[i].size()) != n)
            throw std::invalid_argument("mat_inverse: matrix must be square");
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (M[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) throw std::runtime_error("singular matrix");
        std::swap(M[c], M[pr]);
        std::swap(inv[c], inv[pr]);
        const Scalar s = Scalar(1) / M[c][c];
        for (int j = 0; j < n; ++j) {
            M[c][j] *= s;
            inv[c][j] *= s;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || M[i][c] == 0) continue;
            const Scalar f = M[i][c];
            for (int j = 0; j < n; ++j) {
                M[i][j] -= f * M[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

Scalar mat_det(Matrix a) {
    const int n = static_cast<int>(a.size());
    Scalar det(1);
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) return Scalar(0);
        if (pr != c) {
            std::swap(a[c], a[pr]);
            det = -det;
        }
        det *= a[c][c];
        const Scalar s = Scalar(1) / a[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            const Scalar f = a[i][c] * s;
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

LinearChange::LinearChange(Matrix a) : a_(std::move(a)), ainv_(mat_inverse(a_)) {}

LinearChange LinearChange::identity(int m) { return LinearChange(mat_identity(m)); }

LinearChange LinearChange::inverse() const { return LinearChange(ainv_); }

// f(x) -> f(A x): substitute each variable by its image row.
static Polynomial substitute(const Polynomial& f, const Matrix& rows, Side side) {
    const int m = f.nvars();
    std::vector<Polynomial> images;
    for (int i = 0; i < m; ++i) {
        Polynomial img(m, side);
        for (int j = 0; j < m; ++j)
            if (rows[i][j] != 0) img.add_term(mono_var(j, m), rows[i][j]);
        images.push_back(std::move(img));
    }
    Polynomial out(m, side);
    for (const auto& [mono, c] : f.terms()) {
        Polynomial term = Polynomial::one(m, side).scaled(c);
        for (int i = 0; i < m; ++i)
            for (int e = 0; e < mono[i]; ++e) term = term * images[i];
        out = out + term;
    }
    return out;
}

static Scalar exponent_factorial(const Monomial& m) {
    Scalar f(1);
    for (int e : m)
        for (int k = 2; k <= e; ++k) f *= Scalar(k);
    return f;
}

Polynomial LinearChange::apply_ring(const Polynomial& f) const {
    if (f.nvars() != nvars())
        throw std::invalid_argument("apply_ring: ambient mismatch");
    if (f.side() != Side::ring)
        throw std::invalid_argument("apply_ring: expects a ring-side polynomial");
    return substitute(f, a_, Side::ring);
}

Polynomial LinearChange::apply_dual(const Polynomial& F) const {
    if (F.nvars() != nvars())
        throw std::invalid_argument("apply_dual: ambient mismatch");
    if (F.side() != Side::dual)
        throw std::invalid_argument("apply_dual: expects a dual-side polynomial");
    // inverse transpose: X_j -> sum_k ainv_[k][j] X_k, i.e. rows[j][k] = ainv_[k][j]
    const int m = nvars();
    Matrix rows(m, std::vector<Scalar>(m));
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) rows[j][k] = ainv_[k][j];
    Polynomial theta(m, Side::dual);
    for (const auto& [mono, c] : F.terms())
        theta.add_term(mono, c / exponent_factorial(mono));
    Polynomial sub = substitute(theta, rows, Side::dual);
    Polynomial out(m, Side::dual);
    for (const auto& [mono, c] : sub.terms())
        out.add_term(mono, c * exponent_factorial(mono));
    return out;
}

Ideal LinearChange::apply(const Ideal& I) const {
    if (I.nvars != nvars())
        throw std::invalid_argument("apply: ambient mismatch");
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens) gens.push_back(apply_ring(g));
    return make_ideal(I.nvars, std::move(gens));
}

}  // namespace macdual
