#include "macdual/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace macdual {

int degree(const Monomial& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0;
    }
    return false;
}

Monomial mono_one(int nvars) {
    return Monomial(nvars, 0);
}

Monomial mono_var(int i, int nvars) {
    Monomial m(nvars, 0);
    m[i] = 1;
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    Monomial out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    if (!mono_divides(a, b)) throw std::invalid_argument("monomial not divisible");
    Monomial out(b);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= a[i];
    return out;
}

static void gen_degree(int nvars, int d, int pos, Monomial& cur,
                       std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        cur[pos] = d;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur[pos] = e;
        gen_degree(nvars, d - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur(nvars, 0);
    gen_degree(nvars, d, 0, cur, out);
    std::sort(out.begin(), out.end(), GrevlexLess{});
    return out;
}

std::vector<Monomial> monomials_upto(int nvars, int N) {
    std::vector<Monomial> out;
    for (int d = 0; d <= N; ++d) {
        auto part = monomials_of_degree(nvars, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::int64_t count_monomials_of_degree(int nvars, int d) {
    if (d < 0) return 0;
    // binom(d + nvars - 1, nvars - 1)
    std::int64_t r = 1;
    for (int i = 1; i <= nvars - 1; ++i) r = r * (d + i) / i;
    return r;
}

std::int64_t count_monomials_upto(int nvars, int N) {
    if (N < 0) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= nvars; ++i) r = r * (N + i) / i;
    return r;
}

}  // namespace macdual
