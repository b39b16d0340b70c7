#include "macdual/duality.hpp"

#include <algorithm>
#include <map>

namespace macdual {

Ideal make_ideal(int nvars, std::vector<Polynomial> gens) {
    Ideal I;
    I.nvars = nvars;
    I.graded = true;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.nvars() != nvars || g.side() != Side::ring) {
            throw std::invalid_argument(
                "ideal generators must be ring-side polynomials in the ambient ring");
        }
        if (!g.is_homogeneous()) I.graded = false;
        I.gens.push_back(std::move(g));
    }
    return I;
}

Scalar pairing(const Polynomial& f, const Polynomial& F) {
    if (f.nvars() != F.nvars())
        throw std::invalid_argument("pairing: ambient mismatch");
    if (f.side() != Side::ring || F.side() != Side::dual)
        throw std::invalid_argument("pairing: expects a ring element and a dual element");
    const auto& a = f.terms();
    const auto& b = F.terms();
    Scalar s(0);
    if (a.size() <= b.size()) {
        for (const auto& [m, c] : a) {
            auto it = b.find(m);
            if (it != b.end()) s += c * it->second;
        }
    } else {
        for (const auto& [m, c] : b) {
            auto it = a.find(m);
            if (it != a.end()) s += c * it->second;
        }
    }
    return s;
}

PolySpan ideal_window(const Ideal& I, int cap) {
    PolySpan S(I.nvars, Side::ring);
    if (cap < 0) return S;
    for (const auto& g : I.gens) {
        const int o = g.order();
        if (o > cap) continue;
        for (int dt = 0; dt <= cap - o; ++dt) {
            for (const auto& t : monomials_of_degree(I.nvars, dt))
                S.add(g.mono_multiplied(t).truncated(cap));
        }
    }
    return S;
}

// Span of the degree-j homogeneous piece of a graded ideal.
static PolySpan graded_piece(const Ideal& I, int j) {
    PolySpan S(I.nvars, Side::ring);
    for (const auto& g : I.gens) {
        const int dg = g.degree();
        if (dg > j) continue;
        for (const auto& t : monomials_of_degree(I.nvars, j - dg))
            S.add(g.mono_multiplied(t));
    }
    return S;
}

static SparseVec vectorize(const Polynomial& p, const MonoIndex& U) {
    SparseVec v;
    for (const auto& [m, c] : p.terms()) v[U.index(m)] = c;
    return v;
}

static Polynomial devectorize(const SparseVec& v, const MonoIndex& U, int nvars,
                              Side side) {
    Polynomial p(nvars, side);
    for (const auto& [i, c] : v) p.add_term(U.at(i), c);
    return p;
}

TruncatedPerp::TruncatedPerp(int nvars, int cap, bool graded,
                             std::vector<Polynomial> basis)
    : nvars_(nvars),
      cap_(cap),
      graded_(graded),
      basis_(std::move(basis)),
      span_(nvars, Side::dual) {
    for (const auto& b : basis_) span_.add(b);
}

std::vector<Polynomial> TruncatedPerp::basis_of_degree(int j) const {
    std::vector<Polynomial> out;
    for (const auto& b : basis_)
        if (b.degree() == j) out.push_back(b);
    return out;
}

TruncatedPerp inverse_system(const Ideal& I, int N) {
    if (N < 0) throw std::invalid_argument("inverse_system: cap must be >= 0");
    const int m = I.nvars;
    std::vector<Polynomial> basis;
    if (I.graded) {
        for (int j = 0; j <= N; ++j) {
            MonoIndex U(monomials_of_degree(m, j));
            std::vector<SparseVec> rows;
            for (const auto& r : graded_piece(I, j).basis())
                rows.push_back(vectorize(r, U));
            for (const auto& kv : kernel_basis(rows, U.size()))
                basis.push_back(devectorize(kv, U, m, Side::dual));
        }
    } else {
        MonoIndex U(monomials_upto(m, N));
        std::vector<SparseVec> rows;
        for (const auto& r : ideal_window(I, N).basis())
            rows.push_back(vectorize(r, U));
        for (const auto& kv : kernel_basis(rows, U.size()))
            basis.push_back(devectorize(kv, U, m, Side::dual));
    }
    return TruncatedPerp(m, N, I.graded, std::move(basis));
}

std::vector<Polynomial> perp_slice(const Ideal& I, int j) {
    if (!I.graded) throw std::invalid_argument("perp_slice: ideal must be graded");
    if (j < 0) throw std::invalid_argument("perp_slice: degree must be >= 0");
    const int m = I.nvars;
    MonoIndex U(monomials_of_degree(m, j));
    std::vector<SparseVec> rows;
    for (const auto& r : graded_piece(I, j).basis())
        rows.push_back(vectorize(r, U));
    std::vector<Polynomial> basis;
    for (const auto& kv : kernel_basis(rows, U.size()))
        basis.push_back(devectorize(kv, U, m, Side::dual));
    return basis;
}

// Deterministic candidate order for minimal-generator selection: ascending
// order (least total degree of a term), then the support sequences compared
// lexicographically in the grevlex order.  Stable, so ties keep kernel order.
static bool candidate_less(const Polynomial& a, const Polynomial& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    auto ia = ta.begin();
    auto ib = tb.begin();
    for (; ia != ta.end() && ib != tb.end(); ++ia, ++ib) {
        if (grevlex_less(ia->first, ib->first)) return true;
        if (grevlex_less(ib->first, ia->first)) return false;
    }
    return ia == ta.end() && ib != tb.end();
}

std::vector<Polynomial> annihilator_window_basis(const DualSubmodule& W) {
    const int m = W.nvars();
    const int s = W.top_degree();
    MonoIndex U(monomials_upto(m, s + 1));
    std::vector<SparseVec> rows;
    for (const auto& r : W.span().basis()) rows.push_back(vectorize(r, U));
    std::vector<Polynomial> K;
    for (const auto& kv : kernel_basis(rows, U.size()))
        K.push_back(devectorize(kv, U, m, Side::ring));
    std::stable_sort(K.begin(), K.end(), candidate_less);
    return K;
}

AnnihilatorResult annihilator(const DualSubmodule& W,
                              std::optional<int> degree_bound) {
    const int m = W.nvars();
    AnnihilatorResult out;
    if (W.is_zero()) {
        out.unit = true;
        out.top_degree = -1;
        out.degrees = {0};
        out.ideal = make_ideal(m, {Polynomial::one(m, Side::ring)});
        return out;
    }
    const int s = W.top_degree();
    out.top_degree = s;

    bool graded = true;
    for (const auto& g : W.generators())
        if (!g.is_zero() && !g.is_homogeneous()) graded = false;

    std::vector<Polynomial> kept;
    std::vector<int> degs;

    if (graded) {
        // Degree by degree: the new generators at degree j complete the span
        // of variable-multiples of the previous degree's kernel slice.  A
        // degree bound cuts the loop short: later degrees only contribute
        // generators the bound would discard.
        const int jmax = degree_bound ? std::min(s + 1, *degree_bound) : s + 1;
        std::vector<Polynomial> prev_kernel;
        for (int j = 0; j <= jmax; ++j) {
            MonoIndex U(monomials_of_degree(m, j));
            std::vector<SparseVec> rows;
            for (const auto& r : W.span().basis_of_degree(j))
                rows.push_back(vectorize(r, U));
            std::vector<Polynomial> Kj;
            for (const auto& kv : kernel_basis(rows, U.size()))
                Kj.push_back(devectorize(kv, U, m, Side::ring));
            PolySpan prod(m, Side::ring);
            for (const auto& g : prev_kernel)
                for (int i = 0; i < m; ++i)
                    prod.add(g.mono_multiplied(mono_var(i, m)));
            for (const auto& f : Kj) {
                if (prod.add(f)) {
                    kept.push_back(f);
                    degs.push_back(j);
                }
            }
            prev_kernel = std::move(Kj);
        }
    } else {
        // One kernel over all monomials of degree <= s+1.  Its span V is the
        // full degree-(s+1) window of the annihilator; the window vm of M*V
        // plays the Nakayama role, so candidates completing vm to V generate.
        MonoIndex U(monomials_upto(m, s + 1));
        std::vector<SparseVec> rows;
        for (const auto& r : W.span().basis())
            rows.push_back(vectorize(r, U));
        std::vector<Polynomial> K;
        for (const auto& kv : kernel_basis(rows, U.size()))
            K.push_back(devectorize(kv, U, m, Side::ring));

        PolySpan vm(m, Side::ring);
        for (const auto& g : K) {
            const int o = g.order();
            for (int dt = 1; dt <= s + 1 - o; ++dt)
                for (const auto& t : monomials_of_degree(m, dt))
                    vm.add(g.mono_multiplied(t).truncated(s + 1));
        }

        PolySpan V(m, Side::ring);
        for (const auto& g : K) V.add(g);

        // Canonical order multiset: the number of generators of order t is
        // dim(V n {order >= t} + vm) - dim(V n {order >= t+1} + vm).  Rows of
        // the echelon basis with pivot degree >= t span V n {order >= t}.
        std::vector<int> dims(s + 4, 0);
        {
            PolySpan acc = vm;
            auto vb = V.basis();
            for (int j = s + 2; j >= 0; --j) {
                for (const auto& r : vb)
                    if (r.order() == j) acc.add(r);
                dims[j] = acc.dim();
            }
        }
        for (int t = 0; t <= s + 1; ++t)
            for (int c = 0; c < dims[t] - dims[t + 1]; ++c) degs.push_back(t);

        std::stable_sort(K.begin(), K.end(), candidate_less);
        PolySpan S = vm;
        for (const auto& f : K)
            if (S.add(f)) kept.push_back(f);
    }

    if (degree_bound) {
        std::vector<Polynomial> fk;
        std::vector<int> fd;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if (kept[i].degree() <= *degree_bound) {
                fk.push_back(kept[i]);
                fd.push_back(graded ? degs[i] : kept[i].order());
            }
        }
        kept = std::move(fk);
        degs = std::move(fd);
    }

    out.degrees = degs;
    out.ideal = make_ideal(m, std::move(kept));
    return out;
}

Containment ideal_contains(const Ideal& I, const Polynomial& f, int trunc_N) {
    Containment c;
    if (f.is_zero()) {
        c.holds = true;
        c.exact = true;
        return c;
    }
    if (I.graded && f.is_homogeneous()) {
        c.exact = true;
        c.holds = graded_piece(I, f.degree()).contains(f);
        return c;
    }
    c.exact = false;
    c.modulus = trunc_N + 1;
    c.holds = ideal_window(I, trunc_N).contains(f.truncated(trunc_N));
    return c;
}

Containment ideal_equal(const Ideal& I, const Ideal& J, int trunc_N) {
    Containment c;
    if (I.graded && J.graded) {
        c.exact = true;
        c.holds = true;
        std::map<int, PolySpan> icache, jcache;
        for (const auto& g : J.gens) {
            auto it = icache.find(g.degree());
            if (it == icache.end())
                it = icache.emplace(g.degree(), graded_piece(I, g.degree())).first;
            if (!it->second.contains(g)) c.holds = false;
        }
        for (const auto& g : I.gens) {
            auto it = jcache.find(g.degree());
            if (it == jcache.end())
                it = jcache.emplace(g.degree(), graded_piece(J, g.degree())).first;
            if (!it->second.contains(g)) c.holds = false;
        }
        return c;
    }
    c.exact = false;
    c.modulus = trunc_N + 1;
    c.holds = spans_equal(ideal_window(I, trunc_N), ideal_window(J, trunc_N));
    return c;
}

}  // namespace macdual
