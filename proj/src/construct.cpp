#include "macdual/construct.hpp"

#include <algorithm>

namespace macdual {

AdmissibleFamily cone_family(const std::vector<Polynomial>& H, int d, int t0) {
    if (H.empty()) throw std::invalid_argument("cone_family: empty input");
    const int m = H.front().nvars();
    if (d < 1 || d >= m) throw std::invalid_argument("cone_family: bad dimension");
    const int b = H.front().degree();
    for (const auto& h : H) {
        if (h.nvars() != m || h.side() != Side::dual)
            throw std::invalid_argument("cone_family: inputs must share a dual ambient");
        if (h.degree() != b) throw std::invalid_argument("degree mismatch");
        for (const auto& [mo, c] : h.terms()) {
            (void)c;
            for (int i = 0; i < d; ++i)
                if (mo[i] != 0)
                    throw std::invalid_argument(
                        "cone_family: inputs must avoid the first d variables");
        }
    }
    if (!top_forms_independent(H)) throw std::invalid_argument("dependent top forms");

    const int tau = static_cast<int>(H.size());
    std::map<std::pair<MultiIndex, int>, Polynomial> entries;
    for (const auto& n : index_set(d, t0)) {
        Monomial shift = mono_one(m);
        for (int i = 0; i < d; ++i) shift[i] = n[i] - 1;
        for (int j = 1; j <= tau; ++j)
            entries[{n, j}] = H[j - 1].mono_multiplied(shift);
    }
    std::vector<Polynomial> z;
    for (int i = 0; i < d; ++i) z.push_back(Polynomial::variable(m, Side::ring, i));
    return make_family(d, tau, t0, m, std::move(z), std::move(entries));
}

EffectiveResult effective_construct(const AdmissibleFamily& F, std::uint64_t seed,
                                    int trials) {
    if (!F.graded)
        throw std::invalid_argument("effective_construct: family must be graded");
    AdmissibilityReport rep = check_family(F);
    if (!rep.pass())
        throw std::invalid_argument("effective_construct: family not admissible");
    const int s = rep.s;
    const int d = F.d;
    if (F.t0 < (s + 2) * d)
        throw std::invalid_argument("effective_construct: need t0 >= (s+2)d");

    const MultiIndex nstar(d, s + 2);
    std::vector<Polynomial> gens;
    for (int j = 1; j <= F.tau; ++j) gens.push_back(F.at(nstar, j));
    DualSubmodule W(F.nvars, std::move(gens));
    AnnihilatorResult A = annihilator(W, s + 1);

    EffectiveResult out;
    out.ideal = A.ideal;
    out.level = is_level(out.ideal, d, seed, trials);
    out.extendable = out.level.level;
    if (!out.extendable) out.message = "family not extendable";
    return out;
}

AdmissibleFamily family_from_ideal(const Ideal& I,
                                   const std::vector<Polynomial>& z, int t0,
                                   int cap) {
    const int m = I.nvars;
    const int d = static_cast<int>(z.size());
    const MultiIndex ones(d, 1);
    Ideal base = quotient_by_powers(I, z, ones);
    if (cap < 0) {
        int maxdeg = 1;
        for (const auto& g : base.gens) maxdeg = std::max(maxdeg, g.degree());
        cap = 2 * (m + maxdeg);
    }
    ArtinianReport br = artinian_report(base, cap);
    const int s = br.socdeg;
    const int tau = br.type;

    std::map<std::pair<MultiIndex, int>, Polynomial> entries;
    for (const auto& n : index_set(d, t0)) {
        const int sn = s + mindex_sum(n) - d;
        Ideal Q = quotient_by_powers(I, z, n);
        // Unknowns: for graded data the top slice suffices (entries are
        // homogeneous of degree s_n); otherwise the full window basis.
        std::vector<Polynomial> basis =
            Q.graded ? perp_slice(Q, sn) : inverse_system(Q, sn).basis();
        if (n == ones) {
            if (Q.graded) {
                if (static_cast<int>(basis.size()) != tau)
                    throw std::runtime_error(
                        "family_from_ideal: top slice does not match the type");
                for (int j = 1; j <= tau; ++j) entries[{n, j}] = basis[j - 1];
            } else {
                DualSubmodule W(m, basis);
                MinGenerators mg = W.min_generators();
                if (mg.count != tau)
                    throw std::runtime_error(
                        "family_from_ideal: generator count does not match the type");
                for (int j = 1; j <= tau; ++j) entries[{n, j}] = mg.generators[j - 1];
            }
            continue;
        }
        std::vector<std::vector<Polynomial>> columns;
        for (const auto& w : basis) {
            std::vector<Polynomial> col;
            for (int i = 0; i < d; ++i) col.push_back(contract(z[i], w));
            columns.push_back(std::move(col));
        }
        for (int j = 1; j <= tau; ++j) {
            std::vector<Polynomial> target;
            for (int i = 0; i < d; ++i) {
                if (n[i] >= 2) {
                    MultiIndex prev = n;
                    prev[i] -= 1;
                    target.push_back(entries.at({prev, j}));
                } else {
                    target.push_back(Polynomial(m, Side::dual));
                }
            }
            auto sol = solve_combination(columns, target);
            if (!sol)
                throw std::runtime_error("family_from_ideal: no coherent entry at H[" +
                                         mindex_str(n) + "][" + std::to_string(j) +
                                         "]");
            Polynomial H(m, Side::dual);
            for (std::size_t k = 0; k < basis.size(); ++k)
                if ((*sol)[k] != 0) H = H + basis[k].scaled((*sol)[k]);
            entries[{n, j}] = std::move(H);
        }
    }
    return make_family(d, tau, t0, m, z, std::move(entries));
}

HeuristicResult local_construct_heuristic(const AdmissibleFamily& F,
                                          const MultiIndex& n_star, bool split_z) {
    const int m = F.nvars;
    const int d = F.d;
    if (static_cast<int>(n_star.size()) != d)
        throw std::invalid_argument("local_construct_heuristic: bad multi-index");
    std::vector<Polynomial> gens;
    for (int j = 1; j <= F.tau; ++j) gens.push_back(F.at(n_star, j));
    DualSubmodule W(m, std::move(gens));
    const int s = W.top_degree();

    HeuristicResult out;
    out.modulus = s + 2;
    if (!split_z) {
        out.ideal = annihilator(W).ideal;
        return out;
    }

    const int cap = s + 1;
    std::vector<Polynomial> powers;
    for (int i = 0; i < d; ++i) powers.push_back(poly_pow(F.z[i], n_star[i]));
    PolySpan S = ideal_window(make_ideal(m, powers), cap);

    // Window of M * ann: all proper monomial multiples of the window basis.
    std::vector<Polynomial> K = annihilator_window_basis(W);
    for (const auto& g : K) {
        const int o = g.order();
        for (int dt = 1; dt <= cap - o; ++dt)
            for (const auto& t : monomials_of_degree(m, dt))
                S.add(g.mono_multiplied(t).truncated(cap));
    }

    std::vector<Polynomial> kept;
    for (const auto& f : K) {
        if (!S.add(f)) continue;
        // monic in the leading (largest) monomial for stable display
        kept.push_back(f.scaled(Scalar(1) / f.terms().rbegin()->second));
    }
    out.removed_powers = std::move(powers);
    out.ideal = make_ideal(m, std::move(kept));
    return out;
}

SimplicialComplexFacets matroid_from_matrix(const Matrix& X) {
    const int m = static_cast<int>(X.size());
    const int n = m ? static_cast<int>(X[0].size()) : 0;
    if (m > n) throw std::invalid_argument("matroid_from_matrix: need rows <= columns");
    for (const auto& row : X)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matroid_from_matrix: ragged matrix");

    SimplicialComplexFacets out;
    out.vertices = n;
    // lexicographically ascending column m-subsets
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        Matrix sub(m, std::vector<Scalar>(m));
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) sub[r][c] = X[r][idx[c]];
        if (mat_det(sub) != 0) {
            std::vector<int> facet;
            for (int c : idx) facet.push_back(c + 1);
            out.facets.push_back(std::move(facet));
        }
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) break;
        idx[i] += 1;
        for (int k = i + 1; k < m; ++k) idx[k] = idx[k - 1] + 1;
    }
    return out;
}

Ideal stanley_reisner(const SimplicialComplexFacets& C) {
    const int n = C.vertices;
    std::vector<std::uint64_t> facet_masks;
    for (const auto& f : C.facets) {
        std::uint64_t mk = 0;
        for (int v : f) {
            if (v < 1 || v > n)
                throw std::invalid_argument("stanley_reisner: vertex out of range");
            mk |= (1ULL << (v - 1));
        }
        facet_masks.push_back(mk);
    }
    auto is_face = [&](std::uint64_t s) {
        for (std::uint64_t f : facet_masks)
            if ((s & f) == s) return true;
        return s == 0;
    };
    // Subsets ascending by (size, lexicographic on sorted members); a minimal
    // non-face has all proper subsets faces, so it suffices to check the
    // one-element-removed subsets.
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t s = 1; s < (1ULL << n); ++s) subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end(), [&](std::uint64_t a, std::uint64_t b) {
        const int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
        if (ca != cb) return ca < cb;
        std::vector<int> va, vb;
        for (int i = 0; i < n; ++i) {
            if (a & (1ULL << i)) va.push_back(i);
            if (b & (1ULL << i)) vb.push_back(i);
        }
        return va < vb;
    });
    std::vector<Polynomial> gens;
    for (std::uint64_t s : subsets) {
        if (is_face(s)) continue;
        bool minimal = true;
        for (int i = 0; i < n && minimal; ++i)
            if ((s & (1ULL << i)) && !is_face(s & ~(1ULL << i))) minimal = false;
        if (!minimal) continue;
        Monomial mo = mono_one(n);
        for (int i = 0; i < n; ++i)
            if (s & (1ULL << i)) mo[i] = 1;
        gens.push_back(Polynomial::monomial(n, Side::ring, mo));
    }
    return make_ideal(n, std::move(gens));
}

}  // namespace macdual
