#include "macdual/quotient.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace macdual {

static long long count_upto(int nvars, int j) {
    // C(j + nvars, nvars)
    long long r = 1;
    for (int i = 1; i <= nvars; ++i) r = r * (j + i) / i;
    return r;
}

ArtinianReport try_artinian_report(const Ideal& J, int cap) {
    const int m = J.nvars;
    ArtinianReport rep;
    rep.cap_used = cap;

    PolySpan W = ideal_window(J, cap);
    std::vector<int> by_order(cap + 1, 0);
    for (const auto& r : W.basis()) by_order[r.order()] += 1;

    // dim of R/(J + M^{j+1}) = #{monomials of degree <= j} - #{window rows of
    // order <= j}: truncating the cap window to degree j keeps exactly the
    // rows whose pivot survives, and they stay independent.
    std::vector<int> hf;
    long long prev = 0;
    long long rows_upto = 0;
    int N = -1;
    for (int j = 0; j <= cap; ++j) {
        rows_upto += by_order[j];
        const long long Dj = count_upto(m, j) - rows_upto;
        const int hfj = static_cast<int>(Dj - prev);
        if (hfj == 0) {
            N = j;
            break;
        }
        hf.push_back(hfj);
        prev = Dj;
    }
    if (N < 0) return rep;  // artinian stays false

    rep.artinian = true;
    rep.nilpotency = N;
    rep.socdeg = N - 1;
    rep.hf = std::move(hf);
    rep.dim_K = static_cast<int>(prev);

    if (rep.socdeg < 0) {
        // unit ideal: the zero algebra
        rep.type = 0;
        rep.level = false;
        return rep;
    }

    // Dual module of the quotient: the perp of the ideal window at socdeg.
    MonoIndex U(monomials_upto(m, rep.socdeg));
    std::vector<SparseVec> rows;
    for (const auto& r : W.basis()) {
        if (r.order() > rep.socdeg) continue;
        const Polynomial rt = r.truncated(rep.socdeg);
        SparseVec v;
        for (const auto& [mm, c] : rt.terms()) v[U.index(mm)] = c;
        rows.push_back(std::move(v));
    }
    std::vector<Polynomial> dual;
    for (const auto& kv : kernel_basis(rows, U.size())) {
        Polynomial F(m, Side::dual);
        for (const auto& [i, c] : kv) F.add_term(U.at(i), c);
        dual.push_back(std::move(F));
    }
    DualSubmodule WD(m, std::move(dual));
    auto mg = WD.min_generators();
    rep.type = mg.count;
    rep.dual_gen_degrees = mg.degrees;
    bool all_top = mg.count > 0;
    for (int d : mg.degrees)
        if (d != rep.socdeg) all_top = false;
    rep.level = all_top && top_forms_independent(mg.generators);
    return rep;
}

ArtinianReport artinian_report(const Ideal& J, int cap) {
    ArtinianReport rep = try_artinian_report(J, cap);
    if (!rep.artinian) throw std::runtime_error("not Artinian within cap");
    return rep;
}

static void require_independent_linear(const std::vector<Polynomial>& z,
                                       int nvars) {
    PolySpan S(nvars, Side::ring);
    for (const auto& f : z) {
        if (f.is_zero() || f.degree() != 1 || !f.is_homogeneous())
            throw std::invalid_argument("dependent forms");
        if (!S.add(f)) throw std::invalid_argument("dependent forms");
    }
}

Ideal quotient_by_powers(const Ideal& I, const std::vector<Polynomial>& z,
                         const std::vector<int>& n) {
    if (z.size() != n.size())
        throw std::invalid_argument("quotient_by_powers: one exponent per form");
    for (int k : n)
        if (k < 1) throw std::invalid_argument("quotient_by_powers: exponents must be >= 1");
    require_independent_linear(z, I.nvars);
    std::vector<Polynomial> gens = I.gens;
    for (std::size_t i = 0; i < z.size(); ++i)
        gens.push_back(poly_pow(z[i], n[i]));
    return make_ideal(I.nvars, std::move(gens));
}

// Uniform integer in [0, n) by rejection; avoids distribution objects whose
// output is not pinned down by the standard.
static std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t rem = (UINT64_MAX % n + 1) % n;  // 2^64 mod n
    const std::uint64_t bound = UINT64_MAX - rem;
    std::uint64_t v;
    do {
        v = rng();
    } while (v > bound);
    return v % n;
}

static std::vector<Polynomial> sample_forms(std::mt19937_64& rng, int m, int d,
                                            int coeff_bound) {
    std::vector<Polynomial> out;
    for (int i = 0; i < d; ++i) {
        Polynomial f(m, Side::ring);
        for (int j = 0; j < m; ++j) {
            const long long c =
                static_cast<long long>(uniform_below(rng, 2ULL * coeff_bound + 1)) -
                coeff_bound;
            if (c != 0) f.add_term(mono_var(j, m), Scalar(static_cast<long>(c)));
        }
        out.push_back(std::move(f));
    }
    return out;
}

static bool forms_independent(const std::vector<Polynomial>& z, int nvars) {
    PolySpan S(nvars, Side::ring);
    for (const auto& f : z) {
        if (f.is_zero()) return false;
        if (!S.add(f)) return false;
    }
    return true;
}

static int default_cap(const Ideal& I) {
    int mx = 0;
    for (const auto& g : I.gens) mx = std::max(mx, g.degree());
    return 2 * (I.nvars + mx);
}

LevelReport is_level(const Ideal& I, int d, std::uint64_t seed, int trials,
                     const std::vector<Polynomial>* explicit_reduction, int cap,
                     int coeff_bound) {
    const int m = I.nvars;
    if (d < 0 || d > m) throw std::invalid_argument("is_level: bad dimension");
    if (trials < 1) trials = 1;
    if (cap < 0) cap = default_cap(I);

    LevelReport rep;
    rep.dimension = d;
    rep.seed = seed;

    if (explicit_reduction) {
        if (static_cast<int>(explicit_reduction->size()) != d)
            throw std::invalid_argument("is_level: reduction size must equal dimension");
        require_independent_linear(*explicit_reduction, m);
        std::vector<Polynomial> gens = I.gens;
        for (const auto& f : *explicit_reduction) gens.push_back(f);
        ArtinianReport ar = try_artinian_report(make_ideal(m, std::move(gens)), cap);
        if (!ar.artinian) throw std::runtime_error("reduction not Artinian");
        rep.reduction = *explicit_reduction;
        rep.artinian = std::move(ar);
        rep.trials = 1;
        rep.stability = 1;
    } else {
        constexpr int kRetryBudget = 8;
        struct Key {
            std::vector<int> hf, degs;
            int socdeg, type;
            bool level;
            bool operator==(const Key& o) const {
                return hf == o.hf && degs == o.degs && socdeg == o.socdeg &&
                       type == o.type && level == o.level;
            }
        };
        std::vector<Key> keys;
        for (int t = 0; t < trials; ++t) {
            std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
            bool ok = false;
            for (int attempt = 0; attempt < kRetryBudget && !ok; ++attempt) {
                auto forms = sample_forms(rng, m, d, coeff_bound);
                if (!forms_independent(forms, m)) continue;
                std::vector<Polynomial> gens = I.gens;
                for (const auto& f : forms) gens.push_back(f);
                ArtinianReport ar =
                    try_artinian_report(make_ideal(m, std::move(gens)), cap);
                if (!ar.artinian) continue;
                ok = true;
                keys.push_back(Key{ar.hf, ar.dual_gen_degrees, ar.socdeg, ar.type,
                                   ar.level});
                if (t == 0) {
                    rep.reduction = forms;
                    rep.artinian = std::move(ar);
                }
            }
            if (!ok) throw std::runtime_error("reduction not Artinian");
        }
        rep.trials = trials;
        rep.stability = 0;
        for (int t = 0; t < trials; ++t) {
            if (keys[t] == keys[0]) {
                rep.stability += 1;
            } else {
                std::ostringstream os;
                os << "trial " << t << " (seed " << (seed + t)
                   << ") disagrees with trial 0: socdeg " << keys[t].socdeg
                   << " vs " << keys[0].socdeg << ", type " << keys[t].type
                   << " vs " << keys[0].type;
                rep.disagreements.push_back(os.str());
            }
        }
    }

    rep.multiplicity = rep.artinian.dim_K;
    rep.s = rep.artinian.socdeg;
    rep.level = rep.artinian.level;
    return rep;
}

std::vector<PowerCheck> socdeg_power_check(const Ideal& I,
                                           const std::vector<Polynomial>& z,
                                           int s,
                                           const std::vector<std::vector<int>>& ns,
                                           int cap) {
    const int d = static_cast<int>(z.size());
    std::vector<PowerCheck> out;
    for (const auto& n : ns) {
        PowerCheck pc;
        pc.n = n;
        int total = 0;
        for (int k : n) total += k;
        pc.expected = s + total - d;
        Ideal Q = quotient_by_powers(I, z, n);
        pc.report = artinian_report(Q, cap < 0 ? default_cap(Q) : cap);
        pc.pass = pc.report.socdeg == pc.expected;
        out.push_back(std::move(pc));
    }
    return out;
}

std::vector<PowerCheck> level_power_check(const Ideal& I,
                                          const std::vector<Polynomial>& z,
                                          const std::vector<std::vector<int>>& ns,
                                          int cap) {
    const int d = static_cast<int>(z.size());
    Ideal base = quotient_by_powers(I, z, std::vector<int>(d, 1));
    ArtinianReport br = artinian_report(base, cap < 0 ? default_cap(base) : cap);
    std::vector<PowerCheck> out;
    for (const auto& n : ns) {
        PowerCheck pc;
        pc.n = n;
        pc.expected = br.type;
        Ideal Q = quotient_by_powers(I, z, n);
        pc.report = artinian_report(Q, cap < 0 ? default_cap(Q) : cap);
        pc.pass = pc.report.level && pc.report.type == pc.expected;
        out.push_back(std::move(pc));
    }
    return out;
}

}  // namespace macdual
