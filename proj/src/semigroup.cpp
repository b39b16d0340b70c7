#include "macdual/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace macdual {

NumericalSemigroup make_semigroup(std::vector<long long> gens) {
    if (gens.empty()) throw std::invalid_argument("semigroup: no generators");
    for (long long g : gens)
        if (g <= 0) throw std::invalid_argument("semigroup: generators must be positive");
    return NumericalSemigroup{std::move(gens)};
}

std::pair<std::vector<long long>, long long> semigroup_normalize(
    const std::vector<long long>& gens) {
    long long g = 0;
    for (long long x : gens) g = std::gcd(g, x);
    std::vector<long long> norm;
    for (long long x : gens) norm.push_back(x / g);
    return {norm, g};
}

static long long gcd_of(const std::vector<long long>& gens) {
    long long g = 0;
    for (long long x : gens) g = std::gcd(g, x);
    return g;
}

// Bellman-Ford relaxation over residue classes; distances are bounded by
// a * max(gens), so the loop terminates.
static std::vector<long long> apery_raw(const std::vector<long long>& gens,
                                        long long a) {
    std::vector<long long> dist(a, -1);
    dist[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (long long r = 0; r < a; ++r) {
            if (dist[r] < 0) continue;
            for (long long n : gens) {
                const long long v = dist[r] + n;
                const long long rr = v % a;
                if (dist[rr] < 0 || v < dist[rr]) {
                    dist[rr] = v;
                    changed = true;
                }
            }
        }
    }
    return dist;
}

std::vector<long long> apery_set(const NumericalSemigroup& S, long long a) {
    if (gcd_of(S.gens) != 1)
        throw std::invalid_argument("non-coprime generators");
    if (a <= 0) throw std::invalid_argument("apery_set: modulus must be positive");
    std::vector<long long> ap = apery_raw(S.gens, a);
    std::sort(ap.begin(), ap.end());
    return ap;
}

long long frobenius_number(const NumericalSemigroup& S) {
    if (gcd_of(S.gens) != 1)
        throw std::invalid_argument("non-coprime generators");
    const long long a = *std::min_element(S.gens.begin(), S.gens.end());
    std::vector<long long> ap = apery_raw(S.gens, a);
    return *std::max_element(ap.begin(), ap.end()) - a;
}

static bool member_raw(const std::vector<long long>& gens, long long v) {
    if (v < 0) return false;
    std::vector<char> reach(v + 1, 0);
    reach[0] = 1;
    for (long long i = 1; i <= v; ++i)
        for (long long n : gens)
            if (n <= i && reach[i - n]) {
                reach[i] = 1;
                break;
            }
    return reach[v];
}

bool semigroup_member(const NumericalSemigroup& S, long long v) {
    auto [norm, g] = semigroup_normalize(S.gens);
    if (v % g != 0) return false;
    return member_raw(norm, v / g);
}

std::vector<std::vector<int>> semigroup_factorizations(
    const std::vector<long long>& gens, long long v) {
    const int l = static_cast<int>(gens.size());
    std::vector<std::vector<int>> out;
    if (v < 0) return out;
    if (v == 0) {
        out.emplace_back(l, 0);
        return out;
    }
    std::vector<int> cur(l, 0);
    auto rec = [&](auto&& self, int i, long long rem) -> void {
        if (i == l - 1) {
            if (rem % gens[i] == 0) {
                cur[i] = static_cast<int>(rem / gens[i]);
                out.push_back(cur);
            }
            return;
        }
        for (long long k = 0; k <= rem / gens[i]; ++k) {
            cur[i] = static_cast<int>(k);
            self(self, i + 1, rem - k * gens[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, v);
    std::sort(out.begin(), out.end());
    return out;
}

// Components of the graph joining factorizations with intersecting support,
// each sorted internally, components ordered by their least member.
static std::vector<std::vector<std::vector<int>>> support_components(
    const std::vector<std::vector<int>>& facts) {
    const int n = static_cast<int>(facts.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool shared = false;
            for (std::size_t k = 0; k < facts[i].size() && !shared; ++k)
                shared = facts[i][k] > 0 && facts[j][k] > 0;
            if (shared) parent[find(i)] = find(j);
        }
    std::map<int, std::vector<std::vector<int>>> by_root;
    for (int i = 0; i < n; ++i) by_root[find(i)].push_back(facts[i]);
    std::vector<std::vector<std::vector<int>>> comps;
    for (auto& [root, c] : by_root) {
        std::sort(c.begin(), c.end());
        comps.push_back(std::move(c));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

static Polynomial binomial_of(const std::vector<int>& p, const std::vector<int>& q) {
    const int l = static_cast<int>(p.size());
    Monomial mp(p.begin(), p.end()), mq(q.begin(), q.end());
    return Polynomial::monomial(l, Side::ring, mp) -
           Polynomial::monomial(l, Side::ring, mq);
}

SemigroupPresentation semigroup_presentation(const NumericalSemigroup& S) {
    auto [gens, g] = semigroup_normalize(S.gens);
    NumericalSemigroup N{gens};
    const long long F = frobenius_number(N);
    const long long nmin = *std::min_element(gens.begin(), gens.end());
    const long long nmax = *std::max_element(gens.begin(), gens.end());
    const long long bound = F + 1 + nmin + nmax;

    SemigroupPresentation out;
    out.bound = bound * g;
    std::vector<Polynomial> ideal_gens;
    for (long long v = 1; v <= bound; ++v) {
        if (!member_raw(gens, v)) continue;
        auto fs = semigroup_factorizations(gens, v);
        if (fs.size() < 2) continue;
        auto comps = support_components(fs);
        if (comps.size() < 2) continue;
        out.betti_values.push_back(v * g);
        const std::vector<int>& rep = comps.front().front();
        for (std::size_t c = 1; c < comps.size(); ++c) {
            const std::vector<int>& r = comps[c].front();
            SemigroupRelation rel;
            rel.value = v * g;
            rel.lhs = rep;
            rel.rhs = r;
            long long wl = 0, wr = 0;
            for (std::size_t k = 0; k < S.gens.size(); ++k) {
                wl += static_cast<long long>(rep[k]) * S.gens[k];
                wr += static_cast<long long>(r[k]) * S.gens[k];
            }
            if (wl != rel.value || wr != rel.value)
                throw std::logic_error("presentation relation not weight-homogeneous");
            ideal_gens.push_back(binomial_of(rep, r));
            out.relations.push_back(std::move(rel));
        }
    }
    out.ideal = make_ideal(static_cast<int>(S.gens.size()), std::move(ideal_gens));
    return out;
}

}  // namespace macdual
