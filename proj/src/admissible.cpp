#include "macdual/admissible.hpp"

#include <algorithm>
#include <sstream>

namespace macdual {

int mindex_sum(const MultiIndex& n) {
    int s = 0;
    for (int v : n) s += v;
    return s;
}

std::string mindex_str(const MultiIndex& n) {
    std::ostringstream os;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (i) os << ",";
        os << n[i];
    }
    return os.str();
}

static void enumerate_indices(int d, int pos, int budget, MultiIndex& cur,
                              std::vector<MultiIndex>& out) {
    if (pos == d) {
        out.push_back(cur);
        return;
    }
    const int remaining_min = d - pos - 1;  // later entries need >= 1 each
    for (int v = 1; v + remaining_min <= budget; ++v) {
        cur[pos] = v;
        enumerate_indices(d, pos + 1, budget - v, cur, out);
    }
}

std::vector<MultiIndex> index_set(int d, int t0) {
    std::vector<MultiIndex> out;
    if (d < 1 || t0 < d) return out;
    MultiIndex cur(d, 1);
    enumerate_indices(d, 0, t0, cur, out);
    std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
        const int sa = mindex_sum(a), sb = mindex_sum(b);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

const Polynomial& AdmissibleFamily::at(const MultiIndex& n, int j) const {
    auto it = entries.find({n, j});
    if (it == entries.end())
        throw std::out_of_range("family entry H[" + mindex_str(n) + "][" +
                                std::to_string(j) + "] missing");
    return it->second;
}

static void check_z_forms(const std::vector<Polynomial>& z, int d, int nvars) {
    if (static_cast<int>(z.size()) != d)
        throw std::invalid_argument("family needs exactly d reduction forms");
    PolySpan S(nvars, Side::ring);
    for (const auto& f : z) {
        if (f.nvars() != nvars || f.side() != Side::ring || f.is_zero() ||
            f.degree() != 1 || !f.is_homogeneous() || !S.add(f))
            throw std::invalid_argument("family reduction forms must be independent linear forms");
    }
}

AdmissibleFamily make_family(int d, int tau, int t0, int nvars,
                             std::vector<Polynomial> z,
                             std::map<std::pair<MultiIndex, int>, Polynomial> entries) {
    if (d < 1 || tau < 1 || t0 < d || nvars < d)
        throw std::invalid_argument("family shape parameters out of range");
    check_z_forms(z, d, nvars);
    AdmissibleFamily F;
    F.d = d;
    F.tau = tau;
    F.t0 = t0;
    F.nvars = nvars;
    F.z = std::move(z);
    F.entries = std::move(entries);
    F.graded = true;
    const auto idx = index_set(d, t0);
    std::size_t expected = idx.size() * static_cast<std::size_t>(tau);
    if (F.entries.size() != expected)
        throw std::invalid_argument("family index set incomplete or has extras");
    for (const auto& n : idx) {
        for (int j = 1; j <= tau; ++j) {
            const auto& H = F.at(n, j);  // throws if missing
            if (H.nvars() != nvars || H.side() != Side::dual)
                throw std::invalid_argument("family entries must be dual-side polynomials");
            if (!H.is_zero() && !H.is_homogeneous()) F.graded = false;
        }
    }
    return F;
}

PolySpan build_Vni(const MultiIndex& n, int i, int s_n, int m) {
    if (i < 0 || i >= static_cast<int>(n.size()))
        throw std::invalid_argument("build_Vni: index out of range");
    if (n[i] < 2) throw std::invalid_argument("n_i < 2");
    PolySpan V(m, Side::dual);
    for (const auto& k : monomials_upto(m, s_n))
        if (k[i] <= n[i] - 2) V.add(Polynomial::monomial(m, Side::dual, k));
    return V;
}

namespace {

struct Standardized {
    AdmissibleFamily fam;
    bool transformed = false;
    std::optional<LinearChange> back;        // maps witnesses to original coords
    std::vector<int> extension_one_based;    // variables completing z
};

Standardized standardize(const AdmissibleFamily& F) {
    const int m = F.nvars;
    const int d = F.d;
    bool standard = true;
    for (int i = 0; i < d; ++i) {
        const auto& t = F.z[i].terms();
        if (t.size() != 1 || t.begin()->first != mono_var(i, m) ||
            t.begin()->second != 1)
            standard = false;
    }
    Standardized st;
    if (standard) {
        st.fam = F;
        for (int k = d; k < m; ++k) st.extension_one_based.push_back(k + 1);
        return st;
    }
    // Rows of A: the z forms, then unit vectors of least index keeping rank.
    Matrix A;
    PolySpan lin(m, Side::ring);
    for (const auto& f : F.z) {
        std::vector<Scalar> row(m, Scalar(0));
        for (const auto& [mo, c] : f.terms())
            for (int j = 0; j < m; ++j)
                if (mo[j] == 1) row[j] = c;
        A.push_back(std::move(row));
        lin.add(f);
    }
    for (int k = 0; k < m && static_cast<int>(A.size()) < m; ++k) {
        if (!lin.add(Polynomial::variable(m, Side::ring, k))) continue;
        std::vector<Scalar> row(m, Scalar(0));
        row[k] = Scalar(1);
        A.push_back(std::move(row));
        st.extension_one_based.push_back(k + 1);
    }
    LinearChange psi(A);            // x_i -> z_i (and extension rows)
    LinearChange chi = psi.inverse();  // z_i -> x_i
    st.transformed = true;
    st.back = psi;
    AdmissibleFamily G = F;
    G.z.clear();
    for (int i = 0; i < d; ++i) G.z.push_back(Polynomial::variable(m, Side::ring, i));
    for (auto& [key, H] : G.entries) H = chi.apply_dual(H);
    st.fam = std::move(G);
    return st;
}

MultiIndex minus_ei(const MultiIndex& n, int i) {
    MultiIndex out = n;
    out[i] -= 1;
    return out;
}

}  // namespace

AdmissibilityReport check_family(const AdmissibleFamily& F0) {
    Standardized st = standardize(F0);
    const AdmissibleFamily& F = st.fam;
    const int m = F.nvars;
    const int d = F.d;

    AdmissibilityReport rep;
    rep.z_extension_one_based = st.extension_one_based;
    const auto idx = index_set(d, F.t0);
    const MultiIndex one(d, 1);
    rep.s = F.at(one, 1).degree();

    rep.cond1 = true;
    for (const auto& n : idx) {
        const int sn = rep.s + mindex_sum(n) - d;
        rep.s_map[n] = sn;
        std::vector<Polynomial> gens;
        bool degree_ok = true;
        for (int j = 1; j <= F.tau; ++j) {
            const auto& H = F.at(n, j);
            if (H.degree() != sn) {
                degree_ok = false;
                rep.cond1 = false;
                CondWitness w;
                w.cond = 1;
                w.n = n;
                w.j = j;
                w.what = "entry degree differs from s + |n| - d";
                rep.witnesses.push_back(std::move(w));
            }
            gens.push_back(H);
        }
        if (degree_ok && !top_forms_independent(gens)) {
            rep.cond1 = false;
            CondWitness w;
            w.cond = 1;
            w.n = n;
            w.what = "dependent top forms";
            rep.witnesses.push_back(std::move(w));
        }
    }

    rep.cond2 = true;
    for (const auto& n : idx) {
        for (int i = 0; i < d; ++i) {
            const Polynomial xi = Polynomial::variable(m, Side::ring, i);
            for (int j = 1; j <= F.tau; ++j) {
                const Polynomial got = contract(xi, F.at(n, j));
                const Polynomial expected =
                    n[i] >= 2 ? F.at(minus_ei(n, i), j) : Polynomial(m, Side::dual);
                if (!(got == expected)) {
                    rep.cond2 = false;
                    CondWitness w;
                    w.cond = 2;
                    w.n = n;
                    w.i_one_based = i + 1;
                    w.j = j;
                    w.what = n[i] >= 2 ? "contraction does not step the family down"
                                       : "contraction at lowest index is not zero";
                    rep.witnesses.push_back(std::move(w));
                }
            }
        }
    }

    rep.cond3 = true;
    std::map<MultiIndex, DualSubmodule> closures;
    auto closure = [&](const MultiIndex& n) -> const DualSubmodule& {
        auto it = closures.find(n);
        if (it == closures.end()) {
            std::vector<Polynomial> gens;
            for (int j = 1; j <= F.tau; ++j) gens.push_back(F.at(n, j));
            it = closures.try_emplace(n, m, std::move(gens)).first;
        }
        return it->second;
    };
    for (const auto& n : idx) {
        for (int i = 0; i < d; ++i) {
            if (n[i] < 2) continue;
            const DualSubmodule& Wn = closure(n);
            const DualSubmodule& Wp = closure(minus_ei(n, i));
            PolySpan V = build_Vni(n, i, rep.s_map.at(n), m);
            PolySpan inter = span_intersect(Wn.span(), V);
            for (const auto& b : inter.basis()) {
                if (Wp.span().contains(b)) continue;
                rep.cond3 = false;
                CondWitness w;
                w.cond = 3;
                w.n = n;
                w.i_one_based = i + 1;
                w.what = "intersection element escapes the one-step-down module";
                w.element = st.transformed ? st.back->apply_dual(b) : b;
                rep.witnesses.push_back(std::move(w));
                break;  // first witness per (n, i)
            }
        }
    }
    return rep;
}

// Span of (ideal gens) o targets: monomial multiples of the generators
// contracted into each target, which is already contraction-closed.
static PolySpan contract_ideal_into(const Ideal& A,
                                    const std::vector<Polynomial>& targets, int m) {
    PolySpan out(m, Side::dual);
    for (const auto& H : targets) {
        const int top = H.degree();
        for (const auto& g : A.gens) {
            const int o = g.order();
            for (int dt = 0; dt <= top - o; ++dt)
                for (const auto& t : monomials_of_degree(m, dt))
                    out.add(contract(g.mono_multiplied(t), H));
        }
    }
    return out;
}

// For tau = 1 this is the one-generator equality; for larger tau the same
// computation over all tau generators is the whole-module (weak) equality.
static EqualityReport check_step_equalities(const AdmissibleFamily& F) {
    const int m = F.nvars;
    const int d = F.d;
    EqualityReport rep;
    std::map<MultiIndex, DualSubmodule> closures;
    auto closure = [&](const MultiIndex& n) -> const DualSubmodule& {
        auto it = closures.find(n);
        if (it == closures.end()) {
            std::vector<Polynomial> gens;
            for (int j = 1; j <= F.tau; ++j) gens.push_back(F.at(n, j));
            it = closures.try_emplace(n, m, std::move(gens)).first;
        }
        return it->second;
    };
    for (const auto& n : index_set(d, F.t0)) {
        for (int i = 0; i < d; ++i) {
            if (n[i] < 2) continue;
            MultiIndex low = n;
            low[i] = 1;
            const DualSubmodule& Wp = closure(minus_ei(n, i));
            AnnihilatorResult A = annihilator(Wp);
            std::vector<Polynomial> targets;
            for (int j = 1; j <= F.tau; ++j) targets.push_back(F.at(n, j));
            PolySpan lhs = contract_ideal_into(A.ideal, targets, m);
            const DualSubmodule& Wlow = closure(low);
            const bool ok = spans_equal(lhs, Wlow.span());
            rep.checks.push_back({n, i + 1, ok});
            if (!ok) rep.pass = false;
        }
    }
    return rep;
}

EqualityReport check_Gd(const AdmissibleFamily& F0) {
    if (F0.tau != 1)
        throw std::invalid_argument("check_Gd: family must have tau = 1");
    Standardized st = standardize(F0);
    return check_step_equalities(st.fam);
}

EqualityReport check_weak(const AdmissibleFamily& F0) {
    Standardized st = standardize(F0);
    return check_step_equalities(st.fam);
}

// ---------------------------------------------------------------------------
// Text format

static std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

static Polynomial parse_with_fallback(const std::string& text, int m, Side side) {
    try {
        return Polynomial::parse(text, m, side, default_names(m, side));
    } catch (const std::invalid_argument&) {
        return Polynomial::parse(text, m, side, letter_names(m, side));
    }
}

AdmissibleFamily parse_family(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int d = -1, tau = -1, t0 = -1, m = -1;
    std::vector<Polynomial> z;
    std::map<std::pair<MultiIndex, int>, Polynomial> entries;
    bool have_header = false;
    while (std::getline(in, line)) {
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (!have_header) {
            const std::size_t zp = s.find("z=");
            if (zp == std::string::npos)
                throw std::invalid_argument("family header missing z=");
            for (const auto& fieldraw : split(s.substr(0, zp), ',')) {
                const std::string field = trim(fieldraw);
                if (field.empty()) continue;
                const auto kv = split(field, '=');
                if (kv.size() != 2)
                    throw std::invalid_argument("bad family header field: " + field);
                const std::string key = trim(kv[0]);
                const int val = std::stoi(trim(kv[1]));
                if (key == "d")
                    d = val;
                else if (key == "tau")
                    tau = val;
                else if (key == "t0")
                    t0 = val;
                else if (key == "vars")
                    m = val;
                else
                    throw std::invalid_argument("unknown family header key: " + key);
            }
            if (d < 1 || tau < 1 || t0 < 1 || m < 1)
                throw std::invalid_argument("family header incomplete");
            for (const auto& ztext : split(s.substr(zp + 2), ','))
                z.push_back(parse_with_fallback(trim(ztext), m, Side::ring));
            have_header = true;
            continue;
        }
        if (s[0] != 'H')
            throw std::invalid_argument("expected family entry line, got: " + s);
        const std::size_t b1 = s.find('['), e1 = s.find(']');
        const std::size_t b2 = s.find('[', e1), e2 = s.find(']', b2);
        const std::size_t eq = s.find('=', e2);
        if (b1 == std::string::npos || e1 == std::string::npos ||
            b2 == std::string::npos || e2 == std::string::npos ||
            eq == std::string::npos)
            throw std::invalid_argument("malformed family entry line: " + s);
        MultiIndex n;
        for (const auto& p : split(s.substr(b1 + 1, e1 - b1 - 1), ','))
            n.push_back(std::stoi(trim(p)));
        const int j = std::stoi(trim(s.substr(b2 + 1, e2 - b2 - 1)));
        Polynomial H = parse_with_fallback(trim(s.substr(eq + 1)), m, Side::dual);
        if (!entries.emplace(std::make_pair(n, j), std::move(H)).second)
            throw std::invalid_argument("duplicate family entry H[" + mindex_str(n) +
                                        "][" + std::to_string(j) + "]");
    }
    if (!have_header) throw std::invalid_argument("family file has no header");
    return make_family(d, tau, t0, m, std::move(z), std::move(entries));
}

std::string serialize_family(const AdmissibleFamily& F) {
    std::ostringstream os;
    os << "d=" << F.d << ", tau=" << F.tau << ", t0=" << F.t0
       << ", vars=" << F.nvars << ", z=";
    const auto rn = default_names(F.nvars, Side::ring);
    for (int i = 0; i < F.d; ++i) {
        if (i) os << ",";
        os << F.z[i].str(rn);
    }
    os << "\n";
    const auto dn = default_names(F.nvars, Side::dual);
    for (const auto& n : index_set(F.d, F.t0))
        for (int j = 1; j <= F.tau; ++j)
            os << "H[" << mindex_str(n) << "][" << j
               << "] = " << F.at(n, j).str(dn) << "\n";
    return os.str();
}

}  // namespace macdual
