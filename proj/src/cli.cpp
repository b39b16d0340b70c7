#include "macdual/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "macdual/jsonio.hpp"

namespace macdual {
namespace {

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        const auto a = cur.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        const auto b = cur.find_last_not_of(" \t");
        out.push_back(cur.substr(a, b - a + 1));
    }
    return out;
}

bool file_exists(const std::string& path) {
    std::ifstream f(path);
    return f.good();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

struct NamedPolys {
    std::vector<Polynomial> polys;
    std::vector<std::string> names;
};

// Numbered names (x1..xm / X1..Xm) first, single letters as a fallback so
// hand-typed generators like "y^2-xz" work directly.
NamedPolys parse_poly_list(const std::vector<std::string>& texts, int m,
                           Side side) {
    auto attempt = [&](const std::vector<std::string>& nm) {
        std::vector<Polynomial> out;
        for (const auto& t : texts)
            out.push_back(Polynomial::parse(t, m, side, nm));
        return out;
    };
    auto dn = default_names(m, side);
    try {
        return {attempt(dn), dn};
    } catch (const std::exception&) {
    }
    auto ln = letter_names(m, side);
    return {attempt(ln), ln};
}

struct IdealArg {
    Ideal ideal;
    std::vector<std::string> names;  // the name set that parsed
};

// --ideal accepts "empty", a file with one generator per line ('#' comments),
// or an inline comma-separated generator list.
IdealArg parse_ideal_arg(const std::string& spec, int m) {
    if (spec == "empty") return {make_ideal(m, {}), default_names(m, Side::ring)};
    std::vector<std::string> texts;
    if (file_exists(spec)) {
        std::istringstream in(read_file(spec));
        std::string line;
        while (std::getline(in, line)) {
            const auto a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos || line[a] == '#') continue;
            const auto b = line.find_last_not_of(" \t\r");
            texts.push_back(line.substr(a, b - a + 1));
        }
    } else {
        texts = split_list(spec, ',');
    }
    if (texts.empty()) throw std::invalid_argument("--ideal: no generators found");
    NamedPolys np = parse_poly_list(texts, m, Side::ring);
    return {make_ideal(m, std::move(np.polys)), np.names};
}

std::vector<int> parse_multiindex(const std::string& s) {
    std::vector<int> n;
    for (const auto& tok : split_list(s, ',')) n.push_back(std::stoi(tok));
    if (n.empty()) throw std::invalid_argument("--n: empty multi-index");
    return n;
}

Matrix parse_matrix(const std::string& s) {
    Matrix X;
    for (const auto& rowtext : split_list(s, ';')) {
        std::string cleaned = rowtext;
        for (auto& c : cleaned)
            if (c == ',') c = ' ';
        std::istringstream in(cleaned);
        std::vector<Scalar> row;
        std::string tok;
        while (in >> tok) {
            Scalar q(tok, 10);
            q.canonicalize();
            row.push_back(q);
        }
        if (!row.empty()) X.push_back(std::move(row));
    }
    if (X.empty()) throw std::invalid_argument("--matrix: no rows");
    return X;
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t given) {
    if (opt != nullptr && opt->count() > 0) return given;
    if (const char* env = std::getenv("MACDUAL_SEED")) {
        try {
            std::size_t used = 0;
            const std::string text(env);
            const std::uint64_t v = std::stoull(text, &used);
            if (used != text.size()) throw std::invalid_argument("trailing text");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("MACDUAL_SEED is not an unsigned integer");
        }
    }
    return 1;
}

std::string brace_list(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::string paren_list(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

// Sorted grammar-form generator strings, joined for a one-line display.
std::string ideal_line(const Ideal& I, const std::vector<std::string>& names) {
    std::vector<std::string> parts;
    for (const auto& g : I.gens) parts.push_back(g.str(names, false));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return out;
}

void emit_json(std::ostream& out, Json j) {
    j["schema"] = 1;
    out << j.dump(2) << "\n";
}

std::vector<std::string> dual_of(const std::vector<std::string>& ring_names,
                                 int m) {
    return ring_names == default_names(m, Side::ring)
               ? default_names(m, Side::dual)
               : letter_names(m, Side::dual);
}

// ---- subcommand runners ----------------------------------------------------

int run_perp(std::ostream& out, const std::string& ideal_spec, int m, int cap,
             const std::string& fmt) {
    IdealArg ia = parse_ideal_arg(ideal_spec, m);
    TruncatedPerp P = inverse_system(ia.ideal, cap);
    const auto dn = dual_of(ia.names, m);
    if (fmt == "json") {
        emit_json(out, json_perp(P, dn));
        return 0;
    }
    out << "vars " << m << ", cap " << cap << (P.graded() ? ", graded" : "")
        << "\n";
    out << "dim " << P.dim() << "\n";
    out << "basis:\n";
    for (const auto& b : P.basis()) out << "  " << b.str(dn, false) << "\n";
    return 0;
}

int run_ann(std::ostream& out, const std::string& dual_list, int m,
            const std::string& family_file, const std::string& n_str, int bound,
            const std::string& fmt) {
    std::vector<Polynomial> gens;
    int nvars = m;
    if (!dual_list.empty()) {
        NamedPolys np = parse_poly_list(split_list(dual_list, ','), m, Side::dual);
        gens = std::move(np.polys);
    } else {
        AdmissibleFamily F = parse_family(read_file(family_file));
        nvars = F.nvars;
        const MultiIndex n = parse_multiindex(n_str);
        for (int j = 1; j <= F.tau; ++j) gens.push_back(F.at(n, j));
    }
    DualSubmodule W(nvars, std::move(gens));
    std::optional<int> b;
    if (bound >= 0) b = bound;
    AnnihilatorResult A = annihilator(W, b);
    const auto rn = default_names(nvars, Side::ring);
    if (fmt == "json") {
        emit_json(out, json_annihilator(A, rn));
        return 0;
    }
    if (A.unit) out << "W = 0: annihilator is the unit ideal\n";
    out << "top degree " << A.top_degree << "\n";
    out << "generator degrees " << brace_list(A.degrees) << "\n";
    out << "generators:\n";
    for (const auto& g : A.ideal.gens) out << "  " << g.str(rn, false) << "\n";
    return 0;
}

int run_level_check(std::ostream& out, const std::string& ideal_spec, int m,
                    int d, std::uint64_t seed, int trials, int cap,
                    const std::string& reduction_str, const std::string& fmt) {
    IdealArg ia = parse_ideal_arg(ideal_spec, m);
    std::vector<Polynomial> red;
    const std::vector<Polynomial>* redp = nullptr;
    if (!reduction_str.empty()) {
        NamedPolys np =
            parse_poly_list(split_list(reduction_str, ','), m, Side::ring);
        red = std::move(np.polys);
        redp = &red;
    }
    LevelReport R = is_level(ia.ideal, d, seed, trials, redp, cap);
    if (fmt == "json") {
        emit_json(out, json_level(R, ia.names));
        return R.level ? 0 : 2;
    }
    out << "dimension " << R.dimension << ", seed " << R.seed << ", trials "
        << R.trials << ", stability " << R.stability << "/" << R.trials << "\n";
    out << "reduction:";
    for (const auto& l : R.reduction) out << " " << l.str(ia.names, false) << ";";
    out << "\n";
    out << "Hilbert function " << paren_list(R.artinian.hf) << "\n";
    out << "socle degree " << R.s << ", type " << R.artinian.type << "\n";
    out << "dual generator degrees " << brace_list(R.artinian.dual_gen_degrees)
        << "\n";
    out << "level: " << (R.level ? "YES" : "NO") << "\n";
    return R.level ? 0 : 2;
}

int run_admissible_check(std::ostream& out, const std::string& family_file,
                         const std::string& mode, const std::string& fmt) {
    AdmissibleFamily F = parse_family(read_file(family_file));
    const auto dn = default_names(F.nvars, Side::dual);
    if (mode == "full") {
        AdmissibilityReport rep = check_family(F);
        if (fmt == "json") {
            emit_json(out, json_admissibility(rep, dn));
            return rep.pass() ? 0 : 2;
        }
        out << "degrees: " << (rep.cond1 ? "PASS" : "FAIL")
            << "; recursion: " << (rep.cond2 ? "PASS" : "FAIL")
            << "; intersection: " << (rep.cond3 ? "PASS" : "FAIL") << "\n";
        out << "s = " << rep.s << "\n";
        for (const auto& w : rep.witnesses) {
            out << "witness: condition " << w.cond << " at n="
                << paren_list(w.n);
            if (w.i_one_based) out << ", i=" << w.i_one_based;
            if (w.j) out << ", j=" << w.j;
            out << ": " << w.what;
            if (!w.element.is_zero())
                out << " [" << w.element.str(dn, false) << "]";
            out << "\n";
        }
        out << "verdict: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
        return rep.pass() ? 0 : 2;
    }
    EqualityReport rep = mode == "gd" ? check_Gd(F) : check_weak(F);
    if (fmt == "json") {
        emit_json(out, json_equality(rep));
        return rep.pass ? 0 : 2;
    }
    for (const auto& c : rep.checks)
        out << "n=" << paren_list(c.n) << " i=" << c.i_one_based << " "
            << (c.pass ? "PASS" : "FAIL") << "\n";
    out << "verdict: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    return rep.pass ? 0 : 2;
}

int run_construct_cone(std::ostream& out, const std::string& dual_list, int m,
                       int d, int t0, const std::string& fmt) {
    NamedPolys np = parse_poly_list(split_list(dual_list, ','), m, Side::dual);
    AdmissibleFamily F = cone_family(np.polys, d, t0);
    if (fmt == "json") {
        emit_json(out, json_family(F));
        return 0;
    }
    out << serialize_family(F);
    return 0;
}

int run_construct_lift(std::ostream& out, const std::string& ideal_spec, int m,
                       int d, int t0, int cap, const std::string& fmt) {
    IdealArg ia = parse_ideal_arg(ideal_spec, m);
    std::vector<Polynomial> z;
    for (int i = 0; i < d; ++i)
        z.push_back(Polynomial::variable(m, Side::ring, i));
    AdmissibleFamily F = family_from_ideal(ia.ideal, z, t0, cap);
    if (fmt == "json") {
        emit_json(out, json_family(F));
        return 0;
    }
    out << serialize_family(F);
    return 0;
}

int run_construct_effective(std::ostream& out, const std::string& family_file,
                            std::uint64_t seed, int trials,
                            const std::string& fmt) {
    AdmissibleFamily F = parse_family(read_file(family_file));
    EffectiveResult R = effective_construct(F, seed, trials);
    const auto rn = default_names(F.nvars, Side::ring);
    if (fmt == "json") {
        emit_json(out, json_effective(R, rn));
        return R.extendable ? 0 : 2;
    }
    out << "I = (" << ideal_line(R.ideal, rn) << ")\n";
    out << "level: " << (R.level.level ? "YES" : "NO") << ", type "
        << R.level.artinian.type << ", socle degree " << R.level.s << "\n";
    out << "extendable: " << (R.extendable ? "YES" : "NO");
    if (!R.message.empty()) out << " (" << R.message << ")";
    out << "\n";
    return R.extendable ? 0 : 2;
}

int run_construct_heuristic(std::ostream& out, const std::string& family_file,
                            const std::string& n_str, bool split,
                            const std::string& fmt) {
    AdmissibleFamily F = parse_family(read_file(family_file));
    HeuristicResult R = local_construct_heuristic(F, parse_multiindex(n_str),
                                                  split);
    const auto rn = default_names(F.nvars, Side::ring);
    if (fmt == "json") {
        emit_json(out, json_heuristic(R, rn));
        return 0;
    }
    out << "certified modulo M^" << R.modulus << "\n";
    if (!R.removed_powers.empty()) {
        out << "seeded powers:";
        for (const auto& p : R.removed_powers)
            out << " " << p.str(rn, false) << ";";
        out << "\n";
    }
    out << "I = (" << ideal_line(R.ideal, rn) << ") mod M^" << R.modulus
        << "\n";
    return 0;
}

int run_construct_matroid(std::ostream& out, const std::string& matrix_str,
                          const std::string& fmt) {
    SimplicialComplexFacets C = matroid_from_matrix(parse_matrix(matrix_str));
    Ideal SR = stanley_reisner(C);
    const auto rn = default_names(C.vertices, Side::ring);
    if (fmt == "json") {
        emit_json(out, Json{{"complex", json_complex(C)},
                            {"stanley_reisner", json_ideal(SR, rn)}});
        return 0;
    }
    out << "facets:";
    for (const auto& f : C.facets) out << " " << brace_list(f);
    out << "\n";
    out << "Stanley-Reisner ideal: (" << ideal_line(SR, rn) << ")\n";
    return 0;
}

int run_construct_semigroup(std::ostream& out, const std::string& gens_str,
                            const std::string& fmt) {
    std::vector<long long> gens;
    for (const auto& tok : split_list(gens_str, ',')) gens.push_back(std::stoll(tok));
    NumericalSemigroup S = make_semigroup(gens);
    SemigroupPresentation P = semigroup_presentation(S);
    if (fmt == "json") {
        emit_json(out, json_semigroup(P, S));
        return 0;
    }
    auto [norm, g] = semigroup_normalize(S.gens);
    out << "semigroup <";
    for (std::size_t i = 0; i < S.gens.size(); ++i)
        out << (i ? "," : "") << S.gens[i];
    out << ">, gcd " << g << "\n";
    if (g == 1) out << "frobenius " << frobenius_number(S) << "\n";
    const auto rn = default_names(static_cast<int>(S.gens.size()), Side::ring);
    out << "relations (" << P.relations.size() << "), search bound " << P.bound
        << ":\n";
    for (std::size_t i = 0; i < P.relations.size(); ++i) {
        out << "  value " << P.relations[i].value << ": "
            << P.ideal.gens[i].str(rn, false) << "\n";
    }
    return 0;
}

int run_examples(std::ostream& out, const std::string& id, bool all,
                 std::uint64_t seed, const std::string& fmt) {
    const std::vector<std::string> ids =
        all ? fixture_ids() : std::vector<std::string>{id};
    std::vector<FixtureReport> reports;
    for (const auto& i : ids) reports.push_back(run_fixture(i, seed));
    int passed = 0;
    for (const auto& r : reports) passed += r.pass ? 1 : 0;
    if (fmt == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(json_fixture(r));
        emit_json(out, Json{{"fixtures", arr},
                            {"passed", passed},
                            {"total", static_cast<int>(reports.size())}});
        return passed == static_cast<int>(reports.size()) ? 0 : 2;
    }
    if (all) {
        for (const auto& r : reports)
            out << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.id << ": "
                << r.line << "\n";
        out << "passed " << passed << "/" << reports.size() << "\n";
    } else {
        const FixtureReport& r = reports.front();
        out << r.line << "\n";
        for (const auto& d : r.details) out << "  " << d << "\n";
    }
    return passed == static_cast<int>(reports.size()) ? 0 : 2;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
    CLI::App app{
        "macdual: exact inverse systems, annihilators, admissible families, "
        "and level-algebra construction over Q"};
    app.require_subcommand(1);
    int code = 0;

    const auto add_format = [](CLI::App* cmd, std::string& fmt) {
        cmd->add_option("--format", fmt, "output format (text|json)")
            ->check(CLI::IsMember({"text", "json"}));
    };

    // perp -------------------------------------------------------------
    auto perp_ideal = std::make_shared<std::string>();
    auto perp_vars = std::make_shared<int>(0);
    auto perp_cap = std::make_shared<int>(0);
    auto perp_fmt = std::make_shared<std::string>("text");
    CLI::App* perp = app.add_subcommand(
        "perp", "basis of the truncated inverse system I^perp");
    perp->add_option("--ideal", *perp_ideal,
                     "\"empty\", a file (one generator per line), or inline "
                     "comma-separated generators")
        ->required();
    perp->add_option("--vars", *perp_vars, "number of variables")->required();
    perp->add_option("--cap", *perp_cap, "truncation degree")->required();
    add_format(perp, *perp_fmt);
    perp->callback([&, perp_ideal, perp_vars, perp_cap, perp_fmt] {
        code = run_perp(out, *perp_ideal, *perp_vars, *perp_cap, *perp_fmt);
    });

    // ann --------------------------------------------------------------
    auto ann_dual = std::make_shared<std::string>();
    auto ann_vars = std::make_shared<int>(0);
    auto ann_family = std::make_shared<std::string>();
    auto ann_n = std::make_shared<std::string>();
    auto ann_bound = std::make_shared<int>(-1);
    auto ann_fmt = std::make_shared<std::string>("text");
    CLI::App* ann = app.add_subcommand(
        "ann", "annihilator ideal of a finitely generated dual submodule");
    auto* ann_dual_opt =
        ann->add_option("--dual", *ann_dual,
                        "comma-separated dual generators (with --vars)");
    ann->add_option("--vars", *ann_vars, "number of variables")
        ->needs(ann_dual_opt);
    auto* ann_family_opt = ann->add_option(
        "--family", *ann_family, "family file; annihilates W_n (with --n)");
    ann->add_option("--n", *ann_n, "multi-index k1,...,kd")->needs(ann_family_opt);
    ann_dual_opt->excludes(ann_family_opt);
    ann->add_option("--bound", *ann_bound, "keep generators of degree <= bound");
    add_format(ann, *ann_fmt);
    ann->callback([&, ann_dual, ann_vars, ann_family, ann_n, ann_bound, ann_fmt] {
        if (ann_dual->empty() && ann_family->empty())
            throw CLI::RequiredError("ann: --dual or --family");
        if (!ann_dual->empty() && *ann_vars <= 0)
            throw CLI::RequiredError("ann: --vars");
        if (!ann_family->empty() && ann_n->empty())
            throw CLI::RequiredError("ann: --n");
        code = run_ann(out, *ann_dual, *ann_vars, *ann_family, *ann_n,
                       *ann_bound, *ann_fmt);
    });

    // level-check --------------------------------------------------------
    auto lc_ideal = std::make_shared<std::string>();
    auto lc_vars = std::make_shared<int>(0);
    auto lc_dim = std::make_shared<int>(0);
    auto lc_seed = std::make_shared<std::uint64_t>(1);
    auto lc_trials = std::make_shared<int>(3);
    auto lc_cap = std::make_shared<int>(-1);
    auto lc_red = std::make_shared<std::string>();
    auto lc_fmt = std::make_shared<std::string>("text");
    CLI::App* lc = app.add_subcommand(
        "level-check",
        "Artinian reduction by d general (or given) elements; exit 2 if the "
        "quotient is not level");
    lc->add_option("--ideal", *lc_ideal, "ideal as in perp")->required();
    lc->add_option("--vars", *lc_vars, "number of variables")->required();
    lc->add_option("--dim", *lc_dim, "Krull dimension d of R/I")->required();
    auto* lc_seed_opt = lc->add_option(
        "--seed", *lc_seed, "RNG seed (falls back to MACDUAL_SEED, then 1)");
    lc->add_option("--trials", *lc_trials, "number of random reductions");
    lc->add_option("--cap", *lc_cap, "Artinian search cap (default heuristic)");
    lc->add_option("--reduction", *lc_red,
                   "comma-separated explicit reduction forms (skips sampling)");
    add_format(lc, *lc_fmt);
    lc->callback([&, lc_ideal, lc_vars, lc_dim, lc_seed, lc_trials, lc_cap,
                  lc_red, lc_fmt, lc_seed_opt] {
        code = run_level_check(out, *lc_ideal, *lc_vars, *lc_dim,
                               resolve_seed(lc_seed_opt, *lc_seed), *lc_trials,
                               *lc_cap, *lc_red, *lc_fmt);
    });

    // admissible-check ----------------------------------------------------
    auto ac_family = std::make_shared<std::string>();
    auto ac_mode = std::make_shared<std::string>("full");
    auto ac_fmt = std::make_shared<std::string>("text");
    CLI::App* ac = app.add_subcommand(
        "admissible-check",
        "membership conditions for a family file; exit 2 on failure");
    ac->add_option("--family", *ac_family, "family file")->required();
    ac->add_option("--mode", *ac_mode,
                   "full = all three conditions; gd = tau=1 equalities; weak "
                   "= module equalities")
        ->check(CLI::IsMember({"full", "gd", "weak"}));
    add_format(ac, *ac_fmt);
    ac->callback([&, ac_family, ac_mode, ac_fmt] {
        code = run_admissible_check(out, *ac_family, *ac_mode, *ac_fmt);
    });

    // construct -----------------------------------------------------------
    CLI::App* con = app.add_subcommand(
        "construct", "builders: cone, lift, effective, heuristic, matroid, "
                     "semigroup");
    con->require_subcommand(1);

    auto cc_dual = std::make_shared<std::string>();
    auto cc_vars = std::make_shared<int>(0);
    auto cc_dim = std::make_shared<int>(1);
    auto cc_t0 = std::make_shared<int>(0);
    auto cc_fmt = std::make_shared<std::string>("text");
    CLI::App* cone = con->add_subcommand(
        "cone", "cone family over dual forms in the tail variables");
    cone->add_option("--dual", *cc_dual, "comma-separated dual forms")->required();
    cone->add_option("--vars", *cc_vars, "number of variables")->required();
    cone->add_option("--dim", *cc_dim, "d (z = first d variables)");
    cone->add_option("--t0", *cc_t0, "index bound |n| <= t0")->required();
    add_format(cone, *cc_fmt);
    cone->callback([&, cc_dual, cc_vars, cc_dim, cc_t0, cc_fmt] {
        code = run_construct_cone(out, *cc_dual, *cc_vars, *cc_dim, *cc_t0,
                                  *cc_fmt);
    });

    auto lf_ideal = std::make_shared<std::string>();
    auto lf_vars = std::make_shared<int>(0);
    auto lf_dim = std::make_shared<int>(1);
    auto lf_t0 = std::make_shared<int>(0);
    auto lf_cap = std::make_shared<int>(-1);
    auto lf_fmt = std::make_shared<std::string>("text");
    CLI::App* lift = con->add_subcommand(
        "lift", "inverse-system family of an ideal (z = first d variables)");
    lift->add_option("--ideal", *lf_ideal, "ideal as in perp")->required();
    lift->add_option("--vars", *lf_vars, "number of variables")->required();
    lift->add_option("--dim", *lf_dim, "d (z = first d variables)");
    lift->add_option("--t0", *lf_t0, "index bound |n| <= t0")->required();
    lift->add_option("--cap", *lf_cap, "Artinian search cap for quotients");
    add_format(lift, *lf_fmt);
    lift->callback([&, lf_ideal, lf_vars, lf_dim, lf_t0, lf_cap, lf_fmt] {
        code = run_construct_lift(out, *lf_ideal, *lf_vars, *lf_dim, *lf_t0,
                                  *lf_cap, *lf_fmt);
    });

    auto ef_family = std::make_shared<std::string>();
    auto ef_seed = std::make_shared<std::uint64_t>(1);
    auto ef_trials = std::make_shared<int>(3);
    auto ef_fmt = std::make_shared<std::string>("text");
    CLI::App* eff = con->add_subcommand(
        "effective",
        "annihilator of W_(s+2,...,s+2) for a graded admissible family, with "
        "levelness validation; exit 2 if not extendable");
    eff->add_option("--family", *ef_family, "family file")->required();
    auto* ef_seed_opt = eff->add_option(
        "--seed", *ef_seed, "RNG seed (falls back to MACDUAL_SEED, then 1)");
    eff->add_option("--trials", *ef_trials, "levelness trials");
    add_format(eff, *ef_fmt);
    eff->callback([&, ef_family, ef_seed, ef_trials, ef_fmt, ef_seed_opt] {
        code = run_construct_effective(out, *ef_family,
                                       resolve_seed(ef_seed_opt, *ef_seed),
                                       *ef_trials, *ef_fmt);
    });

    auto he_family = std::make_shared<std::string>();
    auto he_n = std::make_shared<std::string>();
    auto he_split = std::make_shared<bool>(false);
    auto he_fmt = std::make_shared<std::string>("text");
    CLI::App* heur = con->add_subcommand(
        "heuristic",
        "annihilator of W_n for a local family, certified modulo a power of "
        "the maximal ideal");
    heur->add_option("--family", *he_family, "family file")->required();
    heur->add_option("--n", *he_n, "multi-index k1,...,kd")->required();
    heur->add_flag("--split", *he_split,
                   "seed the pure powers z_i^{n_i} and list only the "
                   "completing generators");
    add_format(heur, *he_fmt);
    heur->callback([&, he_family, he_n, he_split, he_fmt] {
        code = run_construct_heuristic(out, *he_family, *he_n, *he_split,
                                       *he_fmt);
    });

    auto mx_matrix = std::make_shared<std::string>();
    auto mx_fmt = std::make_shared<std::string>("text");
    CLI::App* matroid = con->add_subcommand(
        "matroid",
        "column matroid of a matrix and its Stanley-Reisner ideal");
    matroid->add_option("--matrix", *mx_matrix,
                        "rows separated by ';', entries by spaces or commas")
        ->required();
    add_format(matroid, *mx_fmt);
    matroid->callback([&, mx_matrix, mx_fmt] {
        code = run_construct_matroid(out, *mx_matrix, *mx_fmt);
    });

    auto sg_gens = std::make_shared<std::string>();
    auto sg_fmt = std::make_shared<std::string>("text");
    CLI::App* semi = con->add_subcommand(
        "semigroup", "minimal binomial presentation of a numerical semigroup");
    semi->add_option("--gens", *sg_gens, "comma-separated generators")->required();
    add_format(semi, *sg_fmt);
    semi->callback([&, sg_gens, sg_fmt] {
        code = run_construct_semigroup(out, *sg_gens, *sg_fmt);
    });

    // examples ------------------------------------------------------------
    auto ex_id = std::make_shared<std::string>();
    auto ex_all = std::make_shared<bool>(false);
    auto ex_seed = std::make_shared<std::uint64_t>(1);
    auto ex_fmt = std::make_shared<std::string>("text");
    CLI::App* ex = app.add_subcommand(
        "examples", "replay bundled worked examples; exit 2 if any fails");
    auto* ex_id_opt = ex->add_option("--id", *ex_id, "one example id");
    auto* ex_all_opt = ex->add_flag("--all", *ex_all, "run every example");
    ex_id_opt->excludes(ex_all_opt);
    auto* ex_seed_opt = ex->add_option(
        "--seed", *ex_seed, "RNG seed (falls back to MACDUAL_SEED, then 1)");
    add_format(ex, *ex_fmt);
    ex->callback([&, ex_id, ex_all, ex_seed, ex_fmt, ex_seed_opt] {
        if (!*ex_all && ex_id->empty())
            throw CLI::RequiredError("examples: --id or --all");
        code = run_examples(out, *ex_id, *ex_all,
                            resolve_seed(ex_seed_opt, *ex_seed), *ex_fmt);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}

}  // namespace macdual
