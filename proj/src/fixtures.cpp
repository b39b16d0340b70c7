#include "macdual/fixtures.hpp"

#include <algorithm>
#include <sstream>

namespace macdual {

std::string ideal_display(const Ideal& I, const std::vector<std::string>& names) {
    std::vector<std::string> parts;
    for (const auto& g : I.gens) parts.push_back(g.str(names, true));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    return out;
}

static std::string hf_str(const std::vector<int>& hf) {
    std::string s = "(";
    for (std::size_t i = 0; i < hf.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(hf[i]);
    }
    return s + ")";
}

static std::string degrees_str(const std::vector<int>& d) {
    std::string s = "{";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + "}";
}

namespace fixtures {

// H_1 = base; H_k = X1 * H_{k-1} + delta_{k-2} (empty delta = no correction).
static std::vector<Polynomial> build_chain(const std::string& base,
                                           const std::vector<std::string>& deltas,
                                           int m) {
    auto nm = letter_names(m, Side::dual);
    std::vector<Polynomial> H;
    H.push_back(Polynomial::parse(base, m, Side::dual, nm));
    for (const auto& d : deltas) {
        Polynomial next = H.back().mono_multiplied(mono_var(0, m));
        if (!d.empty()) next = next + Polynomial::parse(d, m, Side::dual, nm);
        H.push_back(next);
    }
    return H;
}

static AdmissibleFamily family_d1(const std::vector<std::vector<Polynomial>>& chains,
                                  int m) {
    const int tau = static_cast<int>(chains.size());
    const int t0 = static_cast<int>(chains[0].size());
    std::map<std::pair<MultiIndex, int>, Polynomial> entries;
    for (int k = 1; k <= t0; ++k)
        for (int j = 1; j <= tau; ++j)
            entries[{MultiIndex{k}, j}] = chains[j - 1][k - 1];
    std::vector<Polynomial> z = {Polynomial::variable(m, Side::ring, 0)};
    return make_family(1, tau, t0, m, z, std::move(entries));
}

static Ideal parse_ideal(int m, const std::vector<std::string>& gens) {
    auto nm = letter_names(m, Side::ring);
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(Polynomial::parse(g, m, Side::ring, nm));
    return make_ideal(m, std::move(ps));
}

AdmissibleFamily cone_cubics() {
    auto nm = letter_names(3, Side::dual);
    return cone_family({Polynomial::parse("Y^3", 3, Side::dual, nm),
                        Polynomial::parse("Z^3", 3, Side::dual, nm)},
                       1, 5);
}

static std::vector<Polynomial> chain_a_polys() {
    return build_chain("Y^3-Z^3", {"Y*Z^3", "-Y^2*Z^3", "Y^3*Z^3-4Z^6",
                                   "Y^7-Y^4*Z^3+4Y*Z^6"},
                       3);
}

static std::vector<Polynomial> chain_b_polys() {
    return build_chain("Y^2*Z", {"", "", "", ""}, 3);
}

AdmissibleFamily chain_gorenstein_a() { return family_d1({chain_a_polys()}, 3); }
AdmissibleFamily chain_gorenstein_b() { return family_d1({chain_b_polys()}, 3); }
AdmissibleFamily chain_merged() {
    return family_d1({chain_a_polys(), chain_b_polys()}, 3);
}

Ideal chain_ideal_a() {
    return parse_ideal(3, {"yz+xz", "y^3+z^3-xy^2+x^2y-x^3"});
}
Ideal chain_ideal_b() { return parse_ideal(3, {"z^2", "y^3"}); }
Ideal chain_intersection() {
    return parse_ideal(
        3, {"xz^2+yz^2", "4y^3z+z^4", "x^3y^3-x^2y^4+xy^5-y^6-y^2z^3"});
}

AdmissibleFamily local_family_a() {
    auto c1 = build_chain("Y*W", {"", "Z^2*W", "Y^2*Z*W+W^3"}, 4);
    auto c2 = build_chain("Z*W", {"Y^2*W", "", "Y*Z^2*W"}, 4);
    return family_d1({c1, c2}, 4);
}

Ideal local_target_a() {
    return parse_ideal(4, {"y^2-xz", "x^3-yz", "x^2y-z^2", "w^2-x^3y"});
}

AdmissibleFamily local_family_b() {
    auto c1 = build_chain("Y", {"", "", "Y*W+Z^2", "Y^2*Z"}, 4);
    auto c2 = build_chain("Z", {"Y^2", "", "Z*W", "Y*Z^2+Y^2*W"}, 4);
    return family_d1({c1, c2}, 4);
}

Ideal local_target_b() {
    return parse_ideal(4, {"x^3-w", "xz-y^2", "xw-yz", "z^2-yw"});
}
Ideal local_displayed_b() {
    return parse_ideal(4, {"x^3-w", "x^4-yz", "xz-y^2", "x^3y-z^2"});
}

Matrix matroid_matrix() {
    return {{1, 0, 2, 0, 3}, {0, 1, 0, 2, 0}};
}

Matrix matroid_coordinate_change() {
    return {{0, 1, 0, 1, 0},
            {1, 0, 1, 0, 1},
            {0, 0, 1, 0, 0},
            {0, 0, 0, 1, 0},
            {0, 0, 0, 0, 1}};
}

std::vector<std::string> matroid_names(bool dual) {
    std::vector<std::string> nm;
    for (int i = 1; i <= 5; ++i)
        nm.push_back((dual ? "Y" : "y") + std::to_string(i));
    return nm;
}

Ideal matroid_squarefree_target() {
    auto nm = matroid_names(false);
    std::vector<Polynomial> gens;
    for (const char* s : {"y1*y3", "y1*y5", "y2*y4", "y3*y5"})
        gens.push_back(Polynomial::parse(s, 5, Side::ring, nm));
    return make_ideal(5, std::move(gens));
}

Ideal matroid_transformed_ideal() {
    LinearChange chg(matroid_coordinate_change());
    return chg.inverse().apply(stanley_reisner(matroid_from_matrix(matroid_matrix())));
}

const AdmissibleFamily& matroid_family() {
    static const AdmissibleFamily F = [] {
        std::vector<Polynomial> z = {Polynomial::variable(5, Side::ring, 0),
                                     Polynomial::variable(5, Side::ring, 1)};
        return family_from_ideal(matroid_transformed_ideal(), z, 8);
    }();
    return F;
}

std::vector<Polynomial> matroid_recorded_entries(int n1, int n2) {
    auto nm = matroid_names(true);
    auto P = [&](const std::string& s) {
        return Polynomial::parse(s, 5, Side::dual, nm);
    };
    const std::vector<Polynomial> h11 = {P("Y4*Y5"), P("Y3*Y4")};
    if (n1 == 1 && n2 == 1) return h11;
    const std::vector<Polynomial> h12 = {
        h11[0].mono_multiplied(mono_var(1, 5)) + P("Y4*Y5^2"),
        h11[1].mono_multiplied(mono_var(1, 5)) + P("Y3^2*Y4")};
    if (n1 == 1 && n2 == 2) return h12;
    if (n1 == 2 && n2 == 2)
        return {h12[0].mono_multiplied(mono_var(0, 5)) + P("Y2*Y4^2*Y5") +
                    P("Y4^2*Y5^2"),
                h12[1].mono_multiplied(mono_var(0, 5)) + P("Y2*Y3*Y4^2") +
                    P("Y3^2*Y4^2")};
    throw std::invalid_argument("no recorded entry for that index");
}

NumericalSemigroup semigroup_a() { return make_semigroup({6, 7, 11, 15}); }
NumericalSemigroup semigroup_b() { return make_semigroup({6, 8, 10, 13}); }
NumericalSemigroup semigroup_c() { return make_semigroup({6, 10, 14, 18}); }

Ideal semigroup_b_target() {
    auto nm = letter_names(4, Side::ring);
    std::vector<Polynomial> gens;
    for (const char* s : {"y^2-xz", "yz-x^3", "z^2-x^2y", "w^2-x^3y"})
        gens.push_back(Polynomial::parse(s, 4, Side::ring, nm));
    return make_ideal(4, std::move(gens));
}

}  // namespace fixtures

std::vector<std::string> fixture_ids() {
    return {"ex2.5", "ex2.11", "ex5.3", "ex5.4", "ex5.5", "ex5.6", "ex5.7"};
}

namespace {

struct Verdicts {
    bool pass = true;
    std::vector<std::string> details;
    void note(bool ok, const std::string& what) {
        pass = pass && ok;
        details.push_back(std::string(ok ? "ok:   " : "FAIL: ") + what);
    }
};

FixtureReport run_ex25(std::uint64_t seed) {
    FixtureReport r;
    r.id = "ex2.5";
    Verdicts v;
    auto P = semigroup_presentation(fixtures::semigroup_a());
    v.note(P.relations.size() == 5, "presentation has 5 relations");
    const Ideal& I = P.ideal;
    const int cap = 8;

    std::vector<Polynomial> red1 = {Polynomial::variable(4, Side::ring, 0)};
    LevelReport a = is_level(I, 1, seed, 1, &red1, cap);
    v.note(a.artinian.hf == std::vector<int>({1, 3, 2}) && a.level,
           "reduction (x1): HF " + hf_str(a.artinian.hf) + ", level");

    std::vector<Polynomial> red2 = {Polynomial::variable(4, Side::ring, 0) +
                                    Polynomial::variable(4, Side::ring, 1)};
    LevelReport b = is_level(I, 1, seed, 1, &red2, cap);
    v.note(b.artinian.hf == std::vector<int>({1, 3, 1, 1}) && !b.level,
           "reduction (x1+x2): HF " + hf_str(b.artinian.hf) + ", not level");

    LevelReport g = is_level(I, 1, seed, 3, nullptr, cap);
    v.note(!g.level && g.stability == g.trials,
           "general reduction: not level, stable " + std::to_string(g.stability) +
               "/" + std::to_string(g.trials) + ", HF " + hf_str(g.artinian.hf));

    r.pass = v.pass;
    r.details = std::move(v.details);
    std::ostringstream os;
    os << "semigroup <6,7,11,15>: reduction (x1) HF (1,3,2) level; "
       << "reduction (x1+x2) HF (1,3,1,1) not level; general: not level"
       << (r.pass ? "" : " -- MISMATCH");
    r.line = os.str();
    return r;
}

FixtureReport run_ex211(std::uint64_t seed) {
    FixtureReport r;
    r.id = "ex2.11";
    Verdicts v;
    auto P = semigroup_presentation(fixtures::semigroup_b());
    v.note(P.relations.size() == 4, "presentation has 4 relations");
    Containment eq = ideal_equal(P.ideal, fixtures::semigroup_b_target(), 6);
    v.note(eq.holds, "presentation matches the recorded ideal mod M^7");
    std::vector<Polynomial> red = {Polynomial::variable(4, Side::ring, 0)};
    LevelReport a = is_level(P.ideal, 1, seed, 1, &red, 8);
    v.note(a.artinian.hf == std::vector<int>({1, 3, 2}) && a.level &&
               a.artinian.type == 2,
           "reduction (x1): HF " + hf_str(a.artinian.hf) + ", level type 2");
    r.pass = v.pass;
    r.details = std::move(v.details);
    r.line = std::string("semigroup <6,8,10,13>: presentation matches mod M^7; "
                         "reduction (x1) HF (1,3,2) level type 2") +
             (r.pass ? "" : " -- MISMATCH");
    return r;
}

FixtureReport run_ex53(std::uint64_t seed) {
    FixtureReport r;
    r.id = "ex5.3";
    Verdicts v;
    AdmissibleFamily F = fixtures::cone_cubics();
    AdmissibilityReport rep = check_family(F);
    v.note(rep.pass(), "cone family is admissible");
    v.note(rep.s == 3, "s = 3");
    EffectiveResult er = effective_construct(F, seed, 3);
    auto rn = letter_names(3, Side::ring);
    const std::string shown = ideal_display(er.ideal, rn);
    v.note(shown == "y^4,yz,z^4", "recovered ideal (" + shown + ")");
    v.note(er.extendable && er.level.level && er.level.artinian.type == 2,
           "level of type 2");
    r.pass = v.pass;
    r.details = std::move(v.details);
    std::ostringstream os;
    os << "L_" << F.d << "^" << F.tau << "-admissible: "
       << (rep.pass() ? "PASS" : "FAIL") << "; I=(" << shown << "); level type "
       << er.level.artinian.type;
    r.line = os.str();
    return r;
}

FixtureReport run_ex54(std::uint64_t seed) {
    FixtureReport r;
    r.id = "ex5.4";
    Verdicts v;
    AdmissibleFamily F = fixtures::local_family_a();
    AdmissibilityReport rep = check_family(F);
    v.note(rep.pass(), "family is admissible");
    HeuristicResult hs = local_construct_heuristic(F, {4}, true);
    v.note(hs.modulus == 7, "certified modulo M^7");
    Containment eq = ideal_equal(hs.ideal, fixtures::local_target_a(),
                                 hs.modulus - 1);
    v.note(eq.holds, "candidate matches the recorded ideal mod M^7");
    std::vector<Polynomial> red = {Polynomial::variable(4, Side::ring, 0)};
    LevelReport a = is_level(fixtures::local_target_a(), 1, seed, 1, &red, 8);
    v.note(a.artinian.hf == std::vector<int>({1, 3, 2}) && a.level &&
               a.artinian.type == 2,
           "reduction (x): HF " + hf_str(a.artinian.hf) + ", level type 2");
    auto rn = letter_names(4, Side::ring);
    r.pass = v.pass;
    r.details = std::move(v.details);
    std::ostringstream os;
    os << "L_" << F.d << "^" << F.tau << "-admissible: "
       << (rep.pass() ? "PASS" : "FAIL") << "; I=("
       << ideal_display(hs.ideal, rn) << ") mod M^" << hs.modulus
       << "; level type " << a.artinian.type;
    r.line = os.str();
    return r;
}

FixtureReport run_ex55(std::uint64_t seed) {
    FixtureReport r;
    r.id = "ex5.5";
    Verdicts v;
    AdmissibleFamily FM = fixtures::chain_merged();
    AdmissibilityReport rep = check_family(FM);
    v.note(rep.cond1 && rep.cond2 && !rep.cond3,
           "merged family fails exactly the intersection condition");
    std::string wit;
    auto YN = letter_names(3, Side::dual);
    for (const auto& w : rep.witnesses)
        if (w.cond == 3 && w.n == MultiIndex{2} && w.i_one_based == 1) {
            wit = w.element.str(YN, true);
            break;
        }
    v.note(wit == "Z^3", "witness Z^3 at n=(2), i=1 (got '" + wit + "')");
    EqualityReport weak = check_weak(FM);
    v.note(weak.pass, "weak containments hold");
    v.note(check_Gd(fixtures::chain_gorenstein_a()).pass,
           "first tau=1 chain is G_1-admissible");
    v.note(check_Gd(fixtures::chain_gorenstein_b()).pass,
           "second tau=1 chain is G_1-admissible");
    LevelReport lv =
        is_level(fixtures::chain_intersection(), 1, seed, 3, nullptr, 10);
    v.note(!lv.level, "intersection ideal is not level");
    v.note(lv.artinian.dual_gen_degrees == std::vector<int>({4, 5}),
           "dual generator degrees " + degrees_str(lv.artinian.dual_gen_degrees));
    v.note(lv.artinian.hf == std::vector<int>({1, 2, 3, 3, 2, 1}),
           "reduction HF " + hf_str(lv.artinian.hf));
    v.note(lv.stability == lv.trials, "verdict stable across trials");
    r.pass = v.pass;
    r.details = std::move(v.details);
    std::ostringstream os;
    os << "L_1^2-admissible: FAIL (witness " << (wit.empty() ? "?" : wit)
       << " at n=(2),i=1); weak: " << (weak.pass ? "PASS" : "FAIL")
       << "; tau=1 chains G_1: PASS; intersection not level, dual degrees "
       << degrees_str(lv.artinian.dual_gen_degrees);
    r.line = os.str();
    return r;
}

FixtureReport run_ex56(std::uint64_t seed) {
    FixtureReport r;
    r.id = "ex5.6";
    Verdicts v;
    AdmissibleFamily F = fixtures::local_family_b();
    AdmissibilityReport rep = check_family(F);
    v.note(rep.pass(), "family is admissible");
    HeuristicResult hs = local_construct_heuristic(F, {5}, true);
    v.note(hs.modulus == 7, "certified modulo M^7");
    v.note(ideal_equal(hs.ideal, fixtures::local_target_b(), hs.modulus - 1).holds,
           "candidate matches the recorded ideal mod M^7");
    v.note(ideal_equal(fixtures::local_displayed_b(), fixtures::local_target_b(), 5)
               .holds,
           "lower-cap generators match mod M^6");
    std::vector<Polynomial> red = {Polynomial::variable(4, Side::ring, 0)};
    LevelReport a = is_level(fixtures::local_target_b(), 1, seed, 1, &red, 8);
    v.note(a.artinian.hf == std::vector<int>({1, 2}) && a.level &&
               a.artinian.type == 2,
           "reduction (x): HF " + hf_str(a.artinian.hf) + ", level type 2");
    LevelReport g = is_level(fixtures::local_target_b(), 1, seed, 3, nullptr, 8);
    v.note(g.level && g.stability == g.trials, "general reduction level, stable");
    auto rn = letter_names(4, Side::ring);
    r.pass = v.pass;
    r.details = std::move(v.details);
    std::ostringstream os;
    os << "L_" << F.d << "^" << F.tau << "-admissible: "
       << (rep.pass() ? "PASS" : "FAIL") << "; I=("
       << ideal_display(hs.ideal, rn) << ") mod M^" << hs.modulus
       << "; level type " << a.artinian.type;
    r.line = os.str();
    return r;
}

FixtureReport run_ex57(std::uint64_t seed) {
    FixtureReport r;
    r.id = "ex5.7";
    Verdicts v;
    SimplicialComplexFacets D = matroid_from_matrix(fixtures::matroid_matrix());
    v.note(D.facets == std::vector<std::vector<int>>(
                           {{1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}),
           "matroid facets {12,14,23,25,34,45}");
    Ideal SR = stanley_reisner(D);
    Containment sr_eq = ideal_equal(SR, fixtures::matroid_squarefree_target(), 3);
    v.note(sr_eq.holds && sr_eq.exact, "Stanley-Reisner ideal matches");
    Ideal phiI = fixtures::matroid_transformed_ideal();
    const AdmissibleFamily& F = fixtures::matroid_family();
    AdmissibilityReport rep = check_family(F);
    v.note(rep.pass(), "lifted family is admissible up to |n| <= 8");
    EffectiveResult er = effective_construct(F, seed, 3);
    Containment eq = ideal_equal(er.ideal, phiI, 3);
    v.note(eq.holds && eq.exact, "recovered ideal equals the transformed ideal");
    v.note(er.extendable && er.level.artinian.type == 2, "level of type 2");
    auto yn = fixtures::matroid_names(false);
    r.pass = v.pass;
    r.details = std::move(v.details);
    std::ostringstream os;
    os << "L_" << F.d << "^" << F.tau << "-admissible: "
       << (rep.pass() ? "PASS" : "FAIL") << "; I=("
       << ideal_display(er.ideal, yn) << "); level type "
       << er.level.artinian.type;
    r.line = os.str();
    return r;
}

}  // namespace

FixtureReport run_fixture(const std::string& id, std::uint64_t seed) {
    if (id == "ex2.5") return run_ex25(seed);
    if (id == "ex2.11") return run_ex211(seed);
    if (id == "ex5.3") return run_ex53(seed);
    if (id == "ex5.4") return run_ex54(seed);
    if (id == "ex5.5") return run_ex55(seed);
    if (id == "ex5.6") return run_ex56(seed);
    if (id == "ex5.7") return run_ex57(seed);
    throw std::invalid_argument("unknown example id: " + id);
}

}  // namespace macdual
