#include "macdual/jsonio.hpp"

namespace macdual {

Json json_polys(const std::vector<Polynomial>& ps,
                const std::vector<std::string>& names) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(p.str(names, false));
    return arr;
}

Json json_ideal(const Ideal& I, const std::vector<std::string>& names) {
    return {{"vars", I.nvars},
            {"graded", I.graded},
            {"generators", json_polys(I.gens, names)}};
}

Json json_perp(const TruncatedPerp& P, const std::vector<std::string>& names) {
    return {{"vars", P.nvars()},
            {"cap", P.cap()},
            {"graded", P.graded()},
            {"dim", P.dim()},
            {"basis", json_polys(P.basis(), names)}};
}

Json json_annihilator(const AnnihilatorResult& A,
                      const std::vector<std::string>& names) {
    return {{"ideal", json_ideal(A.ideal, names)},
            {"unit", A.unit},
            {"generator_degrees", A.degrees},
            {"top_degree", A.top_degree}};
}

Json json_artinian(const ArtinianReport& R) {
    return {{"artinian", R.artinian},
            {"cap_used", R.cap_used},
            {"hilbert_function", R.hf},
            {"nilpotency", R.nilpotency},
            {"socle_degree", R.socdeg},
            {"dim", R.dim_K},
            {"type", R.type},
            {"dual_generator_degrees", R.dual_gen_degrees},
            {"level", R.level}};
}

Json json_level(const LevelReport& R, const std::vector<std::string>& names) {
    return {{"dimension", R.dimension},
            {"seed", R.seed},
            {"trials", R.trials},
            {"stability", R.stability},
            {"reduction", json_polys(R.reduction, names)},
            {"reduction_report", json_artinian(R.artinian)},
            {"multiplicity", R.multiplicity},
            {"socle_degree", R.s},
            {"level", R.level},
            {"disagreements", R.disagreements}};
}

Json json_admissibility(const AdmissibilityReport& R,
                        const std::vector<std::string>& dual_names) {
    Json wit = Json::array();
    for (const auto& w : R.witnesses)
        wit.push_back({{"condition", w.cond},
                       {"n", w.n},
                       {"i", w.i_one_based},
                       {"j", w.j},
                       {"what", w.what},
                       {"element", w.element.str(dual_names, false)}});
    Json smap = Json::array();
    for (const auto& [n, s] : R.s_map) smap.push_back({{"n", n}, {"s", s}});
    return {{"condition1", R.cond1},
            {"condition2", R.cond2},
            {"condition3", R.cond3},
            {"pass", R.pass()},
            {"s", R.s},
            {"degrees", smap},
            {"z_extension", R.z_extension_one_based},
            {"witnesses", wit}};
}

Json json_equality(const EqualityReport& R) {
    Json checks = Json::array();
    for (const auto& c : R.checks)
        checks.push_back({{"n", c.n}, {"i", c.i_one_based}, {"pass", c.pass}});
    return {{"pass", R.pass}, {"checks", checks}};
}

Json json_family(const AdmissibleFamily& F) {
    return {{"d", F.d},
            {"tau", F.tau},
            {"t0", F.t0},
            {"vars", F.nvars},
            {"text", serialize_family(F)}};
}

Json json_effective(const EffectiveResult& R,
                    const std::vector<std::string>& names) {
    return {{"ideal", json_ideal(R.ideal, names)},
            {"level_report", json_level(R.level, names)},
            {"extendable", R.extendable},
            {"message", R.message}};
}

Json json_heuristic(const HeuristicResult& R,
                    const std::vector<std::string>& names) {
    return {{"ideal", json_ideal(R.ideal, names)},
            {"removed_powers", json_polys(R.removed_powers, names)},
            {"modulus", R.modulus}};
}

Json json_complex(const SimplicialComplexFacets& C) {
    return {{"vertices", C.vertices}, {"facets", C.facets}};
}

Json json_semigroup(const SemigroupPresentation& P,
                    const NumericalSemigroup& S) {
    Json rels = Json::array();
    for (const auto& r : P.relations)
        rels.push_back({{"value", r.value}, {"lhs", r.lhs}, {"rhs", r.rhs}});
    auto names = default_names(static_cast<int>(S.gens.size()), Side::ring);
    auto [norm, g] = semigroup_normalize(S.gens);
    Json out = {{"generators", S.gens},
                {"gcd", g},
                {"normalized_generators", norm},
                {"relations", rels},
                {"search_bound", P.bound},
                {"betti_values", P.betti_values},
                {"ideal", json_ideal(P.ideal, names)}};
    if (g == 1) out["frobenius"] = frobenius_number(S);
    return out;
}

Json json_fixture(const FixtureReport& R) {
    return {{"id", R.id},
            {"pass", R.pass},
            {"line", R.line},
            {"details", R.details}};
}

}  // namespace macdual
