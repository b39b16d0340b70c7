#pragma once

#include "json.hpp"
#include "macdual/fixtures.hpp"

namespace macdual {

using Json = nlohmann::json;

// Polynomials are rendered with the re-parseable grammar form (explicit '*').
Json json_polys(const std::vector<Polynomial>& ps,
                const std::vector<std::string>& names);
Json json_ideal(const Ideal& I, const std::vector<std::string>& names);
Json json_perp(const TruncatedPerp& P, const std::vector<std::string>& names);
Json json_annihilator(const AnnihilatorResult& A,
                      const std::vector<std::string>& names);
Json json_artinian(const ArtinianReport& R);
Json json_level(const LevelReport& R, const std::vector<std::string>& names);
Json json_admissibility(const AdmissibilityReport& R,
                        const std::vector<std::string>& dual_names);
Json json_equality(const EqualityReport& R);
Json json_family(const AdmissibleFamily& F);
Json json_effective(const EffectiveResult& R,
                    const std::vector<std::string>& names);
Json json_heuristic(const HeuristicResult& R,
                    const std::vector<std::string>& names);
Json json_complex(const SimplicialComplexFacets& C);
Json json_semigroup(const SemigroupPresentation& P, const NumericalSemigroup& S);
Json json_fixture(const FixtureReport& R);

}  // namespace macdual
