#pragma once

#include "macdual/construct.hpp"
#include "macdual/semigroup.hpp"

namespace macdual {

// One replayed bundled example: a verdict line plus supporting evidence.
struct FixtureReport {
    std::string id;
    bool pass = false;
    std::string line;
    std::vector<std::string> details;
};

// Ids accepted by run_fixture, in canonical order.
std::vector<std::string> fixture_ids();

// Replays the bundled example end to end, asserting its recorded outcomes;
// seed feeds the randomized levelness checks.  Throws on unknown id.
FixtureReport run_fixture(const std::string& id, std::uint64_t seed);

// Sorted compact generator strings joined by commas (deterministic display).
std::string ideal_display(const Ideal& I, const std::vector<std::string>& names);

namespace fixtures {

// --- 3 variables (x,y,z) ---------------------------------------------------
// Cone family over {Y^3, Z^3}: d=1, tau=2, t0=5.
AdmissibleFamily cone_cubics();
// Two tau=1 chains with the same socle-degree growth and their tau=2 merge
// (t0=5); the merge fails the intersection condition while each chain is
// G_1-admissible.
AdmissibleFamily chain_gorenstein_a();
AdmissibleFamily chain_gorenstein_b();
AdmissibleFamily chain_merged();
Ideal chain_ideal_a();       // degree-<=4 annihilator of chain a's top module
Ideal chain_ideal_b();
Ideal chain_intersection();  // intersection of the two chain ideals

// --- 4 variables (x,y,z,w), local families ---------------------------------
AdmissibleFamily local_family_a();  // t0=4, tau=2
Ideal local_target_a();
AdmissibleFamily local_family_b();  // t0=5, tau=2
Ideal local_target_b();
Ideal local_displayed_b();  // alternative generators recovered at lower cap

// --- 5 variables, matroid pipeline ------------------------------------------
Matrix matroid_matrix();             // 2x5 input matrix
Matrix matroid_coordinate_change();  // 5x5 change mapping the parameters first
Ideal matroid_squarefree_target();   // expected Stanley-Reisner ideal
Ideal matroid_transformed_ideal();   // ideal after the coordinate change
std::vector<std::string> matroid_names(bool dual);  // y1..y5 / Y1..Y5
// Inverse-system family of the transformed ideal, d=2, tau=2, t0=8 (cached:
// building it solves one exact linear system per multi-index).
const AdmissibleFamily& matroid_family();
// Independently recorded low-index entries H_n^1, H_n^2 for cross-checking
// the family construction; n in {(1,1), (1,2), (2,2)}.
std::vector<Polynomial> matroid_recorded_entries(int n1, int n2);

// --- numerical semigroups ----------------------------------------------------
NumericalSemigroup semigroup_a();  // <6,7,11,15>: reduction-dependent verdicts
NumericalSemigroup semigroup_b();  // <6,8,10,13>: level, recorded presentation
NumericalSemigroup semigroup_c();  // <6,10,14,18>: non-coprime generators
Ideal semigroup_b_target();        // recorded binomial presentation of b

}  // namespace fixtures
}  // namespace macdual
