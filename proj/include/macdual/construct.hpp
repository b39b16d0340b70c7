#pragma once

#include "macdual/admissible.hpp"
#include "macdual/quotient.hpp"

namespace macdual {

// Family H_n^j = X_1^{n_1-1}...X_d^{n_d-1} * H^j (formal exponent shift) for
// all |n| <= t0, checked against z = x_1,...,x_d.  The inputs must live in
// the tail variables d+1..m only, share one degree, and have independent top
// forms.
AdmissibleFamily cone_family(const std::vector<Polynomial>& H, int d, int t0);

struct EffectiveResult {
    Ideal ideal;
    LevelReport level;
    bool extendable = false;
    std::string message;  // "family not extendable" when validation fails
};

// From a graded admissible family with t0 >= (s+2)d: the annihilator of
// W_{(s+2)_d} with generators truncated to degree <= s+1, then validated by
// a levelness check on the resulting ideal.
EffectiveResult effective_construct(const AdmissibleFamily& F,
                                    std::uint64_t seed = 1, int trials = 3);

// Builds the family of inverse systems W_n = (I + (z_1^{n_1},...))^perp with
// coherent entries: H_{1_d}^j span the top slice, and each H_n^j solves
// z_i o H_n^j = H_{n-e_i}^j (0 when n_i = 1) inside W_n, by exact linear
// algebra.  Throws if some step admits no solution.
AdmissibleFamily family_from_ideal(const Ideal& I,
                                   const std::vector<Polynomial>& z, int t0,
                                   int cap = -1);

struct HeuristicResult {
    Ideal ideal;  // candidate generators (z-powers removed when split)
    std::vector<Polynomial> removed_powers;
    int modulus = 0;  // comparisons certified modulo M^modulus only
};

// Annihilator of W_{n_star} for a (typically local) family.  With split_z,
// the pure powers z_i^{n_star_i} are seeded first and the returned
// generators minimally complete them; the split is heuristic and all
// comparisons carry the modulo-M^modulus tag.
HeuristicResult local_construct_heuristic(const AdmissibleFamily& F,
                                          const MultiIndex& n_star,
                                          bool split_z);

struct SimplicialComplexFacets {
    int vertices = 0;
    std::vector<std::vector<int>> facets;  // 1-based labels, each sorted
};

// Facets are the column m-subsets of the m x n matrix whose maximal minor is
// nonzero (exact determinants).
SimplicialComplexFacets matroid_from_matrix(const Matrix& X);

// Squarefree monomial ideal on the minimal non-faces of the complex.
Ideal stanley_reisner(const SimplicialComplexFacets& C);

}  // namespace macdual
