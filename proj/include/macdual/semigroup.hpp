#pragma once

#include <cstdint>

#include "macdual/duality.hpp"

namespace macdual {

// Numerical semigroup given by positive generators.  Most operations
// normalize by the gcd internally; the Apery set and Frobenius number are
// defined only for coprime generators and throw otherwise.
struct NumericalSemigroup {
    std::vector<long long> gens;
};

NumericalSemigroup make_semigroup(std::vector<long long> gens);

// Generators divided by their gcd, plus the gcd itself.
std::pair<std::vector<long long>, long long> semigroup_normalize(
    const std::vector<long long>& gens);

// Least element of the semigroup in each residue class mod a, ascending.
std::vector<long long> apery_set(const NumericalSemigroup& S, long long a);

// max(apery(n_min)) - n_min.
long long frobenius_number(const NumericalSemigroup& S);

bool semigroup_member(const NumericalSemigroup& S, long long v);

// All exponent vectors u with sum u_i * gens_i = v, ascending lex.
std::vector<std::vector<int>> semigroup_factorizations(
    const std::vector<long long>& gens, long long v);

// One binomial x^lhs - x^rhs per relation; value is the shared weighted
// degree in the raw (unscaled) semigroup.
struct SemigroupRelation {
    long long value = 0;
    std::vector<int> lhs, rhs;
};

struct SemigroupPresentation {
    std::vector<SemigroupRelation> relations;
    long long bound = 0;  // raw-value search bound (complete above it)
    std::vector<long long> betti_values;
    Ideal ideal;  // binomials over one variable per generator
};

// Minimal binomial presentation from the factorization graph: for each value
// v up to the completeness bound F + 1 + n_min + n_max (gcd-normalized),
// factorizations split into support-connected components; every component
// beyond the lexicographically least contributes one relation against that
// least component's representative.  Every relation is weight-homogeneous.
SemigroupPresentation semigroup_presentation(const NumericalSemigroup& S);

}  // namespace macdual
