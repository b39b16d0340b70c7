#pragma once

#include "macdual/linalg.hpp"

namespace macdual {

// Contraction action of R on D: x^n acting on X^n' gives X^{n'-n} when
// n' >= n componentwise and 0 otherwise, extended bilinearly.  No factorial
// coefficients appear (this is contraction, not differentiation).
Polynomial contract(const Polynomial& f, const Polynomial& F);

struct MinGenerators {
    int count = 0;
    std::vector<int> degrees;            // ascending, one entry per generator
    std::vector<Polynomial> generators;  // representatives realizing them
};

// Finitely generated R-submodule W of D: the K-span of the generators and of
// all their iterated contractions.  Finite-dimensional, hence closed.
class DualSubmodule {
  public:
    DualSubmodule(int nvars, std::vector<Polynomial> gens);

    int nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    int top_degree() const { return top_degree_; }
    int dim() const { return span_.dim(); }
    bool is_zero() const { return span_.dim() == 0; }
    const PolySpan& span() const { return span_; }

    // Echelon basis with pairwise distinct leading monomials, ascending by
    // (degree of lead, lead).  Rows with lead degree <= j span W n D_{<=j}.
    const std::vector<Polynomial>& lead_basis() const { return lead_basis_; }

    // Span of x_i o w over all variables i and all w in W.
    const PolySpan& contracted_span() const { return mw_; }

    // count = dim W - dim(M o W); degrees are the canonical filtration jumps
    // (number of degree-j generators = growth of dim(W n D_{<=j} + M o W)),
    // with echelon representatives chosen deterministically.
    MinGenerators min_generators() const;

  private:
    int nvars_;
    std::vector<Polynomial> gens_;
    int top_degree_;
    PolySpan span_;
    PolySpan mw_;
    std::vector<Polynomial> lead_basis_;
};

// True iff the degree-s homogeneous components are linearly independent,
// where s is the common total degree of the inputs.
// Throws on degree mismatch among the inputs.
bool top_forms_independent(const std::vector<Polynomial>& gens);

}  // namespace macdual
