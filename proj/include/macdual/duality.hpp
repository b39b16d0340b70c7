#pragma once

#include <optional>

#include "macdual/dpmodule.hpp"

namespace macdual {

struct Ideal {
    int nvars = 0;
    std::vector<Polynomial> gens;  // ring side, nonzero
    bool graded = false;           // true iff all generators homogeneous
};

// Drops zero generators and computes the graded flag.
Ideal make_ideal(int nvars, std::vector<Polynomial> gens);

// <f, F> = coefficient of the constant term of f o F; <x^a, X^b> = delta_ab.
Scalar pairing(const Polynomial& f, const Polynomial& F);

// span{trunc_{<=cap}(t*g) : g generator, t monomial} -- the image of the
// ideal in R/M^{cap+1}, as a span over the ring monomials of degree <= cap.
PolySpan ideal_window(const Ideal& I, int cap);

// Exactly I^perp n D_{<=N}: all F with <t*g, F> = 0 for every generator g
// and monomial t (only finitely many constraints act below the cap).
class TruncatedPerp {
  public:
    TruncatedPerp(int nvars, int cap, bool graded, std::vector<Polynomial> basis);

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    bool graded() const { return graded_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Polynomial>& basis() const { return basis_; }
    // Graded source: the degree-j slice (exact). Local source: elements of
    // top degree j, a filtration view.
    std::vector<Polynomial> basis_of_degree(int j) const;
    const PolySpan& span() const { return span_; }

  private:
    int nvars_;
    int cap_;
    bool graded_;
    std::vector<Polynomial> basis_;
    PolySpan span_;
};

TruncatedPerp inverse_system(const Ideal& I, int N);

// Degree-j piece of the inverse system of a graded ideal: the forms of
// degree exactly j annihilated by contraction with I.  Cheaper than a full
// window when only one degree matters.
std::vector<Polynomial> perp_slice(const Ideal& I, int j);

struct AnnihilatorResult {
    Ideal ideal;               // deterministic minimal generators
    bool unit = false;         // W = 0: annihilator is the unit ideal
    std::vector<int> degrees;  // canonical minimal-generator degrees
                               // (homogeneous degrees if graded, orders if not)
    int top_degree = -1;       // top degree s of W; M^{s+1} lies in the ideal
};

// ann_R(W) for the contraction-closed span W, top degree s.  Exact: the
// kernel elements of degree <= s+1 generate the whole annihilator because
// M^{s+1} is contained in their span's monomial multiples.  If degree_bound
// is given, only generators of degree <= bound are kept.
AnnihilatorResult annihilator(const DualSubmodule& W,
                              std::optional<int> degree_bound = std::nullopt);

// Basis of ann(W) restricted to degree <= top_degree + 1 (which generates
// the whole annihilator), in the deterministic candidate order used for
// minimal-generator selection: ascending order, then support sequence.
std::vector<Polynomial> annihilator_window_basis(const DualSubmodule& W);

struct Containment {
    bool holds = false;
    bool exact = false;  // true: exact statement; false: modulo M^modulus
    int modulus = 0;     // meaningful when !exact
};

// Graded ideal + homogeneous f: exact membership (degree piece).  Otherwise
// membership of f in I + M^{trunc_N+1}, tagged with the modulus.
Containment ideal_contains(const Ideal& I, const Polynomial& f, int trunc_N);
Containment ideal_equal(const Ideal& I, const Ideal& J, int trunc_N);

}  // namespace macdual
