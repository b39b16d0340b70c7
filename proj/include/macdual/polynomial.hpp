#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "macdual/monomial.hpp"
#include "macdual/scalar.hpp"

namespace macdual {

// Which of the two pairing partners a polynomial lives in: the acting ring
// (lower-case variables) or the divided-power module it acts on (upper-case
// variables). The tag exists to catch accidental mixing at interfaces; the
// term representation is identical.
enum class Side { ring, dual };

class Polynomial {
  public:
    using TermMap = std::map<Monomial, Scalar, GrevlexLess>;

    Polynomial() : nvars_(0), side_(Side::ring) {}
    Polynomial(int nvars, Side side) : nvars_(nvars), side_(side) {}

    static Polynomial monomial(int nvars, Side side, const Monomial& m,
                               const Scalar& c = Scalar(1));
    static Polynomial one(int nvars, Side side);
    static Polynomial variable(int nvars, Side side, int i);

    int nvars() const { return nvars_; }
    Side side() const { return side_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // -1 for the zero polynomial.
    int degree() const;
    // Least total degree of a term; -1 for the zero polynomial.
    int order() const;
    bool is_homogeneous() const;
    Polynomial homogeneous_part(int d) const;
    // Largest term in the ascending grevlex order.
    const Monomial& leading_monomial() const;

    void add_term(const Monomial& m, const Scalar& c);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial mono_multiplied(const Monomial& m) const;
    Polynomial truncated(int N) const;  // drop terms of degree > N
    bool operator==(const Polynomial& o) const;

    // Formal product with a single variable-power prefix but on the other
    // side: used to denote X^n * F inside the dual module. Representation is
    // plain exponent addition; no divided-power coefficients appear anywhere.
    Polynomial with_side(Side s) const;

    // Grammar: terms joined by + and -; each term an optional rational
    // coefficient (p or p/q) followed by variable factors name or name^k,
    // with '*' optional between factors. Names are matched longest-first, so
    // single-letter names may be juxtaposed ("yz").
    static Polynomial parse(const std::string& text, int nvars, Side side,
                            const std::vector<std::string>& names);
    static Polynomial parse(const std::string& text, int nvars, Side side);

    // compact: single-letter juxtaposed rendering ("y^4", "yz"); otherwise
    // the grammar form with explicit '*'.
    std::string str(const std::vector<std::string>& names,
                    bool compact = false) const;
    std::string str() const;

  private:
    int nvars_;
    Side side_;
    TermMap terms_;
};

// f^k by repeated multiplication; k >= 0.
Polynomial poly_pow(const Polynomial& f, int k);

// Canonical variable names: x1..xm for the ring, X1..Xm for the dual.
std::vector<std::string> default_names(int nvars, Side side);
// Single letters for small fixtures: x,y,z,w / X,Y,Z,W (ring/dual).
std::vector<std::string> letter_names(int nvars, Side side);

}  // namespace macdual
