#pragma once

#include <cstdint>
#include <vector>

namespace macdual {

// Exponent vector. The library-wide term order is graded reverse
// lexicographic, oriented so that comparisons sort ascending: total degree
// first, ties broken by the rightmost differing exponent, where the monomial
// with the larger rightmost difference is the smaller one. With variables
// x1 > x2 > ... > xm this is the usual grevlex read from the small end, so
// monomial universes list 1 first and the degree-(<=j) monomials of a
// degree-(<=N) universe always form a prefix.
using Monomial = std::vector<int>;

int degree(const Monomial& a);
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_less(a, b);
    }
};

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_less(b, a);
    }
};

Monomial mono_one(int nvars);
Monomial mono_var(int i, int nvars);  // exponent 1 on variable i (0-based)
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b

// All monomials in nvars variables of total degree exactly d (resp. at most
// N), sorted ascending. The <=N list has the degree-prefix property.
std::vector<Monomial> monomials_of_degree(int nvars, int d);
std::vector<Monomial> monomials_upto(int nvars, int N);
std::int64_t count_monomials_upto(int nvars, int N);  // binom(N+nvars, nvars)
std::int64_t count_monomials_of_degree(int nvars, int d);

}  // namespace macdual
