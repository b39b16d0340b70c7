#pragma once

#include "macdual/change.hpp"

namespace macdual {

// Multi-index n = (n_1,...,n_d), all entries >= 1.
using MultiIndex = std::vector<int>;

int mindex_sum(const MultiIndex& n);
std::string mindex_str(const MultiIndex& n);  // "2,1"
// All multi-indices with entries >= 1 and |n| <= t0, ascending by (|n|, lex).
std::vector<MultiIndex> index_set(int d, int t0);

// Doubly indexed family H_n^j (j = 1..tau) of dual polynomials, complete for
// |n| <= t0, together with the d independent linear forms z it is checked
// against.
struct AdmissibleFamily {
    int d = 0;
    int tau = 0;
    int t0 = 0;
    int nvars = 0;
    bool graded = false;  // every entry homogeneous
    std::vector<Polynomial> z;
    std::map<std::pair<MultiIndex, int>, Polynomial> entries;

    const Polynomial& at(const MultiIndex& n, int j) const;
};

// Validates completeness of the index set, the z forms, and entry ambients.
AdmissibleFamily make_family(int d, int tau, int t0, int nvars,
                             std::vector<Polynomial> z,
                             std::map<std::pair<MultiIndex, int>, Polynomial> entries);

// Monomial span {Z^k : k_i <= n_i - 2, |k| <= s_n} in the coordinates dual
// to the (extended) z basis; i is 0-based here, reports print it 1-based.
PolySpan build_Vni(const MultiIndex& n, int i, int s_n, int m);

struct CondWitness {
    int cond = 0;  // 1, 2, or 3
    MultiIndex n;
    int i_one_based = 0;  // 0 when not applicable
    int j = 0;            // 0 when not applicable
    std::string what;
    Polynomial element;  // cond 3: an element of the intersection that
                         // escapes the smaller module (original coordinates)
};

struct AdmissibilityReport {
    bool cond1 = false;
    bool cond2 = false;
    bool cond3 = false;
    int s = -1;  // degree of H at n = 1_d
    std::map<MultiIndex, int> s_map;
    std::vector<int> z_extension_one_based;  // variables completing z
    std::vector<CondWitness> witnesses;
    bool pass() const { return cond1 && cond2 && cond3; }
};

// The three membership conditions: (1) degree pattern s_n = s + |n| - d with
// independent top forms, (2) the contraction recursion z_i o H_n^j =
// H_{n-e_i}^j (zero when n_i = 1), (3) W_n n V_n^i inside W_{n-e_i}.
AdmissibilityReport check_family(const AdmissibleFamily& F);

struct PairCheck {
    MultiIndex n;
    int i_one_based = 0;
    bool pass = false;
};

struct EqualityReport {
    bool pass = true;
    std::vector<PairCheck> checks;
};

// tau = 1 only: ann<H_{n-e_i}> o H_n = <H_{n-(n_i-1)e_i}> as spans, both ways.
EqualityReport check_Gd(const AdmissibleFamily& F);
// ann(W_{n-e_i}) o W_n = W_{n-(n_i-1)e_i} for the whole module.
EqualityReport check_weak(const AdmissibleFamily& F);

// Text format: header "d=..., tau=..., t0=..., vars=..., z=..." followed by
// one line "H[n_1,...,n_d][j] = <polynomial>" per entry; '#' comments allowed.
AdmissibleFamily parse_family(const std::string& text);
std::string serialize_family(const AdmissibleFamily& F);

}  // namespace macdual
