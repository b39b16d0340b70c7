#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "macdual/polynomial.hpp"

namespace macdual {

// Incremental reduced row echelon form over sparse vectors with totally
// ordered keys.  Stored invariants:
//   - each row's pivot is its minimum key and carries coefficient 1;
//   - no row's support contains another row's pivot;
//   - hence every row's support lies in [pivot, ->).
// The last point is what makes block-tagged intersection extraction sound:
// a row whose pivot lies in the upper block is supported entirely there.
template <class Key, class Less = std::less<Key>>
class SparseRref {
  public:
    using Vec = std::map<Key, Scalar, Less>;

    // v -= c * r
    static void axpy(Vec& v, const Scalar& c, const Vec& r) {
        for (const auto& [k, a] : r) {
            auto it = v.find(k);
            if (it == v.end()) {
                Scalar nc = -c * a;
                if (nc != 0) v.emplace(k, std::move(nc));
            } else {
                it->second -= c * a;
                if (it->second == 0) v.erase(it);
            }
        }
    }

    // Residual of v modulo the row space.  Scans keys ascending; eliminating
    // a pivot only touches keys >= it, so one pass suffices.
    Vec reduce(Vec v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto rit = rows_.find(it->first);
            if (rit == rows_.end()) {
                ++it;
                continue;
            }
            Scalar c = it->second;
            axpy(v, c, rit->second);
            it = v.upper_bound(rit->first);
        }
        return v;
    }

    // Adds v to the span; returns true iff the rank grew.
    bool add(Vec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        const Key p = v.begin()->first;
        Scalar lead = v.begin()->second;
        for (auto& [k, c] : v) c /= lead;
        // v contains no existing pivot, so back-substitution below never
        // touches another row's pivot entry.
        for (auto& [pk, r] : rows_) {
            auto hit = r.find(p);
            if (hit == r.end()) continue;
            Scalar c = hit->second;
            axpy(r, c, v);
        }
        rows_.emplace(p, std::move(v));
        return true;
    }

    bool contains(const Vec& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<Key, Vec, Less>& rows() const { return rows_; }

  private:
    std::map<Key, Vec, Less> rows_;  // keyed by pivot, ascending
};

using SparseVec = std::map<int, Scalar>;

// Null space of the matrix with the given rows, acting on column vectors of
// length ncols.  Basis vectors come out one per free column q, with entry 1
// at q and -row_p[q] at each pivot p.
std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& rows, int ncols);

// Exact linear span of polynomials in a fixed ambient (nvars, side).
class PolySpan {
  public:
    PolySpan(int nvars, Side side) : nvars_(nvars), side_(side) {}

    int nvars() const { return nvars_; }
    Side side() const { return side_; }
    int dim() const { return engine_.rank(); }

    // Returns true iff the span grew.
    bool add(const Polynomial& p);
    bool contains(const Polynomial& p) const;
    Polynomial reduce(const Polynomial& p) const;

    // Echelon basis, ascending by pivot monomial.
    std::vector<Polynomial> basis() const;

    // Dimension of the degree-d slice (row pivots and supports are graded
    // only if the inputs were homogeneous; callers keep slices homogeneous).
    std::vector<Polynomial> basis_of_degree(int d) const;

  private:
    int nvars_;
    Side side_;
    SparseRref<Monomial, GrevlexLess> engine_;
};

PolySpan span_of(const std::vector<Polynomial>& gens, int nvars, Side side);
PolySpan span_sum(const PolySpan& a, const PolySpan& b);
PolySpan span_intersect(const PolySpan& a, const PolySpan& b);
bool span_contains_all(const PolySpan& a, const PolySpan& b);
bool spans_equal(const PolySpan& a, const PolySpan& b);

// Exact solve of sum_k c_k * columns[k] = target, where each unknown's
// column is a tuple of polynomials (slot-wise equations).  Returns the
// coefficients (free unknowns set to zero) or nullopt when unsolvable.
std::optional<std::vector<Scalar>> solve_combination(
    const std::vector<std::vector<Polynomial>>& columns,
    const std::vector<Polynomial>& target);

// Position lookup into a fixed, grevlex-ascending monomial universe.
class MonoIndex {
  public:
    explicit MonoIndex(std::vector<Monomial> universe);
    int size() const { return static_cast<int>(list_.size()); }
    const Monomial& at(int i) const { return list_.at(i); }
    const std::vector<Monomial>& list() const { return list_; }
    int index(const Monomial& m) const;  // throws if absent

  private:
    std::vector<Monomial> list_;
    std::map<Monomial, int, GrevlexLess> pos_;
};

}  // namespace macdual
