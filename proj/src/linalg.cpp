#include "macdual/linalg.hpp"

#include <set>

namespace macdual {

std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& rows, int ncols) {
    SparseRref<int> rref;
    for (const auto& r : rows) rref.add(r);
    std::vector<SparseVec> out;
    for (int q = 0; q < ncols; ++q) {
        if (rref.rows().count(q)) continue;  // pivot column
        SparseVec v;
        v.emplace(q, Scalar(1));
        for (const auto& [p, r] : rref.rows()) {
            auto it = r.find(q);
            if (it != r.end()) v.emplace(p, Scalar(-it->second));
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool PolySpan::add(const Polynomial& p) {
    if (p.nvars() != nvars_ || p.side() != side_)
        throw std::invalid_argument("span ambient mismatch");
    return engine_.add(p.terms());
}

bool PolySpan::contains(const Polynomial& p) const {
    if (p.nvars() != nvars_ || p.side() != side_)
        throw std::invalid_argument("span ambient mismatch");
    return engine_.contains(p.terms());
}

Polynomial PolySpan::reduce(const Polynomial& p) const {
    if (p.nvars() != nvars_ || p.side() != side_)
        throw std::invalid_argument("span ambient mismatch");
    auto residual = engine_.reduce(p.terms());
    Polynomial out(nvars_, side_);
    for (const auto& [m, c] : residual) out.add_term(m, c);
    return out;
}

std::vector<Polynomial> PolySpan::basis() const {
    std::vector<Polynomial> out;
    for (const auto& [p, row] : engine_.rows()) {
        Polynomial q(nvars_, side_);
        for (const auto& [m, c] : row) q.add_term(m, c);
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<Polynomial> PolySpan::basis_of_degree(int d) const {
    std::vector<Polynomial> out;
    for (const auto& b : basis())
        if (b.is_homogeneous() && b.degree() == d) out.push_back(b);
    return out;
}

PolySpan span_of(const std::vector<Polynomial>& gens, int nvars, Side side) {
    PolySpan s(nvars, side);
    for (const auto& g : gens) s.add(g);
    return s;
}

static void check_same_ambient(const PolySpan& a, const PolySpan& b) {
    if (a.nvars() != b.nvars() || a.side() != b.side())
        throw std::invalid_argument("span ambient mismatch");
}

PolySpan span_sum(const PolySpan& a, const PolySpan& b) {
    check_same_ambient(a, b);
    PolySpan s(a.nvars(), a.side());
    for (const auto& p : a.basis()) s.add(p);
    for (const auto& p : b.basis()) s.add(p);
    return s;
}

namespace {

using TaggedKey = std::pair<int, Monomial>;

struct TaggedLess {
    GrevlexLess less;
    bool operator()(const TaggedKey& a, const TaggedKey& b) const {
        if (a.first != b.first) return a.first < b.first;
        return less(a.second, b.second);
    }
};

}  // namespace

// Zassenhaus: rows (u | u) for u in A, (w | 0) for w in B.  A row of the
// reduced echelon form pivoting in the upper block is supported entirely
// there, and those rows span exactly { (0 | v) : v in A n B }.
PolySpan span_intersect(const PolySpan& a, const PolySpan& b) {
    check_same_ambient(a, b);
    SparseRref<TaggedKey, TaggedLess> rref;
    for (const auto& u : a.basis()) {
        SparseRref<TaggedKey, TaggedLess>::Vec v;
        for (const auto& [m, c] : u.terms()) {
            v.emplace(TaggedKey(0, m), c);
            v.emplace(TaggedKey(1, m), c);
        }
        rref.add(std::move(v));
    }
    for (const auto& w : b.basis()) {
        SparseRref<TaggedKey, TaggedLess>::Vec v;
        for (const auto& [m, c] : w.terms()) v.emplace(TaggedKey(0, m), c);
        rref.add(std::move(v));
    }
    PolySpan out(a.nvars(), a.side());
    for (const auto& [pivot, row] : rref.rows()) {
        if (pivot.first != 1) continue;
        Polynomial q(a.nvars(), a.side());
        for (const auto& [k, c] : row) q.add_term(k.second, c);
        out.add(q);
    }
    return out;
}

bool span_contains_all(const PolySpan& a, const PolySpan& b) {
    check_same_ambient(a, b);
    for (const auto& p : b.basis())
        if (!a.contains(p)) return false;
    return true;
}

bool spans_equal(const PolySpan& a, const PolySpan& b) {
    return a.dim() == b.dim() && span_contains_all(a, b);
}

std::optional<std::vector<Scalar>> solve_combination(
    const std::vector<std::vector<Polynomial>>& columns,
    const std::vector<Polynomial>& target) {
    const int K = static_cast<int>(columns.size());
    const int slots = static_cast<int>(target.size());
    for (const auto& col : columns)
        if (static_cast<int>(col.size()) != slots)
            throw std::invalid_argument("solve_combination: ragged columns");

    // Row index space: (slot, monomial) over the union of supports.
    std::map<std::pair<int, Monomial>, int> rowpos;
    auto touch = [&](int slot, const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) {
            (void)c;
            rowpos.emplace(std::make_pair(slot, m), 0);
        }
    };
    for (const auto& col : columns)
        for (int i = 0; i < slots; ++i) touch(i, col[i]);
    for (int i = 0; i < slots; ++i) touch(i, target[i]);
    int nrows = 0;
    for (auto& [k, v] : rowpos) v = nrows++;

    // Dense augmented matrix [A | b], exact Gauss-Jordan.
    std::vector<std::vector<Scalar>> M(nrows, std::vector<Scalar>(K + 1, Scalar(0)));
    for (int k = 0; k < K; ++k)
        for (int i = 0; i < slots; ++i)
            for (const auto& [m, c] : columns[k][i].terms())
                M[rowpos.at({i, m})][k] = c;
    for (int i = 0; i < slots; ++i)
        for (const auto& [m, c] : target[i].terms())
            M[rowpos.at({i, m})][K] = c;

    std::vector<int> pivot_of_col(K, -1);
    int r = 0;
    for (int c = 0; c < K && r < nrows; ++c) {
        int pr = -1;
        for (int i = r; i < nrows; ++i)
            if (M[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[r], M[pr]);
        const Scalar inv = Scalar(1) / M[r][c];
        for (int j = c; j <= K; ++j) M[r][j] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            const Scalar f = M[i][c];
            for (int j = c; j <= K; ++j) M[i][j] -= f * M[r][j];
        }
        pivot_of_col[c] = r;
        ++r;
    }
    for (int i = r; i < nrows; ++i)
        if (M[i][K] != 0) return std::nullopt;  // inconsistent

    std::vector<Scalar> sol(K, Scalar(0));
    for (int c = 0; c < K; ++c)
        if (pivot_of_col[c] >= 0) sol[c] = M[pivot_of_col[c]][K];
    return sol;
}

MonoIndex::MonoIndex(std::vector<Monomial> universe) : list_(std::move(universe)) {
    for (int i = 0; i < static_cast<int>(list_.size()); ++i) pos_.emplace(list_[i], i);
}

int MonoIndex::index(const Monomial& m) const {
    auto it = pos_.find(m);
    if (it == pos_.end()) throw std::out_of_range("monomial outside universe");
    return it->second;
}

}  // namespace macdual
