#include "macdual/dpmodule.hpp"

#include <algorithm>
#include <deque>

namespace macdual {

Polynomial contract(const Polynomial& f, const Polynomial& F) {
    if (f.nvars() != F.nvars())
        throw std::invalid_argument("contraction variable-count mismatch");
    if (f.side() != Side::ring || F.side() != Side::dual)
        throw std::invalid_argument("contraction expects a ring element acting on a dual element");
    Polynomial out(F.nvars(), Side::dual);
    for (const auto& [n, a] : f.terms())
        for (const auto& [np, b] : F.terms())
            if (mono_divides(n, np)) out.add_term(mono_div(np, n), a * b);
    return out;
}

DualSubmodule::DualSubmodule(int nvars, std::vector<Polynomial> gens)
    : nvars_(nvars), gens_(std::move(gens)), top_degree_(-1),
      span_(nvars, Side::dual), mw_(nvars, Side::dual) {
    for (const auto& g : gens_) {
        if (g.nvars() != nvars_ || g.side() != Side::dual)
            throw std::invalid_argument("submodule generator ambient mismatch");
        top_degree_ = std::max(top_degree_, g.degree());
    }
    // Breadth-first closure under contraction by each variable.
    std::deque<Polynomial> work(gens_.begin(), gens_.end());
    while (!work.empty()) {
        Polynomial p = std::move(work.front());
        work.pop_front();
        if (p.is_zero() || !span_.add(p)) continue;
        for (int i = 0; i < nvars_; ++i)
            work.push_back(contract(Polynomial::variable(nvars_, Side::ring, i), p));
    }
    for (const auto& b : span_.basis())
        for (int i = 0; i < nvars_; ++i)
            mw_.add(contract(Polynomial::variable(nvars_, Side::ring, i), b));

    // Echelon form by leading (largest) monomial.
    SparseRref<Monomial, GrevlexGreater> lead;
    for (const auto& b : span_.basis()) {
        SparseRref<Monomial, GrevlexGreater>::Vec v(b.terms().begin(), b.terms().end());
        lead.add(std::move(v));
    }
    for (const auto& [pivot, row] : lead.rows()) {
        Polynomial q(nvars_, Side::dual);
        for (const auto& [m, c] : row) q.add_term(m, c);
        lead_basis_.push_back(std::move(q));
    }
    std::reverse(lead_basis_.begin(), lead_basis_.end());  // ascending lead
}

MinGenerators DualSubmodule::min_generators() const {
    MinGenerators out;
    PolySpan reached = mw_;
    for (const auto& row : lead_basis_) {
        if (!reached.add(row)) continue;
        out.degrees.push_back(row.degree());
        out.generators.push_back(row);
    }
    out.count = static_cast<int>(out.generators.size());
    return out;
}

bool top_forms_independent(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return true;
    int s = gens.front().degree();
    for (const auto& g : gens)
        if (g.degree() != s)
            throw std::invalid_argument("top-form degree mismatch among generators");
    if (s < 0) return false;  // all zero
    PolySpan tops(gens.front().nvars(), gens.front().side());
    int added = 0;
    for (const auto& g : gens)
        if (tops.add(g.homogeneous_part(s))) ++added;
    return added == static_cast<int>(gens.size());
}

}  // namespace macdual
