#include <random>

#include "doctest.h"
#include "macdual/duality.hpp"

using namespace macdual;

namespace {

Polynomial rpoly(std::mt19937_64& rng, int nvars, Side side, int maxdeg,
                 int maxterms = 4) {
    std::uniform_int_distribution<int> nt(1, maxterms);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> dd(0, maxdeg);
    Polynomial p(nvars, side);
    const int k = nt(rng);
    for (int t = 0; t < k; ++t) {
        const auto all = monomials_of_degree(nvars, dd(rng));
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        p.add_term(all[pick(rng)], Scalar(num(rng)));
    }
    return p;
}

Polynomial D(const char* s, int m = 3) {
    // Two-variable checks use the names {Y, Z} so that expressions read the
    // same as their three-variable counterparts restricted to the last axes.
    if (m == 2) return Polynomial::parse(s, 2, Side::dual, {"Y", "Z"});
    return Polynomial::parse(s, m, Side::dual, letter_names(m, Side::dual));
}

}  // namespace

TEST_CASE("contraction subtracts exponents with unit coefficients") {
    // x^a o X^b = X^{b-a} when a <= b, else 0 -- no factorials anywhere.
    const auto all = monomials_upto(3, 4);
    for (const auto& a : monomials_upto(3, 3))
        for (const auto& b : all) {
            const Polynomial f = Polynomial::monomial(3, Side::ring, a);
            const Polynomial F = Polynomial::monomial(3, Side::dual, b);
            const Polynomial got = contract(f, F);
            if (mono_divides(a, b)) {
                CHECK(got ==
                      Polynomial::monomial(3, Side::dual, mono_div(b, a)));
            } else {
                CHECK(got.is_zero());
            }
        }
}

TEST_CASE("contraction is a bilinear ring action") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 120; ++t) {
        const Polynomial f = rpoly(rng, 3, Side::ring, 3);
        const Polynomial g = rpoly(rng, 3, Side::ring, 3);
        const Polynomial F = rpoly(rng, 3, Side::dual, 5);
        const Polynomial G = rpoly(rng, 3, Side::dual, 5);
        CHECK(contract(f * g, F) == contract(f, contract(g, F)));
        CHECK(contract(g * f, F) == contract(f, contract(g, F)));
        CHECK(contract(f + g, F) == contract(f, F) + contract(g, F));
        CHECK(contract(f, F + G) == contract(f, F) + contract(f, G));
        CHECK(contract(Polynomial::one(3, Side::ring), F) == F);
        CHECK(contract(f.scaled(Scalar(2, 3)), F) ==
              contract(f, F).scaled(Scalar(2, 3)));
    }
}

TEST_CASE("contraction lowers degree and kills high orders") {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 60; ++t) {
        const Polynomial f = rpoly(rng, 3, Side::ring, 3);
        const Polynomial F = rpoly(rng, 3, Side::dual, 4);
        const Polynomial r = contract(f, F);
        if (!r.is_zero() && !f.is_zero() && !F.is_zero())
            CHECK(r.degree() <= F.degree() - f.order());
        if (!f.is_zero() && !F.is_zero() && f.order() > F.degree())
            CHECK(r.is_zero());
    }
}

TEST_CASE("pairing is the delta form on monomials") {
    for (const auto& a : monomials_upto(2, 3))
        for (const auto& b : monomials_upto(2, 3)) {
            const Scalar got =
                pairing(Polynomial::monomial(2, Side::ring, a),
                        Polynomial::monomial(2, Side::dual, b));
            CHECK(got == Scalar(a == b ? 1 : 0));
        }
}

TEST_CASE("pairing equals the coefficientwise dot product") {
    std::mt19937_64 rng(107);
    for (int t = 0; t < 100; ++t) {
        const Polynomial f = rpoly(rng, 2, Side::ring, 4);
        const Polynomial F = rpoly(rng, 2, Side::dual, 4);
        Scalar dot(0);
        for (const auto& [m, c] : f.terms()) {
            auto it = F.terms().find(m);
            if (it != F.terms().end()) dot += c * it->second;
        }
        CHECK(pairing(f, F) == dot);
    }
}

TEST_CASE("closures have the recorded dimensions") {
    CHECK(DualSubmodule(2, {D("Y^3", 2)}).dim() == 4);
    CHECK(DualSubmodule(2, {D("Y^3", 2), D("Z^3", 2)}).dim() == 7);
    CHECK(DualSubmodule(3, {D("Y^3"), D("Z^3")}).dim() == 7);
    CHECK(DualSubmodule(4, {D("Y*W", 4), D("Z*W", 4)}).dim() == 6);
    CHECK(DualSubmodule(2, {}).is_zero());
}

TEST_CASE("closures contain every iterated contraction") {
    std::mt19937_64 rng(109);
    for (int t = 0; t < 60; ++t) {
        std::vector<Polynomial> gens = {rpoly(rng, 3, Side::dual, 4),
                                        rpoly(rng, 3, Side::dual, 3)};
        DualSubmodule W(3, gens);
        for (const auto& g : gens) CHECK(W.span().contains(g));
        const Polynomial f = rpoly(rng, 3, Side::ring, 2);
        for (const auto& g : gens) CHECK(W.span().contains(contract(f, g)));
        // M o W sits inside W and every single contraction lands in it.
        CHECK(span_contains_all(W.span(), W.contracted_span()));
        for (const auto& b : W.span().basis())
            for (int i = 0; i < 3; ++i) {
                const Polynomial xi = Polynomial::variable(3, Side::ring, i);
                CHECK(W.contracted_span().contains(contract(xi, b)));
            }
        const int top = W.top_degree();
        for (const auto& b : W.span().basis()) CHECK(b.degree() <= top);
    }
}

TEST_CASE("lead basis is echeloned by degree and spans the filtration") {
    std::mt19937_64 rng(113);
    for (int t = 0; t < 40; ++t) {
        DualSubmodule W(3, {rpoly(rng, 3, Side::dual, 4),
                            rpoly(rng, 3, Side::dual, 4)});
        const auto& lb = W.lead_basis();
        CHECK(static_cast<int>(lb.size()) == W.dim());
        for (std::size_t i = 1; i < lb.size(); ++i) {
            const auto &a = lb[i - 1].leading_monomial(),
                       &b = lb[i].leading_monomial();
            const bool asc = degree(a) < degree(b) ||
                             (degree(a) == degree(b) && grevlex_less(a, b));
            CHECK(asc);
        }
        PolySpan from_lb = span_of(lb, 3, Side::dual);
        CHECK(spans_equal(from_lb, W.span()));
    }
}

TEST_CASE("minimal generators count the quotient by contractions") {
    // <Y^3, Z^3>: both cubics survive modulo M o W.
    {
        DualSubmodule W(2, {D("Y^3", 2), D("Z^3", 2)});
        const MinGenerators mg = W.min_generators();
        CHECK(mg.count == 2);
        CHECK(mg.degrees == std::vector<int>({3, 3}));
        CHECK(mg.count == W.dim() - W.contracted_span().dim());
    }
    // Y^2 is already a contraction of Y^3, so it adds no generator.
    {
        DualSubmodule W(2, {D("Y^3", 2), D("Y^2", 2)});
        const MinGenerators mg = W.min_generators();
        CHECK(mg.count == 1);
        CHECK(mg.degrees == std::vector<int>({3}));
    }
    // Mixed degrees: an extra independent low generator is reported low.
    {
        DualSubmodule W(2, {D("Y^3", 2), D("Z^2", 2)});
        const MinGenerators mg = W.min_generators();
        CHECK(mg.count == 2);
        CHECK(mg.degrees == std::vector<int>({2, 3}));
    }
    std::mt19937_64 rng(127);
    for (int t = 0; t < 40; ++t) {
        DualSubmodule W(3, {rpoly(rng, 3, Side::dual, 4),
                            rpoly(rng, 3, Side::dual, 3)});
        const MinGenerators mg = W.min_generators();
        CHECK(mg.count == W.dim() - W.contracted_span().dim());
        CHECK(static_cast<int>(mg.degrees.size()) == mg.count);
        CHECK(std::is_sorted(mg.degrees.begin(), mg.degrees.end()));
        CHECK(static_cast<int>(mg.generators.size()) == mg.count);
        // The representatives regenerate the whole module.
        DualSubmodule W2(3, mg.generators);
        CHECK(spans_equal(W2.span(), W.span()));
    }
}

TEST_CASE("top-form independence checks the highest degree only") {
    CHECK(top_forms_independent({D("Y^3"), D("Z^3")}));
    CHECK(top_forms_independent({D("Y^2*Z+Y^3"), D("Y^2*Z")}));
    CHECK_FALSE(top_forms_independent(
        {D("Y^3+Z^3"), D("Y^3-Z^3"), D("Y^3")}));
    // Lower-order noise is ignored.
    CHECK(top_forms_independent({D("Y^3+Z"), D("Z^3+Y")}));
    CHECK_THROWS_AS(top_forms_independent({D("Y^3"), D("Z^2")}),
                    std::invalid_argument);
}
