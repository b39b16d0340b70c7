#include <doctest.h>

#include <random>
#include <stdexcept>

#include "macdual/construct.hpp"
#include "macdual/fixtures.hpp"

using namespace macdual;

namespace {

Polynomial D(const char* s, int m = 3) {
    return Polynomial::parse(s, m, Side::dual, letter_names(m, Side::dual));
}

// Rebuilds the family with entries mapped by apply_dual and forms mapped by
// apply_ring; contraction equivariance makes every verdict invariant.
AdmissibleFamily transformed(const AdmissibleFamily& F, const LinearChange& C) {
    std::vector<Polynomial> z;
    for (const auto& f : F.z) z.push_back(C.apply_ring(f));
    std::map<std::pair<MultiIndex, int>, Polynomial> entries;
    for (const auto& [key, H] : F.entries) entries[key] = C.apply_dual(H);
    return make_family(F.d, F.tau, F.t0, F.nvars, std::move(z),
                       std::move(entries));
}

Matrix random_invertible(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> val(-3, 3);
    for (;;) {
        Matrix A(m, std::vector<Scalar>(m));
        for (auto& row : A)
            for (auto& e : row) e = Scalar(val(rng));
        if (mat_det(A) != 0) return A;
    }
}

// The closure span of one multi-index's entries.
PolySpan module_at(const AdmissibleFamily& F, const MultiIndex& n) {
    std::vector<Polynomial> gens;
    for (int j = 1; j <= F.tau; ++j) gens.push_back(F.at(n, j));
    return DualSubmodule(F.nvars, gens).span();
}

}  // namespace

TEST_CASE("multi-index helpers enumerate in weight order") {
    CHECK(mindex_sum({2, 3}) == 5);
    CHECK(mindex_str({2, 1}) == "2,1");
    const auto idx = index_set(2, 3);
    const std::vector<MultiIndex> want{{1, 1}, {1, 2}, {2, 1}};
    CHECK(idx == want);
    CHECK(index_set(1, 4).size() == 4);
}

TEST_CASE("the slice spans hold monomials with a bounded first exponent") {
    const PolySpan V = build_Vni({2}, 0, 2, 2);
    CHECK(V.dim() == 3);  // 1, X2, X2^2
    CHECK(V.contains(Polynomial::variable(2, Side::dual, 1)));
    CHECK_FALSE(V.contains(Polynomial::variable(2, Side::dual, 0)));
}

TEST_CASE("the cone family of two cubics is admissible") {
    const AdmissibleFamily F = fixtures::cone_cubics();
    REQUIRE(F.tau == 2);
    REQUIRE(F.t0 == 5);
    const AdmissibilityReport rep = check_family(F);
    CHECK(rep.cond1);
    CHECK(rep.cond2);
    CHECK(rep.cond3);
    CHECK(rep.pass());
    CHECK(rep.witnesses.empty());
    CHECK(rep.s == 3);
    for (const auto& [n, sn] : rep.s_map) CHECK(sn == rep.s + mindex_sum(n) - 1);
    CHECK(rep.z_extension_one_based == std::vector<int>({2, 3}));
}

TEST_CASE("the merged family fails exactly the intersection condition") {
    const AdmissibleFamily F = fixtures::chain_merged();
    const AdmissibilityReport rep = check_family(F);
    CHECK(rep.cond1);
    CHECK(rep.cond2);
    CHECK_FALSE(rep.cond3);
    CHECK_FALSE(rep.pass());
    REQUIRE_FALSE(rep.witnesses.empty());
    const CondWitness& w = rep.witnesses.front();
    CHECK(w.cond == 3);
    CHECK(w.n == MultiIndex({2}));
    CHECK(w.i_one_based == 1);
    CHECK(w.element == D("Z^3"));

    // The module-level equality is weaker and does hold here.
    const EqualityReport weak = check_weak(F);
    CHECK(weak.pass);
    for (const auto& c : weak.checks) CHECK(c.pass);
}

TEST_CASE("each strand of the merged family is admissible on its own") {
    for (const AdmissibleFamily& F :
         {fixtures::chain_gorenstein_a(), fixtures::chain_gorenstein_b()}) {
        REQUIRE(F.tau == 1);
        CHECK(check_family(F).pass());
        const EqualityReport gd = check_Gd(F);
        CHECK(gd.pass);
        for (const auto& c : gd.checks) CHECK(c.pass);
        CHECK(check_weak(F).pass);
    }
    CHECK_THROWS_AS(check_Gd(fixtures::chain_merged()), std::invalid_argument);
}

TEST_CASE("the local families are admissible") {
    for (const AdmissibleFamily* F :
         {&fixtures::local_family_a(), &fixtures::local_family_b()}) {
        const AdmissibilityReport rep = check_family(*F);
        CHECK(rep.pass());
        CHECK(check_weak(*F).pass);
    }
}

TEST_CASE("slices of admissible families reproduce the previous module") {
    for (const AdmissibleFamily* Fp :
         {&fixtures::cone_cubics(), &fixtures::local_family_a()}) {
        const AdmissibleFamily& F = *Fp;
        const AdmissibilityReport rep = check_family(F);
        REQUIRE(rep.pass());
        for (const auto& n : index_set(F.d, F.t0)) {
            const PolySpan Wn = module_at(F, n);
            for (int i = 0; i < F.d; ++i) {
                if (n[i] < 2) continue;
                MultiIndex prev = n;
                prev[i] -= 1;
                const PolySpan Wprev = module_at(F, prev);
                const PolySpan cut = span_intersect(
                    Wn, build_Vni(n, i, rep.s_map.at(n), F.nvars));
                CHECK(spans_equal(Wprev, cut));
            }
        }
    }

    // For the merged family the intersection at n=(2) is strictly larger.
    const AdmissibleFamily& M = fixtures::chain_merged();
    const AdmissibilityReport mrep = check_family(M);
    const PolySpan W2 = module_at(M, {2});
    const PolySpan W1 = module_at(M, {1});
    const PolySpan cut =
        span_intersect(W2, build_Vni({2}, 0, mrep.s_map.at({2}), M.nvars));
    CHECK_FALSE(spans_equal(W1, cut));
    CHECK(cut.contains(D("Z^3")));
    CHECK_FALSE(W1.contains(D("Z^3")));
}

TEST_CASE("admissibility is invariant under changes of coordinates") {
    std::mt19937_64 rng(307);
    for (int t = 0; t < 6; ++t) {
        const LinearChange C(random_invertible(rng, 3));
        CHECK(check_family(transformed(fixtures::cone_cubics(), C)).pass());
        const AdmissibilityReport rep =
            check_family(transformed(fixtures::chain_merged(), C));
        CHECK(rep.cond1);
        CHECK(rep.cond2);
        CHECK_FALSE(rep.cond3);
    }
}

TEST_CASE("single-strand families tie the equality to the third condition") {
    std::mt19937_64 rng(311);
    std::uniform_int_distribution<int> coef(-3, 3);
    int tested = 0;
    while (tested < 12) {
        // Random cubic in the tail variables of a 3-variable ambient.
        Polynomial H = Polynomial::zero(3, Side::dual);
        for (const auto& mono : monomials_of_degree(3, 3)) {
            if (mono[0] > 0) continue;
            H.add_term(mono, Scalar(coef(rng)));
        }
        if (H.is_zero()) continue;
        ++tested;
        const AdmissibleFamily F = cone_family({H}, 1, 4);
        const AdmissibilityReport rep = check_family(F);
        const EqualityReport gd = check_Gd(F);
        CHECK(rep.pass());
        CHECK(gd.pass);
    }

    // Tampering with one entry while keeping the recursion intact forces the
    // intersection condition and the span equality to agree on the outcome.
    AdmissibleFamily F = fixtures::chain_gorenstein_a();
    F.entries[{MultiIndex{2}, 1}] =
        F.at({2}, 1) + D("Y^4");  // no X factor: recursion unchanged
    const AdmissibleFamily T =
        make_family(F.d, F.tau, F.t0, F.nvars, F.z, F.entries);
    const AdmissibilityReport rep = check_family(T);
    CHECK(rep.cond1);
    CHECK(rep.cond2);
    CHECK(check_Gd(T).pass == rep.cond3);
}

TEST_CASE("a broken recursion is caught with a located witness") {
    AdmissibleFamily F = fixtures::chain_gorenstein_a();
    F.entries[{MultiIndex{2}, 1}] = F.at({2}, 1) + D("X*Y^3");
    const AdmissibleFamily T =
        make_family(F.d, F.tau, F.t0, F.nvars, F.z, F.entries);
    const AdmissibilityReport rep = check_family(T);
    CHECK_FALSE(rep.cond2);
    bool located = false;
    for (const auto& w : rep.witnesses)
        if (w.cond == 2 && w.n == MultiIndex({2})) located = true;
    CHECK(located);
}

TEST_CASE("families serialize and parse back unchanged") {
    for (const AdmissibleFamily* Fp :
         {&fixtures::cone_cubics(), &fixtures::chain_merged(),
          &fixtures::local_family_a(), &fixtures::local_family_b()}) {
        const AdmissibleFamily& F = *Fp;
        const AdmissibleFamily G = parse_family(serialize_family(F));
        CHECK(G.d == F.d);
        CHECK(G.tau == F.tau);
        CHECK(G.t0 == F.t0);
        CHECK(G.nvars == F.nvars);
        CHECK(G.graded == F.graded);
        CHECK(G.z == F.z);
        REQUIRE(G.entries.size() == F.entries.size());
        for (const auto& [key, H] : F.entries) CHECK(G.at(key.first, key.second) == H);
    }
}

TEST_CASE("family construction and parsing validate their input") {
    const Polynomial x = Polynomial::variable(2, Side::ring, 0);
    const Polynomial H = Polynomial::variable(2, Side::dual, 1);
    using Key = std::pair<MultiIndex, int>;

    std::map<Key, Polynomial> complete{{{{1}, 1}, H}, {{{2}, 1}, H}};
    CHECK_NOTHROW(make_family(1, 1, 2, 2, {x}, complete));

    std::map<Key, Polynomial> missing{{{{1}, 1}, H}};
    CHECK_THROWS_AS(make_family(1, 1, 2, 2, {x}, missing),
                    std::invalid_argument);

    std::map<Key, Polynomial> wrong_ambient{
        {{{1}, 1}, H}, {{{2}, 1}, Polynomial::variable(3, Side::dual, 1)}};
    CHECK_THROWS_AS(make_family(1, 1, 2, 2, {x}, wrong_ambient),
                    std::invalid_argument);

    CHECK_THROWS_AS(make_family(2, 1, 2, 2, {x, x.scaled(2)}, complete),
                    std::invalid_argument);  // dependent forms

    CHECK_THROWS_AS(parse_family("d=1, tau=1, t0=2, vars=2\nH[1][1] = Y\n"),
                    std::invalid_argument);  // missing z=
    CHECK_THROWS_AS(parse_family("not a family"), std::invalid_argument);
}
