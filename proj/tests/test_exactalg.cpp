#include <algorithm>
#include <random>

#include "doctest.h"
#include "macdual/linalg.hpp"

using namespace macdual;

namespace {

Monomial M(std::initializer_list<int> e) { return Monomial(e); }

Polynomial random_poly(std::mt19937_64& rng, int nvars, Side side, int maxdeg,
                       int maxterms = 4) {
    std::uniform_int_distribution<int> nt(1, maxterms);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> dd(0, maxdeg);
    Polynomial p(nvars, side);
    const int k = nt(rng);
    for (int t = 0; t < k; ++t) {
        const auto all = monomials_of_degree(nvars, dd(rng));
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        Scalar c(num(rng), den(rng));
        c.canonicalize();
        p.add_term(all[pick(rng)], c);
    }
    return p;
}

}  // namespace

TEST_CASE("term order: degree first, rightmost difference decides ties") {
    // All variables present: x > y > z reading ascending from the small end.
    const Monomial y3 = M({0, 3, 0}), z3 = M({0, 0, 3});
    CHECK(grevlex_less(z3, y3));
    CHECK_FALSE(grevlex_less(y3, z3));
    // Degree dominates everything else.
    CHECK(grevlex_less(M({4, 0, 0}), M({0, 0, 5})));
    // Single variables ascend as z < y < x.
    CHECK(grevlex_less(M({0, 0, 1}), M({0, 1, 0})));
    CHECK(grevlex_less(M({0, 1, 0}), M({1, 0, 0})));
    // 1 is the least monomial.
    for (const auto& m : monomials_of_degree(3, 2))
        CHECK(grevlex_less(mono_one(3), m));
}

TEST_CASE("term order is a strict total order on a finite universe") {
    const auto all = monomials_upto(3, 4);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK_FALSE(grevlex_less(all[i], all[i]));
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const bool ab = grevlex_less(all[i], all[j]);
            const bool ba = grevlex_less(all[j], all[i]);
            CHECK(ab != ba);  // trichotomy with distinct elements
        }
    }
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 300; ++t) {
        const auto &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
        if (grevlex_less(a, b) && grevlex_less(b, c)) CHECK(grevlex_less(a, c));
    }
}

TEST_CASE("monomial enumeration is sorted, complete, and degree-prefixed") {
    for (int m = 1; m <= 4; ++m) {
        for (int N = 0; N <= 6; ++N) {
            const auto upto = monomials_upto(m, N);
            CHECK(static_cast<std::int64_t>(upto.size()) ==
                  count_monomials_upto(m, N));
            CHECK(std::is_sorted(upto.begin(), upto.end(), GrevlexLess{}));
            // Degrees never decrease along the list (prefix property).
            for (std::size_t i = 1; i < upto.size(); ++i)
                CHECK(degree(upto[i - 1]) <= degree(upto[i]));
            // The degree-d monomials form exactly the d-block of the list.
            std::size_t at = 0;
            for (int d = 0; d <= N; ++d) {
                const auto slice = monomials_of_degree(m, d);
                CHECK(static_cast<std::int64_t>(slice.size()) ==
                      count_monomials_of_degree(m, d));
                for (const auto& mm : slice) {
                    REQUIRE(at < upto.size());
                    CHECK(upto[at] == mm);
                    ++at;
                }
            }
            CHECK(at == upto.size());
        }
    }
}

TEST_CASE("monomial division is exact and consistent") {
    std::mt19937_64 rng(5);
    const auto all = monomials_upto(3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 200; ++t) {
        const auto &a = all[pick(rng)], &b = all[pick(rng)];
        const Monomial ab = mono_mul(a, b);
        CHECK(degree(ab) == degree(a) + degree(b));
        CHECK(mono_divides(a, ab));
        CHECK(mono_div(ab, a) == b);
        if (!mono_divides(a, b)) {
            bool has_excess = false;
            for (std::size_t i = 0; i < a.size(); ++i)
                has_excess = has_excess || a[i] > b[i];
            CHECK(has_excess);
        }
    }
}

TEST_CASE("polynomial arithmetic satisfies the ring identities") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 120; ++t) {
        const Polynomial p = random_poly(rng, 3, Side::ring, 4);
        const Polynomial q = random_poly(rng, 3, Side::ring, 4);
        const Polynomial r = random_poly(rng, 3, Side::ring, 4);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK(p * (q * r) == (p * q) * r);
        CHECK((p - q) + q == p);
        CHECK((p + (-p)).is_zero());
        CHECK(p * Polynomial::one(3, Side::ring) == p);
        CHECK(p.scaled(Scalar(3, 2)).scaled(Scalar(2, 3)) == p);
    }
}

TEST_CASE("degree, order, and homogeneous parts agree with the terms") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const Polynomial p = random_poly(rng, 3, Side::dual, 5);
        if (p.is_zero()) continue;
        Polynomial rebuilt(3, Side::dual);
        int mind = 99, maxd = -1;
        for (const auto& [m, c] : p.terms()) {
            mind = std::min(mind, degree(m));
            maxd = std::max(maxd, degree(m));
        }
        CHECK(p.degree() == maxd);
        CHECK(p.order() == mind);
        CHECK(p.is_homogeneous() == (mind == maxd));
        for (int d = 0; d <= maxd; ++d) {
            const Polynomial hd = p.homogeneous_part(d);
            CHECK((hd.is_zero() || (hd.is_homogeneous() && hd.degree() == d)));
            rebuilt = rebuilt + hd;
        }
        CHECK(rebuilt == p);
        CHECK(p.truncated(maxd) == p);
        CHECK(p.truncated(mind - 1).is_zero());
    }
}

TEST_CASE("parse and print round-trip every generated polynomial") {
    std::mt19937_64 rng(31);
    const auto rn = letter_names(3, Side::ring);
    const auto dn = default_names(3, Side::dual);
    for (int t = 0; t < 100; ++t) {
        const Polynomial p = random_poly(rng, 3, Side::ring, 4);
        CHECK(Polynomial::parse(p.str(rn, false), 3, Side::ring, rn) == p);
        const Polynomial q = random_poly(rng, 3, Side::dual, 4);
        CHECK(Polynomial::parse(q.str(dn, false), 3, Side::dual, dn) == q);
    }
}

TEST_CASE("parser accepts juxtaposed letters, powers, and rationals") {
    const auto rn = letter_names(3, Side::ring);
    const Polynomial a = Polynomial::parse("y^2-xz", 3, Side::ring, rn);
    const Polynomial b =
        Polynomial::parse("y*y - x*z", 3, Side::ring, rn);
    CHECK(a == b);
    CHECK(a.str(rn, true) == "y^2 - xz");
    const Polynomial c = Polynomial::parse("3/2*X1^2 - X2", 2, Side::dual);
    CHECK(c.terms().size() == 2);
    CHECK(c.terms().at(M({2, 0})) == Scalar(3, 2));
    CHECK(Polynomial::parse("0", 2, Side::ring).is_zero());
    CHECK_THROWS_AS(Polynomial::parse("q + 1", 3, Side::ring, rn),
                    std::invalid_argument);
}

TEST_CASE("poly_pow matches repeated multiplication") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 30; ++t) {
        const Polynomial p = random_poly(rng, 2, Side::ring, 2, 2);
        Polynomial acc = Polynomial::one(2, Side::ring);
        for (int k = 0; k <= 4; ++k) {
            CHECK(poly_pow(p, k) == acc);
            acc = acc * p;
        }
    }
    CHECK_THROWS_AS(poly_pow(Polynomial::one(1, Side::ring), -1),
                    std::invalid_argument);
}

TEST_CASE("spans track rank, membership, and reduction") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        PolySpan S(3, Side::dual);
        std::vector<Polynomial> added;
        for (int k = 0; k < 4; ++k) {
            const Polynomial p = random_poly(rng, 3, Side::dual, 3);
            const int before = S.dim();
            const bool grew = S.add(p);
            CHECK(S.dim() == before + (grew ? 1 : 0));
            if (!p.is_zero()) added.push_back(p);
        }
        CHECK(S.dim() <= static_cast<int>(added.size()));
        // Random combinations stay inside; reduction is idempotent.
        Polynomial combo(3, Side::dual);
        std::uniform_int_distribution<int> c(-3, 3);
        for (const auto& p : added) combo = combo + p.scaled(Scalar(c(rng)));
        CHECK(S.contains(combo));
        const Polynomial outside = random_poly(rng, 3, Side::dual, 3);
        const Polynomial red = S.reduce(outside);
        CHECK(S.reduce(red) == red);
        CHECK(S.contains(outside - red));
        CHECK(static_cast<int>(S.basis().size()) == S.dim());
    }
}

TEST_CASE("span sums and intersections satisfy the dimension formula") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 100; ++t) {
        std::vector<Polynomial> ga, gb;
        for (int k = 0; k < 3; ++k) {
            ga.push_back(random_poly(rng, 2, Side::dual, 3));
            gb.push_back(random_poly(rng, 2, Side::dual, 3));
        }
        // Force overlap half the time.
        if (t % 2 == 0 && !ga.empty()) gb.push_back(ga[0] + ga.back());
        const PolySpan A = span_of(ga, 2, Side::dual);
        const PolySpan B = span_of(gb, 2, Side::dual);
        const PolySpan S = span_sum(A, B);
        const PolySpan I = span_intersect(A, B);
        CHECK(S.dim() + I.dim() == A.dim() + B.dim());
        for (const auto& v : I.basis()) {
            CHECK(A.contains(v));
            CHECK(B.contains(v));
        }
        CHECK(span_contains_all(S, A));
        CHECK(span_contains_all(S, B));
        CHECK(spans_equal(S, span_sum(B, A)));
    }
}

TEST_CASE("span intersection reproduces a hand-checked case") {
    const auto P = [](const char* s) {
        return Polynomial::parse(s, 2, Side::dual, {"Y", "Z"});
    };
    const PolySpan A = span_of({P("Y^3"), P("Z^3")}, 2, Side::dual);
    const PolySpan B = span_of({P("Y^3+Z^3"), P("Y^2")}, 2, Side::dual);
    const PolySpan I = span_intersect(A, B);
    CHECK(I.dim() == 1);
    CHECK(I.contains(P("Y^3+Z^3")));
}

TEST_CASE("kernel vectors annihilate the rows and complete the rank") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<int> ncols_d(1, 8), nrows_d(0, 6);
        const int ncols = ncols_d(rng), nrows = nrows_d(rng);
        std::vector<SparseVec> rows(nrows);
        for (auto& r : rows)
            for (int j = 0; j < ncols; ++j) {
                const int v = val(rng);
                if (v != 0 && rng() % 2) r[j] = Scalar(v);
            }
        const auto kern = kernel_basis(rows, ncols);
        SparseRref<int> rank_engine;
        for (const auto& r : rows) rank_engine.add(r);
        CHECK(static_cast<int>(kern.size()) + rank_engine.rank() == ncols);
        for (const auto& kv : kern)
            for (const auto& r : rows) {
                Scalar dot(0);
                for (const auto& [j, c] : r) {
                    auto it = kv.find(j);
                    if (it != kv.end()) dot += c * it->second;
                }
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("kernel of a hand-checked matrix") {
    std::vector<SparseVec> rows = {{{0, Scalar(1)}, {1, Scalar(1)}},
                                   {{1, Scalar(1)}, {2, Scalar(1)}}};
    const auto kern = kernel_basis(rows, 3);
    REQUIRE(kern.size() == 1);
    const SparseVec expected = {
        {0, Scalar(1)}, {1, Scalar(-1)}, {2, Scalar(1)}};
    CHECK(kern[0] == expected);
}

TEST_CASE("solve_combination reconstructs targets and rejects outsiders") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> cdist(-3, 3);
    for (int t = 0; t < 100; ++t) {
        const int nunk = 1 + static_cast<int>(rng() % 3);
        const int nslots = 1 + static_cast<int>(rng() % 2);
        std::vector<std::vector<Polynomial>> columns(nunk);
        for (auto& col : columns)
            for (int s = 0; s < nslots; ++s)
                col.push_back(random_poly(rng, 2, Side::dual, 3));
        std::vector<Scalar> c;
        for (int k = 0; k < nunk; ++k) c.push_back(Scalar(cdist(rng)));
        std::vector<Polynomial> target(nslots, Polynomial(2, Side::dual));
        for (int k = 0; k < nunk; ++k)
            for (int s = 0; s < nslots; ++s)
                target[s] = target[s] + columns[k][s].scaled(c[k]);
        const auto sol = solve_combination(columns, target);
        REQUIRE(sol.has_value());
        std::vector<Polynomial> got(nslots, Polynomial(2, Side::dual));
        for (int k = 0; k < nunk; ++k)
            for (int s = 0; s < nslots; ++s)
                got[s] = got[s] + columns[k][s].scaled((*sol)[k]);
        for (int s = 0; s < nslots; ++s) CHECK(got[s] == target[s]);
    }
    // Unsolvable: columns live on X1 only, target needs X2.
    const Polynomial x1 = Polynomial::variable(2, Side::dual, 0);
    const Polynomial x2 = Polynomial::variable(2, Side::dual, 1);
    CHECK_FALSE(solve_combination({{x1}, {x1.scaled(Scalar(2))}}, {x2}));
}

TEST_CASE("monomial index looks up positions and rejects absentees") {
    MonoIndex U(monomials_upto(2, 3));
    CHECK(U.size() == 10);
    for (int i = 0; i < U.size(); ++i) CHECK(U.index(U.at(i)) == i);
    CHECK_THROWS_AS(U.index(M({4, 0})), std::exception);
}
