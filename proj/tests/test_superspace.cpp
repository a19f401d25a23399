#include <catch2/catch_amalgamated.hpp>

#include <capelli/superspace.hpp>

#include "test_util.hpp"

using namespace capelli;
using capelli::testutil::Rng;

namespace {

SuperPoly random_homogeneous(Rng& rng, SpaceParams params, int degree) {
    auto basis = degree_basis(degree, params);
    SuperPoly p(params);
    for (const auto& m : basis)
        if (rng.integer(0, 2) == 0) p.add_term(m, rng.rational(4, 3));
    if (p.is_zero() && !basis.empty()) p.add_term(basis[0], Rational(1));
    return p;
}

// Homogeneous in degree and in Z/2 parity; degree-k monomials mix
// parities, so parity-sensitive identities need this restriction.
SuperPoly random_parity_homogeneous(Rng& rng, SpaceParams params, int degree, int parity) {
    auto basis = degree_basis(degree, params);
    SuperPoly p(params);
    for (const auto& m : basis) {
        if (m.parity() != parity) continue;
        if (rng.integer(0, 1) == 0) p.add_term(m, rng.rational(4, 3));
    }
    if (p.is_zero())
        for (const auto& m : basis)
            if (m.parity() == parity) {
                p.add_term(m, Rational(1));
                break;
            }
    return p;
}

}  // namespace

TEST_CASE("monomial multiplication signs") {
    SpaceParams params(2);
    SuperMonomial x1{0, 0b0001}, x2{0, 0b0010};

    auto p = mono_mul(x1, x2);
    REQUIRE(p);
    CHECK(p->first == 1);
    CHECK(p->second.odd_set == 0b0011);

    auto q = mono_mul(x2, x1);
    REQUIRE(q);
    CHECK(q->first == -1);

    CHECK(!mono_mul(x1, x1));
}

TEST_CASE("polynomial multiplication") {
    SpaceParams params(1);
    SuperPoly y = SuperPoly::var_y(params);
    SuperPoly x1 = SuperPoly::var_x(params, 1);
    SuperPoly x2 = SuperPoly::var_x(params, 2);

    SuperPoly prod = (y + x1) * (y + x2);
    SuperPoly expected = y * y + y * x1 + y * x2 + x1 * x2;
    CHECK(prod == expected);

    CHECK((x1 * x2) * x1 == SuperPoly::zero(params));
    SuperPoly p = y * x1 + x2 * Rational(3);
    CHECK(p * SuperPoly::one(params) == p);
}

TEST_CASE("derivations on monomials") {
    SpaceParams params(1);
    SuperPoly x1 = SuperPoly::var_x(params, 1);
    SuperPoly x2 = SuperPoly::var_x(params, 2);
    SuperPoly y = SuperPoly::var_y(params);

    CHECK(derive_odd(1, x1 * x2) == x2);
    CHECK(derive_odd(2, x1 * x2) == SuperPoly::zero(params) - x1);
    CHECK(derive_y(y * y * y) == y * y * Rational(3));
    CHECK_THROWS_AS(derive_odd(3, x1), std::out_of_range);
}

TEST_CASE("degree basis order and dimensions") {
    SpaceParams p1(1);
    auto b = degree_basis(2, p1);
    REQUIRE(b.size() == 4);
    CHECK(b[0] == SuperMonomial{2, 0});        // y^2
    CHECK(b[1] == SuperMonomial{1, 0b01});     // y x1
    CHECK(b[2] == SuperMonomial{1, 0b10});     // y x2
    CHECK(b[3] == SuperMonomial{0, 0b11});     // x1 x2

    CHECK(degree_basis(0, p1).size() == 1);
    CHECK(degree_basis(3, SpaceParams(2)).size() == 15);

    // Binomial-sum dimension formula, stabilizing at 2^{2n}.
    for (int n = 1; n <= 3; ++n) {
        SpaceParams params(n);
        for (int k = 0; k <= 2 * n + 4; ++k) {
            std::size_t expect = 0;
            for (int j = 0; j <= std::min(k, 2 * n); ++j) {
                // C(2n, j)
                long c = 1;
                for (int t = 0; t < j; ++t) c = c * (2 * n - t) / (t + 1);
                expect += static_cast<std::size_t>(c);
            }
            CHECK(degree_dim(k, params) == expect);
        }
    }
}

TEST_CASE("coordinate maps") {
    SpaceParams params(1);
    SuperPoly y2 = SuperPoly::var_y(params) * SuperPoly::var_y(params);
    CHECK(to_vector(y2, 2) == RatVector{Rational(1), Rational(0), Rational(0), Rational(0)});

    RatVector e3{Rational(0), Rational(0), Rational(0), Rational(1)};
    CHECK(from_vector(e3, 2, params) ==
          SuperPoly::var_x(params, 1) * SuperPoly::var_x(params, 2));

    Rng rng(7);
    for (int it = 0; it < 20; ++it) {
        SpaceParams p(static_cast<int>(rng.integer(1, 3)));
        int k = static_cast<int>(rng.integer(0, 5));
        SuperPoly poly = random_homogeneous(rng, p, k);
        CHECK(from_vector(to_vector(poly, k), k, p) == poly);
    }

    SuperPoly mixed = SuperPoly::one(params) + SuperPoly::var_y(params);
    CHECK_THROWS_AS(to_vector(mixed, 1), std::invalid_argument);
}

TEST_CASE("super commutativity and associativity") {
    Rng rng(8);
    for (int it = 0; it < 30; ++it) {
        SpaceParams params(static_cast<int>(rng.integer(1, 3)));
        int dp = static_cast<int>(rng.integer(0, 3));
        int dq = static_cast<int>(rng.integer(0, 3));
        int pp = static_cast<int>(rng.integer(0, 1));
        int pq = static_cast<int>(rng.integer(0, 1));
        SuperPoly p = random_parity_homogeneous(rng, params, dp, pp);
        SuperPoly q = random_parity_homogeneous(rng, params, dq, pq);
        SuperPoly r = random_homogeneous(rng, params, static_cast<int>(rng.integer(0, 2)));

        SuperPoly qp = q * p;
        if (pp * pq % 2 == 1) qp = SuperPoly::zero(params) - qp;
        CHECK(p * q == qp);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("super Leibniz rule") {
    Rng rng(9);
    for (int it = 0; it < 30; ++it) {
        SpaceParams params(static_cast<int>(rng.integer(1, 3)));
        int i = static_cast<int>(rng.integer(1, params.odd_dim()));
        int pp = static_cast<int>(rng.integer(0, 1));
        SuperPoly p =
            random_parity_homogeneous(rng, params, static_cast<int>(rng.integer(0, 3)), pp);
        SuperPoly q = random_homogeneous(rng, params, static_cast<int>(rng.integer(0, 3)));
        SuperPoly rhs = derive_odd(i, p) * q;
        SuperPoly cross = p * derive_odd(i, q);
        rhs = pp % 2 == 1 ? rhs - cross : rhs + cross;
        CHECK(derive_odd(i, p * q) == rhs);
    }
}

TEST_CASE("derivation anticommutation") {
    Rng rng(10);
    for (int it = 0; it < 30; ++it) {
        SpaceParams params(static_cast<int>(rng.integer(1, 3)));
        SuperPoly p = random_homogeneous(rng, params, static_cast<int>(rng.integer(0, 4)));
        int i = static_cast<int>(rng.integer(1, params.odd_dim()));
        int j = static_cast<int>(rng.integer(1, params.odd_dim()));
        if (i != j)
            CHECK(derive_odd(i, derive_odd(j, p)) ==
                  SuperPoly::zero(params) - derive_odd(j, derive_odd(i, p)));
        CHECK(derive_odd(i, derive_odd(i, p)).is_zero());
        CHECK(derive_y(derive_odd(i, p)) == derive_odd(i, derive_y(p)));
    }
}

TEST_CASE("rendering") {
    SpaceParams params(1);
    SuperPoly p = SuperPoly::var_y(params) * SuperPoly::var_y(params) +
                  SuperPoly::var_x(params, 2) * SuperPoly::var_x(params, 1) * Rational(-2);
    CHECK(p.str() == "y^2 + 2*x1*x2");
}
