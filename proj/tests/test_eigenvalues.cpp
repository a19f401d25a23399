#include <catch2/catch_amalgamated.hpp>

#include <capelli/eigenvalues.hpp>
#include <capelli/fischer.hpp>

#include "test_util.hpp"

using namespace capelli;
using capelli::testutil::Rng;

namespace {

std::vector<BiPartition> lambda_star_upto(long dmax, int n) {
    std::vector<BiPartition> out;
    for (long a = 0; a <= dmax; ++a)
        for (long b = 0; b <= a && a + b <= dmax; ++b)
            if (a - b <= 2 * n + 1) out.emplace_back(a, b);
    return out;
}

}  // namespace

TEST_CASE("ell") {
    CHECK(ell(BiPartition(0, 0), 1) == 0);
    CHECK(ell(BiPartition(2, 0), 1) == 1);
    CHECK(ell(BiPartition(3, 0), 1) == 0);
    CHECK(ell(BiPartition(2, 1), 2) == 1);
}

TEST_CASE("closed form basics") {
    // nu = (1,0): c(mu) = mu1 + mu2.
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : lambda_star_upto(4, n))
            CHECK(capelli_eigenvalue(BiPartition(1, 0), mu, n) == Rational(mu.size()));

    // c_nu(nu) = 1.
    for (int n = 1; n <= 3; ++n)
        for (const auto& nu : lambda_star_upto(6, n))
            CHECK(capelli_eigenvalue(nu, nu, n) == Rational(1));

    CHECK(capelli_eigenvalue(BiPartition(1, 1), BiPartition(2, 1), 1) == Rational(-1));
}

TEST_CASE("harmonic formula") {
    for (int n = 1; n <= 2; ++n) {
        for (const auto& mu : lambda_star_upto(4, n)) {
            CHECK(harmonic_eigenvalue(1, mu, n) == Rational(mu.size()));
            for (long k = 0; k <= 2 * n + 1; ++k)
                CHECK(harmonic_eigenvalue(k, mu, n) ==
                      capelli_eigenvalue(BiPartition(k, 0), mu, n));
        }
        for (long k = 1; k <= 2 * n + 1; ++k)
            CHECK(harmonic_eigenvalue(k, BiPartition(0, 0), n) == Rational(0));
    }
    CHECK(harmonic_eigenvalue(2, BiPartition(2, 0), 1) == Rational(1));
}

TEST_CASE("reduction") {
    CHECK(reduce(BiPartition(1, 1), BiPartition(1, 0), 1).factor == Rational(0));

    ReduceResult r = reduce(BiPartition(1, 1), BiPartition(2, 1), 1);
    CHECK(r.factor == Rational(-1));
    CHECK(r.nu == BiPartition(0, 0));
    CHECK(r.eta == BiPartition(1, 0));

    for (long k = 0; k <= 3; ++k) {
        ReduceResult rk = reduce(BiPartition(k, 0), BiPartition(3, 1), 1);
        CHECK(rk.factor == Rational(1));
        CHECK(rk.nu == BiPartition(k, 0));
        CHECK(rk.eta == BiPartition(3, 1));
    }
}

TEST_CASE("knop-sahi polynomials") {
    const SymPoly2 x = SymPoly2::x(), y = SymPoly2::y();

    for (int n = 1; n <= 3; ++n) {
        SymPoly2 expect = x + y + SymPoly2(Rational(n) + Rational(1, 2));
        CHECK(knop_sahi_vanishing(BiPartition(1, 0), n) == expect);
        CHECK(knop_sahi_explicit(1, n) == expect);
    }
    CHECK(knop_sahi_vanishing(BiPartition(0, 0), 1) == SymPoly2(1));
    CHECK(knop_sahi_explicit(0, 2) == SymPoly2(1));

    // Vanishing at every other grid point, symmetry, degree bound.
    for (int n = 1; n <= 2; ++n)
        for (const auto& nu : lambda_star_upto(4, n)) {
            SymPoly2 p = knop_sahi_vanishing(nu, n);
            CHECK(p.is_symmetric());
            CHECK(p.total_degree() <= nu.size());
            Rational rho1 = -Rational(n) - Rational(1, 2);
            for (long a = 0; a <= nu.size(); ++a)
                for (long b = 0; b <= a && a + b <= nu.size(); ++b) {
                    BiPartition mu(a, b);
                    Rational v = p.eval(Rational(a) + rho1, Rational(b));
                    CHECK(v == (mu == nu ? knop_sahi_normalization(nu, n) : Rational(0)));
                }
        }

    // Explicit harmonic form agrees with the vanishing characterization.
    for (int n = 1; n <= 2; ++n)
        for (long k = 0; k <= 2 * n + 1; ++k) {
            SymPoly2 e = knop_sahi_explicit(k, n);
            CHECK(e.is_symmetric());
            CHECK(e == knop_sahi_vanishing(BiPartition(k, 0), n));
        }

    // Shift identity.
    CHECK(knop_sahi_shift(BiPartition(1, 1), 1) == x * y);
    CHECK(knop_sahi_shift(BiPartition(2, 1), 1) ==
          x * y * (x + y + SymPoly2(Rational(3, 2) - Rational(2))));
    for (int n = 1; n <= 2; ++n)
        for (const auto& nu : lambda_star_upto(4, n))
            if (nu.v2 >= 1) CHECK(knop_sahi_shift(nu, n) == knop_sahi_vanishing(nu, n));
}

TEST_CASE("eigenvalues from knop-sahi") {
    CHECK(eigenvalue_from_knopsahi(BiPartition(1, 0), BiPartition(2, 1), 1) == Rational(3));
    CHECK(eigenvalue_from_knopsahi(BiPartition(1, 1), BiPartition(2, 1), 1) == Rational(-1));
    for (int n = 1; n <= 2; ++n)
        for (const auto& nu : lambda_star_upto(4, n))
            CHECK(eigenvalue_from_knopsahi(nu, nu, n) == Rational(1));
}

TEST_CASE("three-way agreement and oracle equivalence") {
    for (int n = 1; n <= 2; ++n) {
        auto idx = lambda_star_upto(5, n);
        for (const auto& nu : idx)
            for (const auto& mu : idx) {
                Rational closed = capelli_eigenvalue(nu, mu, n);
                CHECK(closed == eigenvalue_from_knopsahi(nu, mu, n));
                CHECK(closed == eigenvalue_via_reduction(nu, mu, n));
            }

        SpaceParams params(n);
        for (const auto& nu : lambda_star_upto(4, n))
            for (const auto& mu : lambda_star_upto(4, n))
                CHECK(capelli_eigenvalue(nu, mu, n) == eigenvalue_oracle(nu, mu, params));
    }
}

TEST_CASE("symmetry and degree of the closed form") {
    Rng rng(21);
    for (int n = 1; n <= 2; ++n)
        for (const auto& nu : lambda_star_upto(5, n)) {
            SymPoly2 p = capelli_eigenvalue_poly(nu, n);
            CHECK(p.is_symmetric());
            CHECK(p.total_degree() <= nu.size());

            const Rational nph = Rational(n) + Rational(1, 2);
            for (int it = 0; it < 50; ++it) {
                Rational vx = rng.rational(6, 3), vy = rng.rational(6, 3);
                CHECK(capelli_eigenvalue_at(nu, vx + nph, vy, n) ==
                      capelli_eigenvalue_at(nu, vy + nph, vx, n));
            }
        }
}

TEST_CASE("vanishing and denominators") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& nu : lambda_star_upto(5, n))
            for (const auto& mu : lambda_star_upto(5, n))
                if (mu.size() <= nu.size())
                    CHECK(capelli_eigenvalue(nu, mu, n) == Rational(nu == mu ? 1 : 0));

    // Half-integer falling factorials never hit zero.
    for (int n = 1; n <= 3; ++n) {
        const Rational nph = Rational(n) + Rational(1, 2);
        for (long k = 0; k <= 2 * n + 1; ++k) CHECK(!falling_factorial(nph, k).is_zero());
        for (const auto& nu : lambda_star_upto(6, n))
            CHECK(!falling_factorial(Rational(nu.v1) - nph, nu.v2).is_zero());
    }
}
