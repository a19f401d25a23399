#include <catch2/catch_amalgamated.hpp>

#include <capelli/rep.hpp>

#include "test_util.hpp"

using namespace capelli;
using capelli::testutil::Rng;

TEST_CASE("action table") {
    SpaceParams params(1);
    const int K = 5;
    SuperPoly y = SuperPoly::var_y(params);
    SuperPoly x1 = SuperPoly::var_x(params, 1);

    CHECK(build_action(1, 1, params, K).apply(y * y) == y * y * Rational(2));
    CHECK(build_action(2, 2, params, K).apply(x1) == x1);
    CHECK(build_action(1, 2, params, K).apply(x1) == y);
    CHECK(build_action(3, 1, params, K).apply(y) == SuperPoly::var_x(params, 2));
}

TEST_CASE("osp basis dimensions and membership") {
    for (int n = 1; n <= 3; ++n) {
        SpaceParams params(n);
        LieBasis basis = build_osp_basis(params, 4);
        CHECK(basis.elements.size() == static_cast<std::size_t>(2 * n * n + 3 * n));
        CHECK(basis.cartan.size() == static_cast<std::size_t>(n));
        int odd = 0;
        for (const auto& el : basis.elements) {
            CHECK(osp_member(el.mat, el.parity, n));
            odd += el.parity;
        }
        CHECK(odd == 2 * n);
    }
}

TEST_CASE("osp(1|2) basis split") {
    LieBasis basis = build_osp_basis(SpaceParams(1), 4);
    REQUIRE(basis.elements.size() == 5);  // 3 even, 2 odd
    int even = 0;
    for (const auto& el : basis.elements) even += 1 - el.parity;
    CHECK(even == 3);
}

TEST_CASE("cartan action matches x_i d_i - x_{i+n} d_{i+n}") {
    for (int n = 1; n <= 2; ++n) {
        SpaceParams params(n);
        const int K = 4;
        LieBasis basis = build_osp_basis(params, K);
        for (int i = 1; i <= n; ++i) {
            const OspElement& h = basis.elements[basis.cartan[i - 1]];
            LinOpBlocks expect = build_action(i + 1, i + 1, params, K) -
                                 build_action(i + 1 + n, i + 1 + n, params, K);
            CHECK(equal_up_to(h.action, expect, K));
        }
    }
}

TEST_CASE("bracket closure and faithfulness of structure constants") {
    for (int n = 1; n <= 2; ++n) {
        SpaceParams params(n);
        const int K = 4;
        LieBasis basis = build_osp_basis(params, K);
        const std::size_t dim = basis.elements.size();
        const int m = 2 * n + 1;

        // Flattened matrix of basis elements for expressing brackets in the span.
        RatMatrix span(static_cast<std::size_t>(m) * m, dim);
        for (std::size_t e = 0; e < dim; ++e)
            for (int r = 0; r < m; ++r)
                for (int s = 0; s < m; ++s)
                    span.at(static_cast<std::size_t>(r) * m + s, e) =
                        basis.elements[e].mat.at(r, s);

        Rng rng(11);
        for (int it = 0; it < 25; ++it) {
            std::size_t i = rng.integer(0, static_cast<long>(dim) - 1);
            std::size_t j = rng.integer(0, static_cast<long>(dim) - 1);
            const OspElement& a = basis.elements[i];
            const OspElement& b = basis.elements[j];
            RatMatrix br = a.mat * b.mat;
            RatMatrix ba = b.mat * a.mat;
            br = a.parity * b.parity % 2 == 1 ? br + ba : br - ba;

            // Solve for structure constants exactly.
            RatMatrix aug(span.rows(), dim + 1);
            for (std::size_t r = 0; r < span.rows(); ++r) {
                for (std::size_t c = 0; c < dim; ++c) aug.at(r, c) = span.at(r, c);
                aug.at(r, dim) = br.at(r / m, r % m);
            }
            auto pivots = detail::rref(aug);
            bool solvable = true;
            RatVector coeff(dim, Rational(0));
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                if (pivots[r] == dim) solvable = false;
                else coeff[pivots[r]] = aug.at(r, dim);
            }
            REQUIRE(solvable);

            // Same bracket through the P(V) action.
            LinOpBlocks act_bracket = super_commutator(a.action, b.action);
            LinOpBlocks lin(params, 0, (a.parity + b.parity) % 2, K);
            bool first = true;
            for (std::size_t e = 0; e < dim; ++e) {
                if (coeff[e].is_zero()) continue;
                LinOpBlocks t = basis.elements[e].action * coeff[e];
                lin = first ? t : lin + t;
                first = false;
            }
            if (first) {
                CHECK(act_bracket.is_zero_up_to(K));
            } else {
                CHECK(equal_up_to(act_bracket, lin, K));
            }
        }
    }
}

TEST_CASE("euler, r_squared, laplacian spot values") {
    SpaceParams params(1);
    const int K = 6;
    SuperPoly y = SuperPoly::var_y(params);
    SuperPoly x1 = SuperPoly::var_x(params, 1);

    CHECK(euler(params, K).apply(y * x1) == y * x1 * Rational(2));
    CHECK(laplacian(params, K).apply(y * y) == SuperPoly::one(params) * Rational(2));
    CHECK(laplacian(params, K).apply(r_squared(params, K).apply(SuperPoly::one(params))) ==
          SuperPoly::one(params) * Rational(-2));
}

TEST_CASE("sl2 triple") {
    for (int n = 1; n <= 2; ++n) CHECK(sl2_check(SpaceParams(n), 8).ok);

    // Negative control: first power of d_y does not close the triple.
    SpaceParams params(1);
    auto bad = laplacian_first_power(params, 8);
    CHECK(!sl2_check(params, 8, bad).ok);
}

TEST_CASE("sl2 commutes with osp") {
    for (int n = 1; n <= 2; ++n) {
        SpaceParams params(n);
        const int K = 6;
        LieBasis basis = build_osp_basis(params, K);
        LinOpBlocks r2 = r_squared(params, K);
        LinOpBlocks nab = laplacian(params, K);
        LinOpBlocks e = euler(params, K);
        for (const auto& el : basis.elements) {
            CHECK(super_commutator(r2, el.action).is_zero_up_to(K - 2));
            CHECK(super_commutator(nab, el.action).is_zero_up_to(K - 2));
            CHECK(super_commutator(e, el.action).is_zero_up_to(K));
        }
    }
}

TEST_CASE("Laplacian commutation with powers of R^2") {
    // nabla^2 (R^2)^t - (R^2)^t nabla^2 = 2t(2k+1-2n+2(t-1)) (R^2)^{t-1} on P^k.
    for (int n = 1; n <= 2; ++n) {
        SpaceParams params(n);
        const int K = 8;
        LinOpBlocks r2 = r_squared(params, K);
        LinOpBlocks nab = laplacian(params, K);
        for (int t = 1; t <= 3; ++t) {
            LinOpBlocks lhs = compose(nab, r2.pow(t)) - compose(r2.pow(t), nab);
            LinOpBlocks r2tm1 = r2.pow(t - 1);
            for (int k = 0; k + 2 * t <= K; ++k) {
                Rational c = Rational(2 * t) * Rational(2 * k + 1 - 2 * n + 2 * (t - 1));
                CHECK(lhs.block(k) == r2tm1.block(k) * c);
            }
        }
    }
}

TEST_CASE("casimir commutes and is calibrated") {
    for (int n = 1; n <= 2; ++n) {
        SpaceParams params(n);
        const int K = 6;
        LieBasis basis = build_osp_basis(params, K);
        LinOpBlocks c = casimir(params, K, basis);
        CHECK(c.block(0).is_zero());  // scalar 0 on V_{(0,0)}
        CHECK(c.block(1) == RatMatrix::identity(degree_dim(1, params)) * Rational(2 * n));
        for (const auto& el : basis.elements)
            CHECK(super_commutator(c, el.action).is_zero_up_to(K));
        CHECK(super_commutator(c, euler(params, K)).is_zero_up_to(K));
        CHECK(super_commutator(c, r_squared(params, K)).is_zero_up_to(K - 2));
        CHECK(super_commutator(c, laplacian(params, K)).is_zero_up_to(K - 2));
    }
}

TEST_CASE("cartan weights of monomials") {
    SpaceParams params(1);
    auto spaces = cartan_weights(1, params);
    // Degree 1: y weight (0), x1 weight (1), x2 weight (-1).
    bool found_plus = false, found_minus = false, found_zero = false;
    for (const auto& [w, vecs] : spaces) {
        if (w == WeightVector{1}) {
            found_plus = true;
            CHECK(vecs.size() == 1);
        }
        if (w == WeightVector{-1}) found_minus = true;
        if (w == WeightVector{0}) found_zero = true;
    }
    CHECK(found_plus);
    CHECK(found_minus);
    CHECK(found_zero);

    // Subspaces sum to P^k.
    for (int k = 0; k <= 4; ++k) {
        std::size_t total = 0;
        for (const auto& [w, vecs] : cartan_weights(k, params)) total += vecs.size();
        CHECK(total == degree_dim(k, params));
    }
}

TEST_CASE("highest weight line of P^1") {
    SpaceParams params(1);
    const int K = 3;
    LieBasis basis = build_osp_basis(params, K);
    std::vector<RatVector> p1;
    for (std::size_t i = 0; i < degree_dim(1, params); ++i) {
        RatVector v(degree_dim(1, params), Rational(0));
        v[i] = Rational(1);
        p1.push_back(v);
    }
    auto hw = highest_weight_vectors(p1, 1, params, basis);
    REQUIRE(hw.size() == 1);
    CHECK(hw[0].first == WeightVector{1});
}
