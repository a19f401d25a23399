#pragma once

#include <capelli/bipartition.hpp>
#include <capelli/rep.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

/// Harmonics of degree k: ker(nabla^2) inside P^k.
struct HarmonicSpace {
    int k = 0;
    std::vector<SuperPoly> basis;
};

/// One Fischer component V_nu = (R^2)^{nu2} * H_{nu1-nu2} inside P^{|nu|}.
struct Component {
    BiPartition nu;
    std::vector<SuperPoly> basis;
};

/// Constant-coefficient differential operator, stored through its symbol:
/// a term c * y^a x_S stands for c * d_y^a applied after the odd derivations
/// of S taken in ascending index order (so the written form has descending
/// indices, e.g. x_1 x_2 stands for d_2 d_1).
struct DerivOperator {
    SuperPoly symbol;

    explicit DerivOperator(SpaceParams params) : symbol(params) {}
    explicit DerivOperator(SuperPoly s) : symbol(std::move(s)) {}

    SuperPoly apply(const SuperPoly& p) const {
        SuperPoly r(symbol.params());
        for (const auto& [m, c] : symbol.terms()) {
            SuperPoly q = p;
            for (int i = 1; i <= symbol.params().odd_dim() && !q.is_zero(); ++i)
                if (m.has(i)) q = derive_odd(i, q);
            for (int t = 0; t < m.y_exp && !q.is_zero(); ++t) q = derive_y(q);
            r += q * c;
        }
        return r;
    }
};

/// Constant term of a superpolynomial.
inline Rational constant_term(const SuperPoly& p) { return p.coeff(SuperMonomial{}); }

/// Duality pairing <D, p> = constant term of D(p).
inline Rational pairing(const DerivOperator& d, const SuperPoly& p) {
    return constant_term(d.apply(p));
}

/// Index set P*_{k,n}: |nu| = k with nu2 >= floor(k/2) - n, listed by
/// ascending nu2 to match H_k + R^2 H_{k-2} + ... .
inline std::vector<BiPartition> p_star(int k, int n) {
    std::vector<BiPartition> out;
    long lo = k / 2 - n;
    if (lo < 0) lo = 0;
    for (long v2 = lo; 2 * v2 <= k; ++v2) out.emplace_back(k - v2, v2);
    return out;
}

inline HarmonicSpace harmonic_basis(int k, SpaceParams params) {
    HarmonicSpace h;
    h.k = k;
    if (k < 2) {
        for (const auto& m : degree_basis(k, params))
            h.basis.push_back(SuperPoly::monomial(params, m));
        return h;
    }
    LinOpBlocks nab = laplacian(params, k);
    for (const auto& v : kernel_basis(nab.block(k))) h.basis.push_back(from_vector(v, k, params));
    return h;
}

inline Component component_basis(const BiPartition& nu, SpaceParams params) {
    if (!in_lambda_star(nu, params.n))
        throw std::invalid_argument("component_basis: " + nu.str() + " is not in Lambda*_n for n=" +
                                    std::to_string(params.n));
    Component comp;
    comp.nu = nu;
    SuperPoly r2 = SuperPoly::one(params);
    SuperPoly r2gen = r_squared_poly(params);
    for (long t = 0; t < nu.v2; ++t) r2 = r2 * r2gen;
    for (const auto& h : harmonic_basis(static_cast<int>(nu.v1 - nu.v2), params).basis)
        comp.basis.push_back(r2 * h);
    return comp;
}

inline std::vector<Component> fischer_decompose(int k, SpaceParams params) {
    std::vector<Component> out;
    for (const auto& nu : p_star(k, params.n)) out.push_back(component_basis(nu, params));
    return out;
}

/// Dual operators v_i* of pure order |nu|: <v_i*, w_j> = delta_{ij} on the
/// component basis of V_nu and zero on every other component of P^{|nu|}.
inline std::vector<DerivOperator> dual_basis(const BiPartition& nu, SpaceParams params) {
    const int k = static_cast<int>(nu.size());
    auto ambient = degree_basis(k, params);
    const std::size_t dim = ambient.size();

    auto decomp = fischer_decompose(k, params);
    RatMatrix comps(dim, dim);
    std::size_t offset = 0, count = 0, pos = 0;
    for (const auto& comp : decomp) {
        if (comp.nu == nu) {
            offset = pos;
            count = comp.basis.size();
        }
        for (const auto& b : comp.basis) {
            RatVector col = to_vector(b, k);
            for (std::size_t i = 0; i < dim; ++i) comps.at(i, pos) = col[i];
            ++pos;
        }
    }
    if (pos != dim) throw std::runtime_error("dual_basis: decomposition is not a direct sum");

    // Pairing of derivative monomials against monomials, then one exact
    // solve per dual vector: c^T (B * comps) = e_{offset+i}.
    RatMatrix b(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        DerivOperator di(SuperPoly::monomial(params, ambient[i]));
        for (std::size_t j = 0; j < dim; ++j)
            b.at(i, j) = pairing(di, SuperPoly::monomial(params, ambient[j]));
    }
    RatMatrix bp = b * comps;

    std::vector<DerivOperator> duals;
    for (std::size_t i = 0; i < count; ++i) {
        RatVector unit(dim, Rational(0));
        unit[offset + i] = Rational(1);
        RatVector c = solve_row(bp, unit);
        SuperPoly sym(params);
        for (std::size_t t = 0; t < dim; ++t) sym.add_term(ambient[t], c[t]);
        duals.emplace_back(std::move(sym));
    }
    return duals;
}

/// Capelli operator D_nu = sum_i (multiplication by w_i) o v_i*.
struct CapelliOperator {
    BiPartition nu;
    std::vector<std::pair<SuperPoly, DerivOperator>> pairs;
    LinOpBlocks blocks;
};

inline CapelliOperator capelli_operator(const BiPartition& nu, SpaceParams params,
                                        int max_degree) {
    Component comp = component_basis(nu, params);
    std::vector<DerivOperator> duals = dual_basis(nu, params);
    std::vector<std::pair<SuperPoly, DerivOperator>> pairs;
    for (std::size_t i = 0; i < comp.basis.size(); ++i)
        pairs.emplace_back(comp.basis[i], duals[i]);

    LinOpBlocks blocks = LinOpBlocks::materialize(
        params, 0, 0, max_degree, [&pairs, &params](const SuperPoly& p) {
            SuperPoly r(params);
            for (const auto& [w, d] : pairs) r += w * d.apply(p);
            return r;
        });
    return CapelliOperator{nu, std::move(pairs), std::move(blocks)};
}

/// Brute-force eigenvalue: the scalar by which D_nu acts on V_mu, asserted
/// to be the same on every basis vector of the component.
inline Rational eigenvalue_oracle(const BiPartition& nu, const BiPartition& mu,
                                  SpaceParams params) {
    const int k = static_cast<int>(mu.size());
    CapelliOperator d = capelli_operator(nu, params, k);
    Component comp = component_basis(mu, params);
    if (comp.basis.empty())
        throw std::invalid_argument("eigenvalue_oracle: V_mu is zero for mu=" + mu.str());

    bool have = false;
    Rational scalar;
    for (const auto& v : comp.basis) {
        RatVector in = to_vector(v, k);
        RatVector out = d.blocks.apply(k, in);
        // Determine the candidate scalar from the first nonzero coordinate.
        Rational s(0);
        for (std::size_t i = 0; i < in.size(); ++i)
            if (!in[i].is_zero()) {
                s = out[i] / in[i];
                break;
            }
        for (std::size_t i = 0; i < in.size(); ++i)
            if (out[i] != in[i] * s)
                throw std::runtime_error("eigenvalue_oracle: non-scalar action of D_" + nu.str() +
                                         " on V_" + mu.str());
        if (have && s != scalar)
            throw std::runtime_error("eigenvalue_oracle: scalar differs across the basis of V_" +
                                     mu.str());
        scalar = s;
        have = true;
    }
    return scalar;
}

/// Invariance of an operator: vanishing super-commutator with every osp
/// basis action and with the degree operator, on all representable degrees.
struct InvarianceReport {
    bool ok = true;
    std::string failure;
};

inline InvarianceReport invariance_check(const LinOpBlocks& op, SpaceParams params,
                                         const LieBasis& basis) {
    const int check_to = op.max_degree() - 2;
    for (const auto& el : basis.elements)
        if (!super_commutator(op, el.action).is_zero_up_to(check_to))
            return {false, "does not commute with osp element " + el.label};
    if (!super_commutator(op, euler(params, op.max_degree())).is_zero_up_to(check_to))
        return {false, "does not commute with the degree operator"};
    return {};
}

}  // namespace capelli
