#pragma once

#include <capelli/bipartition.hpp>
#include <capelli/eigenvalues.hpp>
#include <capelli/matrix.hpp>
#include <capelli/polynomial.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace capelli {

/// The two index families of the same cardinality:
///   lam      = Lambda_{d,n}  = {mu: |mu| <= d, mu2 <= n}, ordered by (mu2, mu1);
///   lam_star = Lambda*_{d,n} = union of P*_{k,n} for k <= d, ordered by the
///              key (floor((nu1-nu2)/2), |nu|).
struct IndexSets {
    long d = 0;
    int n = 0;
    std::vector<BiPartition> lam;
    std::vector<BiPartition> lam_star;
};

inline IndexSets index_sets(long d, int n) {
    IndexSets s;
    s.d = d;
    s.n = n;
    for (long b = 0; b <= n; ++b)
        for (long a = b; a + b <= d; ++a) s.lam.emplace_back(a, b);

    for (long k = 0; k <= d; ++k) {
        long lo = std::max(k / 2 - n, 0L);
        for (long v2 = lo; 2 * v2 <= k; ++v2) s.lam_star.emplace_back(k - v2, v2);
    }
    std::sort(s.lam_star.begin(), s.lam_star.end(),
              [](const BiPartition& a, const BiPartition& b) {
                  return std::make_pair((a.v1 - a.v2) / 2, a.size()) <
                         std::make_pair((b.v1 - b.v2) / 2, b.size());
              });
    return s;
}

/// j-restricted index sets and their boundaries.
struct SubsetsJ {
    std::vector<BiPartition> lam_j;            // mu2 >= j, lam order
    std::vector<BiPartition> lam_star_j;       // nu2 <= floor(|nu|/2) - j, lam_star order
    std::vector<BiPartition> lam_boundary;     // {(mu1, j): mu1 = j..d-j}
    std::vector<BiPartition> lam_star_boundary;
};

inline BiPartition nu_sub_j(const BiPartition& nu, long j) {
    long half = nu.size() / 2;
    if (j < 0 || j > half) throw std::invalid_argument("nu_sub_j: j out of range");
    return BiPartition(nu.size() - half + j, half - j);
}

inline SubsetsJ subsets_j(long d, int n, long j) {
    SubsetsJ out;
    IndexSets idx = index_sets(d, n);
    for (const auto& mu : idx.lam)
        if (mu.v2 >= j) out.lam_j.push_back(mu);
    for (const auto& nu : idx.lam_star)
        if (nu.v2 <= nu.size() / 2 - j) out.lam_star_j.push_back(nu);
    for (long a = j; a <= d - j; ++a) out.lam_boundary.emplace_back(a, j);
    for (long k = 2 * j; k <= d; ++k)
        out.lam_star_boundary.push_back(nu_sub_j(BiPartition(k - k / 2, k / 2), j));
    return out;
}

/// lambda_{mu,nu}(x) = ((2x+1) l_nu - l_nu^2)^{mu2} * (nu1+nu2)^{mu1-mu2}.
inline UniPoly lambda_entry(const BiPartition& mu, const BiPartition& nu, int n) {
    Rational l(ell(nu, n));
    UniPoly base = UniPoly::x() * Rational(2) * l + UniPoly(l - l * l);
    return base.pow(mu.v2) * Rational(nu.size()).pow(mu.v1 - mu.v2);
}

inline Rational lambda_entry_at(const BiPartition& mu, const BiPartition& nu, int n,
                                const Rational& x) {
    Rational l(ell(nu, n));
    return ((x * Rational(2) + Rational(1)) * l - l * l).pow(mu.v2) *
           Rational(nu.size()).pow(mu.v1 - mu.v2);
}

inline PolyMatrix build_Md(long d, int n) {
    IndexSets idx = index_sets(d, n);
    PolyMatrix m(idx.lam.size(), idx.lam_star.size());
    for (std::size_t i = 0; i < idx.lam.size(); ++i)
        for (std::size_t j = 0; j < idx.lam_star.size(); ++j)
            m.at(i, j) = lambda_entry(idx.lam[i], idx.lam_star[j], n);
    return m;
}

inline RatMatrix build_Md_prime(long d, int n) {
    IndexSets idx = index_sets(d, n);
    RatMatrix m(idx.lam.size(), idx.lam_star.size());
    for (std::size_t i = 0; i < idx.lam.size(); ++i)
        for (std::size_t j = 0; j < idx.lam_star.size(); ++j) {
            const BiPartition& mu = idx.lam[i];
            const BiPartition& nu = idx.lam_star[j];
            m.at(i, j) = Rational(2 * ell(nu, n)).pow(mu.v2) *
                         Rational(nu.size()).pow(mu.v1 - mu.v2);
        }
    return m;
}

/// S_{mu,nu,j}: the complete homogeneous sum of degree mu2 - j in the
/// values l_{nu_(0)}, ..., l_{nu_(j-1)}, l_nu. This closed description
/// matches all three defining cases (l_nu^{mu2} at j=0, 1 at mu2=j, the
/// nested sum otherwise) and obeys the telescoping lemma.
inline Rational S_value(const BiPartition& mu, const BiPartition& nu, long j, int n) {
    if (mu.v2 < j) return Rational(0);  // negative-degree sum is empty
    std::vector<Rational> vals;
    for (long m = 0; m < j; ++m) vals.emplace_back(ell(nu_sub_j(nu, m), n));
    vals.emplace_back(ell(nu, n));

    long deg = mu.v2 - j;
    // h_deg via one-variable-at-a-time accumulation.
    std::vector<Rational> h(deg + 1, Rational(0));
    h[0] = Rational(1);
    for (const Rational& v : vals)
        for (long t = 1; t <= deg; ++t) h[t] += h[t - 1] * v;
    return h[deg];
}

inline RatMatrix build_Nj(long d, int n, long j) {
    SubsetsJ sub = subsets_j(d, n, j);
    RatMatrix m(sub.lam_j.size(), sub.lam_star_j.size());
    for (std::size_t i = 0; i < sub.lam_j.size(); ++i)
        for (std::size_t c = 0; c < sub.lam_star_j.size(); ++c) {
            const BiPartition& mu = sub.lam_j[i];
            const BiPartition& nu = sub.lam_star_j[c];
            m.at(i, c) = Rational(2).pow(mu.v2 - j) * Rational(nu.size()).pow(mu.v1 - mu.v2) *
                         S_value(mu, nu, j, n);
        }
    return m;
}

inline Rational vandermonde_det_range(long lo, long hi) {
    std::vector<Rational> nodes;
    for (long t = lo; t <= hi; ++t) nodes.emplace_back(t);
    return vandermonde_det(nodes);
}

/// Closed form for det M_d', with the factor product over j = 0 ...
/// min(floor(d/2), n) - 1 so that the recursion starts from N_0 = M_d'.
inline Rational det_Md_prime_closed(long d, int n) {
    long top = std::min(d / 2, static_cast<long>(n));
    Rational result(1);
    for (long j = 0; j < top; ++j) {
        result *= vandermonde_det_range(2 * j, d);
        for (const auto& nu : subsets_j(d, n, j + 1).lam_star_j)
            result *= Rational(2) * Rational(ell(nu, n) - ell(nu_sub_j(nu, j), n));
    }
    return result * vandermonde_det_range(2 * top, d);
}

/// Pair counts behind the factor multiplicities.
inline long g_k(long k, long s, int n) {
    long lo = std::max(k / 2 - n, 0L);
    long count = 0;
    for (long b = lo; 2 * b <= k; ++b)
        for (long b2 = lo; 2 * b2 <= k; ++b2) {
            BiPartition nu(k - b, b), nup(k - b2, b2);
            long ln = ell(nu, n), lp = ell(nup, n);
            if (lp < ln && ln + lp - 1 == s) ++count;
        }
    return count;
}

inline long f_count(long d, long s, int n) {
    long total = 0;
    for (long k = 0; k <= d; ++k) total += g_k(k, s, n);
    return total;
}

/// Column-modified matrix M_{d,s}: column nu is replaced by
/// lambda_{.,nu} - lambda_{.,nu'} when a partner nu' with |nu'| = |nu|,
/// l_{nu'} < l_nu, l_nu + l_{nu'} - 1 = s exists (unique when it does).
inline PolyMatrix build_Mds(long d, int n, long s) {
    IndexSets idx = index_sets(d, n);
    PolyMatrix m(idx.lam.size(), idx.lam_star.size());
    for (std::size_t c = 0; c < idx.lam_star.size(); ++c) {
        const BiPartition& nu = idx.lam_star[c];
        const BiPartition* partner = nullptr;
        for (const auto& cand : idx.lam_star)
            if (cand.size() == nu.size() && ell(cand, n) < ell(nu, n) &&
                ell(nu, n) + ell(cand, n) - 1 == s) {
                partner = &cand;
                break;
            }
        for (std::size_t i = 0; i < idx.lam.size(); ++i) {
            m.at(i, c) = lambda_entry(idx.lam[i], nu, n);
            if (partner) m.at(i, c) = m.at(i, c) - lambda_entry(idx.lam[i], *partner, n);
        }
    }
    return m;
}

/// Full factorization report for det M_d.
struct FactorizationReport {
    bool ok = true;
    std::string failure;
    UniPoly det_md;
    Rational det_md_prime;
    std::vector<std::pair<long, long>> factors;  // (s, f(d,s)) with f > 0
};

inline FactorizationReport factorization_check(long d, int n) {
    FactorizationReport rep;
    rep.det_md = build_Md(d, n).det();
    rep.det_md_prime = build_Md_prime(d, n).det();

    UniPoly rhs(rep.det_md_prime);
    for (long s = 0; s <= 2 * n - 2; ++s) {
        long mult = f_count(d, s, n);
        if (mult == 0) continue;
        rep.factors.emplace_back(s, mult);
        rhs = rhs * UniPoly::linear(Rational(s, 2)).pow(mult);
    }
    if (rep.det_md != rhs) {
        rep.ok = false;
        rep.failure = "det M_d does not match the closed factorization";
        return rep;
    }

    long mu2_sum = 0;
    for (const auto& mu : index_sets(d, n).lam) mu2_sum += mu.v2;
    if (rep.det_md.degree() != mu2_sum) {
        rep.ok = false;
        rep.failure = "degree of det M_d differs from sum of mu2";
        return rep;
    }
    UniPoly monic_part = exact_div(rep.det_md, UniPoly(rep.det_md_prime));
    if (!monic_part.is_monic()) {
        rep.ok = false;
        rep.failure = "det M_d / det M_d' is not monic";
    }
    return rep;
}

inline Rational det_nonvanishing(long d, int n) {
    Rational v = build_Md(d, n).det().eval(Rational(n));
    if (v.is_zero()) throw std::runtime_error("det_nonvanishing: det M_d vanishes at x=n");
    return v;
}

/// Coefficients a_mu with sum_mu a_mu lambda_{mu,eta}(n) = c_nu(eta).
struct CentralExpression {
    BiPartition nu;
    std::map<BiPartition, Rational> coeffs;
};

inline CentralExpression central_express(const BiPartition& nu, int n) {
    const long d = nu.size();
    IndexSets idx = index_sets(d, n);
    const std::size_t dim = idx.lam.size();

    RatMatrix l(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            l.at(i, j) = lambda_entry_at(idx.lam[i], idx.lam_star[j], n, Rational(n));
    RatVector rhs(dim);
    for (std::size_t j = 0; j < dim; ++j)
        rhs[j] = capelli_eigenvalue(nu, idx.lam_star[j], n);

    RatVector a = solve_row(l, rhs);
    CentralExpression expr;
    expr.nu = nu;
    for (std::size_t i = 0; i < dim; ++i) expr.coeffs[idx.lam[i]] = a[i];
    return expr;
}

}  // namespace capelli
