#ifndef CAPELLI_SUPERSPACE_HPP
#define CAPELLI_SUPERSPACE_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace capelli {

/// Ambient space parameters: one even generator y and 2n odd generators
/// x_1 < x_2 < ... < x_{2n}.
struct SpaceParams {
    int n;

    explicit SpaceParams(int n_) : n(n_) {
        if (n < 1 || 2 * n > 62) throw std::invalid_argument("SpaceParams: need 1 <= n, 2n <= 62");
    }
    int odd_dim() const { return 2 * n; }

    friend bool operator==(const SpaceParams& a, const SpaceParams& b) { return a.n == b.n; }
};

/// Monomial y^a * x_S with S a strictly increasing subset of {1,...,2n},
/// stored as a bitmask (bit i-1 set iff x_i occurs). Squares of odd
/// variables vanish, so no multiplicities.
struct SuperMonomial {
    int y_exp = 0;
    std::uint64_t odd_set = 0;

    int odd_count() const { return std::popcount(odd_set); }
    int degree() const { return y_exp + odd_count(); }
    int parity() const { return odd_count() % 2; }

    bool has(int i) const { return (odd_set >> (i - 1)) & 1; }

    std::vector<int> odd_indices() const {
        std::vector<int> v;
        for (std::uint64_t s = odd_set; s; s &= s - 1)
            v.push_back(std::countr_zero(s) + 1);
        return v;
    }

    friend bool operator==(const SuperMonomial& a, const SuperMonomial& b) {
        return a.y_exp == b.y_exp && a.odd_set == b.odd_set;
    }

    /// Basis order within a fixed degree: descending y_exp (equivalently
    /// ascending |S|), then lexicographic on the increasing index sequence.
    /// All matrices downstream depend on this order.
    friend bool operator<(const SuperMonomial& a, const SuperMonomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.y_exp != b.y_exp) return a.y_exp > b.y_exp;
        auto ia = a.odd_indices(), ib = b.odd_indices();
        return ia < ib;
    }
};

/// Product of two monomials: zero when the odd sets intersect, otherwise
/// the merged monomial with sign (-1)^inv, inv counting pairs (i in a,
/// j in b) with i > j.
inline std::optional<std::pair<int, SuperMonomial>> mono_mul(const SuperMonomial& a,
                                                            const SuperMonomial& b) {
    if (a.odd_set & b.odd_set) return std::nullopt;
    int inv = 0;
    for (std::uint64_t s = a.odd_set; s; s &= s - 1) {
        int i = std::countr_zero(s);  // x_{i+1}
        inv += std::popcount(b.odd_set & ((std::uint64_t(1) << i) - 1));
    }
    SuperMonomial m{a.y_exp + b.y_exp, a.odd_set | b.odd_set};
    return std::make_pair(inv % 2 == 0 ? 1 : -1, m);
}

/// Exact-rational linear combination of super monomials.
class SuperPoly {
  public:
    explicit SuperPoly(SpaceParams params) : params_(params) {}

    static SuperPoly zero(SpaceParams params) { return SuperPoly(params); }
    static SuperPoly one(SpaceParams params) {
        SuperPoly p(params);
        p.add_term(SuperMonomial{}, Rational(1));
        return p;
    }
    static SuperPoly monomial(SpaceParams params, const SuperMonomial& m,
                              const Rational& c = Rational(1)) {
        SuperPoly p(params);
        p.add_term(m, c);
        return p;
    }
    static SuperPoly var_y(SpaceParams params) {
        return monomial(params, SuperMonomial{1, 0});
    }
    static SuperPoly var_x(SpaceParams params, int i) {
        if (i < 1 || i > params.odd_dim()) throw std::out_of_range("var_x: index out of range");
        return monomial(params, SuperMonomial{0, std::uint64_t(1) << (i - 1)});
    }

    const SpaceParams& params() const { return params_; }
    const std::map<SuperMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SuperMonomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(const SuperMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree if homogeneous, otherwise nullopt. The zero polynomial
    /// is homogeneous of every degree.
    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            if (d && *d != m.degree()) return std::nullopt;
            d = m.degree();
        }
        return terms_.empty() ? std::optional<int>(0) : d;
    }

    /// Z/2 parity if homogeneous in parity, otherwise nullopt.
    std::optional<int> parity() const {
        std::optional<int> p;
        for (const auto& [m, c] : terms_) {
            if (p && *p != m.parity()) return std::nullopt;
            p = m.parity();
        }
        return terms_.empty() ? std::optional<int>(0) : p;
    }

    friend SuperPoly operator+(const SuperPoly& a, const SuperPoly& b) {
        SuperPoly r(a);
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend SuperPoly operator-(const SuperPoly& a, const SuperPoly& b) {
        SuperPoly r(a);
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend SuperPoly operator*(const SuperPoly& a, const Rational& s) {
        SuperPoly r(a.params_);
        for (const auto& [m, c] : a.terms_) r.add_term(m, c * s);
        return r;
    }
    friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
        SuperPoly r(a.params_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                if (auto prod = mono_mul(ma, mb))
                    r.add_term(prod->second, ca * cb * Rational(prod->first));
        return r;
    }
    SuperPoly& operator+=(const SuperPoly& o) { return *this = *this + o; }
    SuperPoly& operator-=(const SuperPoly& o) { return *this = *this - o; }

    friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
        return a.params_ == b.params_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SuperPoly& a, const SuperPoly& b) { return !(a == b); }

    /// Normalized rendering, e.g. "y^2 + 2*x1*x2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty())
                s += c.sign() > 0 ? " + " : " - ";
            else if (c.sign() < 0)
                s += "-";
            Rational a = c.sign() < 0 ? -c : c;
            std::string mono;
            if (m.y_exp > 0) {
                mono = "y";
                if (m.y_exp > 1) mono += "^" + std::to_string(m.y_exp);
            }
            for (int i : m.odd_indices()) {
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(i);
            }
            if (mono.empty()) {
                s += a.str();
            } else {
                if (!a.is_one()) s += a.str() + "*";
                s += mono;
            }
        }
        return s;
    }

  private:
    SpaceParams params_;
    std::map<SuperMonomial, Rational> terms_;
};

/// d/dy on a superpolynomial.
inline SuperPoly derive_y(const SuperPoly& p) {
    SuperPoly r(p.params());
    for (const auto& [m, c] : p.terms()) {
        if (m.y_exp == 0) continue;
        r.add_term(SuperMonomial{m.y_exp - 1, m.odd_set}, c * Rational(m.y_exp));
    }
    return r;
}

/// Superderivation with respect to x_i; on y^a x_S gives
/// (-1)^{#{j in S : j < i}} y^a x_{S \ {i}} when i is in S.
inline SuperPoly derive_odd(int i, const SuperPoly& p) {
    if (i < 1 || i > p.params().odd_dim())
        throw std::out_of_range("derive_odd: index out of range");
    SuperPoly r(p.params());
    const std::uint64_t bit = std::uint64_t(1) << (i - 1);
    for (const auto& [m, c] : p.terms()) {
        if (!(m.odd_set & bit)) continue;
        int before = std::popcount(m.odd_set & (bit - 1));
        Rational sc = before % 2 == 0 ? c : -c;
        r.add_term(SuperMonomial{m.y_exp, m.odd_set & ~bit}, sc);
    }
    return r;
}

/// All monomials of total degree k in basis order.
inline std::vector<SuperMonomial> degree_basis(int k, SpaceParams params) {
    std::vector<SuperMonomial> basis;
    if (k < 0) return basis;
    const int nn = params.odd_dim();
    // Enumerate odd subsets of each size j = k - y_exp in lexicographic order.
    for (int j = 0; j <= std::min(k, nn); ++j) {
        std::vector<int> idx(j);
        for (int t = 0; t < j; ++t) idx[t] = t + 1;
        while (true) {
            std::uint64_t mask = 0;
            for (int t = 0; t < j; ++t) mask |= std::uint64_t(1) << (idx[t] - 1);
            basis.push_back(SuperMonomial{k - j, mask});
            if (j == 0) break;
            int t = j - 1;
            while (t >= 0 && idx[t] == nn - (j - 1 - t)) --t;
            if (t < 0) break;
            ++idx[t];
            for (int u = t + 1; u < j; ++u) idx[u] = idx[u - 1] + 1;
        }
    }
    return basis;
}

inline std::size_t degree_dim(int k, SpaceParams params) {
    return degree_basis(k, params).size();
}

/// Coordinates of a homogeneous degree-k polynomial with respect to
/// degree_basis(k, params).
inline RatVector to_vector(const SuperPoly& p, int k) {
    auto d = p.homogeneous_degree();
    if (!d || (!p.is_zero() && *d != k))
        throw std::invalid_argument("to_vector: polynomial not homogeneous of requested degree");
    auto basis = degree_basis(k, p.params());
    RatVector v(basis.size(), Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = p.coeff(basis[i]);
    return v;
}

inline SuperPoly from_vector(const RatVector& v, int k, SpaceParams params) {
    auto basis = degree_basis(k, params);
    if (v.size() != basis.size()) throw std::invalid_argument("from_vector: size mismatch");
    SuperPoly p(params);
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v[i]);
    return p;
}

}  // namespace capelli

#endif
