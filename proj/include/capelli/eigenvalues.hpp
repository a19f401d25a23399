#pragma once

#include <capelli/bipartition.hpp>
#include <capelli/matrix.hpp>
#include <capelli/rational.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace capelli {

/// Polynomial in two commuting variables x, y over the rationals.
class SymPoly2 {
  public:
    SymPoly2() = default;
    SymPoly2(const Rational& c) { add_term(0, 0, c); }  // NOLINT: ring embedding
    SymPoly2(long c) { add_term(0, 0, Rational(c)); }   // NOLINT

    static SymPoly2 x() {
        SymPoly2 p;
        p.add_term(1, 0, Rational(1));
        return p;
    }
    static SymPoly2 y() {
        SymPoly2 p;
        p.add_term(0, 1, Rational(1));
        return p;
    }

    void add_term(long a, long b, const Rational& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(a, b);
        auto it = coeffs_.find(key);
        if (it == coeffs_.end()) {
            coeffs_.emplace(key, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    Rational coeff(long a, long b) const {
        auto it = coeffs_.find({a, b});
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    const std::map<std::pair<long, long>, Rational>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    long total_degree() const {
        long d = -1;
        for (const auto& [k, c] : coeffs_)
            if (k.first + k.second > d) d = k.first + k.second;
        return d;
    }

    bool is_symmetric() const {
        for (const auto& [k, c] : coeffs_)
            if (coeff(k.second, k.first) != c) return false;
        return true;
    }

    Rational eval(const Rational& vx, const Rational& vy) const {
        Rational r(0);
        for (const auto& [k, c] : coeffs_) r += c * vx.pow(k.first) * vy.pow(k.second);
        return r;
    }

    /// Substitute polynomials for the two variables.
    SymPoly2 substituted(const SymPoly2& vx, const SymPoly2& vy) const {
        SymPoly2 r;
        for (const auto& [k, c] : coeffs_)
            r += vx.pow(k.first) * vy.pow(k.second) * c;
        return r;
    }

    SymPoly2 pow(long e) const {
        SymPoly2 r(1);
        for (long i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    friend SymPoly2 operator+(const SymPoly2& a, const SymPoly2& b) {
        SymPoly2 r(a);
        for (const auto& [k, c] : b.coeffs_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend SymPoly2 operator-(const SymPoly2& a, const SymPoly2& b) {
        SymPoly2 r(a);
        for (const auto& [k, c] : b.coeffs_) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend SymPoly2 operator*(const SymPoly2& a, const SymPoly2& b) {
        SymPoly2 r;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    friend SymPoly2 operator*(const SymPoly2& a, const Rational& s) {
        SymPoly2 r;
        for (const auto& [k, c] : a.coeffs_) r.add_term(k.first, k.second, c * s);
        return r;
    }
    SymPoly2& operator+=(const SymPoly2& o) { return *this = *this + o; }

    friend bool operator==(const SymPoly2& a, const SymPoly2& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SymPoly2& a, const SymPoly2& b) { return !(a == b); }

  private:
    std::map<std::pair<long, long>, Rational> coeffs_;
};

inline SymPoly2 falling_factorial(const SymPoly2& p, long k) {
    SymPoly2 r(1);
    for (long t = 0; t < k; ++t) r = r * (p - SymPoly2(Rational(t)));
    return r;
}

namespace detail {

/// c_nu at mu = (mu1, mu2), generic over the coefficient ring so the same
/// code yields rational values and the polynomial expansion in (x, y).
template <class T>
T capelli_eval_core(const BiPartition& nu, int n, const T& mu1, const T& mu2) {
    const Rational nph = Rational(n) + Rational(1, 2);
    const long r = nu.v1 - nu.v2;

    Rational denom = factorial(nu.v2) * falling_factorial(Rational(nu.v1) - nph, nu.v2) *
                     falling_factorial(nph, r);
    if (denom.is_zero()) throw std::logic_error("capelli_eval_core: vanishing denominator");

    T a = falling_factorial(mu2, nu.v2) * falling_factorial(mu1 - T(nph), nu.v2);
    T b = T(Rational(0));
    for (long i = 0; i <= r; ++i) {
        Rational coef = gen_binomial(nph, r - i) * gen_binomial(nph, i);
        T term = falling_factorial(mu1 - T(Rational(nu.v2 + i)), r - i) *
                 falling_factorial(mu2 - T(Rational(nu.v2)), i);
        b = b + term * coef;
    }
    return a * b * (Rational(1) / denom);
}

}  // namespace detail

/// Closed-form eigenvalue c_nu(mu), with mu allowed to be any rational
/// point (the formula is polynomial in mu).
inline Rational capelli_eigenvalue_at(const BiPartition& nu, const Rational& mu1,
                                      const Rational& mu2, int n) {
    return detail::capelli_eval_core<Rational>(nu, n, mu1, mu2);
}

inline Rational capelli_eigenvalue(const BiPartition& nu, const BiPartition& mu, int n) {
    return capelli_eigenvalue_at(nu, Rational(mu.v1), Rational(mu.v2), n);
}

/// c_nu as a polynomial in x = mu1 - (n + 1/2), y = mu2.
inline SymPoly2 capelli_eigenvalue_poly(const BiPartition& nu, int n) {
    SymPoly2 mu1 = SymPoly2::x() + SymPoly2(Rational(n) + Rational(1, 2));
    return detail::capelli_eval_core<SymPoly2>(nu, n, mu1, SymPoly2::y());
}

/// Harmonic-index eigenvalue for nu = (k, 0), 0 <= k <= 2n+1.
inline Rational harmonic_eigenvalue(long k, const BiPartition& mu, int n) {
    if (k < 0 || k > 2 * n + 1)
        throw std::invalid_argument("harmonic_eigenvalue: index out of range");
    const Rational nph = Rational(n) + Rational(1, 2);
    Rational sum(0);
    for (long i = 0; i <= k; ++i)
        sum += gen_binomial(nph, k - i) * gen_binomial(nph, i) *
               falling_factorial(Rational(mu.v1 - i), k - i) *
               falling_factorial(Rational(mu.v2), i);
    return sum / falling_factorial(nph, k);
}

/// Reduction of Corollary-style eigenvalue evaluation:
/// c_lambda(mu) = factor * c_nu(eta) with nu harmonic when mu2 >= lambda2.
struct ReduceResult {
    Rational factor;
    BiPartition nu;
    BiPartition eta;
};

inline ReduceResult reduce(const BiPartition& lambda, const BiPartition& mu, int n) {
    const Rational nph = Rational(n) + Rational(1, 2);
    Rational factor = falling_factorial(Rational(mu.v2), lambda.v2) *
                      falling_factorial(Rational(mu.v1) - nph, lambda.v2) /
                      (factorial(lambda.v2) * falling_factorial(Rational(lambda.v1) - nph, lambda.v2));
    long l = std::min(lambda.v2, mu.v2);
    return {factor, BiPartition(lambda.v1 - l, lambda.v2 - l), BiPartition(mu.v1 - l, mu.v2 - l)};
}

inline Rational eigenvalue_via_reduction(const BiPartition& lambda, const BiPartition& mu, int n) {
    ReduceResult r = reduce(lambda, mu, n);
    if (r.factor.is_zero()) return Rational(0);
    // With mu2 >= lambda2 the reduced index is harmonic.
    return r.factor * harmonic_eigenvalue(r.nu.v1, r.eta, n);
}

/// Knop-Sahi interpolation polynomial P_nu^rho with rho = (-n-1/2, 0):
/// the unique symmetric polynomial of degree <= |nu| vanishing at mu + rho
/// for every bipartition mu != nu with |mu| <= |nu|, normalized by
/// P(nu + rho) = (nu1-nu2)! nu2! (nu1-(n+1/2))^{falling nu2}.
inline Rational knop_sahi_normalization(const BiPartition& nu, int n) {
    return factorial(nu.v1 - nu.v2) * factorial(nu.v2) *
           falling_factorial(Rational(nu.v1) - Rational(n) - Rational(1, 2), nu.v2);
}

inline SymPoly2 knop_sahi_vanishing(const BiPartition& nu, int n) {
    const long d = nu.size();
    const Rational rho1 = -Rational(n) - Rational(1, 2);

    // Monomial-symmetric basis m_{(a,b)} and the grid points mu + rho: the
    // two index sets have the same shape, so the system is square.
    std::vector<std::pair<long, long>> mono;
    for (long a = 0; a <= d; ++a)
        for (long b = 0; b <= a && a + b <= d; ++b) mono.emplace_back(a, b);
    std::vector<BiPartition> grid;
    for (long a = 0; a <= d; ++a)
        for (long b = 0; b <= a && a + b <= d; ++b) grid.emplace_back(a, b);

    const std::size_t dim = mono.size();
    auto msym_eval = [](long a, long b, const Rational& vx, const Rational& vy) {
        Rational v = vx.pow(a) * vy.pow(b);
        if (a != b) v += vx.pow(b) * vy.pow(a);
        return v;
    };

    RatMatrix a_t(dim, dim);  // transposed conditions, for the row solver
    RatVector rhs(dim, Rational(0));
    for (std::size_t r = 0; r < dim; ++r) {
        Rational px = Rational(grid[r].v1) + rho1;
        Rational py = Rational(grid[r].v2);
        for (std::size_t c = 0; c < dim; ++c)
            a_t.at(c, r) = msym_eval(mono[c].first, mono[c].second, px, py);
        rhs[r] = grid[r] == nu ? knop_sahi_normalization(nu, n) : Rational(0);
    }
    RatVector coef = solve_row(a_t, rhs);

    SymPoly2 p;
    for (std::size_t c = 0; c < dim; ++c) {
        if (coef[c].is_zero()) continue;
        p.add_term(mono[c].first, mono[c].second, coef[c]);
        if (mono[c].first != mono[c].second)
            p.add_term(mono[c].second, mono[c].first, coef[c]);
    }
    return p;
}

/// Explicit binomial-sum form for harmonic indices (k, 0).
inline SymPoly2 knop_sahi_explicit(long k, int n) {
    if (k < 0 || k > 2 * n + 1)
        throw std::invalid_argument("knop_sahi_explicit: index out of range");
    const Rational nph = Rational(n) + Rational(1, 2);
    SymPoly2 sum;
    for (long i = 0; i <= k; ++i) {
        SymPoly2 term = falling_factorial(SymPoly2::x() + SymPoly2(nph - Rational(i)), k - i) *
                        falling_factorial(SymPoly2::y(), i);
        sum += term * (gen_binomial(nph, k - i) * gen_binomial(nph, i));
    }
    return sum * (Rational(1) / gen_binomial(nph, k));
}

/// Shift identity P_nu(x,y) = x y P_{(nu1-1,nu2-1)}(x-1, y-1) for nu2 >= 1.
inline SymPoly2 knop_sahi_shift(const BiPartition& nu, int n) {
    if (nu.v2 < 1) throw std::invalid_argument("knop_sahi_shift: need nu2 >= 1");
    SymPoly2 inner = knop_sahi_vanishing(BiPartition(nu.v1 - 1, nu.v2 - 1), n);
    SymPoly2 shifted = inner.substituted(SymPoly2::x() - SymPoly2(1), SymPoly2::y() - SymPoly2(1));
    return SymPoly2::x() * SymPoly2::y() * shifted;
}

inline Rational eigenvalue_from_knopsahi(const BiPartition& nu, const BiPartition& mu, int n) {
    SymPoly2 p = knop_sahi_vanishing(nu, n);
    Rational value = p.eval(Rational(mu.v1) - Rational(n) - Rational(1, 2), Rational(mu.v2));
    return value / knop_sahi_normalization(nu, n);
}

}  // namespace capelli
