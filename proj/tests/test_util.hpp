#ifndef CAPELLI_TEST_UTIL_HPP
#define CAPELLI_TEST_UTIL_HPP

#include <cstdint>

#include <capelli/rational.hpp>

namespace capelli::testutil {

// Deterministic generator for randomized property checks.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    long integer(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(long num_bound = 20, long den_bound = 7) {
        long num = integer(-num_bound, num_bound);
        long den = integer(1, den_bound);
        return Rational(num, den);
    }

    Rational nonzero_rational(long num_bound = 20, long den_bound = 7) {
        Rational r = rational(num_bound, den_bound);
        while (r.is_zero()) r = rational(num_bound, den_bound);
        return r;
    }

  private:
    std::uint64_t state_;
};

}  // namespace capelli::testutil

#endif
