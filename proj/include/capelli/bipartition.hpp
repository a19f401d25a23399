#pragma once

#include <stdexcept>
#include <string>
#include <tuple>

namespace capelli {

/// Partition with at most two rows: v1 >= v2 >= 0.
struct BiPartition {
    long v1 = 0;
    long v2 = 0;

    BiPartition() = default;
    BiPartition(long a, long b) : v1(a), v2(b) {
        if (b < 0 || a < b) throw std::invalid_argument("BiPartition: need v1 >= v2 >= 0");
    }

    long size() const { return v1 + v2; }

    bool operator==(const BiPartition& o) const { return v1 == o.v1 && v2 == o.v2; }
    bool operator!=(const BiPartition& o) const { return !(*this == o); }
    bool operator<(const BiPartition& o) const {
        return std::tie(v1, v2) < std::tie(o.v1, o.v2);
    }

    std::string str() const {
        return "(" + std::to_string(v1) + "," + std::to_string(v2) + ")";
    }
};

/// ell(nu) = min(nu1 - nu2, 2n + 1 - (nu1 - nu2)).
inline long ell(const BiPartition& nu, int n) {
    long d = nu.v1 - nu.v2;
    long e = 2 * n + 1 - d;
    return d < e ? d : e;
}

/// Membership in Lambda*_n: nu1 - nu2 <= 2n + 1.
inline bool in_lambda_star(const BiPartition& nu, int n) { return nu.v1 - nu.v2 <= 2 * n + 1; }

}  // namespace capelli
