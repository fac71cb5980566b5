#pragma once

// Brute-force hook counters: enumerate every (t-regular) partition of n and
// tally hook lengths cell by cell. These are the ground truth against which
// the series engine is checked, so they share no code with it.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"

namespace hookbias {

/// Largest weights the enumeration oracle will accept.
struct OracleGuard {
    int ordinary = 60;
    int two_regular = 80;
    int other_regular = 60;

    /// Limit for modulus t (0 = ordinary partitions).
    int limit(int t) const { return t == 0 ? ordinary : (t == 2 ? two_regular : other_regular); }
};

class GuardExceeded : public std::range_error {
public:
    GuardExceeded(int n, int limit)
        : std::range_error("n = " + std::to_string(n) + " exceeds the enumeration guard " +
                           std::to_string(limit) + "; use the generating-function engine"),
          n_(n), limit_(limit) {}
    int n() const noexcept { return n_; }
    int limit() const noexcept { return limit_; }

private:
    int n_;
    int limit_;
};

namespace detail {

inline void check_oracle_args(int n, int t, const OracleGuard& guard) {
    if (n < 0) throw std::invalid_argument("weight must be non-negative");
    if (t != 0 && t < 2) throw std::invalid_argument("t must be at least 2");
    if (n > guard.limit(t)) throw GuardExceeded(n, guard.limit(t));
}

}  // namespace detail

/// Hook-length tally aggregated over every partition of n with no part
/// divisible by t (t = 0: all partitions).
inline HookTally oracle_tally(int n, int t, const OracleGuard& guard = {}) {
    detail::check_oracle_args(n, t, guard);
    HookTally total;
    total.counts.assign(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> cols;
    for_each_partition(n, t, [&](std::span<const int> parts) {
        detail::accumulate_hooks(parts, cols, total.counts);
        total.total_cells += n;
    });
    return total;
}

/// p_(k)(n): hooks of length k across all partitions of n.
inline std::int64_t oracle_ordinary(int n, int k, const OracleGuard& guard = {}) {
    if (k < 1) throw std::invalid_argument("hook length must be positive");
    return oracle_tally(n, 0, guard).count(k);
}

/// b_{t,k}(n): hooks of length k across all t-regular partitions of n.
inline std::int64_t oracle_regular(int n, int t, int k, const OracleGuard& guard = {}) {
    if (t < 2) throw std::invalid_argument("t must be at least 2");
    if (k < 1) throw std::invalid_argument("hook length must be positive");
    return oracle_tally(n, t, guard).count(k);
}

/// Histogram m -> number of partitions of n (t-regular when t >= 2) having
/// exactly m hooks of length k.
inline std::map<int, std::int64_t> oracle_bivariate(int n, int t, int k, const OracleGuard& guard = {}) {
    if (k < 1) throw std::invalid_argument("hook length must be positive");
    detail::check_oracle_args(n, t, guard);
    std::map<int, std::int64_t> histogram;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1);
    std::vector<int> cols;
    for_each_partition(n, t, [&](std::span<const int> parts) {
        std::fill(counts.begin(), counts.end(), 0);
        detail::accumulate_hooks(parts, cols, counts);
        const auto m = static_cast<std::size_t>(k) < counts.size() ? counts[static_cast<std::size_t>(k)] : 0;
        ++histogram[static_cast<int>(m)];
    });
    return histogram;
}

inline std::map<int, std::int64_t> oracle_ordinary_bivariate(int n, int k, const OracleGuard& guard = {}) {
    return oracle_bivariate(n, 0, k, guard);
}

/// Number of partitions of n (t-regular when t >= 2) by direct enumeration.
inline std::int64_t oracle_partition_count(int n, int t, const OracleGuard& guard = {}) {
    detail::check_oracle_args(n, t, guard);
    std::int64_t count = 0;
    for_each_partition(n, t, [&](std::span<const int>) { ++count; });
    return count;
}

}  // namespace hookbias
