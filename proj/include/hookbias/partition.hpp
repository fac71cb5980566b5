#pragma once

// Integer partitions, Young-diagram hook lengths, and exhaustive enumeration
// of ordinary and t-regular partitions.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <iterator>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookbias {

/// A partition stored as its non-increasing list of positive parts.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes `parts` (any order) into non-increasing form.
    /// Throws std::invalid_argument on a non-positive entry.
    static Partition from_parts(std::vector<int> parts) {
        for (int p : parts) {
            if (p <= 0) {
                throw std::invalid_argument("partition parts must be positive, got " +
                                            std::to_string(p));
            }
        }
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int largest_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int smallest_part() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

    int multiplicity(int part) const {
        auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), part, std::greater<>());
        return static_cast<int>(hi - lo);
    }

    int distinct_part_count() const {
        int count = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i == 0 || parts_[i] != parts_[i - 1]) ++count;
        }
        return count;
    }

    bool has_repeated_part() const {
        return std::adjacent_find(parts_.begin(), parts_.end()) != parts_.end();
    }

    /// True when no part is divisible by t.
    bool is_regular(int t) const {
        return std::none_of(parts_.begin(), parts_.end(), [t](int p) { return p % t == 0; });
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    explicit Partition(std::vector<int> parts)
        : parts_(std::move(parts)), weight_(std::accumulate(parts_.begin(), parts_.end(), 0)) {}

    std::vector<int> parts_;
    int weight_ = 0;
};

inline Partition make_partition(std::vector<int> parts) {
    return Partition::from_parts(std::move(parts));
}

/// Column lengths of the Young diagram of a non-increasing part list.
inline std::vector<int> column_lengths(std::span<const int> parts) {
    std::vector<int> cols(parts.empty() ? 0 : static_cast<std::size_t>(parts.front()), 0);
    for (int p : parts) {
        for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    }
    return cols;
}

inline Partition conjugate(const Partition& lambda) {
    return Partition::from_parts(column_lengths(lambda.parts()));
}

/// Number of cells with each hook length; index k holds the count for
/// hook length k (index 0 is always zero).
struct HookTally {
    std::vector<std::int64_t> counts;
    std::int64_t total_cells = 0;

    std::int64_t count(int k) const {
        return k > 0 && static_cast<std::size_t>(k) < counts.size()
                   ? counts[static_cast<std::size_t>(k)]
                   : 0;
    }
    int max_hook() const { return counts.empty() ? 0 : static_cast<int>(counts.size()) - 1; }

    void merge(const HookTally& other) {
        if (other.counts.size() > counts.size()) counts.resize(other.counts.size(), 0);
        for (std::size_t k = 0; k < other.counts.size(); ++k) counts[k] += other.counts[k];
        total_cells += other.total_cells;
    }

    friend bool operator==(const HookTally&, const HookTally&) = default;
};

namespace detail {

// Adds every hook length of the diagram into `counts` (sized > largest hook).
// hook(i, j) = parts[i] - j + cols[j] - i - 1 with 0-based (i, j).
inline void accumulate_hooks(std::span<const int> parts, std::vector<int>& cols,
                             std::span<std::int64_t> counts) {
    cols.assign(parts.empty() ? 0 : static_cast<std::size_t>(parts.front()), 0);
    for (int p : parts) {
        for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int row = parts[i];
        for (int j = 0; j < row; ++j) {
            const int hook = row - j + cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            ++counts[static_cast<std::size_t>(hook)];
        }
    }
}

}  // namespace detail

inline HookTally hook_tally(const Partition& lambda) {
    HookTally tally;
    const int n = lambda.weight();
    tally.counts.assign(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> cols;
    detail::accumulate_hooks(lambda.parts(), cols, tally.counts);
    tally.total_cells = n;
    return tally;
}

/// Hook lengths of row i (0-based), left to right.
inline std::vector<int> row_hooks(const Partition& lambda, int row) {
    const auto cols = column_lengths(lambda.parts());
    const int len = lambda.parts().at(static_cast<std::size_t>(row));
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) hooks.push_back(len - j + cols[static_cast<std::size_t>(j)] - row - 1);
    return hooks;
}

// ---------------------------------------------------------------------------
// Enumeration
//
// Partitions are produced in descending lexicographic order of their part
// lists, e.g. n = 4 gives (4), (3,1), (2,2), (2,1,1), (1,1,1,1). A modulus
// t >= 2 restricts the parts to those not divisible by t; modulus 0 means
// unrestricted. Part 1 is always admissible, so greedy completion never
// gets stuck.

class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int n, int modulus = 0) : modulus_(modulus) {
        if (n < 0) throw std::invalid_argument("partition weight must be non-negative");
        if (modulus != 0 && modulus < 2) {
            throw std::invalid_argument("regularity modulus must be at least 2");
        }
        fill(n, n);
    }

    /// Current partition as a view into internal storage; valid until advance().
    std::span<const int> current() const noexcept { return parts_; }
    bool done() const noexcept { return done_; }

    void advance() {
        // Rightmost part that can still be lowered; parts equal to 1 cannot.
        int remainder = 0;
        while (!parts_.empty() && parts_.back() == 1) {
            parts_.pop_back();
            ++remainder;
        }
        if (parts_.empty()) {
            done_ = true;
            return;
        }
        const int old = parts_.back();
        parts_.pop_back();
        remainder += old;
        const int lowered = largest_admissible(old - 1);
        parts_.push_back(lowered);
        fill(remainder - lowered, lowered);
    }

    std::optional<Partition> next() {
        if (done_) return std::nullopt;
        Partition p = Partition::from_parts(parts_);
        advance();
        return p;
    }

private:
    int largest_admissible(int at_most) const {
        int p = at_most;
        if (modulus_ != 0 && p % modulus_ == 0) --p;
        return p;
    }

    // Greedy lexicographically-largest completion of `amount` with parts <= cap.
    void fill(int amount, int cap) {
        while (amount > 0) {
            const int part = largest_admissible(std::min(cap, amount));
            parts_.push_back(part);
            amount -= part;
            cap = part;
        }
    }

    int modulus_;
    bool done_ = false;
    std::vector<int> parts_;
};

/// Input range over the partitions of n; yields Partition values.
class PartitionRange {
public:
    PartitionRange(int n, int modulus) : n_(n), modulus_(modulus) {
        PartitionEnumerator probe(n, modulus);  // validates arguments eagerly
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(int n, int modulus) : gen_(PartitionEnumerator(n, modulus)) { load(); }

        const Partition& operator*() const { return current_; }
        const Partition* operator->() const { return &current_; }
        iterator& operator++() {
            gen_->advance();
            load();
            return *this;
        }
        void operator++(int) { ++*this; }
        bool operator==(std::default_sentinel_t) const { return !gen_ || gen_->done(); }

    private:
        void load() {
            if (!gen_->done()) current_ = Partition::from_parts({gen_->current().begin(), gen_->current().end()});
        }
        std::optional<PartitionEnumerator> gen_;
        Partition current_;
    };

    iterator begin() const { return iterator(n_, modulus_); }
    std::default_sentinel_t end() const { return {}; }

private:
    int n_;
    int modulus_;
};

inline PartitionRange enumerate_partitions(int n) { return PartitionRange(n, 0); }

inline PartitionRange enumerate_t_regular(int n, int t) {
    if (t < 2) throw std::invalid_argument("t-regular enumeration requires t >= 2");
    return PartitionRange(n, t);
}

/// Calls visit(std::span<const int>) for every partition of n (modulus as in
/// PartitionEnumerator) without materializing Partition objects.
template <typename Visitor>
void for_each_partition(int n, int modulus, Visitor&& visit) {
    for (PartitionEnumerator gen(n, modulus); !gen.done(); gen.advance()) visit(gen.current());
}

// ---------------------------------------------------------------------------
// Partitions with smallest part at least two, and the injection into weight n+1.

/// a(n): partitions of n with every part >= 2, with a(0) = 1.
inline std::int64_t smallest_part_at_least_two_count(int n) {
    if (n < 0) throw std::invalid_argument("weight must be non-negative");
    std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 2; part <= n; ++part) {
        for (int w = part; w <= n; ++w) {
            ways[static_cast<std::size_t>(w)] += ways[static_cast<std::size_t>(w - part)];
        }
    }
    return ways[static_cast<std::size_t>(n)];
}

/// Adds one to the largest part of a partition whose parts are all >= 2.
inline Partition psi_map(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("psi_map: empty partition");
    if (lambda.smallest_part() < 2) throw std::invalid_argument("psi_map: smallest part must be >= 2");
    std::vector<int> parts = lambda.parts();
    ++parts.front();
    return Partition::from_parts(std::move(parts));
}

// ---------------------------------------------------------------------------
// Classes of 2-regular (odd-part) partitions.

enum class TwoRegularClass {
    Repeated,        // some part occurs more than once
    DistinctWithOne, // distinct parts, smallest part 1
    DistinctNoOne,   // distinct parts, smallest part > 1
};

inline char class_tag(TwoRegularClass c) {
    switch (c) {
        case TwoRegularClass::Repeated: return 'R';
        case TwoRegularClass::DistinctWithOne: return 'S';
        case TwoRegularClass::DistinctNoOne: return 'T';
    }
    return '?';
}

inline TwoRegularClass classify_2regular(const Partition& lambda) {
    if (!lambda.is_regular(2)) {
        throw std::invalid_argument("classify_2regular: " + lambda.to_string() + " has an even part");
    }
    if (lambda.has_repeated_part()) return TwoRegularClass::Repeated;
    if (!lambda.empty() && lambda.smallest_part() == 1) return TwoRegularClass::DistinctWithOne;
    return TwoRegularClass::DistinctNoOne;
}

/// Injection from distinct odd partitions of n ending in 1 into odd
/// partitions of n with a repeated part, for n > 4.
///
/// With lambda = (l1, l2, ..., lr, 1):
///   r >= 2:  (l2, l2, l3, ..., lr, 1^(l1 - l2 + 1))
///   r == 1:  ((n-2)/2, (n-2)/2, 1, 1)  if n = 0 mod 4
///            (n/2, n/2)                if n = 2 mod 4
inline Partition phi_map(const Partition& lambda) {
    const int n = lambda.weight();
    if (n <= 4) throw std::invalid_argument("phi_map: defined only for weight > 4");
    if (classify_2regular(lambda) != TwoRegularClass::DistinctWithOne) {
        throw std::invalid_argument("phi_map: " + lambda.to_string() +
                                    " is not a distinct odd partition ending in 1");
    }
    const auto& parts = lambda.parts();
    const std::size_t r = parts.size() - 1;  // parts before the trailing 1
    if (r >= 2) {
        std::vector<int> out{parts[1], parts[1]};
        out.insert(out.end(), parts.begin() + 2, parts.end() - 1);
        out.insert(out.end(), static_cast<std::size_t>(parts[0] - parts[1] + 1), 1);
        return Partition::from_parts(std::move(out));
    }
    // r == 1, so lambda = (n-1, 1) and n is even.
    if (n % 4 == 0) return Partition::from_parts({(n - 2) / 2, (n - 2) / 2, 1, 1});
    return Partition::from_parts({n / 2, n / 2});
}

}  // namespace hookbias
