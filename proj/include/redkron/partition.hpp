#pragma once

// Integer partitions and the combinatorial operations used throughout the
// library: conjugation, the column/row sums `+` and `∪`, padding to a level,
// one-box adjacency, the "larger than" order and a few counting sequences.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"

namespace redkron {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so equal partitions have equal part sequences.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts)
        : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw PreconditionError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw PreconditionError("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts))
    {}

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }

    /// |λ|
    int size() const noexcept { return size_; }
    /// l(λ)
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    /// λ₁, or 0 for the empty partition.
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// λᵢ with 0-based index; zero past the last part.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Canonical order: descending size, then descending lexicographic.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const
    {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a > b;
    }
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/// An arbitrary finite integer sequence; the input of straightening.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> entries)
        : entries_(std::move(entries))
    {}
    Composition(std::initializer_list<int> entries)
        : entries_(entries)
    {}
    explicit Composition(const Partition& p)
        : entries_(p.vec())
    {}

    std::span<const int> entries() const noexcept { return entries_; }
    const std::vector<int>& vec() const noexcept { return entries_; }
    std::size_t length() const noexcept { return entries_.size(); }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> entries_;
};

/// (components, constituents) of a character.
struct CcType {
    std::int64_t components = 0;
    std::int64_t constituents = 0;

    friend bool operator==(const CcType&, const CcType&) = default;

    /// Coordinatewise domination.
    bool dominates(const CcType& other) const noexcept
    {
        return components >= other.components && constituents >= other.constituents;
    }
};

inline Partition conjugate(const Partition& p)
{
    std::vector<int> cols(static_cast<std::size_t>(p.first()), 0);
    for (int row : p.parts())
        for (int j = 0; j < row; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

enum class CombineMode {
    cols, ///< λ + τ, componentwise sum (inserting columns)
    rows, ///< λ ∪ τ, union of parts (inserting rows)
};

inline Partition combine(const Partition& a, const Partition& b, CombineMode mode)
{
    std::vector<int> out;
    if (mode == CombineMode::cols) {
        std::size_t len = std::max(a.vec().size(), b.vec().size());
        out.resize(len);
        for (std::size_t i = 0; i < len; ++i)
            out[i] = a[i] + b[i];
    } else {
        out = a.vec();
        out.insert(out.end(), b.vec().begin(), b.vec().end());
        std::sort(out.begin(), out.end(), std::greater<>());
    }
    return Partition(std::move(out));
}

inline Partition operator+(const Partition& a, const Partition& b) { return combine(a, b, CombineMode::cols); }
inline Partition operator|(const Partition& a, const Partition& b) { return combine(a, b, CombineMode::rows); }

/// Number of distinct part values.
inline int dp(const Partition& p)
{
    int count = 0;
    for (std::size_t i = 0; i < p.vec().size(); ++i)
        if (i == 0 || p.vec()[i] != p.vec()[i - 1])
            ++count;
    return count;
}

/// The sequence λ[n] = (n − |λ|, λ₁, λ₂, …).
struct Padded {
    Composition composition;
    bool is_partition = false;

    /// The padded sequence as a partition; only valid when `is_partition`.
    Partition partition() const
    {
        if (!is_partition)
            throw PreconditionError("padded sequence is not a partition");
        return Partition(composition.vec());
    }
};

inline Padded pad(const Partition& p, int n)
{
    if (n < 0)
        throw PreconditionError("pad level must be non-negative");
    std::vector<int> e;
    e.reserve(p.vec().size() + 1);
    e.push_back(n - p.size());
    e.insert(e.end(), p.vec().begin(), p.vec().end());
    return Padded{Composition(std::move(e)), n >= p.size() + p.first()};
}

/// δ_n = (n, n−1, …, 1).
inline Partition staircase(int n)
{
    if (n < 0)
        throw PreconditionError("staircase index must be non-negative");
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        parts[static_cast<std::size_t>(i)] = n - i;
    return Partition(std::move(parts));
}

/// Diagram intersection: componentwise minimum.
inline Partition intersect(const Partition& a, const Partition& b)
{
    std::size_t len = std::min(a.vec().size(), b.vec().size());
    std::vector<int> out(len);
    for (std::size_t i = 0; i < len; ++i)
        out[i] = std::min(a[i], b[i]);
    return Partition(std::move(out));
}

/// Diagram containment a ⊆ b.
inline bool contained_in(const Partition& a, const Partition& b)
{
    if (a.length() > b.length())
        return false;
    for (std::size_t i = 0; i < a.vec().size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

/// True iff a ≠ b and |a ∩ b| = max(|a|, |b|) − 1.
inline bool differs_by_one_box(const Partition& a, const Partition& b)
{
    if (a == b)
        return false;
    return intersect(a, b).size() == std::max(a.size(), b.size()) - 1;
}

/// Rows (0-based) where a box can be added.
inline std::vector<int> addable_rows(const Partition& p)
{
    std::vector<int> rows;
    for (int i = 0; i <= p.length(); ++i)
        if (i == 0 || p[static_cast<std::size_t>(i - 1)] > p[static_cast<std::size_t>(i)])
            rows.push_back(i);
    return rows;
}

/// Rows (0-based) ending in a removable corner.
inline std::vector<int> removable_rows(const Partition& p)
{
    std::vector<int> rows;
    for (int i = 0; i < p.length(); ++i)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i + 1)])
            rows.push_back(i);
    return rows;
}

inline Partition add_box(const Partition& p, int row)
{
    std::vector<int> parts = p.vec();
    if (row == p.length())
        parts.push_back(1);
    else
        ++parts[static_cast<std::size_t>(row)];
    return Partition(std::move(parts));
}

inline Partition remove_box(const Partition& p, int row)
{
    std::vector<int> parts = p.vec();
    --parts[static_cast<std::size_t>(row)];
    return Partition(std::move(parts));
}

/// Partitions other than p reachable by removing a box and then adding one.
inline std::set<Partition> moved_box_neighbours(const Partition& p)
{
    std::set<Partition> out;
    for (int r : removable_rows(p)) {
        Partition q = remove_box(p, r);
        for (int a : addable_rows(q)) {
            Partition s = add_box(q, a);
            if (s != p)
                out.insert(std::move(s));
        }
    }
    return out;
}

namespace detail {

inline void enumerate_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        enumerate_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// All partitions of n in descending lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw PreconditionError("cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::enumerate_rec(n, n, cur, out);
    return out;
}

/// All partitions of size 0..max_size, in canonical order reversed by size
/// (∅ first, then partitions of 1, …), descending lex within a size.
inline std::vector<Partition> partitions_up_to(int max_size, bool include_empty = true)
{
    std::vector<Partition> out;
    for (int k = include_empty ? 0 : 1; k <= max_size; ++k) {
        auto level = enumerate_partitions(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// Number of standard Young tableaux of shape p, by the hook-length formula.
inline std::int64_t syt_count(const Partition& p)
{
    Partition c = conjugate(p);
    // n! / ∏ hooks, accumulated as alternating multiply/divide to stay exact.
    std::vector<std::int64_t> hooks;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[static_cast<std::size_t>(i)]; ++j)
            hooks.push_back(p[static_cast<std::size_t>(i)] - j + c[static_cast<std::size_t>(j)] - i - 1);
    int128 num = 1;
    for (int k = 2; k <= p.size(); ++k)
        num = checked_mul<int128>(num, k);
    int128 den = 1;
    for (auto h : hooks)
        den = checked_mul<int128>(den, h);
    return narrow_to_int64(exact_div<int128>(num, den));
}

/// Decides whether `big` is reachable from `small` through a (possibly empty)
/// sequence of + and ∪ with nonempty partitions.
inline bool is_larger(const Partition& big, const Partition& small)
{
    if (big == small)
        return true;
    if (!contained_in(small, big))
        return false;
    // Every step only grows the diagram, so containment in `big` prunes.
    std::set<Partition> seen{small};
    std::queue<Partition> frontier;
    frontier.push(small);
    while (!frontier.empty()) {
        Partition cur = frontier.front();
        frontier.pop();
        int budget = big.size() - cur.size();
        for (int k = 1; k <= budget; ++k) {
            for (const auto& tau : enumerate_partitions(k)) {
                for (auto mode : {CombineMode::cols, CombineMode::rows}) {
                    Partition next = combine(cur, tau, mode);
                    if (!contained_in(next, big) || !seen.insert(next).second)
                        continue;
                    if (next == big)
                        return true;
                    frontier.push(next);
                }
            }
        }
    }
    return false;
}

enum class SequenceKind {
    p, ///< partitions of n
    f, ///< standard Young tableaux of size n (involutions of S_n)
    g, ///< unordered pairs of partitions of n differing by one box
};

/// p_n, f_n or g_n. Requires n ≥ 1.
inline std::int64_t sequence(SequenceKind kind, int n)
{
    if (n < 1)
        throw PreconditionError("sequence index must be positive");
    switch (kind) {
    case SequenceKind::p: {
        std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
        ways[0] = 1;
        for (int part = 1; part <= n; ++part)
            for (int s = part; s <= n; ++s)
                ways[static_cast<std::size_t>(s)] = checked_add(ways[static_cast<std::size_t>(s)], ways[static_cast<std::size_t>(s - part)]);
        return ways[static_cast<std::size_t>(n)];
    }
    case SequenceKind::f: {
        // I(k) = I(k−1) + (k−1)·I(k−2)
        std::int64_t prev = 1, cur = 1;
        for (int k = 2; k <= n; ++k) {
            std::int64_t next = checked_add(cur, checked_mul<std::int64_t>(k - 1, prev));
            prev = cur;
            cur = next;
        }
        return cur;
    }
    case SequenceKind::g: {
        // Same-size neighbours are reached by removing one box and adding another.
        std::int64_t ordered = 0;
        for (const auto& p : enumerate_partitions(n))
            ordered += static_cast<std::int64_t>(moved_box_neighbours(p).size());
        return ordered / 2;
    }
    }
    throw PreconditionError("unknown sequence kind");
}

} // namespace redkron
