#pragma once

// Kronecker, outer (Littlewood–Richardson) and reduced Kronecker products of
// symmetric group characters, Jacobi–Trudi straightening, and the closed
// forms for [1]•⋆[λ]• and [n−1,1][λ].

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "characters.hpp"
#include "checked.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "partition.hpp"

namespace redkron {

/// Result of straightening: zero, or ±1 times a partition.
class StraightenResult {
public:
    static StraightenResult zero() { return StraightenResult(); }
    static StraightenResult signed_partition(int sign, Partition p) { return StraightenResult(sign, std::move(p)); }

    bool is_zero() const noexcept { return sign_ == 0; }
    /// +1, −1, or 0 for the zero result.
    int sign() const noexcept { return sign_; }
    const Partition& partition() const
    {
        if (is_zero())
            throw PreconditionError("zero straightening result has no partition");
        return partition_;
    }

    friend bool operator==(const StraightenResult&, const StraightenResult&) = default;

private:
    StraightenResult() = default;
    StraightenResult(int sign, Partition p)
        : sign_(sign)
        , partition_(std::move(p))
    {}

    int sign_ = 0;
    Partition partition_;
};

/// Rewrites the Jacobi–Trudi determinant det(h_{αᵢ−i+j}) of an arbitrary
/// integer sequence as ±s_λ or 0.
inline StraightenResult straighten(const Composition& alpha)
{
    const auto k = static_cast<int>(alpha.length());
    std::vector<int> b(alpha.vec());
    for (int i = 0; i < k; ++i) {
        b[static_cast<std::size_t>(i)] += k - 1 - i;
        if (b[static_cast<std::size_t>(i)] < 0)
            return StraightenResult::zero();
    }
    // insertion sort into strictly decreasing order, counting transpositions
    int swaps = 0;
    for (int i = 1; i < k; ++i) {
        for (int j = i; j > 0; --j) {
            auto& lo = b[static_cast<std::size_t>(j - 1)];
            auto& hi = b[static_cast<std::size_t>(j)];
            if (lo == hi)
                return StraightenResult::zero();
            if (lo > hi)
                break;
            std::swap(lo, hi);
            ++swaps;
        }
    }
    for (int i = 0; i < k; ++i)
        b[static_cast<std::size_t>(i)] -= k - 1 - i;
    return StraightenResult::signed_partition(swaps % 2 == 0 ? 1 : -1, Partition(std::move(b)));
}

namespace detail {

/// ∑_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ), one entry per class.
inline std::vector<int128> class_weights(const CharacterTable& t, std::size_t li, std::size_t mi)
{
    std::vector<int128> w(t.dimension());
    for (std::size_t c = 0; c < t.dimension(); ++c) {
        int128 x = checked_mul<int128>(t.value(li, c), t.value(mi, c));
        w[c] = checked_mul<int128>(x, t.classes()[c].class_size);
    }
    return w;
}

inline std::int64_t pair_with(const CharacterTable& t, const std::vector<int128>& weights, std::size_t ni,
                              int128 group_order)
{
    int128 acc = 0;
    auto row = t.row(ni);
    for (std::size_t c = 0; c < weights.size(); ++c)
        acc = checked_add(acc, checked_mul<int128>(weights[c], row[c]));
    return narrow_to_int64(exact_div(acc, group_order));
}

inline void require_same_size(const Partition& a, const Partition& b, const char* what)
{
    if (a.size() != b.size())
        throw SizeMismatch(std::string(what) + ": partitions have different sizes");
}

} // namespace detail

/// Kronecker coefficient g(λ,μ,ν) = (1/n!) ∑_ρ |C_ρ| χ^λ χ^μ χ^ν (ρ).
inline std::int64_t kron_coeff(const Partition& lambda, const Partition& mu, const Partition& nu,
                               TableStore& store = default_store())
{
    detail::require_same_size(lambda, mu, "kron_coeff");
    detail::require_same_size(lambda, nu, "kron_coeff");
    const int n = lambda.size();
    store.check_product_level(n);
    auto t = store.table(n);
    auto w = detail::class_weights(*t, t->require_index(lambda), t->require_index(mu));
    return detail::pair_with(*t, w, t->require_index(nu), factorial(n));
}

/// [λ][μ] = ∑_ν g(λ,μ,ν)[ν].
inline Decomposition kron_product(const Partition& lambda, const Partition& mu, TableStore& store = default_store())
{
    detail::require_same_size(lambda, mu, "kron_product");
    const int n = lambda.size();
    store.check_product_level(n);
    auto t = store.table(n);
    auto w = detail::class_weights(*t, t->require_index(lambda), t->require_index(mu));
    const int128 order = factorial(n);
    Decomposition out;
    for (std::size_t ni = 0; ni < t->dimension(); ++ni) {
        auto g = detail::pair_with(*t, w, ni, order);
        if (g < 0)
            throw ArithmeticError("negative Kronecker coefficient");
        out.add(t->partitions()[ni], g);
    }
    return out;
}

namespace detail {

class LrCounter {
public:
    LrCounter(const Partition& outer, const Partition& inner, const Partition& content)
        : content_(content.vec())
        , counts_(content.vec().size() + 1, 0)
    {
        for (int i = 0; i < outer.length(); ++i)
            for (int j = outer[static_cast<std::size_t>(i)] - 1; j >= inner[static_cast<std::size_t>(i)]; --j)
                cells_.push_back({i, j});
        rows_ = outer.length();
        cols_ = outer.first();
        grid_.assign(static_cast<std::size_t>(rows_ * cols_), 0);
    }

    std::int64_t count() { return fill(0); }

private:
    struct Cell {
        int row, col;
    };

    int& at(int r, int c) { return grid_[static_cast<std::size_t>(r * cols_ + c)]; }

    // Cells are visited in reading order: rows top to bottom, right to left.
    std::int64_t fill(std::size_t idx)
    {
        if (idx == cells_.size())
            return 1;
        auto [r, c] = cells_[idx];
        int hi = static_cast<int>(content_.size());
        // weakly increasing along the row: bounded by the entry to the right
        if (c + 1 < cols_ && at(r, c + 1) != 0)
            hi = std::min(hi, at(r, c + 1));
        int lo = 1;
        // strictly increasing down the column
        if (r > 0 && at(r - 1, c) != 0)
            lo = at(r - 1, c) + 1;
        std::int64_t total = 0;
        for (int v = lo; v <= hi; ++v) {
            auto vi = static_cast<std::size_t>(v);
            if (counts_[vi] >= content_[vi - 1])
                continue;
            if (v > 1 && counts_[vi] + 1 > counts_[vi - 1])
                continue;
            ++counts_[vi];
            at(r, c) = v;
            total += fill(idx + 1);
            at(r, c) = 0;
            --counts_[vi];
        }
        return total;
    }

    std::vector<int> content_;
    std::vector<int> counts_;
    std::vector<Cell> cells_;
    std::vector<int> grid_;
    int rows_ = 0, cols_ = 0;
};

} // namespace detail

/// Littlewood–Richardson coefficient c(ν; μ, λ): the multiplicity of s_ν in
/// s_μ s_λ, counted as LR tableaux of shape ν/μ and content λ.
inline std::int64_t lr_coeff(const Partition& nu, const Partition& mu, const Partition& lambda)
{
    if (nu.size() != mu.size() + lambda.size() || !contained_in(mu, nu) || !contained_in(lambda, nu))
        return 0;
    return detail::LrCounter(nu, mu, lambda).count();
}

/// [μ]⊗[ν] = ∑_λ c(λ; μ, ν)[λ].
inline Decomposition outer_product(const Partition& mu, const Partition& nu)
{
    Decomposition out;
    for (const auto& lambda : enumerate_partitions(mu.size() + nu.size())) {
        if (!contained_in(mu, lambda) || !contained_in(nu, lambda))
            continue;
        out.add(lambda, lr_coeff(lambda, mu, nu));
    }
    return out;
}

/// Smallest level at which [λ[n]][μ[n]] has stabilized: |λ|+|μ|+λ₁+μ₁.
inline int stable_level(const Partition& lambda, const Partition& mu)
{
    return lambda.size() + mu.size() + lambda.first() + mu.first();
}

/// [λ[n]][μ[n]] for n where both padded sequences are partitions.
inline Decomposition product_at_level(const Partition& lambda, const Partition& mu, int n,
                                      TableStore& store = default_store())
{
    if (n < 0)
        throw PreconditionError("level must be non-negative");
    auto pl = pad(lambda, n);
    auto pm = pad(mu, n);
    if (!pl.is_partition || !pm.is_partition)
        throw PreconditionError("level " + std::to_string(n) + " is below the partition threshold");
    store.check_product_level(n);
    return kron_product(pl.partition(), pm.partition(), store);
}

/// ḡ(λ,μ,ν), read off at the stable level.
inline std::int64_t reduced_coeff(const Partition& lambda, const Partition& mu, const Partition& nu,
                                  TableStore& store = default_store())
{
    const int n = stable_level(lambda, mu);
    store.check_product_level(n);
    auto pn = pad(nu, n);
    if (!pn.is_partition)
        return 0;
    return kron_coeff(pad(lambda, n).partition(), pad(mu, n).partition(), pn.partition(), store);
}

/// Drops the first row: ν[n] ↦ ν.
inline Partition strip_first_row(const Partition& p)
{
    if (p.empty())
        return p;
    return Partition(std::vector<int>(p.vec().begin() + 1, p.vec().end()));
}

/// [λ]•⋆[μ]• = ∑_ν ḡ(λ,μ,ν)[ν]•.
inline Decomposition reduced_product(const Partition& lambda, const Partition& mu, TableStore& store = default_store())
{
    const int n = stable_level(lambda, mu);
    store.check_product_level(n);
    Decomposition out;
    for (const auto& [nu, c] : product_at_level(lambda, mu, n, store))
        out.add(strip_first_row(nu), c);
    return out;
}

/// ∑ c_ν [ν[n]] with every term straightened; the right-hand side of
/// Murnaghan's identity at level n.
inline Decomposition expand_at_level(const Decomposition& reduced, int n)
{
    Decomposition out;
    for (const auto& [nu, c] : reduced) {
        auto s = straighten(pad(nu, n).composition);
        if (!s.is_zero())
            out.add(s.partition(), checked_mul<std::int64_t>(c, s.sign()));
    }
    return out;
}

/// [λ[n]][μ[n]] for any n ≥ 0, straightening factors that are not partitions.
inline Decomposition signed_product_at_level(const Partition& lambda, const Partition& mu, int n,
                                             TableStore& store = default_store())
{
    auto sl = straighten(pad(lambda, n).composition);
    auto sm = straighten(pad(mu, n).composition);
    Decomposition out;
    if (sl.is_zero() || sm.is_zero())
        return out;
    int sign = sl.sign() * sm.sign();
    for (const auto& [nu, c] : kron_product(sl.partition(), sm.partition(), store))
        out.add(nu, c * sign);
    return out;
}

/// [1]•⋆[λ]• = dp(λ)[λ]• + ∑ [μ]• over μ ≠ λ one box added, deleted or moved.
inline Decomposition star_one_closed(const Partition& lambda)
{
    Decomposition out;
    out.add(lambda, dp(lambda));
    for (int r : addable_rows(lambda))
        out.add(add_box(lambda, r), 1);
    for (int r : removable_rows(lambda))
        out.add(remove_box(lambda, r), 1);
    for (const auto& m : moved_box_neighbours(lambda))
        out.add(m, 1);
    return out;
}

/// [n−1,1][λ] = (dp(λ)−1)[λ] + ∑ [μ] over μ ≠ λ with one box moved.
inline Decomposition hook_kron_closed(const Partition& lambda)
{
    if (lambda.size() < 2)
        throw PreconditionError("hook_kron_closed needs |λ| ≥ 2");
    Decomposition out;
    out.add(lambda, dp(lambda) - 1);
    for (const auto& m : moved_box_neighbours(lambda))
        out.add(m, 1);
    return out;
}

} // namespace redkron
