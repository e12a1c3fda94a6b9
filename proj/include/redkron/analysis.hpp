#pragma once

// Structural statistics of products (cc-types, one-box pairs) and the
// classification, bound and equality statements about reduced Kronecker
// products, each phrased as a checkable predicate.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "decomposition.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "products.hpp"

namespace redkron {

inline CcType cc_type(const Decomposition& d) { return d.cc_type(); }

/// Unordered pairs of distinct components whose partitions differ by one box.
inline std::int64_t one_box_pairs(const Decomposition& d)
{
    std::vector<const Partition*> comps;
    comps.reserve(d.size());
    for (const auto& [p, c] : d)
        comps.push_back(&p);
    std::int64_t count = 0;
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j)
            if (differs_by_one_box(*comps[i], *comps[j]))
                ++count;
    return count;
}

// ---------------------------------------------------------------------------
// Classification of multiplicity-free / few-component reduced products

enum class CaseTag {
    Empty,
    OneTimesRectangle,
    OneTimesFatHook21,
    OneTimesFatHook3Ones,
    ColTwoRowTwo,
    General,
};

inline const char* to_string(CaseTag t)
{
    switch (t) {
    case CaseTag::Empty: return "Empty";
    case CaseTag::OneTimesRectangle: return "OneTimesRectangle";
    case CaseTag::OneTimesFatHook21: return "OneTimesFatHook21";
    case CaseTag::OneTimesFatHook3Ones: return "OneTimesFatHook3Ones";
    case CaseTag::ColTwoRowTwo: return "ColTwoRowTwo";
    case CaseTag::General: return "General";
    }
    return "?";
}

struct ClassificationCase {
    CaseTag tag = CaseTag::General;
    std::optional<CcType> expected_cc;
    bool multiplicity_free = false;
};

namespace detail {

inline bool is_rectangle(const Partition& p) { return dp(p) == 1; }

/// Matches (1) against the other factor.
inline std::optional<ClassificationCase> classify_with_one(const Partition& other)
{
    if (is_rectangle(other)) {
        const int width = other.first();
        const int height = other.length();
        CcType cc{6, 6};
        if (width == 1 && height == 1)
            cc = {4, 4};
        else if (width == 1 || height == 1)
            cc = {5, 5};
        return ClassificationCase{CaseTag::OneTimesRectangle, cc, true};
    }
    if (dp(other) == 2) {
        // (α^a, β^b) with α > β ≥ 1
        const int alpha = other.first();
        const int beta = other.vec().back();
        const int a = static_cast<int>(std::count(other.vec().begin(), other.vec().end(), alpha));
        const int b = other.length() - a;
        const int ones = (alpha - beta == 1) + (beta == 1) + (a == 1) + (b == 1);
        if (ones == 4)
            return ClassificationCase{CaseTag::OneTimesFatHook21, CcType{8, 9}, false};
        if (ones == 3)
            return ClassificationCase{CaseTag::OneTimesFatHook3Ones, CcType{9, 10}, false};
    }
    return std::nullopt;
}

} // namespace detail

/// Purely syntactic: decides which case of the classification the pair falls
/// into, without computing the product.
inline ClassificationCase classify_product(const Partition& lambda, const Partition& mu)
{
    if (lambda.empty() || mu.empty())
        return ClassificationCase{CaseTag::Empty, CcType{1, 1}, true};
    const Partition one{1};
    if (lambda == one)
        if (auto c = detail::classify_with_one(mu))
            return *c;
    if (mu == one)
        if (auto c = detail::classify_with_one(lambda))
            return *c;
    const Partition col{1, 1}, row{2};
    if ((lambda == col && mu == row) || (lambda == row && mu == col))
        return ClassificationCase{CaseTag::ColTwoRowTwo, CcType{8, 10}, false};
    return ClassificationCase{CaseTag::General, std::nullopt, false};
}

/// cc-types the classification proof states for particular general products.
inline std::vector<std::pair<std::pair<Partition, Partition>, CcType>> stated_general_cc_types()
{
    return {
        {{Partition{1}, Partition{3, 2, 1}}, CcType{14, 16}},
        {{Partition{2}, Partition{2}}, CcType{10, 12}},
        {{Partition{1, 1}, Partition{1, 1}}, CcType{10, 12}},
        {{Partition{2}, Partition{1, 1, 1}}, CcType{10, 13}},
        {{Partition{3}, Partition{1, 1}}, CcType{11, 13}},
    };
}

// ---------------------------------------------------------------------------
// Lower bounds

struct BoundsReport {
    int n = 0; ///< dp of the factor with more distinct parts
    int m = 0; ///< dp of the other factor
    std::int64_t component_lb = 0;
    std::int64_t constituent_lb = 0;
    std::int64_t pair_lb = 0;
    std::int64_t components = 0;
    std::int64_t constituents = 0;
    std::int64_t pairs = 0;

    bool holds() const noexcept
    {
        return components >= component_lb && constituents >= constituent_lb && pairs >= pair_lb;
    }
};

/// Bound formulas only; `actual` fields are left zero.
inline BoundsReport bound_formulas(int n, int m)
{
    if (m < 1 || n < m)
        throw PreconditionError("bounds need dp(λ) ≥ dp(μ) ≥ 1");
    BoundsReport r;
    r.n = n;
    r.m = m;
    const std::int64_t nn = n;
    r.component_lb = nn * nn + 1 + std::max(sequence(SequenceKind::p, m + 1), nn + 1);
    r.constituent_lb = nn * nn + nn + std::max(sequence(SequenceKind::f, m + 1), nn + 1);
    r.pair_lb = nn * nn * nn + nn + 1 + std::max(sequence(SequenceKind::g, m + 1), (nn + 1) * nn / 2);
    return r;
}

inline BoundsReport lower_bounds(const Partition& lambda, const Partition& mu, TableStore& store = default_store())
{
    const Partition* big = &lambda;
    const Partition* small = &mu;
    if (dp(*big) < dp(*small))
        std::swap(big, small);
    if (small->empty())
        throw PreconditionError("lower_bounds: both factors must be nonempty");
    BoundsReport r = bound_formulas(dp(*big), dp(*small));
    auto prod = reduced_product(lambda, mu, store);
    auto cc = prod.cc_type();
    r.components = cc.components;
    r.constituents = cc.constituents;
    r.pairs = one_box_pairs(prod);
    return r;
}

// ---------------------------------------------------------------------------
// One-box pair census of [1]•⋆[δ_n]•

/// Pair-type key such as "a,d" (labels sorted).
using Census = std::map<std::string, std::int64_t>;

inline const std::vector<std::string>& census_keys()
{
    static const std::vector<std::string> keys{"a,a", "a,b", "a,c", "a,d", "b,b", "b,c", "b,d", "c,c", "c,d", "d,d"};
    return keys;
}

/// Brute-force census. Labels: a is δ_n itself, b one box added, c one box
/// deleted, d one box moved.
inline Census pair_census_staircase(int n)
{
    if (n < 1)
        throw PreconditionError("census needs n ≥ 1");
    const Partition delta = staircase(n);
    auto prod = star_one_closed(delta);

    std::vector<std::pair<const Partition*, char>> labelled;
    for (const auto& [p, c] : prod) {
        char label = 'a';
        if (p != delta) {
            if (!differs_by_one_box(p, delta))
                throw ArithmeticError("census: component is not a one-box neighbour of the staircase");
            if (p.size() == delta.size() + 1)
                label = 'b';
            else if (p.size() + 1 == delta.size())
                label = 'c';
            else
                label = 'd';
        }
        labelled.emplace_back(&p, label);
    }

    Census census;
    for (const auto& k : census_keys())
        census[k] = 0;
    for (std::size_t i = 0; i < labelled.size(); ++i) {
        for (std::size_t j = i + 1; j < labelled.size(); ++j) {
            if (!differs_by_one_box(*labelled[i].first, *labelled[j].first))
                continue;
            char x = std::min(labelled[i].second, labelled[j].second);
            char y = std::max(labelled[i].second, labelled[j].second);
            ++census[std::string{x, ',', y}];
        }
    }
    return census;
}

/// The census predicted by counting arguments; (d,d) = n(n−1)(2n−5)/2.
inline Census census_formula(int n)
{
    const std::int64_t k = n;
    return Census{
        {"a,a", 0},
        {"a,b", k + 1},
        {"a,c", k},
        {"a,d", k * (k - 1)},
        {"b,b", k * (k + 1) / 2},
        {"b,c", 0},
        {"b,d", k * (k - 1)},
        {"c,c", k * (k - 1) / 2},
        {"c,d", k * (k - 1)},
        {"d,d", k * (k - 1) * (2 * k - 5) / 2},
    };
}

inline std::int64_t census_total_without_bb(const Census& c)
{
    std::int64_t total = 0;
    for (const auto& [k, v] : c)
        if (k != "b,b")
            total += v;
    return total;
}

// ---------------------------------------------------------------------------
// Monotonicity

enum class MonotoneKind { kron_add, kron_union, reduced_add, reduced_union, lr_add, cc_monotone };

inline const char* to_string(MonotoneKind k)
{
    switch (k) {
    case MonotoneKind::kron_add: return "kron_add";
    case MonotoneKind::kron_union: return "kron_union";
    case MonotoneKind::reduced_add: return "reduced_add";
    case MonotoneKind::reduced_union: return "reduced_union";
    case MonotoneKind::lr_add: return "lr_add";
    case MonotoneKind::cc_monotone: return "cc_monotone";
    }
    return "?";
}

struct Triple {
    Partition lambda, mu, nu;
};

/// Two triples combined by the inequality of the chosen kind.
///
/// For lr_add a triple (λ, μ, ν) stands for c(λ; μ, ν). For reduced_union the
/// addend must have the form (λ′, ∅, λ′). For cc_monotone only λ and μ are
/// read: `base` is the smaller pair and `addend` the pair claimed larger.
struct MonotoneWitness {
    Triple base;
    Triple addend;
};

struct MonotoneResult {
    bool holds = false;
    std::int64_t before = 0; ///< coefficient (or components) of the base
    std::int64_t after = 0;  ///< coefficient (or components) of the combined triple
};

inline MonotoneResult monotonicity_check(MonotoneKind kind, const MonotoneWitness& w,
                                         TableStore& store = default_store())
{
    const auto& b = w.base;
    const auto& a = w.addend;
    auto malformed = [&](const char* why) { return PreconditionError(std::string("malformed witness: ") + why); };
    auto same_size = [](const Triple& t) { return t.lambda.size() == t.mu.size() && t.mu.size() == t.nu.size(); };

    switch (kind) {
    case MonotoneKind::kron_add:
    case MonotoneKind::kron_union: {
        if (!same_size(b) || !same_size(a))
            throw malformed("Kronecker triples need equal sizes");
        std::int64_t before = kron_coeff(b.lambda, b.mu, b.nu, store);
        if (before == 0 || kron_coeff(a.lambda, a.mu, a.nu, store) == 0)
            throw malformed("both Kronecker coefficients must be nonzero");
        auto mode = kind == MonotoneKind::kron_add ? CombineMode::cols : CombineMode::rows;
        std::int64_t after = kron_coeff(combine(b.lambda, a.lambda, mode), b.mu + a.mu, combine(b.nu, a.nu, mode), store);
        return {after >= before, before, after};
    }
    case MonotoneKind::reduced_add: {
        if (reduced_coeff(a.lambda, a.mu, a.nu, store) == 0)
            throw malformed("addend reduced coefficient must be nonzero");
        std::int64_t before = reduced_coeff(b.lambda, b.mu, b.nu, store);
        std::int64_t after = reduced_coeff(b.lambda + a.lambda, b.mu + a.mu, b.nu + a.nu, store);
        return {after >= before, before, after};
    }
    case MonotoneKind::reduced_union: {
        if (!a.mu.empty() || a.nu != a.lambda)
            throw malformed("reduced_union addend must be (λ′, ∅, λ′)");
        std::int64_t before = reduced_coeff(b.lambda, b.mu, b.nu, store);
        std::int64_t after = reduced_coeff(b.lambda | a.lambda, b.mu, b.nu | a.lambda, store);
        return {after >= before, before, after};
    }
    case MonotoneKind::lr_add: {
        std::int64_t before = lr_coeff(b.lambda, b.mu, b.nu);
        if (before == 0 || lr_coeff(a.lambda, a.mu, a.nu) == 0)
            throw malformed("both LR coefficients must be nonzero");
        std::int64_t after = lr_coeff(b.lambda + a.lambda, b.mu + a.mu, b.nu + a.nu);
        return {after >= before, before, after};
    }
    case MonotoneKind::cc_monotone: {
        if (!is_larger(a.lambda, b.lambda) || !is_larger(a.mu, b.mu))
            throw malformed("cc_monotone needs the addend pair to be larger than the base pair");
        auto small = reduced_product(b.lambda, b.mu, store).cc_type();
        auto big = reduced_product(a.lambda, a.mu, store).cc_type();
        return {big.dominates(small), small.components, big.components};
    }
    }
    throw malformed("unknown kind");
}

// ---------------------------------------------------------------------------
// Equality of products

enum class ProductKind { outer, reduced };

using PartitionPair = std::pair<Partition, Partition>;

/// Groups of distinct unordered pairs {λ, μ} (|λ|,|μ| ≤ max_size) whose
/// products coincide. Both equality lemmas predict an empty result.
inline std::vector<std::vector<PartitionPair>> equality_scan(ProductKind kind, int max_size, unsigned threads = 1,
                                                            TableStore& store = default_store())
{
    auto parts = partitions_up_to(max_size);
    std::vector<PartitionPair> pairs;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i; j < parts.size(); ++j)
            pairs.emplace_back(parts[i], parts[j]);

    auto products = parallel_map(pairs.size(), threads, [&](std::size_t i) {
        const auto& [l, m] = pairs[i];
        return kind == ProductKind::outer ? outer_product(l, m) : reduced_product(l, m, store);
    });

    using Key = std::vector<std::pair<std::vector<int>, std::int64_t>>;
    std::map<Key, std::vector<PartitionPair>> groups;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        Key key;
        for (const auto& [p, c] : products[i])
            key.emplace_back(p.vec(), c);
        groups[std::move(key)].push_back(pairs[i]);
    }
    std::vector<std::vector<PartitionPair>> collisions;
    for (auto& [key, members] : groups)
        if (members.size() > 1)
            collisions.push_back(std::move(members));
    return collisions;
}

// ---------------------------------------------------------------------------
// Saturation (conjecture; report only)

inline Partition scale(const Partition& p, int k)
{
    std::vector<int> parts = p.vec();
    for (auto& x : parts)
        x *= k;
    return Partition(std::move(parts));
}

struct SaturationReport {
    Partition lambda, mu, nu;
    int k = 1;
    std::int64_t scaled_coeff = 0; ///< ḡ(kλ, kμ, kν)
    std::int64_t base_coeff = 0;   ///< ḡ(λ, μ, ν)

    bool counterexample() const noexcept { return scaled_coeff != 0 && base_coeff == 0; }
};

inline SaturationReport saturation_probe(const Partition& lambda, const Partition& mu, const Partition& nu, int k,
                                         TableStore& store = default_store())
{
    if (k < 1)
        throw PreconditionError("saturation_probe needs k ≥ 1");
    SaturationReport r{lambda, mu, nu, k, 0, 0};
    r.base_coeff = reduced_coeff(lambda, mu, nu, store);
    r.scaled_coeff = k == 1 ? r.base_coeff : reduced_coeff(scale(lambda, k), scale(mu, k), scale(nu, k), store);
    return r;
}

// ---------------------------------------------------------------------------
// cc-type bound for outer products

struct OuterBoundReport {
    int n = 0;
    std::int64_t p_threshold = 0, f_threshold = 0, g_threshold = 0;
    CcType actual;
    std::int64_t pairs = 0;

    bool holds() const noexcept
    {
        return actual.components >= p_threshold && actual.constituents >= f_threshold && pairs >= g_threshold;
    }
};

inline OuterBoundReport outer_bound_report(const Partition& alpha, const Partition& beta)
{
    const int n = dp(beta);
    if (n < 1 || dp(alpha) < n)
        throw PreconditionError("outer_bound_check needs dp(α) ≥ dp(β) ≥ 1");
    OuterBoundReport r;
    r.n = n;
    r.p_threshold = sequence(SequenceKind::p, n + 1);
    r.f_threshold = sequence(SequenceKind::f, n + 1);
    r.g_threshold = sequence(SequenceKind::g, n + 1);
    auto prod = outer_product(alpha, beta);
    r.actual = prod.cc_type();
    r.pairs = one_box_pairs(prod);
    return r;
}

inline bool outer_bound_check(const Partition& alpha, const Partition& beta)
{
    return outer_bound_report(alpha, beta).holds();
}

} // namespace redkron
