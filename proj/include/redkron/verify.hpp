#pragma once

// Named verification suites. Each suite recomputes one family of statements
// exhaustively (or on seeded random witnesses) and returns a report; a suite
// passes only if every checked statement held.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "characters.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "products.hpp"

namespace redkron::verify {

struct Options {
    std::optional<int> max_size; ///< suite default when unset
    unsigned threads = 1;
    int samples = 500;           ///< monotone: witnesses per kind
    std::uint64_t seed = 20100615;
};

struct Report {
    Report() = default;
    explicit Report(std::string name)
        : suite(std::move(name))
    {}

    std::string suite;
    bool passed = true;
    std::int64_t checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes; ///< informational lines

    void fail(std::string line)
    {
        passed = false;
        failures.push_back(std::move(line));
    }
    void note(std::string line) { notes.push_back(std::move(line)); }
};

namespace detail {

inline std::string fmt_cc(const CcType& cc)
{
    return "(" + std::to_string(cc.components) + "," + std::to_string(cc.constituents) + ")";
}

inline std::vector<std::pair<Partition, Partition>> ordered_pairs(int max_size, bool include_empty)
{
    auto parts = partitions_up_to(max_size, include_empty);
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& a : parts)
        for (const auto& b : parts)
            out.emplace_back(a, b);
    return out;
}

inline void warm_tables(TableStore& store, int up_to)
{
    for (int n = 0; n <= std::min(up_to, store.limits().max_product_level); ++n)
        store.table(n);
}

} // namespace detail

/// Multiplicity-freeness of every reduced product against the classifier.
inline Report multfree(const Options& opt, TableStore& store)
{
    Report r("multfree");
    const int k = opt.max_size.value_or(5);
    detail::warm_tables(store, 4 * k);
    auto pairs = detail::ordered_pairs(k, false);
    auto products = parallel_map(pairs.size(), opt.threads,
                                 [&](std::size_t i) { return reduced_product(pairs[i].first, pairs[i].second, store); });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [l, m] = pairs[i];
        auto cls = classify_product(l, m);
        bool computed = products[i].is_multiplicity_free();
        ++r.checked;
        if (computed != cls.multiplicity_free)
            r.fail(format_partition(l) + " * " + format_partition(m) + ": computed multiplicity_free=" + (computed ? "true" : "false")
                   + " but classifier says " + (cls.multiplicity_free ? "true" : "false"));
        if (cls.expected_cc && *cls.expected_cc != products[i].cc_type())
            r.fail(format_partition(l) + " * " + format_partition(m) + ": cc-type " + detail::fmt_cc(products[i].cc_type())
                   + " != stated " + detail::fmt_cc(*cls.expected_cc));
    }
    // the trivial factor
    for (const auto& m : partitions_up_to(k)) {
        auto prod = reduced_product(Partition{}, m, store);
        ++r.checked;
        if (prod != Decomposition{{m, 1}})
            r.fail("[] * " + format_partition(m) + " is not the trivial product");
    }
    r.note(std::to_string(pairs.size()) + " ordered pairs of nonempty partitions with sizes <= " + std::to_string(k));
    return r;
}

/// (<10)-component status of every reduced product against the classifier,
/// plus the cc-types stated for specific general products.
inline Report fewcomp(const Options& opt, TableStore& store)
{
    Report r("fewcomp");
    const int k = opt.max_size.value_or(5);
    detail::warm_tables(store, 4 * k);
    auto pairs = detail::ordered_pairs(k, false);
    auto products = parallel_map(pairs.size(), opt.threads,
                                 [&](std::size_t i) { return reduced_product(pairs[i].first, pairs[i].second, store); });
    std::map<std::string, std::int64_t> per_case;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [l, m] = pairs[i];
        auto cls = classify_product(l, m);
        auto cc = products[i].cc_type();
        ++per_case[to_string(cls.tag)];
        ++r.checked;
        bool few = cc.components < 10;
        if (few != (cls.tag != CaseTag::General))
            r.fail(format_partition(l) + " * " + format_partition(m) + ": " + std::to_string(cc.components)
                   + " components but case " + to_string(cls.tag));
        if (cls.expected_cc && *cls.expected_cc != cc)
            r.fail(format_partition(l) + " * " + format_partition(m) + ": cc-type " + detail::fmt_cc(cc) + " != stated "
                   + detail::fmt_cc(*cls.expected_cc));
    }
    for (const auto& [pair, expected] : stated_general_cc_types()) {
        auto cc = reduced_product(pair.first, pair.second, store).cc_type();
        ++r.checked;
        if (cc != expected)
            r.fail(format_partition(pair.first) + " * " + format_partition(pair.second) + ": cc-type " + detail::fmt_cc(cc)
                   + " != stated " + detail::fmt_cc(expected));
    }
    for (const auto& [tag, count] : per_case)
        r.note(tag + ": " + std::to_string(count));
    return r;
}

/// Components, constituents and one-box pairs dominate the three lower bounds.
inline Report bounds(const Options& opt, TableStore& store)
{
    Report r("bounds");
    const int k = opt.max_size.value_or(4);
    detail::warm_tables(store, 4 * k);
    auto pairs = detail::ordered_pairs(k, false);
    auto reports = parallel_map(pairs.size(), opt.threads,
                                [&](std::size_t i) { return lower_bounds(pairs[i].first, pairs[i].second, store); });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& b = reports[i];
        ++r.checked;
        if (!b.holds()) {
            std::ostringstream os;
            os << format_partition(pairs[i].first) << " * " << format_partition(pairs[i].second) << ": actual ("
               << b.components << "," << b.constituents << "," << b.pairs << ") below bounds (" << b.component_lb << ","
               << b.constituent_lb << "," << b.pair_lb << ")";
            r.fail(os.str());
        }
    }
    return r;
}

/// One-box pair census of [1]•⋆[δ_n]• against the counting formulas.
inline Report census(const Options&, TableStore&)
{
    Report r("census");
    for (int n : {3, 4}) {
        auto actual = pair_census_staircase(n);
        auto predicted = census_formula(n);
        for (const auto& key : census_keys()) {
            if (key == "a,a")
                continue;
            ++r.checked;
            if (actual[key] != predicted[key])
                r.fail("n=" + std::to_string(n) + " (" + key + "): brute force " + std::to_string(actual[key])
                       + ", formula " + std::to_string(predicted[key]));
        }
        ++r.checked;
        std::int64_t total = census_total_without_bb(actual);
        std::int64_t expected = static_cast<std::int64_t>(n) * n * n + n + 1;
        if (total != expected)
            r.fail("n=" + std::to_string(n) + " total without (b,b): brute force " + std::to_string(total) + ", formula "
                   + std::to_string(expected));
    }
    auto two = pair_census_staircase(2);
    r.note("n=2 (d,d): brute force " + std::to_string(two["d,d"]) + ", formula " + std::to_string(census_formula(2)["d,d"])
           + " (informational)");
    return r;
}

/// No two distinct unordered pairs share an outer or a reduced product.
inline Report equality(const Options& opt, TableStore& store)
{
    Report r("equality");
    const int k = opt.max_size.value_or(4);
    detail::warm_tables(store, 4 * k);
    for (auto kind : {ProductKind::outer, ProductKind::reduced}) {
        const char* name = kind == ProductKind::outer ? "outer" : "reduced";
        auto collisions = equality_scan(kind, k, opt.threads, store);
        ++r.checked;
        for (const auto& group : collisions) {
            std::string line = std::string(name) + " collision:";
            for (const auto& [a, b] : group)
                line += " {" + format_partition(a) + "," + format_partition(b) + "}";
            r.fail(line);
        }
        r.note(std::string(name) + ": " + std::to_string(collisions.size()) + " collisions");
    }
    return r;
}

/// [λ[n]][μ[n]] equals the straightened stable expansion at every level n.
inline Report murnaghan(const Options& opt, TableStore& store)
{
    Report r("murnaghan");
    const int k = opt.max_size.value_or(3);
    detail::warm_tables(store, 4 * k + 2);
    auto pairs = detail::ordered_pairs(k, true);
    auto results = parallel_map(pairs.size(), opt.threads, [&](std::size_t i) {
        const auto& [l, m] = pairs[i];
        auto reduced = reduced_product(l, m, store);
        std::vector<std::string> bad;
        int checked = 0;
        for (int n = 0; n <= stable_level(l, m) + 2; ++n) {
            ++checked;
            auto lhs = signed_product_at_level(l, m, n, store);
            auto rhs = expand_at_level(reduced, n);
            if (lhs != rhs)
                bad.push_back(format_partition(l) + " * " + format_partition(m) + " at n=" + std::to_string(n) + ": "
                              + format_decomposition(lhs) + " != " + format_decomposition(rhs));
        }
        return std::make_pair(checked, bad);
    });
    for (auto& [checked, bad] : results) {
        r.checked += checked;
        for (auto& b : bad)
            r.fail(std::move(b));
    }
    return r;
}

/// Strips the first row of every term of [λ[n]][μ[n]].
inline Decomposition stripped_at_level(const Partition& l, const Partition& m, int n, TableStore& store)
{
    Decomposition out;
    for (const auto& [nu, c] : product_at_level(l, m, n, store))
        out.add(strip_first_row(nu), c);
    return out;
}

/// The stable level is attained, and one level lower is not yet stable.
inline Report bor_minimal(const Options&, TableStore& store)
{
    Report r("bor-minimal");
    const std::vector<std::pair<Partition, Partition>> pairs{
        {Partition{1, 1}, Partition{2}}, {Partition{2}, Partition{2}}, {Partition{1}, Partition{2, 1}}};
    for (const auto& [l, m] : pairs) {
        const int n = stable_level(l, m);
        const std::string name = format_partition(l) + " * " + format_partition(m);
        auto reduced = reduced_product(l, m, store);
        for (int extra = 1; extra <= 2; ++extra) {
            ++r.checked;
            if (stripped_at_level(l, m, n + extra, store) != reduced)
                r.fail(name + ": level " + std::to_string(n + extra) + " differs from level " + std::to_string(n));
        }
        for (const auto& [nu, c] : reduced) {
            ++r.checked;
            if (reduced_coeff(l, m, nu, store) != c)
                r.fail(name + ": reduced_coeff disagrees at " + format_partition(nu));
        }
        ++r.checked;
        auto below = stripped_at_level(l, m, n - 1, store);
        if (below == reduced)
            r.fail(name + ": already stable at level " + std::to_string(n - 1));
        else
            r.note(name + ": stable at " + std::to_string(n) + ", not at " + std::to_string(n - 1));
    }
    return r;
}

/// p_n, f_n, g_n against the printed table, with independent recounts.
inline Report sequences(const Options&, TableStore&)
{
    Report r("sequences");
    static const std::int64_t g_table[] = {0, 1, 2, 5, 9, 17, 28, 47, 73, 114, 170, 253, 365};
    static const std::int64_t p_table[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101};
    static const std::int64_t f_table[] = {1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496, 35696, 140152, 568504};
    for (int n = 1; n <= 13; ++n) {
        auto i = static_cast<std::size_t>(n - 1);
        auto check = [&](const char* what, std::int64_t got, std::int64_t want) {
            ++r.checked;
            if (got != want)
                r.fail(std::string(what) + "_" + std::to_string(n) + " = " + std::to_string(got) + ", table says "
                       + std::to_string(want));
        };
        check("p", sequence(SequenceKind::p, n), p_table[i]);
        check("f", sequence(SequenceKind::f, n), f_table[i]);
        check("g", sequence(SequenceKind::g, n), g_table[i]);

        auto parts = enumerate_partitions(n);
        check("p(enumerated)", static_cast<std::int64_t>(parts.size()), p_table[i]);
        std::int64_t syt = 0;
        for (const auto& p : parts)
            syt += syt_count(p);
        check("f(hook lengths)", syt, f_table[i]);
        std::int64_t brute = 0;
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a + 1; b < parts.size(); ++b)
                if (differs_by_one_box(parts[a], parts[b]))
                    ++brute;
        check("g(pairwise)", brute, g_table[i]);
    }
    return r;
}

namespace detail {

class WitnessSampler {
public:
    WitnessSampler(std::uint64_t seed, TableStore& store)
        : rng_(seed)
        , store_(store)
    {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Partition partition(int size)
    {
        auto& list = cache_[size];
        if (list.empty())
            list = enumerate_partitions(size);
        return list[static_cast<std::size_t>(uniform(0, static_cast<int>(list.size()) - 1))];
    }

    Partition term_of(const Decomposition& d)
    {
        auto idx = uniform(0, static_cast<int>(d.size()) - 1);
        auto it = d.begin();
        std::advance(it, idx);
        return it->first;
    }

    Triple kron_triple(int size)
    {
        Partition l = partition(size), m = partition(size);
        return {l, m, term_of(kron_product(l, m, store_))};
    }

    Triple reduced_triple(int lo, int hi)
    {
        Partition l = partition(uniform(lo, hi)), m = partition(uniform(lo, hi));
        return {l, m, term_of(reduced_product(l, m, store_))};
    }

    Triple lr_triple(int lo, int hi)
    {
        Partition m = partition(uniform(lo, hi)), n = partition(uniform(lo, hi));
        return {term_of(outer_product(m, n)), m, n};
    }

    Partition grow(Partition p, int steps)
    {
        for (int s = 0; s < steps; ++s)
            p = combine(p, partition(1), uniform(0, 1) ? CombineMode::cols : CombineMode::rows);
        return p;
    }

    MonotoneWitness sample(MonotoneKind kind)
    {
        switch (kind) {
        case MonotoneKind::kron_add:
        case MonotoneKind::kron_union:
            return {kron_triple(uniform(1, 4)), kron_triple(uniform(1, 4))};
        case MonotoneKind::reduced_add: {
            Triple base = reduced_triple(0, 2);
            if (uniform(0, 1)) {
                Partition extra = partition(uniform(1, 2));
                return {base, {extra, Partition{}, extra}};
            }
            return {base, reduced_triple(1, 2)};
        }
        case MonotoneKind::reduced_union: {
            Partition extra = partition(uniform(1, 2));
            return {reduced_triple(0, 2), {extra, Partition{}, extra}};
        }
        case MonotoneKind::lr_add:
            return {lr_triple(1, 3), lr_triple(1, 2)};
        case MonotoneKind::cc_monotone: {
            Partition l = partition(uniform(0, 2)), m = partition(uniform(0, 2));
            return {{l, m, {}}, {grow(l, uniform(0, 2)), grow(m, uniform(0, 2)), {}}};
        }
        }
        throw PreconditionError("unknown monotonicity kind");
    }

private:
    std::mt19937_64 rng_;
    TableStore& store_;
    std::map<int, std::vector<Partition>> cache_;
};

inline std::string fmt_triple(const Triple& t)
{
    return "(" + format_partition(t.lambda) + "," + format_partition(t.mu) + "," + format_partition(t.nu) + ")";
}

} // namespace detail

inline const std::vector<MonotoneKind>& monotone_kinds()
{
    static const std::vector<MonotoneKind> kinds{MonotoneKind::kron_add,      MonotoneKind::kron_union,
                                                 MonotoneKind::reduced_add,   MonotoneKind::reduced_union,
                                                 MonotoneKind::lr_add,        MonotoneKind::cc_monotone};
    return kinds;
}

/// Seeded random witnesses for each monotonicity statement.
inline Report monotone(const Options& opt, TableStore& store, std::optional<MonotoneKind> only = std::nullopt)
{
    Report r("monotone");
    detail::warm_tables(store, 16);
    for (auto kind : monotone_kinds()) {
        if (only && *only != kind)
            continue;
        detail::WitnessSampler sampler(opt.seed + static_cast<std::uint64_t>(kind), store);
        std::vector<MonotoneWitness> witnesses;
        for (int i = 0; i < opt.samples; ++i)
            witnesses.push_back(sampler.sample(kind));
        auto results = parallel_map(witnesses.size(), opt.threads,
                                    [&](std::size_t i) { return monotonicity_check(kind, witnesses[i], store); });
        std::int64_t held = 0;
        for (std::size_t i = 0; i < results.size(); ++i) {
            ++r.checked;
            if (results[i].holds)
                ++held;
            else
                r.fail(std::string(to_string(kind)) + " violated: base " + detail::fmt_triple(witnesses[i].base)
                       + " addend " + detail::fmt_triple(witnesses[i].addend) + " (" + std::to_string(results[i].before)
                       + " > " + std::to_string(results[i].after) + ")");
        }
        r.note(std::string(to_string(kind)) + ": " + std::to_string(held) + "/" + std::to_string(results.size()) + " hold");
    }
    return r;
}

/// Saturation is a conjecture: counterexamples are reported, never failed.
/// Triples whose scaled level exceeds the ceiling are listed as skipped.
inline Report saturation(const Options& opt, TableStore& store, std::int64_t* counterexamples = nullptr,
                         std::int64_t* skipped = nullptr)
{
    Report r("saturation");
    const int k = opt.max_size.value_or(3);
    const int factor = 2;
    auto parts = partitions_up_to(k);
    std::vector<Triple> triples;
    for (const auto& a : parts)
        for (const auto& b : parts)
            for (const auto& c : parts)
                triples.push_back({a, b, c});
    detail::warm_tables(store, store.limits().max_product_level);
    auto results = parallel_map(triples.size(), opt.threads, [&](std::size_t i) -> std::optional<SaturationReport> {
        try {
            return saturation_probe(triples[i].lambda, triples[i].mu, triples[i].nu, factor, store);
        } catch (const ResourceLimit&) {
            return std::nullopt;
        }
    });
    std::int64_t bad = 0, skip = 0, nonzero = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        ++r.checked;
        if (!results[i]) {
            ++skip;
            continue;
        }
        if (results[i]->scaled_coeff != 0)
            ++nonzero;
        if (results[i]->counterexample()) {
            ++bad;
            r.note("CONJECTURE COUNTEREXAMPLE: " + detail::fmt_triple(triples[i]) + " k=" + std::to_string(factor));
        }
    }
    r.note(std::to_string(triples.size()) + " triples, " + std::to_string(nonzero) + " with nonzero scaled coefficient, "
           + std::to_string(bad) + " conjecture counterexamples, " + std::to_string(skip) + " skipped (level ceiling)");
    if (counterexamples)
        *counterexamples = bad;
    if (skipped)
        *skipped = skip;
    return r;
}

using SuiteFn = std::function<Report(const Options&, TableStore&)>;

inline const std::map<std::string, SuiteFn>& suites()
{
    static const std::map<std::string, SuiteFn> table{
        {"multfree", multfree},
        {"fewcomp", fewcomp},
        {"bounds", bounds},
        {"census", census},
        {"equality", equality},
        {"murnaghan", murnaghan},
        {"bor-minimal", bor_minimal},
        {"sequences", sequences},
        {"monotone", [](const Options& o, TableStore& s) { return monotone(o, s); }},
        {"saturation", [](const Options& o, TableStore& s) { return saturation(o, s); }},
    };
    return table;
}

} // namespace redkron::verify
