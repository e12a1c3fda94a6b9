#pragma once

// Conjugacy classes of S_n and exact irreducible character values.
//
// Character values come from the Murnaghan–Nakayama rule evaluated on beta
// sets: removing a rim hook of length r is moving one bead r places down, and
// the sign is the parity of the beads jumped over. Cycles are consumed
// longest-first and intermediate results are memoized on
// (remaining shape, remaining cycles), which is shared across a whole table.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "checked.hpp"
#include "errors.hpp"
#include "partition.hpp"

namespace redkron {

/// Hard limit of the shape encoding used by the memo tables.
inline constexpr int kMaxSupportedLevel = 30;

struct CycleType {
    Partition cycles;
    int128 centralizer = 1; ///< z_ρ = ∏ iᵐⁱ · mᵢ!
    int128 class_size = 1;  ///< n! / z_ρ

    int level() const noexcept { return cycles.size(); }
    /// Sign of any permutation in the class.
    int sign() const noexcept { return (cycles.size() - cycles.length()) % 2 == 0 ? 1 : -1; }
};

inline int128 factorial(int n)
{
    int128 f = 1;
    for (int k = 2; k <= n; ++k)
        f = checked_mul<int128>(f, k);
    return f;
}

inline CycleType make_cycle_type(const Partition& cycles)
{
    CycleType ct{cycles, 1, 1};
    const auto& v = cycles.vec();
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        auto mult = static_cast<int>(j - i);
        for (int k = 0; k < mult; ++k)
            ct.centralizer = checked_mul<int128>(ct.centralizer, v[i]);
        ct.centralizer = checked_mul<int128>(ct.centralizer, factorial(mult));
        i = j;
    }
    ct.class_size = exact_div<int128>(factorial(cycles.size()), ct.centralizer);
    return ct;
}

/// One class per partition of n, in descending lexicographic order.
inline std::vector<CycleType> cycle_types(int n)
{
    std::vector<CycleType> out;
    for (const auto& p : enumerate_partitions(n))
        out.push_back(make_cycle_type(p));
    return out;
}

namespace detail {

/// Injective 1 + λ₁ + l(λ) bit code of a partition given as a part vector.
inline std::uint64_t encode_shape(std::span<const int> parts)
{
    std::uint64_t code = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int next = i + 1 < parts.size() ? parts[i + 1] : 0;
        for (int k = 0; k < parts[i] - next; ++k)
            code = (code << 1) | 1u;
        code <<= 1;
    }
    return code;
}

class MurnaghanNakayama {
public:
    std::int64_t evaluate(std::span<const int> shape, std::span<const int> cycles)
    {
        if (cycles.empty())
            return shape.empty() ? 1 : 0;
        std::uint64_t key = (encode_shape(shape) << 32) | encode_shape(cycles);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        const int r = cycles.front();
        const auto k = static_cast<int>(shape.size());
        std::vector<int> beads(shape.size());
        for (int i = 0; i < k; ++i)
            beads[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + k - 1 - i;

        std::int64_t total = 0;
        std::vector<int> moved(beads.size());
        std::vector<int> rest;
        for (int i = 0; i < k; ++i) {
            int b = beads[static_cast<std::size_t>(i)];
            int target = b - r;
            if (target < 0)
                continue;
            // beads are strictly decreasing; count those strictly between target and b
            int jumped = 0;
            bool blocked = false;
            for (int j = i + 1; j < k; ++j) {
                int c = beads[static_cast<std::size_t>(j)];
                if (c == target) {
                    blocked = true;
                    break;
                }
                if (c < target)
                    break;
                ++jumped;
            }
            if (blocked)
                continue;
            // re-sort: target lands after the `jumped` beads following position i
            moved.clear();
            for (int j = 0; j < k; ++j) {
                if (j == i)
                    continue;
                if (j == i + jumped + 1)
                    moved.push_back(target);
                moved.push_back(beads[static_cast<std::size_t>(j)]);
            }
            if (static_cast<int>(moved.size()) < k)
                moved.push_back(target);
            rest.clear();
            for (int j = 0; j < k; ++j) {
                int part = moved[static_cast<std::size_t>(j)] - (k - 1 - j);
                if (part > 0)
                    rest.push_back(part);
            }
            std::int64_t sub = evaluate(rest, cycles.subspan(1));
            total = checked_add(total, jumped % 2 == 0 ? sub : -sub);
        }
        memo_.emplace(key, total);
        return total;
    }

    std::size_t memo_size() const noexcept { return memo_.size(); }
    void reserve(std::size_t n) { memo_.reserve(n); }

private:
    std::unordered_map<std::uint64_t, std::int64_t> memo_;
};

} // namespace detail

/// χ^λ(ρ). Throws SizeMismatch unless |λ| = |ρ|.
inline std::int64_t character_value(const Partition& shape, const CycleType& cls)
{
    if (shape.size() != cls.level())
        throw SizeMismatch("character_value: shape and cycle type have different sizes");
    if (shape.size() > kMaxSupportedLevel)
        throw ResourceLimit("character_value: level exceeds supported maximum");
    detail::MurnaghanNakayama mn;
    return mn.evaluate(shape.parts(), cls.cycles.parts());
}

inline std::int64_t character_value(const Partition& shape, const Partition& cycles)
{
    return character_value(shape, make_cycle_type(cycles));
}

/// Complete character table of S_n. Rows are irreducibles, columns classes,
/// both in descending lexicographic order. Immutable once built.
class CharacterTable {
public:
    CharacterTable(int level, std::vector<Partition> partitions, std::vector<std::int64_t> values)
        : level_(level)
        , partitions_(std::move(partitions))
        , values_(std::move(values))
    {
        if (values_.size() != partitions_.size() * partitions_.size())
            throw PreconditionError("character table value matrix has the wrong shape");
        classes_.reserve(partitions_.size());
        for (std::size_t i = 0; i < partitions_.size(); ++i) {
            classes_.push_back(make_cycle_type(partitions_[i]));
            index_.emplace(partitions_[i], i);
        }
    }

    int level() const noexcept { return level_; }
    std::size_t dimension() const noexcept { return partitions_.size(); }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    const std::vector<CycleType>& classes() const noexcept { return classes_; }
    const std::vector<std::int64_t>& values() const noexcept { return values_; }

    std::optional<std::size_t> index_of(const Partition& p) const
    {
        auto it = index_.find(p);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    std::size_t require_index(const Partition& p) const
    {
        auto idx = index_of(p);
        if (!idx)
            throw SizeMismatch("partition is not of the table's level");
        return *idx;
    }

    std::span<const std::int64_t> row(std::size_t i) const
    {
        return std::span<const std::int64_t>(values_).subspan(i * dimension(), dimension());
    }
    std::span<const std::int64_t> row(const Partition& p) const { return row(require_index(p)); }

    std::int64_t value(std::size_t row_index, std::size_t col_index) const
    {
        return values_[row_index * dimension() + col_index];
    }
    std::int64_t value(const Partition& shape, const Partition& cycles) const
    {
        return value(require_index(shape), require_index(cycles));
    }

private:
    int level_;
    std::vector<Partition> partitions_;
    std::vector<CycleType> classes_;
    std::vector<std::int64_t> values_;
    std::unordered_map<Partition, std::size_t, PartitionHash> index_;
};

inline CharacterTable build_character_table(int n)
{
    if (n < 0)
        throw PreconditionError("character table level must be non-negative");
    if (n > kMaxSupportedLevel)
        throw ResourceLimit("character table level exceeds supported maximum");
    auto parts = enumerate_partitions(n);
    std::vector<std::int64_t> values(parts.size() * parts.size());
    detail::MurnaghanNakayama mn;
    mn.reserve(parts.size() * parts.size());
    for (std::size_t c = 0; c < parts.size(); ++c)
        for (std::size_t r = 0; r < parts.size(); ++r)
            values[r * parts.size() + c] = mn.evaluate(parts[r].parts(), parts[c].parts());
    return CharacterTable(n, std::move(parts), std::move(values));
}

/// Cache file text for a table: key-sorted compact JSON plus a newline.
inline std::string table_to_json(const CharacterTable& table)
{
    nlohmann::json j;
    j["format_version"] = 1;
    j["n"] = table.level();
    auto parts = nlohmann::json::array();
    for (const auto& p : table.partitions())
        parts.push_back(p.vec());
    j["partitions"] = std::move(parts);
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < table.dimension(); ++i) {
        auto r = table.row(i);
        rows.push_back(std::vector<std::int64_t>(r.begin(), r.end()));
    }
    j["values"] = std::move(rows);
    return j.dump() + "\n";
}

inline CharacterTable table_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("character table cache: ") + e.what());
    }
    try {
        if (j.at("format_version").get<int>() != 1)
            throw Error("character table cache: unsupported format_version");
        int n = j.at("n").get<int>();
        auto expected = enumerate_partitions(n);
        std::vector<Partition> parts;
        for (const auto& p : j.at("partitions"))
            parts.emplace_back(p.get<std::vector<int>>());
        if (parts != expected)
            throw Error("character table cache: partition list is not canonical");
        std::vector<std::int64_t> values;
        values.reserve(parts.size() * parts.size());
        const auto& rows = j.at("values");
        if (rows.size() != parts.size())
            throw Error("character table cache: wrong number of rows");
        for (const auto& row : rows) {
            auto r = row.get<std::vector<std::int64_t>>();
            if (r.size() != parts.size())
                throw Error("character table cache: wrong row length");
            values.insert(values.end(), r.begin(), r.end());
        }
        return CharacterTable(n, std::move(parts), std::move(values));
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("character table cache: ") + e.what());
    }
}

inline std::string cache_file_name(int n) { return "chartable_" + std::to_string(n) + ".json"; }

/// Thread-safe registry of character tables, one per level. Tables are built
/// on first use (or read from `cache_dir` when a cache file exists) and then
/// shared read-only.
class TableStore {
public:
    struct Limits {
        int max_table_level = 24;
        int max_product_level = 20;
    };

    TableStore() = default;
    explicit TableStore(Limits limits, std::optional<std::filesystem::path> cache_dir = std::nullopt)
        : limits_(limits)
        , cache_dir_(std::move(cache_dir))
    {}

    TableStore(const TableStore&) = delete;
    TableStore& operator=(const TableStore&) = delete;

    const Limits& limits() const noexcept { return limits_; }
    void set_limits(Limits limits)
    {
        std::lock_guard lock(mutex_);
        limits_ = limits;
    }
    const std::optional<std::filesystem::path>& cache_dir() const noexcept { return cache_dir_; }
    void set_cache_dir(std::optional<std::filesystem::path> dir)
    {
        std::lock_guard lock(mutex_);
        cache_dir_ = std::move(dir);
    }

    /// Throws ResourceLimit when n exceeds the product ceiling.
    void check_product_level(int n) const
    {
        if (n > limits_.max_product_level)
            throw ResourceLimit("product level " + std::to_string(n) + " exceeds ceiling "
                                + std::to_string(limits_.max_product_level));
    }

    std::shared_ptr<const CharacterTable> table(int n)
    {
        if (n < 0)
            throw PreconditionError("character table level must be non-negative");
        if (n > limits_.max_table_level)
            throw ResourceLimit("character table level " + std::to_string(n) + " exceeds ceiling "
                                + std::to_string(limits_.max_table_level));
        std::lock_guard lock(mutex_);
        auto& slot = tables_[n];
        if (!slot) {
            if (auto cached = read_cache(n))
                slot = std::make_shared<const CharacterTable>(std::move(*cached));
            else
                slot = std::make_shared<const CharacterTable>(build_character_table(n));
        }
        return slot;
    }

    /// Writes the level-n table to the cache directory; returns the path.
    std::filesystem::path write_cache(int n)
    {
        if (!cache_dir_)
            throw PreconditionError("no cache directory configured");
        auto t = table(n);
        std::filesystem::create_directories(*cache_dir_);
        auto path = *cache_dir_ / cache_file_name(n);
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw Error("cannot write " + path.string());
        out << table_to_json(*t);
        return path;
    }

private:
    std::optional<CharacterTable> read_cache(int n) const
    {
        if (!cache_dir_)
            return std::nullopt;
        auto path = *cache_dir_ / cache_file_name(n);
        std::ifstream in(path, std::ios::binary);
        if (!in)
            return std::nullopt;
        std::stringstream ss;
        ss << in.rdbuf();
        auto t = table_from_json(ss.str());
        if (t.level() != n)
            throw Error("character table cache " + path.string() + " holds the wrong level");
        return t;
    }

    Limits limits_;
    std::optional<std::filesystem::path> cache_dir_;
    std::mutex mutex_;
    std::map<int, std::shared_ptr<const CharacterTable>> tables_;
};

/// Process-wide store used when no explicit store is passed.
inline TableStore& default_store()
{
    static TableStore store;
    return store;
}

inline std::shared_ptr<const CharacterTable> character_table(int n, TableStore& store = default_store())
{
    return store.table(n);
}

} // namespace redkron
