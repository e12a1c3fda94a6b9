#pragma once

#include <cstdint>
#include <map>

#include "checked.hpp"
#include "partition.hpp"

namespace redkron {

/// A finitely supported integer combination of irreducible characters,
/// ∑ c_ν [ν]. Products always have positive coefficients; signed
/// combinations appear only while straightening. Zero coefficients are never
/// stored, and iteration follows CanonicalOrder.
class Decomposition {
public:
    using Terms = std::map<Partition, std::int64_t, CanonicalOrder>;
    using const_iterator = Terms::const_iterator;

    Decomposition() = default;
    Decomposition(std::initializer_list<std::pair<const Partition, std::int64_t>> terms)
    {
        for (const auto& [p, c] : terms)
            add(p, c);
    }

    void add(const Partition& p, std::int64_t coeff)
    {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(p, coeff);
        if (!inserted) {
            it->second = checked_add(it->second, coeff);
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Decomposition& operator+=(const Decomposition& other)
    {
        for (const auto& [p, c] : other)
            add(p, c);
        return *this;
    }

    std::int64_t coefficient(const Partition& p) const
    {
        auto it = terms_.find(p);
        return it == terms_.end() ? 0 : it->second;
    }

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const Terms& terms() const noexcept { return terms_; }

    bool is_positive() const
    {
        for (const auto& [p, c] : terms_)
            if (c < 0)
                return false;
        return true;
    }

    CcType cc_type() const
    {
        CcType t{static_cast<std::int64_t>(terms_.size()), 0};
        for (const auto& [p, c] : terms_)
            t.constituents = checked_add(t.constituents, c);
        return t;
    }

    bool is_multiplicity_free() const
    {
        for (const auto& [p, c] : terms_)
            if (c > 1)
                return false;
        return true;
    }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;

private:
    Terms terms_;
};

} // namespace redkron
