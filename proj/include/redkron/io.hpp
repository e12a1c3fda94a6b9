#pragma once

// Text and JSON forms of partitions and decompositions.
//
//   partition      [4,2,1,1]   (empty: [])
//   decomposition  [3,1]+2[2,1,1]+[1,1,1,1]   (zero: 0)
//   JSON           {"terms":[{"mult":1,"partition":[3,1]},...]}

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "decomposition.hpp"
#include "errors.hpp"
#include "partition.hpp"

namespace redkron {

namespace detail {

class Scanner {
public:
    explicit Scanner(std::string_view text)
        : text_(text)
    {}

    std::size_t pos() const noexcept { return pos_; }
    bool done() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return done() ? '\0' : text_[pos_]; }

    void skip_space()
    {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c)
    {
        skip_space();
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    std::int64_t integer(bool allow_sign)
    {
        skip_space();
        std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an integer", start);
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            if (v > (INT64_MAX - 9) / 10)
                throw ParseError("integer too large", start);
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (v > INT32_MAX)
            throw ParseError("integer too large", start);
        return neg ? -v : v;
    }

    /// `[a,b,...]` as raw integers; records the position of every entry.
    std::vector<int> bracketed(bool allow_sign, std::vector<std::size_t>* positions = nullptr)
    {
        expect('[');
        std::vector<int> out;
        if (accept(']'))
            return out;
        do {
            skip_space();
            if (positions)
                positions->push_back(pos_);
            out.push_back(static_cast<int>(integer(allow_sign)));
        } while (accept(','));
        expect(']');
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline Partition checked_partition(const std::vector<int>& parts, const std::vector<std::size_t>& positions)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw ParseError("partition parts must be positive", positions[i]);
        if (i > 0 && parts[i] > parts[i - 1])
            throw ParseError("partition is not weakly decreasing", positions[i]);
    }
    return Partition(parts);
}

} // namespace detail

inline Partition parse_partition(std::string_view text)
{
    detail::Scanner s(text);
    std::vector<std::size_t> positions;
    auto parts = s.bracketed(false, &positions);
    s.skip_space();
    if (!s.done())
        throw ParseError("trailing characters", s.pos());
    return detail::checked_partition(parts, positions);
}

/// Any integer sequence, e.g. `[0,3,-1]`.
inline Composition parse_composition(std::string_view text)
{
    detail::Scanner s(text);
    auto entries = s.bracketed(true);
    s.skip_space();
    if (!s.done())
        throw ParseError("trailing characters", s.pos());
    return Composition(std::move(entries));
}

inline std::string format_partition(const Partition& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.vec().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.vec()[i]);
    }
    return out + "]";
}

inline std::string format_composition(const Composition& c)
{
    std::string out = "[";
    for (std::size_t i = 0; i < c.vec().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(c.vec()[i]);
    }
    return out + "]";
}

/// Canonical text form; coefficients other than 1 are prefixed, negative
/// terms are joined with '-'.
inline std::string format_decomposition(const Decomposition& d)
{
    if (d.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : d) {
        std::int64_t mag = c < 0 ? -c : c;
        if (c < 0)
            out += '-';
        else if (!first)
            out += '+';
        if (mag != 1)
            out += std::to_string(mag);
        out += format_partition(p);
        first = false;
    }
    return out;
}

/// Inverse of format_decomposition. Terms may come in any order.
inline Decomposition parse_decomposition(std::string_view text)
{
    detail::Scanner s(text);
    Decomposition d;
    s.skip_space();
    if (s.accept('0')) {
        s.skip_space();
        if (!s.done())
            throw ParseError("trailing characters", s.pos());
        return d;
    }
    bool first = true;
    while (true) {
        s.skip_space();
        if (s.done())
            break;
        int sign = 1;
        if (s.accept('-'))
            sign = -1;
        else if (!first)
            s.expect('+');
        s.skip_space();
        std::int64_t mult = 1;
        if (std::isdigit(static_cast<unsigned char>(s.peek())))
            mult = s.integer(false);
        std::vector<std::size_t> positions;
        auto parts = s.bracketed(false, &positions);
        d.add(detail::checked_partition(parts, positions), sign * mult);
        first = false;
    }
    if (first)
        throw ParseError("empty decomposition", 0);
    return d;
}

inline nlohmann::json partition_to_json(const Partition& p) { return p.vec(); }

inline nlohmann::json decomposition_to_json(const Decomposition& d)
{
    auto terms = nlohmann::json::array();
    for (const auto& [p, c] : d)
        terms.push_back({{"partition", p.vec()}, {"mult", c}});
    return {{"terms", std::move(terms)}};
}

inline Decomposition decomposition_from_json(const nlohmann::json& j)
{
    Decomposition d;
    try {
        for (const auto& t : j.at("terms"))
            d.add(Partition(t.at("partition").get<std::vector<int>>()), t.at("mult").get<std::int64_t>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("decomposition JSON: ") + e.what());
    }
    return d;
}

inline nlohmann::json cc_type_to_json(const CcType& cc)
{
    return {{"components", cc.components}, {"constituents", cc.constituents}};
}

} // namespace redkron
