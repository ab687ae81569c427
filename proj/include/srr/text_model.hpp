#ifndef SRR_TEXT_MODEL_HPP
#define SRR_TEXT_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace srr {

using label_t = std::uint64_t;
using pos_t = std::uint32_t; // 1-based text position or suffix order

enum class errc {
    empty_text,
    length_mismatch,
    label_out_of_range,
    position_out_of_range,
    range_out_of_bounds,
    interval_out_of_bounds,
    empty_pattern,
    text_too_long,
    bad_magic,
    bad_version,
    corrupt_index,
    wrong_kind,
    io,
};

inline const char* errc_name(errc e)
{
    switch (e) {
    case errc::empty_text: return "EmptyText";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::label_out_of_range: return "LabelOutOfRange";
    case errc::position_out_of_range: return "PositionOutOfRange";
    case errc::range_out_of_bounds: return "RangeOutOfBounds";
    case errc::interval_out_of_bounds: return "IntervalOutOfBounds";
    case errc::empty_pattern: return "EmptyPattern";
    case errc::text_too_long: return "TextTooLong";
    case errc::bad_magic: return "BadMagic";
    case errc::bad_version: return "BadVersion";
    case errc::corrupt_index: return "CorruptIndex";
    case errc::wrong_kind: return "WrongKind";
    case errc::io: return "IO";
    }
    return "Unknown";
}

/// Exception carrying a typed error code. `index()` is the offending
/// 1-based position for errors that have one, 0 otherwise.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what, std::size_t index = 0)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), index_(index)
    {
    }

    errc code() const noexcept { return code_; }
    std::size_t index() const noexcept { return index_; }

private:
    errc code_;
    std::size_t index_;
};

/// Closed label interval [a, b].
struct label_range {
    label_t a = 0;
    label_t b = 0;

    bool contains(label_t x) const noexcept { return a <= x && x <= b; }
    friend bool operator==(const label_range&, const label_range&) = default;
};

/// A text over bytes where position i (1-based) carries lab(i) in [0, u].
struct labeled_string {
    std::string text;
    std::vector<label_t> labels;
    label_t u = 0;

    std::size_t size() const noexcept { return text.size(); }

    /// lab(i) for 1-based i.
    label_t label(std::size_t i) const { return labels[i - 1]; }

    friend bool operator==(const labeled_string&, const labeled_string&) = default;
};

/// Outcome of validate(). `code` and `index` are meaningful only when !ok.
struct validation {
    bool ok = true;
    errc code = errc::empty_text;
    std::size_t index = 0; // 1-based offending position for label_out_of_range
    std::string message;

    explicit operator bool() const noexcept { return ok; }
};

inline validation validate(const labeled_string& s)
{
    if (s.text.empty())
        return {false, errc::empty_text, 0, "text must contain at least one byte"};
    if (s.labels.size() != s.text.size())
        return {false, errc::length_mismatch, 0,
                "text has " + std::to_string(s.text.size()) + " bytes but " + std::to_string(s.labels.size()) +
                    " labels were given"};
    if (s.text.size() >= std::size_t{0xffffffffu})
        return {false, errc::text_too_long, 0, "text length must fit in 32 bits"};
    for (std::size_t i = 0; i < s.labels.size(); ++i) {
        if (s.labels[i] > s.u)
            return {false, errc::label_out_of_range, i + 1,
                    "label " + std::to_string(s.labels[i]) + " at position " + std::to_string(i + 1) +
                        " exceeds u=" + std::to_string(s.u)};
    }
    return {};
}

inline void validate_or_throw(const labeled_string& s)
{
    if (auto v = validate(s); !v)
        throw error(v.code, v.message, v.index);
}

/// Range check against the label universe [0, u].
inline void check_range(label_range r, label_t u)
{
    if (r.a > r.b)
        throw error(errc::range_out_of_bounds, "range start " + std::to_string(r.a) + " exceeds end " + std::to_string(r.b));
    if (r.b > u)
        throw error(errc::range_out_of_bounds, "range end " + std::to_string(r.b) + " exceeds u=" + std::to_string(u));
}

/// lab(i) = i, u = n.
inline labeled_string positional(std::string text)
{
    labeled_string s;
    s.labels.resize(text.size());
    for (std::size_t i = 0; i < text.size(); ++i)
        s.labels[i] = i + 1;
    s.u = text.size();
    s.text = std::move(text);
    return s;
}

} // namespace srr

#endif // SRR_TEXT_MODEL_HPP
