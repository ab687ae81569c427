#ifndef SRR_REDUCTIONS_HPP
#define SRR_REDUCTIONS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srr_index.hpp"
#include "suffix_index.hpp"
#include "text_model.hpp"

namespace srr {

using interval_set = std::vector<std::pair<pos_t, pos_t>>;

namespace detail {

inline label_range position_range(std::size_t a, std::size_t b, std::size_t n)
{
    if (a < 1 || a > b || b > n)
        throw error(errc::range_out_of_bounds,
                    "position range " + std::to_string(a) + ":" + std::to_string(b) + " outside [1," +
                        std::to_string(n) + "]");
    return {a, b};
}

} // namespace detail

/// Position-restricted substring searching: lab(i) = i.
class prss_index {
public:
    prss_index() = default;
    explicit prss_index(std::string text, std::optional<std::uint64_t> tau = std::nullopt)
        : inner_(positional(std::move(text)), tau)
    {
    }
    explicit prss_index(srr_index inner) : inner_(std::move(inner)) {}

    /// Occurrences of p starting in [a, b], ascending.
    std::vector<pos_t> query(std::string_view p, std::size_t a, std::size_t b) const
    {
        return inner_.report(p, detail::position_range(a, b, inner_.size()));
    }

    std::size_t count(std::string_view p, std::size_t a, std::size_t b) const
    {
        return inner_.count(p, detail::position_range(a, b, inner_.size()));
    }

    const srr_index& inner() const noexcept { return inner_; }

private:
    srr_index inner_;
};

/// lab(i) = i when i lies in some interval, else 0. Difference-array sweep,
/// O(n + |pi|), input order irrelevant.
inline std::vector<label_t> interval_labels(std::size_t n, const interval_set& pi)
{
    std::vector<std::int64_t> delta(n + 2, 0);
    for (auto [s, f] : pi) {
        if (s < 1 || s > f || f > n)
            throw error(errc::interval_out_of_bounds,
                        "interval " + std::to_string(s) + " " + std::to_string(f) + " outside [1," + std::to_string(n) +
                            "]");
        ++delta[s];
        --delta[f + 1];
    }
    std::vector<label_t> labels(n, 0);
    std::int64_t cover = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        cover += delta[i];
        if (cover > 0)
            labels[i - 1] = i;
    }
    return labels;
}

/// Indexing substrings with intervals.
class interval_index {
public:
    interval_index() = default;
    interval_index(std::string text, interval_set pi, std::optional<std::uint64_t> tau = std::nullopt)
    {
        labeled_string s;
        s.labels = interval_labels(text.size(), pi);
        s.u = text.size();
        s.text = std::move(text);
        inner_ = srr_index(std::move(s), tau);
        intervals_ = std::move(pi);
    }
    interval_index(srr_index inner, interval_set pi) : inner_(std::move(inner)), intervals_(std::move(pi)) {}

    /// Occurrences of p starting in [a, b] and inside some interval. a >= 1
    /// keeps label-0 positions out of every answer.
    std::vector<pos_t> query(std::string_view p, std::size_t a, std::size_t b) const
    {
        return inner_.report(p, detail::position_range(a, b, inner_.size()));
    }

    std::size_t count(std::string_view p, std::size_t a, std::size_t b) const
    {
        return inner_.count(p, detail::position_range(a, b, inner_.size()));
    }

    const srr_index& inner() const noexcept { return inner_; }
    const interval_set& intervals() const noexcept { return intervals_; }

private:
    srr_index inner_;
    interval_set intervals_;
};

/// Intermediate values of one gapped query, for inspection.
struct gap_trace {
    locus reverse_locus;         // locus of reversed p1 in the reversed text
    std::vector<pos_t> inner_hits; // occurrences of p2 whose labels fall in [l_v, r_v]
    std::vector<pos_t> result;
};

/// Indexing substrings with gaps: p1, exactly d arbitrary bytes, then p2.
/// Position i >= d+2 is labeled with the order, in the reversed text, of
/// reversed-text position n - i + d + 2, so a label lies in the locus
/// interval of reversed p1 exactly when p1 ends d+1 bytes before i.
class gap_index {
public:
    gap_index() = default;
    gap_index(std::string text, std::uint64_t d, std::optional<std::uint64_t> tau = std::nullopt) : d_(d)
    {
        if (text.empty())
            throw error(errc::empty_text, "cannot index an empty text");
        const std::size_t n = text.size();
        std::string reversed(text.rbegin(), text.rend());
        reverse_ = suffix_index(reversed, 0);

        labeled_string s;
        s.labels.assign(n, 0);
        s.u = n;
        for (std::size_t i = d + 2; i <= n; ++i) {
            const std::size_t j = n - i + d + 2;
            if (j < 2 || j > n)
                throw std::logic_error("gap label argument outside [2,n]");
            s.labels[i - 1] = reverse_.order_of(j);
        }
        s.text = std::move(text);
        inner_ = srr_index(std::move(s), tau);
    }
    gap_index(srr_index inner, suffix_index reverse, std::uint64_t d)
        : d_(d), reverse_(std::move(reverse)), inner_(std::move(inner))
    {
    }

    std::vector<pos_t> query(std::string_view p1, std::string_view p2) const { return trace(p1, p2).result; }

    gap_trace trace(std::string_view p1, std::string_view p2) const
    {
        if (p1.empty() || p2.empty())
            throw error(errc::empty_pattern, "gapped query needs nonempty p1 and p2");
        gap_trace t;
        std::string rp1(p1.rbegin(), p1.rend());
        t.reverse_locus = reverse_.find(rp1);
        if (!t.reverse_locus)
            return t;
        t.inner_hits = inner_.report(p2, {t.reverse_locus.l, t.reverse_locus.r});
        t.result.reserve(t.inner_hits.size());
        for (pos_t i : t.inner_hits)
            t.result.push_back(static_cast<pos_t>(i - p1.size() - d_));
        std::sort(t.result.begin(), t.result.end());
        return t;
    }

    std::uint64_t gap() const noexcept { return d_; }
    const srr_index& inner() const noexcept { return inner_; }
    const suffix_index& reverse() const noexcept { return reverse_; }

private:
    std::uint64_t d_ = 0;
    suffix_index reverse_;
    srr_index inner_;
};

} // namespace srr

#endif // SRR_REDUCTIONS_HPP
