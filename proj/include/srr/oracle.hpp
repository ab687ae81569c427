#ifndef SRR_ORACLE_HPP
#define SRR_ORACLE_HPP

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "text_model.hpp"

// Definitional brute-force answers. Nothing here touches suffix structures
// or derived labels, so the indexes can be checked against it.
namespace srr::oracle {

inline bool matches_at(std::string_view text, std::size_t i, std::string_view p)
{
    // i is 1-based
    return i >= 1 && i <= text.size() && i - 1 + p.size() <= text.size() && text.compare(i - 1, p.size(), p) == 0;
}

inline std::vector<pos_t> naive_report(const labeled_string& s, std::string_view p, label_range r)
{
    std::vector<pos_t> out;
    const std::size_t n = s.size(), m = p.size();
    if (m > n)
        return out;
    for (std::size_t i = 1; i + m <= n + 1; ++i)
        if (matches_at(s.text, i, p) && r.contains(s.label(i)))
            out.push_back(static_cast<pos_t>(i));
    return out;
}

inline std::size_t naive_count(const labeled_string& s, std::string_view p, label_range r)
{
    return naive_report(s, p, r).size();
}

inline bool naive_empty(const labeled_string& s, std::string_view p, label_range r)
{
    return naive_count(s, p, r) == 0;
}

/// Occurrences of p starting in [a, b].
inline std::vector<pos_t> naive_prss(std::string_view text, std::string_view p, std::size_t a, std::size_t b)
{
    std::vector<pos_t> out;
    for (std::size_t i = a; i <= b && i <= text.size(); ++i)
        if (matches_at(text, i, p))
            out.push_back(static_cast<pos_t>(i));
    return out;
}

/// Occurrences of p starting in [a, b] and inside at least one interval.
inline std::vector<pos_t> naive_interval(std::string_view text, const std::vector<std::pair<pos_t, pos_t>>& intervals,
                                         std::string_view p, std::size_t a, std::size_t b)
{
    std::vector<pos_t> out;
    for (std::size_t i = a; i <= b && i <= text.size(); ++i) {
        if (!matches_at(text, i, p))
            continue;
        for (auto [s, f] : intervals) {
            if (s <= i && i <= f) {
                out.push_back(static_cast<pos_t>(i));
                break;
            }
        }
    }
    return out;
}

/// Occurrences of p1, then d arbitrary bytes, then p2.
inline std::vector<pos_t> naive_gap(std::string_view text, std::size_t d, std::string_view p1, std::string_view p2)
{
    std::vector<pos_t> out;
    for (std::size_t i = 1; i <= text.size(); ++i)
        if (matches_at(text, i, p1) && matches_at(text, i + p1.size() + d, p2))
            out.push_back(static_cast<pos_t>(i));
    return out;
}

} // namespace srr::oracle

#endif // SRR_ORACLE_HPP
