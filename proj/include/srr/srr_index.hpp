#ifndef SRR_SRR_INDEX_HPP
#define SRR_SRR_INDEX_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "range_structures.hpp"
#include "suffix_index.hpp"
#include "text_model.hpp"

namespace srr {

/// Which string-depth cutoff to derive when no explicit tau is given.
enum class tau_policy {
    reporting, // max(1, ceil(log2 log2 (u+2)))
    counting,  // max(1, ceil(log2 n / log2 log2 (n+2)))
};

inline std::uint64_t default_tau(tau_policy policy, std::size_t n, label_t u)
{
    double t = 0;
    if (policy == tau_policy::reporting)
        t = std::ceil(std::log2(std::log2(static_cast<double>(u) + 2.0)));
    else
        t = std::ceil(std::log2(static_cast<double>(n)) / std::log2(std::log2(static_cast<double>(n) + 2.0)));
    return std::max<std::uint64_t>(1, t > 0 ? static_cast<std::uint64_t>(t) : 0);
}

enum class query_path { top_tree_1d, bottom_2d, no_locus };

inline const char* query_path_name(query_path p)
{
    switch (p) {
    case query_path::top_tree_1d: return "TopTree1D";
    case query_path::bottom_2d: return "Bottom2D";
    case query_path::no_locus: return "NoLocus";
    }
    return "?";
}

/// automatic follows the top flag of the locus; force_2d always answers
/// from the global point set (used to cross-check the two paths).
enum class routing { automatic, force_2d };

struct query_stats {
    query_path path = query_path::no_locus;
    std::size_t occ = 0;
};

/// Substring range reporting / counting / emptiness over a labeled string.
///
/// Suffix tree cut at string depth tau into a top tree and bottom trees.
/// Every top-tree node owns a sorted label store over its leaves; loci in
/// the bottom trees are answered by a rectangle query [l_v, r_v] x [a, b]
/// on the point set {(order(i), lab(i))}.
class srr_index {
public:
    struct parts {
        labeled_string source;
        suffix_index sidx;
        std::vector<node_id> top_nodes;       // ascending node ids with the top flag
        std::vector<std::uint64_t> top_offsets; // store of top_nodes[j] is [top_offsets[j], top_offsets[j+1])
        std::vector<label_t> top_labels;
        std::vector<pos_t> top_positions;
        two_dim_store global;
    };

    srr_index() = default;

    explicit srr_index(labeled_string s, std::optional<std::uint64_t> tau = std::nullopt,
                       tau_policy policy = tau_policy::reporting)
    {
        validate_or_throw(s);
        const std::uint64_t cut = tau ? *tau : default_tau(policy, s.size(), s.u);
        p_.sidx = suffix_index(s.text, cut);
        p_.source = std::move(s);
        build_stores();
        index_top_slots();
    }

    static srr_index from_parts(parts p)
    {
        srr_index ix;
        const auto& src = p.source;
        if (auto v = validate(src); !v)
            throw error(errc::corrupt_index, "stored labeled string invalid: " + v.message);
        if (p.sidx.text() != src.text)
            throw error(errc::corrupt_index, "suffix index text differs from source text");
        if (p.global.size() != src.size())
            throw error(errc::corrupt_index, "2D store point count differs from n");
        if (p.top_offsets.size() != p.top_nodes.size() + 1 || p.top_offsets.front() != 0 ||
            p.top_offsets.back() != p.top_labels.size() || p.top_labels.size() != p.top_positions.size())
            throw error(errc::corrupt_index, "top-store table sizes disagree");
        for (std::size_t j = 0; j < p.top_nodes.size(); ++j) {
            node_id v = p.top_nodes[j];
            if (v >= p.sidx.node_count() || !p.sidx.is_top(v) ||
                p.top_offsets[j + 1] - p.top_offsets[j] != p.sidx.r(v) - p.sidx.l(v) + 1u)
                throw error(errc::corrupt_index, "top-store entry disagrees with node table");
        }
        ix.p_ = std::move(p);
        ix.index_top_slots();
        for (node_id v = 0; v < ix.p_.sidx.node_count(); ++v)
            if (ix.p_.sidx.is_top(v) && ix.top_slot_[v] == no_node)
                throw error(errc::corrupt_index, "top node without a store");
        return ix;
    }

    const parts& raw() const noexcept { return p_; }
    const labeled_string& source() const noexcept { return p_.source; }
    const suffix_index& suffixes() const noexcept { return p_.sidx; }
    const two_dim_store& points() const noexcept { return p_.global; }
    std::size_t size() const noexcept { return p_.source.size(); }
    label_t u() const noexcept { return p_.source.u; }
    std::uint64_t tau() const noexcept { return p_.sidx.tau(); }
    std::size_t top_node_count() const noexcept { return p_.top_nodes.size(); }

    /// Label store of a top-tree node.
    one_dim_view top_store(node_id v) const
    {
        const std::uint32_t j = top_slot_.at(v);
        if (j == no_node)
            return {};
        const std::size_t first = p_.top_offsets[j], len = p_.top_offsets[j + 1] - first;
        return {std::span<const label_t>(p_.top_labels).subspan(first, len),
                std::span<const pos_t>(p_.top_positions).subspan(first, len)};
    }

    std::vector<pos_t> report(std::string_view p, label_range r, routing route = routing::automatic) const
    {
        return report_with_stats(p, r, route).first;
    }

    std::pair<std::vector<pos_t>, query_stats> report_with_stats(std::string_view p, label_range r,
                                                                 routing route = routing::automatic) const
    {
        check_range(r, u());
        std::vector<pos_t> out;
        query_stats st;
        locus loc = p_.sidx.find(p);
        if (!loc) {
            st.path = query_path::no_locus;
            return {out, st};
        }
        if (uses_1d(loc, route)) {
            st.path = query_path::top_tree_1d;
            top_store(loc.node).report(r, out);
        } else {
            st.path = query_path::bottom_2d;
            p_.global.report_unordered(loc.l, loc.r, r, out);
        }
        std::sort(out.begin(), out.end());
        st.occ = out.size();
        return {out, st};
    }

    std::size_t count(std::string_view p, label_range r, routing route = routing::automatic) const
    {
        check_range(r, u());
        locus loc = p_.sidx.find(p);
        if (!loc)
            return 0;
        if (uses_1d(loc, route))
            return top_store(loc.node).count(r);
        return p_.global.count(loc.l, loc.r, r);
    }

    bool empty(std::string_view p, label_range r, routing route = routing::automatic) const
    {
        check_range(r, u());
        locus loc = p_.sidx.find(p);
        if (!loc)
            return true;
        if (uses_1d(loc, route))
            return top_store(loc.node).empty(r);
        return p_.global.empty(loc.l, loc.r, r);
    }

    /// Path a query for p would take under automatic routing.
    query_path route_of(std::string_view p) const
    {
        locus loc = p_.sidx.find(p);
        if (!loc)
            return query_path::no_locus;
        return p_.sidx.is_top(loc.node) ? query_path::top_tree_1d : query_path::bottom_2d;
    }

private:
    bool uses_1d(const locus& loc, routing route) const
    {
        return route == routing::automatic && p_.sidx.is_top(loc.node);
    }

    void build_stores()
    {
        const auto& sx = p_.sidx;
        const std::size_t n = p_.source.size();

        std::vector<label_t> ys(n);
        std::vector<pos_t> payload(n);
        for (std::size_t k = 1; k <= n; ++k) {
            payload[k - 1] = sx.sa(k);
            ys[k - 1] = p_.source.label(sx.sa(k));
        }
        p_.global = two_dim_store(ys, std::move(payload));

        p_.top_offsets.assign(1, 0);
        std::vector<std::pair<label_t, pos_t>> entries;
        for (node_id v = 0; v < sx.node_count(); ++v) {
            if (!sx.is_top(v))
                continue;
            p_.top_nodes.push_back(v);
            entries.clear();
            for (std::size_t k = sx.l(v); k <= sx.r(v); ++k)
                entries.emplace_back(p_.source.label(sx.sa(k)), sx.sa(k));
            std::sort(entries.begin(), entries.end());
            for (auto [lab, pos] : entries) {
                p_.top_labels.push_back(lab);
                p_.top_positions.push_back(pos);
            }
            p_.top_offsets.push_back(p_.top_labels.size());
        }
    }

    void index_top_slots()
    {
        top_slot_.assign(p_.sidx.node_count(), no_node);
        for (std::size_t j = 0; j < p_.top_nodes.size(); ++j)
            top_slot_[p_.top_nodes[j]] = static_cast<std::uint32_t>(j);
    }

    parts p_;
    std::vector<std::uint32_t> top_slot_;
};

/// Per-level totals of top-store sizes, indexed by tree depth.
inline std::vector<std::size_t> top_level_sizes(const srr_index& ix)
{
    const auto& sx = ix.suffixes();
    std::vector<std::uint32_t> level = sx.node_levels();
    std::vector<std::size_t> per_level;
    for (node_id v = 0; v < sx.node_count(); ++v) {
        if (!sx.is_top(v))
            continue;
        if (per_level.size() <= level[v])
            per_level.resize(level[v] + 1, 0);
        per_level[level[v]] += ix.top_store(v).size();
    }
    return per_level;
}

/// Checks the assembled structure: suffix tree shape, that every top store
/// holds exactly its leaves' labels, the per-level cardinality bound
/// (stores at one top-tree depth sum to at most n), and the point count.
inline std::optional<std::string> check_structure(const srr_index& ix)
{
    const auto& sx = ix.suffixes();
    if (auto e = check_structure(sx))
        return e;
    const std::size_t n = ix.size();
    if (ix.points().size() != n)
        return "2D store does not hold n points";

    std::vector<label_t> expect, got;
    for (node_id v = 0; v < sx.node_count(); ++v) {
        if (!sx.is_top(v))
            continue;
        one_dim_view st = ix.top_store(v);
        if (st.size() != sx.r(v) - sx.l(v) + 1u)
            return "top store size differs from leaf count at node " + std::to_string(v);
        if (!std::is_sorted(st.labels().begin(), st.labels().end()))
            return "top store not sorted at node " + std::to_string(v);
        expect.clear();
        for (std::size_t k = sx.l(v); k <= sx.r(v); ++k)
            expect.push_back(ix.source().label(sx.sa(k)));
        std::sort(expect.begin(), expect.end());
        got.assign(st.labels().begin(), st.labels().end());
        if (expect != got)
            return "top store labels differ from leaf labels at node " + std::to_string(v);
        for (std::size_t j = 0; j < st.size(); ++j)
            if (ix.source().label(st.positions()[j]) != st.labels()[j])
                return "top store position/label mismatch at node " + std::to_string(v);
    }
    std::vector<std::size_t> per_level = top_level_sizes(ix);
    for (std::size_t d = 0; d < per_level.size(); ++d)
        if (per_level[d] > n)
            return "top-tree level " + std::to_string(d) + " stores " + std::to_string(per_level[d]) + " > n labels";
    return std::nullopt;
}

} // namespace srr

#endif // SRR_SRR_INDEX_HPP
