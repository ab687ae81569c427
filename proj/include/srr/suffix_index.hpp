#ifndef SRR_SUFFIX_INDEX_HPP
#define SRR_SUFFIX_INDEX_HPP

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "text_model.hpp"

namespace srr {

using node_id = std::uint32_t;
inline constexpr node_id no_node = 0xffffffffu;

namespace detail {

/// Suffix array by prefix doubling with two-pass counting sort, O(n log n).
/// Returns 0-based starting offsets. End-of-string compares smaller than
/// every byte, so a suffix sorts before every longer suffix it prefixes.
inline std::vector<pos_t> suffix_array_doubling(std::string_view text)
{
    const std::size_t n = text.size();
    std::vector<pos_t> sa(n), tmp(n);
    std::vector<pos_t> rank(n), next_rank(n);
    if (n == 0)
        return sa;

    // rank 0 is reserved for "past the end"
    {
        std::vector<std::size_t> cnt(257, 0);
        for (unsigned char c : text)
            ++cnt[c + 1];
        for (std::size_t c = 1; c < cnt.size(); ++c)
            cnt[c] += cnt[c - 1];
        for (std::size_t i = 0; i < n; ++i)
            sa[cnt[static_cast<unsigned char>(text[i])]++] = static_cast<pos_t>(i);
        pos_t r = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == 0 || text[sa[k]] != text[sa[k - 1]])
                ++r;
            rank[sa[k]] = r;
        }
        if (r == n)
            return sa;
    }

    std::vector<std::size_t> cnt;
    for (std::size_t h = 1;; h <<= 1) {
        // order by second key: suffixes with nothing at i+h come first
        std::size_t t = 0;
        for (std::size_t i = n - std::min(h, n); i < n; ++i)
            tmp[t++] = static_cast<pos_t>(i);
        for (std::size_t k = 0; k < n; ++k)
            if (sa[k] >= h)
                tmp[t++] = static_cast<pos_t>(sa[k] - h);

        // stable by first key
        std::size_t max_rank = 0;
        for (std::size_t i = 0; i < n; ++i)
            max_rank = std::max<std::size_t>(max_rank, rank[i]);
        cnt.assign(max_rank + 2, 0);
        for (std::size_t i = 0; i < n; ++i)
            ++cnt[rank[i] + 1];
        for (std::size_t c = 1; c < cnt.size(); ++c)
            cnt[c] += cnt[c - 1];
        for (std::size_t k = 0; k < n; ++k)
            sa[cnt[rank[tmp[k]]]++] = tmp[k];

        auto second = [&](pos_t i) -> pos_t { return i + h < n ? rank[i + h] : 0; };
        pos_t r = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == 0 || rank[sa[k]] != rank[sa[k - 1]] || second(sa[k]) != second(sa[k - 1]))
                ++r;
            next_rank[sa[k]] = r;
        }
        rank.swap(next_rank);
        if (r == n)
            break;
    }
    return sa;
}

/// Kasai et al. LCP: lcp[k] = lcp(suffix sa[k-1], suffix sa[k]), lcp[0] = 0.
inline std::vector<pos_t> lcp_kasai(std::string_view text, std::span<const pos_t> sa)
{
    const std::size_t n = text.size();
    std::vector<pos_t> rank(n), lcp(n, 0);
    for (std::size_t k = 0; k < n; ++k)
        rank[sa[k]] = static_cast<pos_t>(k);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        std::size_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h])
            ++h;
        lcp[rank[i]] = static_cast<pos_t>(h);
        if (h > 0)
            --h;
    }
    return lcp;
}

} // namespace detail

/// Result of a locus lookup. `found == false` is the bottom value.
struct locus {
    bool found = false;
    node_id node = no_node;
    pos_t l = 0; // order interval [l, r], 1-based
    pos_t r = 0;
    std::size_t matched = 0;

    explicit operator bool() const noexcept { return found; }
};

/// Compacted suffix tree over a byte string, carried alongside its suffix
/// array. Orders and positions are 1-based at the interface.
///
/// No sentinel is appended. A suffix that is a proper prefix of another one
/// ends at an internal node of equal string depth and hangs below it as a
/// leaf with an empty edge (child key -1, always the first child), so the
/// tree has exactly n leaves.
class suffix_index {
public:
    /// Flat storage. Node arrays are indexed by node_id; children of v are
    /// children[child_begin[v] .. child_begin[v+1]) in increasing order.
    struct parts {
        std::string text;
        std::uint64_t tau = 0;
        std::vector<pos_t> sa;   // sa[k-1] = 1-based start of the k-th smallest suffix
        std::vector<pos_t> rank; // rank[i-1] = order of suffix i
        std::vector<node_id> parent;
        std::vector<pos_t> depth; // string depth
        std::vector<pos_t> l;
        std::vector<pos_t> r;
        std::vector<std::uint32_t> child_begin;
        std::vector<node_id> children;
        std::vector<std::int16_t> child_key;
        std::vector<std::uint8_t> top;

        friend bool operator==(const parts&, const parts&) = default;
    };

    suffix_index() = default;

    suffix_index(std::string_view text, std::uint64_t tau)
    {
        if (text.empty())
            throw error(errc::empty_text, "cannot index an empty text");
        if (text.size() >= std::size_t{0xffffffffu})
            throw error(errc::text_too_long, "text length must fit in 32 bits");
        p_.text.assign(text);
        p_.tau = tau;
        build();
    }

    /// Adopts storage produced by raw(); throws corrupt_index on shape errors.
    static suffix_index from_parts(parts p)
    {
        suffix_index s;
        s.p_ = std::move(p);
        s.check_shape();
        return s;
    }

    const parts& raw() const noexcept { return p_; }

    std::size_t size() const noexcept { return p_.text.size(); }
    std::string_view text() const noexcept { return p_.text; }
    std::uint64_t tau() const noexcept { return p_.tau; }
    std::size_t node_count() const noexcept { return p_.parent.size(); }
    static constexpr node_id root() noexcept { return 0; }

    /// Starting position (1-based) of the suffix with order k.
    pos_t sa(std::size_t k) const { return p_.sa[k - 1]; }
    std::span<const pos_t> suffix_array() const noexcept { return p_.sa; }

    /// order_S(i) for 1-based position i.
    pos_t order_of(std::size_t i) const
    {
        if (i < 1 || i > size())
            throw error(errc::position_out_of_range,
                        "position " + std::to_string(i) + " outside [1," + std::to_string(size()) + "]", i);
        return p_.rank[i - 1];
    }

    node_id parent(node_id v) const { return p_.parent[v]; }
    pos_t string_depth(node_id v) const { return p_.depth[v]; }
    pos_t l(node_id v) const { return p_.l[v]; }
    pos_t r(node_id v) const { return p_.r[v]; }
    bool is_top(node_id v) const { return p_.top[v] != 0; }
    bool is_leaf(node_id v) const { return p_.child_begin[v] == p_.child_begin[v + 1]; }

    std::span<const node_id> children(node_id v) const
    {
        return std::span<const node_id>(p_.children).subspan(p_.child_begin[v], p_.child_begin[v + 1] - p_.child_begin[v]);
    }

    /// First byte of the edge into v, or -1 for an empty terminator edge.
    std::int16_t edge_key(node_id v) const
    {
        node_id par = p_.parent[v];
        if (par == no_node || p_.depth[v] == p_.depth[par])
            return -1;
        return static_cast<unsigned char>(p_.text[p_.sa[p_.l[v] - 1] - 1 + p_.depth[par]]);
    }

    /// Child of v whose edge starts with byte c, or no_node.
    node_id child(node_id v, unsigned char c) const
    {
        auto first = p_.child_key.begin() + p_.child_begin[v];
        auto last = p_.child_key.begin() + p_.child_begin[v + 1];
        auto it = std::lower_bound(first, last, static_cast<std::int16_t>(c));
        if (it == last || *it != c)
            return no_node;
        return p_.children[static_cast<std::size_t>(it - p_.child_key.begin())];
    }

    /// Minimum-depth node whose path string has p as a prefix.
    locus find(std::string_view p) const
    {
        const std::size_t m = p.size();
        node_id v = root();
        std::size_t matched = 0;
        while (matched < m) {
            node_id c = child(v, static_cast<unsigned char>(p[matched]));
            if (c == no_node)
                return {};
            const std::size_t start = p_.sa[p_.l[c] - 1] - 1;
            const std::size_t end = std::min<std::size_t>(p_.depth[c], m);
            // first byte already matched by the key lookup
            if (end > matched + 1 &&
                std::memcmp(p_.text.data() + start + matched + 1, p.data() + matched + 1, end - matched - 1) != 0)
                return {};
            matched = end;
            v = c;
        }
        return {true, v, p_.l[v], p_.r[v], m};
    }

    /// Path string of v (for tests and diagnostics).
    std::string path_string(node_id v) const
    {
        return p_.text.substr(p_.sa[p_.l[v] - 1] - 1, p_.depth[v]);
    }

    /// Tree depth (edges from the root) of every node.
    std::vector<std::uint32_t> node_levels() const
    {
        std::vector<std::uint32_t> level(node_count(), 0);
        std::vector<node_id> stack{root()};
        while (!stack.empty()) {
            node_id v = stack.back();
            stack.pop_back();
            for (node_id c : children(v)) {
                level[c] = level[v] + 1;
                stack.push_back(c);
            }
        }
        return level;
    }

private:
    void build()
    {
        const std::size_t n = p_.text.size();
        std::vector<pos_t> sa0 = detail::suffix_array_doubling(p_.text);
        std::vector<pos_t> lcp = detail::lcp_kasai(p_.text, sa0);

        p_.sa.resize(n);
        p_.rank.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            p_.sa[k] = sa0[k] + 1;
            p_.rank[sa0[k]] = static_cast<pos_t>(k + 1);
        }

        auto& parent = p_.parent;
        auto& depth = p_.depth;
        auto& l = p_.l;
        auto& r = p_.r;
        std::vector<std::uint8_t> leaf;
        parent.reserve(2 * n);
        depth.reserve(2 * n);
        l.reserve(2 * n);
        r.reserve(2 * n);
        leaf.reserve(2 * n);
        auto make = [&](pos_t d, pos_t left, bool is_leaf) {
            parent.push_back(no_node);
            depth.push_back(d);
            l.push_back(left);
            r.push_back(left);
            leaf.push_back(is_leaf ? 1 : 0);
            return static_cast<node_id>(parent.size() - 1);
        };

        std::vector<node_id> stack{make(0, 1, false)};
        for (std::size_t k = 0; k <= n; ++k) {
            const pos_t h = (k == 0 || k == n) ? 0 : lcp[k];
            for (;;) {
                node_id top = stack.back();
                // a leaf is always popped: its terminator sits strictly below any lcp
                bool deeper = leaf[top] ? true : depth[top] > h;
                if (!deeper)
                    break;
                stack.pop_back();
                r[top] = static_cast<pos_t>(k);
                node_id below = stack.back();
                if (depth[below] >= h) {
                    parent[top] = below;
                } else {
                    node_id y = make(h, l[top], false);
                    parent[top] = y;
                    stack.push_back(y);
                }
            }
            if (k < n)
                stack.push_back(make(static_cast<pos_t>(n - sa0[k]), static_cast<pos_t>(k + 1), true));
        }
        r[root()] = static_cast<pos_t>(n);

        const std::size_t count = parent.size();
        p_.child_begin.assign(count + 1, 0);
        for (std::size_t v = 1; v < count; ++v)
            ++p_.child_begin[parent[v] + 1];
        for (std::size_t v = 0; v < count; ++v)
            p_.child_begin[v + 1] += p_.child_begin[v];
        p_.children.assign(count > 0 ? count - 1 : 0, no_node);
        std::vector<std::uint32_t> fill(p_.child_begin.begin(), p_.child_begin.end() - 1);
        for (std::size_t v = 1; v < count; ++v)
            p_.children[fill[parent[v]]++] = static_cast<node_id>(v);
        for (std::size_t v = 0; v < count; ++v)
            std::sort(p_.children.begin() + p_.child_begin[v], p_.children.begin() + p_.child_begin[v + 1],
                      [&](node_id a, node_id b) { return l[a] < l[b]; });

        p_.child_key.resize(p_.children.size());
        for (std::size_t j = 0; j < p_.children.size(); ++j)
            p_.child_key[j] = edge_key(p_.children[j]);

        p_.top.resize(count);
        for (std::size_t v = 0; v < count; ++v)
            p_.top[v] = (parent[v] == no_node || depth[parent[v]] <= p_.tau) ? 1 : 0;
    }

    void check_shape() const
    {
        const std::size_t n = p_.text.size();
        const std::size_t count = p_.parent.size();
        auto bad = [](const char* what) { throw error(errc::corrupt_index, what); };
        if (n == 0)
            bad("empty text in suffix index");
        if (p_.sa.size() != n || p_.rank.size() != n)
            bad("suffix array length mismatch");
        if (count == 0 || p_.depth.size() != count || p_.l.size() != count || p_.r.size() != count ||
            p_.top.size() != count || p_.child_begin.size() != count + 1)
            bad("node table length mismatch");
        if (p_.children.size() != count - 1 || p_.child_key.size() != count - 1 || p_.child_begin.back() != count - 1)
            bad("child table length mismatch");
        for (std::size_t k = 0; k < n; ++k)
            if (p_.sa[k] < 1 || p_.sa[k] > n || p_.rank[p_.sa[k] - 1] != k + 1)
                bad("suffix array and rank are not inverse");
        for (std::size_t v = 0; v < count; ++v) {
            if (p_.l[v] < 1 || p_.l[v] > p_.r[v] || p_.r[v] > n || p_.child_begin[v] > p_.child_begin[v + 1])
                bad("node interval out of range");
            if (v != 0 && p_.parent[v] >= count)
                bad("node parent out of range");
            if (p_.depth[v] > n - p_.sa[p_.l[v] - 1] + 1)
                bad("node string depth runs past the text");
        }
        for (node_id c : p_.children)
            if (c == 0 || c >= count)
                bad("child id out of range");
    }

    parts p_;
};

/// Structural self-check. Returns a description of the first violation.
inline std::optional<std::string> check_structure(const suffix_index& ix)
{
    const std::size_t n = ix.size();
    const auto& p = ix.raw();
    std::vector<std::uint8_t> seen(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        pos_t i = ix.sa(k);
        if (i < 1 || i > n || seen[i])
            return "sa is not a permutation of [1,n]";
        seen[i] = 1;
        if (ix.order_of(i) != k)
            return "rank is not the inverse of sa at order " + std::to_string(k);
    }
    for (std::size_t k = 2; k <= n; ++k)
        if (!(ix.text().substr(ix.sa(k - 1) - 1) < ix.text().substr(ix.sa(k) - 1)))
            return "suffixes not strictly increasing at order " + std::to_string(k);

    if (ix.l(suffix_index::root()) != 1 || ix.r(suffix_index::root()) != n)
        return "root interval is not [1,n]";
    std::size_t leaves = 0;
    for (node_id v = 0; v < ix.node_count(); ++v) {
        if (ix.l(v) > ix.r(v))
            return "empty interval at node " + std::to_string(v);
        auto kids = ix.children(v);
        if (kids.empty()) {
            ++leaves;
            if (ix.l(v) != ix.r(v))
                return "leaf interval is not a singleton at node " + std::to_string(v);
            if (ix.string_depth(v) != n - ix.sa(ix.l(v)) + 1)
                return "leaf depth differs from suffix length at node " + std::to_string(v);
        } else {
            if (kids.size() == 1 && v != suffix_index::root())
                return "unary internal node " + std::to_string(v);
            pos_t expect = ix.l(v);
            int prev_key = -2;
            for (node_id c : kids) {
                if (ix.parent(c) != v)
                    return "parent link mismatch at node " + std::to_string(c);
                if (ix.l(c) != expect)
                    return "children intervals do not tile parent at node " + std::to_string(v);
                expect = ix.r(c) + 1;
                int key = ix.edge_key(c);
                if (key <= prev_key)
                    return "children not in increasing first-byte order at node " + std::to_string(v);
                prev_key = key;
                if (ix.string_depth(c) < ix.string_depth(v) || (key != -1 && ix.string_depth(c) == ix.string_depth(v)))
                    return "child string depth not below parent at node " + std::to_string(c);
            }
            if (expect != ix.r(v) + 1)
                return "children intervals do not cover parent at node " + std::to_string(v);
        }
        node_id par = ix.parent(v);
        bool top = par == no_node || ix.string_depth(par) <= p.tau;
        if (top != ix.is_top(v))
            return "top flag disagrees with cutoff at node " + std::to_string(v);
    }
    if (leaves != n)
        return "leaf count " + std::to_string(leaves) + " differs from n";
    return std::nullopt;
}

} // namespace srr

#endif // SRR_SUFFIX_INDEX_HPP
