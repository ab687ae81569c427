#ifndef SRR_RANGE_STRUCTURES_HPP
#define SRR_RANGE_STRUCTURES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "text_model.hpp"

namespace srr {

/// Read-only 1D range structure over labels sorted ascending, each paired
/// with the text position it came from. Views are cheap to copy and are how
/// the per-node stores inside an index are queried.
class one_dim_view {
public:
    one_dim_view() = default;
    one_dim_view(std::span<const label_t> labels, std::span<const pos_t> positions)
        : labels_(labels), positions_(positions)
    {
    }

    std::size_t size() const noexcept { return labels_.size(); }
    std::span<const label_t> labels() const noexcept { return labels_; }
    std::span<const pos_t> positions() const noexcept { return positions_; }

    /// Index range [first, last) of entries with label in r.
    std::pair<std::size_t, std::size_t> bounds(label_range r) const
    {
        auto lo = std::lower_bound(labels_.begin(), labels_.end(), r.a);
        auto hi = std::upper_bound(lo, labels_.end(), r.b);
        return {static_cast<std::size_t>(lo - labels_.begin()), static_cast<std::size_t>(hi - labels_.begin())};
    }

    /// Positions with label in r, by ascending label.
    template <class Out>
    void report(label_range r, Out& out) const
    {
        auto [first, last] = bounds(r);
        out.insert(out.end(), positions_.begin() + first, positions_.begin() + last);
    }

    std::vector<pos_t> report(label_range r) const
    {
        std::vector<pos_t> out;
        report(r, out);
        return out;
    }

    std::size_t count(label_range r) const
    {
        auto [first, last] = bounds(r);
        return last - first;
    }

    bool empty(label_range r) const
    {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), r.a);
        return it == labels_.end() || *it > r.b;
    }

private:
    std::span<const label_t> labels_;
    std::span<const pos_t> positions_;
};

/// Owning sorted multiset of (label, position).
class one_dim_store {
public:
    one_dim_store() = default;

    /// entries: (label, position) pairs in any order.
    explicit one_dim_store(std::vector<std::pair<label_t, pos_t>> entries)
    {
        std::stable_sort(entries.begin(), entries.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        labels_.reserve(entries.size());
        positions_.reserve(entries.size());
        for (auto [lab, pos] : entries) {
            labels_.push_back(lab);
            positions_.push_back(pos);
        }
    }

    one_dim_view view() const noexcept { return {labels_, positions_}; }
    std::size_t size() const noexcept { return labels_.size(); }

    std::vector<pos_t> report(label_range r) const { return view().report(r); }
    std::size_t count(label_range r) const { return view().count(r); }
    bool empty(label_range r) const { return view().empty(r); }

private:
    std::vector<label_t> labels_;
    std::vector<pos_t> positions_;
};

/// Plain bit vector with a two-level rank directory.
class rank_bitvector {
public:
    rank_bitvector() = default;
    explicit rank_bitvector(std::size_t bits) : size_(bits), words_((bits + 63) / 64, 0) {}

    rank_bitvector(std::size_t bits, std::vector<std::uint64_t> words) : size_(bits), words_(std::move(words))
    {
        if (words_.size() != (bits + 63) / 64)
            throw error(errc::corrupt_index, "bit vector word count mismatch");
        index();
    }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    /// Must be called after the last set().
    void index()
    {
        blocks_.assign(words_.size() + 1, 0);
        for (std::size_t w = 0; w < words_.size(); ++w)
            blocks_[w + 1] = blocks_[w] + static_cast<std::uint32_t>(std::popcount(words_[w]));
    }

    /// Number of ones in [0, i).
    std::size_t rank1(std::size_t i) const
    {
        std::size_t w = i >> 6, b = i & 63;
        std::size_t r = blocks_[w];
        if (b)
            r += std::popcount(words_[w] & ((std::uint64_t{1} << b) - 1));
        return r;
    }
    std::size_t rank0(std::size_t i) const { return i - rank1(i); }

    std::size_t size() const noexcept { return size_; }
    std::size_t ones() const noexcept { return blocks_.empty() ? 0 : blocks_.back(); }
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint32_t> blocks_;
};

/// Static 2D point set {(x, y)} with x a permutation of [1, n], answering
/// orthogonal rectangle report / count / emptiness.
///
/// Backed by a wavelet matrix over rank-reduced y-values in x order. The
/// bottom level keeps the x of every element so reporting walks down only
/// the nonempty branches and never needs select.
class two_dim_store {
public:
    struct parts {
        std::uint64_t n = 0;
        std::vector<label_t> alphabet;           // distinct y values, ascending
        std::vector<std::vector<std::uint64_t>> level_words;
        std::vector<pos_t> bottom_x;             // x (1-based) of each bottom-level slot
        std::vector<pos_t> payload;              // payload[x-1], typically a text position

        friend bool operator==(const parts&, const parts&) = default;
    };

    two_dim_store() = default;

    /// ys[x-1] is the y of the point at x; payload[x-1] is what report returns.
    two_dim_store(std::span<const label_t> ys, std::vector<pos_t> payload)
    {
        if (ys.size() != payload.size())
            throw error(errc::length_mismatch, "2D store needs one payload per point");
        const std::size_t n = ys.size();
        p_.n = n;
        p_.payload = std::move(payload);
        p_.alphabet.assign(ys.begin(), ys.end());
        std::sort(p_.alphabet.begin(), p_.alphabet.end());
        p_.alphabet.erase(std::unique(p_.alphabet.begin(), p_.alphabet.end()), p_.alphabet.end());

        std::vector<std::uint32_t> code(n);
        for (std::size_t i = 0; i < n; ++i)
            code[i] = static_cast<std::uint32_t>(std::lower_bound(p_.alphabet.begin(), p_.alphabet.end(), ys[i]) -
                                                 p_.alphabet.begin());
        const unsigned bits = code_bits(p_.alphabet.size());

        std::vector<pos_t> xs(n);
        std::iota(xs.begin(), xs.end(), pos_t{1});
        std::vector<std::uint32_t> next_code(n);
        std::vector<pos_t> next_x(n);
        levels_.clear();
        for (unsigned lv = 0; lv < bits; ++lv) {
            const unsigned shift = bits - 1 - lv;
            rank_bitvector bv(n);
            std::size_t zeros = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if ((code[i] >> shift) & 1u)
                    bv.set(i);
                else
                    ++zeros;
            }
            bv.index();
            std::size_t z = 0, o = zeros;
            for (std::size_t i = 0; i < n; ++i) {
                if ((code[i] >> shift) & 1u) {
                    next_code[o] = code[i];
                    next_x[o++] = xs[i];
                } else {
                    next_code[z] = code[i];
                    next_x[z++] = xs[i];
                }
            }
            code.swap(next_code);
            xs.swap(next_x);
            p_.level_words.push_back(bv.words());
            levels_.push_back(std::move(bv));
        }
        p_.bottom_x = std::move(xs);
    }

    static two_dim_store from_parts(parts p)
    {
        two_dim_store s;
        const std::size_t n = p.n;
        if (p.payload.size() != n || p.bottom_x.size() != n || p.level_words.size() != code_bits(p.alphabet.size()))
            throw error(errc::corrupt_index, "2D store section sizes disagree");
        if (!std::is_sorted(p.alphabet.begin(), p.alphabet.end()) ||
            std::adjacent_find(p.alphabet.begin(), p.alphabet.end()) != p.alphabet.end())
            throw error(errc::corrupt_index, "2D store alphabet not strictly increasing");
        for (pos_t x : p.bottom_x)
            if (x < 1 || x > n)
                throw error(errc::corrupt_index, "2D store x out of range");
        for (const auto& w : p.level_words)
            s.levels_.emplace_back(n, w);
        s.p_ = std::move(p);
        return s;
    }

    const parts& raw() const noexcept { return p_; }
    std::size_t size() const noexcept { return p_.n; }

    /// Payloads of points in [x1, x2] x r, by ascending x.
    std::vector<pos_t> report(std::size_t x1, std::size_t x2, label_range r) const
    {
        std::vector<pos_t> xs;
        collect_x(x1, x2, r, xs);
        std::sort(xs.begin(), xs.end());
        std::vector<pos_t> out;
        out.reserve(xs.size());
        for (pos_t x : xs)
            out.push_back(p_.payload[x - 1]);
        return out;
    }

    /// Payloads of points in [x1, x2] x r, unordered.
    template <class Out>
    void report_unordered(std::size_t x1, std::size_t x2, label_range r, Out& out) const
    {
        std::vector<pos_t> xs;
        collect_x(x1, x2, r, xs);
        for (pos_t x : xs)
            out.push_back(p_.payload[x - 1]);
    }

    std::size_t count(std::size_t x1, std::size_t x2, label_range r) const
    {
        auto [lo, hi] = code_bounds(r);
        if (lo >= hi || x1 > x2 || x1 < 1 || x2 > p_.n)
            return 0;
        return count_less(x1 - 1, x2, hi) - count_less(x1 - 1, x2, lo);
    }

    bool empty(std::size_t x1, std::size_t x2, label_range r) const
    {
        auto [lo, hi] = code_bounds(r);
        if (lo >= hi || x1 > x2 || x1 < 1 || x2 > p_.n)
            return true;
        return !any_in(0, x1 - 1, x2, 0, std::size_t{1} << levels_.size(), lo, hi);
    }

private:
    static unsigned code_bits(std::size_t sigma)
    {
        unsigned b = 0;
        while ((std::size_t{1} << b) < sigma)
            ++b;
        return b;
    }

    /// Codes [lo, hi) whose labels fall in r.
    std::pair<std::size_t, std::size_t> code_bounds(label_range r) const
    {
        auto lo = std::lower_bound(p_.alphabet.begin(), p_.alphabet.end(), r.a);
        auto hi = std::upper_bound(lo, p_.alphabet.end(), r.b);
        return {static_cast<std::size_t>(lo - p_.alphabet.begin()), static_cast<std::size_t>(hi - p_.alphabet.begin())};
    }

    /// Elements in slots [s, e) of level 0 with code < c.
    std::size_t count_less(std::size_t s, std::size_t e, std::size_t c) const
    {
        const std::size_t bits = levels_.size();
        if (c >= (std::size_t{1} << bits))
            return e - s;
        std::size_t result = 0;
        for (std::size_t lv = 0; lv < bits && s < e; ++lv) {
            const auto& bv = levels_[lv];
            const std::size_t zeros = bv.size() - bv.ones();
            const bool bit = (c >> (bits - 1 - lv)) & 1u;
            std::size_t s0 = bv.rank0(s), e0 = bv.rank0(e);
            if (bit) {
                result += e0 - s0;
                s = zeros + (s - s0);
                e = zeros + (e - e0);
            } else {
                s = s0;
                e = e0;
            }
        }
        return result;
    }

    /// Walks nonempty branches whose code prefix interval [node_lo, node_hi)
    /// meets [lo, hi).
    template <class Visit>
    void walk(std::size_t lv, std::size_t s, std::size_t e, std::size_t node_lo, std::size_t node_hi, std::size_t lo,
              std::size_t hi, Visit&& visit) const
    {
        if (s >= e || node_hi <= lo || hi <= node_lo)
            return;
        if (lv == levels_.size() || (lo <= node_lo && node_hi <= hi)) {
            visit(lv, s, e);
            return;
        }
        const auto& bv = levels_[lv];
        const std::size_t zeros = bv.size() - bv.ones();
        const std::size_t mid = node_lo + (node_hi - node_lo) / 2;
        std::size_t s0 = bv.rank0(s), e0 = bv.rank0(e);
        walk(lv + 1, s0, e0, node_lo, mid, lo, hi, visit);
        walk(lv + 1, zeros + (s - s0), zeros + (e - e0), mid, node_hi, lo, hi, visit);
    }

    bool any_in(std::size_t lv, std::size_t s, std::size_t e, std::size_t node_lo, std::size_t node_hi, std::size_t lo,
                std::size_t hi) const
    {
        bool hit = false;
        walk(lv, s, e, node_lo, node_hi, lo, hi, [&](std::size_t, std::size_t, std::size_t) { hit = true; });
        return hit;
    }

    void collect_x(std::size_t x1, std::size_t x2, label_range r, std::vector<pos_t>& xs) const
    {
        auto [lo, hi] = code_bounds(r);
        if (lo >= hi || x1 > x2 || x1 < 1 || x2 > p_.n)
            return;
        collect(0, x1 - 1, x2, 0, std::size_t{1} << levels_.size(), lo, hi, xs);
    }

    void collect(std::size_t lv, std::size_t s, std::size_t e, std::size_t node_lo, std::size_t node_hi,
                 std::size_t lo, std::size_t hi, std::vector<pos_t>& xs) const
    {
        if (s >= e || node_hi <= lo || hi <= node_lo)
            return;
        if (lv == levels_.size()) {
            for (std::size_t k = s; k < e; ++k)
                xs.push_back(p_.bottom_x[k]);
            return;
        }
        const auto& bv = levels_[lv];
        const std::size_t zeros = bv.size() - bv.ones();
        const std::size_t mid = node_lo + (node_hi - node_lo) / 2;
        std::size_t s0 = bv.rank0(s), e0 = bv.rank0(e);
        collect(lv + 1, s0, e0, node_lo, mid, lo, hi, xs);
        collect(lv + 1, zeros + (s - s0), zeros + (e - e0), mid, node_hi, lo, hi, xs);
    }

    parts p_;
    std::vector<rank_bitvector> levels_;
};

} // namespace srr

#endif // SRR_RANGE_STRUCTURES_HPP
