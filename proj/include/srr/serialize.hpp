#ifndef SRR_SERIALIZE_HPP
#define SRR_SERIALIZE_HPP

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "reductions.hpp"
#include "srr_index.hpp"

// Binary index file, little-endian throughout.
//
//   "SRR1"  u32 version  u64 n  u64 u  u64 tau
//   section*: u64 byte length, payload
//     1 text bytes
//     2 labels (u64 each)
//     3 suffix array (u32 each)
//     4 node table
//     5 top-store table
//     6 2D structure
//     7 index kind and reduction parameters
namespace srr {

inline constexpr char file_magic[4] = {'S', 'R', 'R', '1'};
inline constexpr std::uint32_t file_version = 1;

enum class index_kind : std::uint32_t { srr = 0, prss = 1, interval = 2, gap = 3 };

inline const char* index_kind_name(index_kind k)
{
    switch (k) {
    case index_kind::srr: return "srr";
    case index_kind::prss: return "prss";
    case index_kind::interval: return "interval";
    case index_kind::gap: return "gap";
    }
    return "?";
}

using stored_index = std::variant<srr_index, prss_index, interval_index, gap_index>;

inline index_kind kind_of(const stored_index& s) { return static_cast<index_kind>(s.index()); }

inline const srr_index& inner_of(const stored_index& s)
{
    return std::visit(
        [](const auto& ix) -> const srr_index& {
            if constexpr (std::is_same_v<std::decay_t<decltype(ix)>, srr_index>)
                return ix;
            else
                return ix.inner();
        },
        s);
}

namespace detail {

class byte_writer {
public:
    void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
    void u16(std::uint16_t v) { le(v, 2); }
    void u32(std::uint32_t v) { le(v, 4); }
    void u64(std::uint64_t v) { le(v, 8); }
    void bytes(std::string_view s) { buf_.append(s); }

    template <class T>
    void array(const std::vector<T>& xs)
    {
        for (T x : xs) {
            if constexpr (sizeof(T) == 1)
                u8(static_cast<std::uint8_t>(x));
            else if constexpr (sizeof(T) == 2)
                u16(static_cast<std::uint16_t>(x));
            else if constexpr (sizeof(T) == 4)
                u32(static_cast<std::uint32_t>(x));
            else
                u64(static_cast<std::uint64_t>(x));
        }
    }

    /// Appends `inner` as a length-prefixed section.
    void section(const byte_writer& inner)
    {
        u64(inner.buf_.size());
        buf_.append(inner.buf_);
    }

    const std::string& str() const noexcept { return buf_; }
    std::string take() { return std::move(buf_); }

private:
    void le(std::uint64_t v, int width)
    {
        for (int i = 0; i < width; ++i)
            buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }

    std::string buf_;
};

class byte_reader {
public:
    explicit byte_reader(std::string_view data) : data_(data) {}

    std::uint8_t u8() { return static_cast<std::uint8_t>(le(1)); }
    std::uint16_t u16() { return static_cast<std::uint16_t>(le(2)); }
    std::uint32_t u32() { return static_cast<std::uint32_t>(le(4)); }
    std::uint64_t u64() { return le(8); }

    std::string_view bytes(std::uint64_t len)
    {
        need(len);
        auto s = data_.substr(pos_, len);
        pos_ += len;
        return s;
    }

    template <class T>
    std::vector<T> array(std::uint64_t count)
    {
        if (count > remaining() / sizeof(T))
            throw error(errc::corrupt_index, "array extends past end of section");
        std::vector<T> xs(count);
        for (auto& x : xs)
            x = static_cast<T>(le(sizeof(T)));
        return xs;
    }

    byte_reader section()
    {
        std::uint64_t len = u64();
        return byte_reader(bytes(len));
    }

    std::size_t remaining() const noexcept { return data_.size() - pos_; }

    void expect_end(const char* what) const
    {
        if (remaining() != 0)
            throw error(errc::corrupt_index, std::string("trailing bytes in ") + what);
    }

private:
    void need(std::uint64_t len) const
    {
        if (len > remaining())
            throw error(errc::corrupt_index, "unexpected end of index data");
    }

    std::uint64_t le(int width)
    {
        need(width);
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i)
            v |= std::uint64_t{static_cast<unsigned char>(data_[pos_ + i])} << (8 * i);
        pos_ += width;
        return v;
    }

    std::string_view data_;
    std::size_t pos_ = 0;
};

inline void write_nodes(byte_writer& w, const suffix_index::parts& p)
{
    w.u64(p.parent.size());
    w.array(p.parent);
    w.array(p.depth);
    w.array(p.l);
    w.array(p.r);
    w.array(p.child_begin);
    w.array(p.children);
    w.array(p.child_key);
    w.array(p.top);
}

inline void read_nodes(byte_reader& r, suffix_index::parts& p)
{
    const std::uint64_t count = r.u64();
    if (count == 0)
        throw error(errc::corrupt_index, "node table is empty");
    p.parent = r.array<node_id>(count);
    p.depth = r.array<pos_t>(count);
    p.l = r.array<pos_t>(count);
    p.r = r.array<pos_t>(count);
    p.child_begin = r.array<std::uint32_t>(count + 1);
    p.children = r.array<node_id>(count - 1);
    p.child_key = r.array<std::int16_t>(count - 1);
    p.top = r.array<std::uint8_t>(count);
}

/// rank is derived from sa rather than stored.
inline void derive_rank(suffix_index::parts& p)
{
    const std::size_t n = p.sa.size();
    p.rank.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        if (p.sa[k] < 1 || p.sa[k] > n || p.rank[p.sa[k] - 1] != 0)
            throw error(errc::corrupt_index, "stored suffix array is not a permutation");
        p.rank[p.sa[k] - 1] = static_cast<pos_t>(k + 1);
    }
}

inline void write_core(byte_writer& out, const srr_index& ix)
{
    const auto& sp = ix.suffixes().raw();
    const auto& rp = ix.raw();
    out.bytes(std::string_view(file_magic, 4));
    out.u32(file_version);
    out.u64(ix.size());
    out.u64(ix.u());
    out.u64(ix.tau());

    byte_writer text, labels, sa, nodes, tops, grid;
    text.bytes(ix.source().text);
    labels.array(ix.source().labels);
    sa.array(sp.sa);
    write_nodes(nodes, sp);

    tops.u64(rp.top_nodes.size());
    tops.array(rp.top_nodes);
    tops.array(rp.top_offsets);
    tops.u64(rp.top_labels.size());
    tops.array(rp.top_labels);
    tops.array(rp.top_positions);

    const auto& g = ix.points().raw();
    grid.u64(g.n);
    grid.u64(g.alphabet.size());
    grid.array(g.alphabet);
    grid.u64(g.level_words.size());
    for (const auto& words : g.level_words)
        grid.array(words);
    grid.array(g.bottom_x);
    grid.array(g.payload);

    for (const auto* s : {&text, &labels, &sa, &nodes, &tops, &grid})
        out.section(*s);
}

inline srr_index read_core(byte_reader& in)
{
    auto head = in.bytes(4);
    if (std::memcmp(head.data(), file_magic, 4) != 0)
        throw error(errc::bad_magic, "not an SRR1 index file");
    const std::uint32_t version = in.u32();
    if (version != file_version)
        throw error(errc::bad_version, "unsupported index format version " + std::to_string(version));
    const std::uint64_t n = in.u64();
    const std::uint64_t u = in.u64();
    const std::uint64_t tau = in.u64();
    if (n == 0 || n >= 0xffffffffu)
        throw error(errc::corrupt_index, "bad text length in header");

    srr_index::parts rp;
    suffix_index::parts sp;

    auto text = in.section();
    rp.source.text.assign(text.bytes(n));
    text.expect_end("text section");

    auto labels = in.section();
    rp.source.labels = labels.array<label_t>(n);
    rp.source.u = u;
    labels.expect_end("label section");

    auto sa = in.section();
    sp.sa = sa.array<pos_t>(n);
    sa.expect_end("suffix array section");
    sp.text = rp.source.text;
    sp.tau = tau;
    derive_rank(sp);

    auto nodes = in.section();
    read_nodes(nodes, sp);
    nodes.expect_end("node table section");
    rp.sidx = suffix_index::from_parts(std::move(sp));

    auto tops = in.section();
    const std::uint64_t top_count = tops.u64();
    rp.top_nodes = tops.array<node_id>(top_count);
    rp.top_offsets = tops.array<std::uint64_t>(top_count + 1);
    const std::uint64_t entries = tops.u64();
    rp.top_labels = tops.array<label_t>(entries);
    rp.top_positions = tops.array<pos_t>(entries);
    tops.expect_end("top-store section");

    auto grid = in.section();
    two_dim_store::parts g;
    g.n = grid.u64();
    if (g.n != n)
        throw error(errc::corrupt_index, "2D store size differs from n");
    g.alphabet = grid.array<label_t>(grid.u64());
    const std::uint64_t levels = grid.u64();
    if (levels > 64)
        throw error(errc::corrupt_index, "too many wavelet levels");
    for (std::uint64_t lv = 0; lv < levels; ++lv)
        g.level_words.push_back(grid.array<std::uint64_t>((n + 63) / 64));
    g.bottom_x = grid.array<pos_t>(n);
    g.payload = grid.array<pos_t>(n);
    grid.expect_end("2D section");
    rp.global = two_dim_store::from_parts(std::move(g));

    return srr_index::from_parts(std::move(rp));
}

} // namespace detail

/// Serializes any index kind to the binary file format.
inline std::string to_bytes(const stored_index& s)
{
    detail::byte_writer out;
    detail::write_core(out, inner_of(s));

    detail::byte_writer ext;
    const index_kind kind = kind_of(s);
    ext.u32(static_cast<std::uint32_t>(kind));
    if (kind == index_kind::interval) {
        const auto& pi = std::get<interval_index>(s).intervals();
        ext.u64(pi.size());
        for (auto [a, b] : pi) {
            ext.u32(a);
            ext.u32(b);
        }
    } else if (kind == index_kind::gap) {
        const auto& g = std::get<gap_index>(s);
        const auto& rp = g.reverse().raw();
        ext.u64(g.gap());
        ext.u64(rp.tau);
        ext.bytes(rp.text);
        ext.array(rp.sa);
        detail::write_nodes(ext, rp);
    }
    out.section(ext);
    return out.take();
}

inline stored_index from_bytes(std::string_view data)
{
    detail::byte_reader in(data);
    srr_index core = detail::read_core(in);
    const std::size_t n = core.size();

    auto ext = in.section();
    in.expect_end("index file");
    const std::uint32_t kind = ext.u32();
    stored_index out;
    switch (static_cast<index_kind>(kind)) {
    case index_kind::srr:
        out = std::move(core);
        break;
    case index_kind::prss:
        out = prss_index(std::move(core));
        break;
    case index_kind::interval: {
        interval_set pi;
        const std::uint64_t count = ext.u64();
        if (count > ext.remaining() / 8)
            throw error(errc::corrupt_index, "interval table extends past end of section");
        for (std::uint64_t j = 0; j < count; ++j) {
            pos_t a = ext.u32();
            pos_t b = ext.u32();
            if (a < 1 || a > b || b > n)
                throw error(errc::corrupt_index, "stored interval outside [1,n]");
            pi.emplace_back(a, b);
        }
        out = interval_index(std::move(core), std::move(pi));
        break;
    }
    case index_kind::gap: {
        const std::uint64_t d = ext.u64();
        suffix_index::parts rp;
        rp.tau = ext.u64();
        rp.text.assign(ext.bytes(n));
        rp.sa = ext.array<pos_t>(n);
        detail::derive_rank(rp);
        detail::read_nodes(ext, rp);
        std::string expect(core.source().text.rbegin(), core.source().text.rend());
        if (rp.text != expect)
            throw error(errc::corrupt_index, "reverse index text is not the reversed text");
        out = gap_index(std::move(core), suffix_index::from_parts(std::move(rp)), d);
        break;
    }
    default:
        throw error(errc::corrupt_index, "unknown index kind " + std::to_string(kind));
    }
    ext.expect_end("index kind section");
    return out;
}

inline void save(const std::filesystem::path& path, const stored_index& s)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw error(errc::io, "cannot open " + path.string() + " for writing");
    const std::string bytes = to_bytes(s);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f)
        throw error(errc::io, "write to " + path.string() + " failed");
}

inline stored_index load(const std::filesystem::path& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw error(errc::io, "cannot open " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (f.bad())
        throw error(errc::io, "read from " + path.string() + " failed");
    return from_bytes(bytes);
}

} // namespace srr

#endif // SRR_SERIALIZE_HPP
