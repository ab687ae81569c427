// srr: build, query, verify and benchmark substring range indexes.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <srr/oracle.hpp>
#include <srr/reductions.hpp>
#include <srr/serialize.hpp>
#include <srr/srr_index.hpp>
#include <srr/synthetic.hpp>
#include <srr/verify.hpp>

namespace {

enum exit_code : int { exit_ok = 0, exit_mismatch = 1, exit_usage = 2, exit_io = 3, exit_validation = 4 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_for(srr::errc e)
{
    switch (e) {
    case srr::errc::io: return exit_io;
    case srr::errc::wrong_kind: return exit_usage;
    default: return exit_validation;
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw srr::error(srr::errc::io, "cannot open " + path);
    std::string s((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (f.bad())
        throw srr::error(srr::errc::io, "read from " + path + " failed");
    return s;
}

std::uint64_t parse_u64(std::string_view tok, const std::string& what, srr::errc on_error)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw srr::error(on_error, "malformed " + what + " '" + std::string(tok) + "'");
    return v;
}

std::vector<srr::label_t> read_labels(const std::string& path)
{
    std::istringstream in(read_file(path));
    std::vector<srr::label_t> labels;
    std::string tok;
    while (in >> tok)
        labels.push_back(parse_u64(tok, "label", srr::errc::label_out_of_range));
    return labels;
}

srr::interval_set read_intervals(const std::string& path)
{
    std::istringstream in(read_file(path));
    srr::interval_set pi;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string s, f, extra;
        if (!(ls >> s))
            continue; // blank line
        if (!(ls >> f) || (ls >> extra))
            throw srr::error(srr::errc::interval_out_of_bounds, "interval line needs exactly two numbers: '" + line + "'");
        const auto a = parse_u64(s, "interval start", srr::errc::interval_out_of_bounds);
        const auto b = parse_u64(f, "interval end", srr::errc::interval_out_of_bounds);
        if (a > 0xffffffffu || b > 0xffffffffu)
            throw srr::error(srr::errc::interval_out_of_bounds, "interval endpoint too large: '" + line + "'");
        pi.emplace_back(static_cast<srr::pos_t>(a), static_cast<srr::pos_t>(b));
    }
    return pi;
}

std::string decode_pattern(const std::string& arg, bool hex)
{
    if (!hex)
        return arg;
    if (arg.size() % 2 != 0)
        throw usage_error("hex pattern needs an even number of digits");
    std::string out;
    for (std::size_t i = 0; i < arg.size(); i += 2) {
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(arg.data() + i, arg.data() + i + 2, v, 16);
        if (ec != std::errc() || ptr != arg.data() + i + 2)
            throw usage_error("bad hex digit in pattern '" + arg + "'");
        out.push_back(static_cast<char>(v));
    }
    return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& arg)
{
    auto colon = arg.find(':');
    if (colon == std::string::npos)
        throw usage_error("range must be a:b, got '" + arg + "'");
    std::uint64_t a = 0, b = 0;
    auto pa = std::from_chars(arg.data(), arg.data() + colon, a);
    auto pb = std::from_chars(arg.data() + colon + 1, arg.data() + arg.size(), b);
    if (colon == 0 || colon + 1 == arg.size() || pa.ec != std::errc() || pa.ptr != arg.data() + colon ||
        pb.ec != std::errc() || pb.ptr != arg.data() + arg.size())
        throw usage_error("range must be a:b with decimal bounds, got '" + arg + "'");
    return {a, b};
}

void print_positions(const std::vector<srr::pos_t>& hits)
{
    std::string out;
    for (auto p : hits) {
        out += std::to_string(p);
        out += '\n';
    }
    out += "occ=" + std::to_string(hits.size()) + '\n';
    std::cout << out;
}

// ---------------------------------------------------------------- build

struct build_args {
    std::string text_path;
    std::string labels_path;
    bool positional = false;
    std::string intervals_path;
    std::optional<std::uint64_t> gap;
    std::optional<std::uint64_t> u;
    std::optional<std::uint64_t> tau;
    bool counting_layout = false;
    std::string out_path;
};

int cmd_build(const build_args& a)
{
    const int sources = !a.labels_path.empty() + a.positional + !a.intervals_path.empty() + a.gap.has_value();
    if (sources != 1)
        throw usage_error("build needs exactly one of --labels, --positional, --intervals, --gap");

    std::string text = read_file(a.text_path);
    const auto t0 = std::chrono::steady_clock::now();
    const auto policy = a.counting_layout ? srr::tau_policy::counting : srr::tau_policy::reporting;
    auto pick_tau = [&](std::size_t n, srr::label_t u) { return a.tau ? *a.tau : srr::default_tau(policy, n, u); };

    srr::stored_index ix;
    if (!a.labels_path.empty()) {
        srr::labeled_string s;
        s.labels = read_labels(a.labels_path);
        // without --u the universe is the largest label given
        s.u = a.u ? *a.u : (s.labels.empty() ? 0 : *std::max_element(s.labels.begin(), s.labels.end()));
        s.text = std::move(text);
        srr::validate_or_throw(s);
        const auto tau = pick_tau(s.size(), s.u);
        ix = srr::srr_index(std::move(s), tau);
    } else if (a.positional) {
        if (text.empty())
            throw srr::error(srr::errc::empty_text, "text file is empty");
        const auto tau = pick_tau(text.size(), text.size());
        ix = srr::prss_index(std::move(text), tau);
    } else if (!a.intervals_path.empty()) {
        if (text.empty())
            throw srr::error(srr::errc::empty_text, "text file is empty");
        auto pi = read_intervals(a.intervals_path);
        const auto tau = pick_tau(text.size(), text.size());
        ix = srr::interval_index(std::move(text), std::move(pi), tau);
    } else {
        if (text.empty())
            throw srr::error(srr::errc::empty_text, "text file is empty");
        const auto tau = pick_tau(text.size(), text.size());
        ix = srr::gap_index(std::move(text), *a.gap, tau);
    }
    const auto t1 = std::chrono::steady_clock::now();
    srr::save(a.out_path, ix);

    const auto& core = srr::inner_of(ix);
    std::cout << "kind=" << srr::index_kind_name(srr::kind_of(ix)) << '\n'
              << "n=" << core.size() << '\n'
              << "u=" << core.u() << '\n'
              << "tau=" << core.tau() << '\n'
              << "nodes=" << core.suffixes().node_count() << '\n';
    if (auto* g = std::get_if<srr::gap_index>(&ix))
        std::cout << "d=" << g->gap() << '\n';
    std::cout << "build_seconds=" << std::chrono::duration<double>(t1 - t0).count() << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- query

struct query_args {
    std::string index_path;
    std::string pattern;
    std::string p1;
    std::string p2;
    std::string range;
    bool hex = false;
};

template <class T>
const T& require_kind(const srr::stored_index& ix, const char* sub)
{
    const T* p = std::get_if<T>(&ix);
    if (!p)
        throw srr::error(srr::errc::wrong_kind, std::string("'query ") + sub + "' needs a " + sub + " index, got a " +
                                                    srr::index_kind_name(srr::kind_of(ix)) + " index");
    return *p;
}

int cmd_query(const std::string& sub, const query_args& a)
{
    const bool gapped = sub == "gap";
    if (gapped) {
        if (a.p1.empty() || a.p2.empty())
            throw usage_error("query gap needs --p1 and --p2");
    } else if (a.range.empty()) {
        throw usage_error("query " + sub + " needs --range a:b");
    }
    std::pair<std::uint64_t, std::uint64_t> range{0, 0};
    if (!gapped)
        range = parse_range(a.range);
    const std::string p = decode_pattern(a.pattern, a.hex);

    const srr::stored_index ix = srr::load(a.index_path);
    const srr::label_range r{range.first, range.second};

    if (sub == "report") {
        print_positions(srr::inner_of(ix).report(p, r));
    } else if (sub == "count") {
        std::cout << srr::inner_of(ix).count(p, r) << '\n';
    } else if (sub == "empty") {
        std::cout << (srr::inner_of(ix).empty(p, r) ? "true" : "false") << '\n';
    } else if (sub == "prss") {
        print_positions(require_kind<srr::prss_index>(ix, "prss").query(p, range.first, range.second));
    } else if (sub == "interval") {
        print_positions(require_kind<srr::interval_index>(ix, "interval").query(p, range.first, range.second));
    } else {
        const auto& g = require_kind<srr::gap_index>(ix, "gap");
        print_positions(g.query(decode_pattern(a.p1, a.hex), decode_pattern(a.p2, a.hex)));
    }
    return exit_ok;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const srr::workload_spec& spec, bool stats)
{
    const auto rep = srr::run_verify(spec);
    if (stats) {
        std::cout << "queries=" << rep.queries << " top_path=" << rep.top_path << " bottom_path=" << rep.bottom_path
                  << " no_locus=" << rep.no_locus << " structure_violations=" << rep.structure_violations
                  << " round_trip_failures=" << rep.round_trip_failures << '\n';
    }
    if (rep.ok()) {
        std::cout << rep.passed << '/' << rep.trials << " ok\n";
        return exit_ok;
    }
    std::cout << rep.passed << '/' << rep.trials << " FAILED\n" << "first counterexample: " << rep.counterexample << '\n';
    return exit_mismatch;
}

// ---------------------------------------------------------------- bench

struct bench_args {
    std::string index_path;
    std::size_t generate = 0;
    std::uint64_t seed = 1;
    std::vector<std::size_t> lengths{1, 2, 4, 8, 16, 32};
    std::size_t queries = 200;
};

int cmd_bench(const bench_args& a)
{
    srr::stored_index stored;
    if (!a.index_path.empty())
        stored = srr::load(a.index_path);
    else if (a.generate > 0)
        stored = srr::prss_index(srr::english_like_text(a.generate, a.seed));
    else
        throw usage_error("bench needs --index FILE or --generate BYTES");
    const auto& ix = srr::inner_of(stored);
    const std::string_view text = ix.source().text;
    const srr::label_range full{0, ix.u()};

    std::uint64_t state = a.seed * 0x9e3779b97f4a7c15ull + 1;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };

    struct bucket {
        std::string name;
        std::vector<std::string> patterns;
    };
    std::vector<bucket> buckets;
    for (std::size_t m : a.lengths) {
        if (m == 0 || m > text.size())
            continue;
        bucket b{"m=" + std::to_string(m), {}};
        for (std::size_t q = 0; q < a.queries; ++q)
            b.patterns.emplace_back(text.substr(next() % (text.size() - m + 1), m));
        buckets.push_back(std::move(b));
    }
    {
        // a byte absent from the text makes the pattern miss at the root
        int missing = -1;
        std::vector<bool> seen(256, false);
        for (unsigned char c : text)
            seen[c] = true;
        for (int c = 0; c < 256 && missing < 0; ++c)
            if (!seen[c])
                missing = c;
        if (missing >= 0) {
            bucket b{"absent", {}};
            for (std::size_t q = 0; q < a.queries; ++q)
                b.patterns.emplace_back(8, static_cast<char>(missing));
            buckets.push_back(std::move(b));
        }
    }

    std::cout << "n=" << ix.size() << " u=" << ix.u() << " tau=" << ix.tau() << '\n';
    std::cout << "bucket\tqueries\tmedian_us\tmean_occ\tTopTree1D\tBottom2D\tNoLocus\tpath\n";
    for (const auto& b : buckets) {
        std::vector<double> lat;
        std::size_t paths[3] = {0, 0, 0};
        double occ = 0;
        for (const auto& p : b.patterns) {
            const auto t0 = std::chrono::steady_clock::now();
            auto [hits, st] = ix.report_with_stats(p, full);
            const auto t1 = std::chrono::steady_clock::now();
            lat.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
            ++paths[static_cast<int>(st.path)];
            occ += static_cast<double>(hits.size());
        }
        std::sort(lat.begin(), lat.end());
        const auto dominant = static_cast<srr::query_path>(std::max_element(paths, paths + 3) - paths);
        std::cout << b.name << '\t' << b.patterns.size() << '\t' << lat[lat.size() / 2] << '\t'
                  << occ / static_cast<double>(b.patterns.size()) << '\t' << paths[0] << '\t' << paths[1] << '\t'
                  << paths[2] << '\t' << srr::query_path_name(dominant) << '\n';
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Substring range reporting indexes: build, query, verify, bench"};
    app.require_subcommand(1);

    build_args ba;
    auto* build = app.add_subcommand("build", "Build an index file from a text");
    build->add_option("--text", ba.text_path, "Text file (raw bytes)")->required();
    build->add_option("--labels", ba.labels_path, "File of n whitespace-separated decimal labels");
    build->add_flag("--positional", ba.positional, "Label each position with itself (position-restricted search)");
    build->add_option("--intervals", ba.intervals_path, "File of 's f' interval lines");
    build->add_option("--gap", ba.gap, "Gap length d for gapped pattern queries");
    build->add_option("--u", ba.u, "Label universe bound for --labels (default: largest label)");
    build->add_option("--tau", ba.tau, "String-depth cutoff of the top tree");
    build->add_flag("--counting-layout", ba.counting_layout, "Use the counting cutoff log n / log log n");
    build->add_option("--out", ba.out_path, "Output index file")->required();

    query_args qa;
    std::string query_kind;
    auto* query = app.add_subcommand("query", "Query an index file");
    query->add_option("kind", query_kind, "report | count | empty | prss | interval | gap")
        ->required()
        ->check(CLI::IsMember({"report", "count", "empty", "prss", "interval", "gap"}));
    query->add_option("--index", qa.index_path, "Index file")->required();
    query->add_option("--pattern", qa.pattern, "Pattern bytes");
    query->add_option("--p1", qa.p1, "Gapped query: pattern before the gap");
    query->add_option("--p2", qa.p2, "Gapped query: pattern after the gap");
    query->add_option("--range", qa.range, "Inclusive range a:b");
    query->add_flag("--hex", qa.hex, "Patterns are hex-encoded");

    srr::workload_spec spec;
    std::string mode = "srr";
    bool stats = false;
    auto* verify = app.add_subcommand("verify", "Check indexes against brute force on random workloads");
    verify->add_option("--mode", mode, "srr | prss | interval | gap")
        ->check(CLI::IsMember({"srr", "prss", "interval", "gap"}));
    verify->add_option("--trials", spec.trials, "Number of random instances")->check(CLI::PositiveNumber);
    verify->add_option("--seed", spec.seed, "RNG seed");
    verify->add_option("--max-len", spec.max_len, "Maximum text length")->check(CLI::PositiveNumber);
    verify->add_option("--alphabet", spec.alphabet, "Bytes to draw texts from");
    verify->add_option("--label-bound", spec.label_bound, "Label universe u for srr mode");
    verify->add_flag("--stats", stats, "Also print query path counts");

    bench_args bn;
    auto* bench = app.add_subcommand("bench", "Median report latency per pattern-length bucket");
    bench->add_option("--index", bn.index_path, "Index file");
    bench->add_option("--generate", bn.generate, "Build a position index over this many bytes of synthetic text");
    bench->add_option("--seed", bn.seed, "Seed for text and pattern sampling");
    bench->add_option("--lengths", bn.lengths, "Pattern lengths")->delimiter(',');
    bench->add_option("--queries", bn.queries, "Queries per bucket")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*build)
            return cmd_build(ba);
        if (*query)
            return cmd_query(query_kind, qa);
        if (*verify) {
            if (spec.alphabet.empty())
                throw usage_error("--alphabet must not be empty");
            spec.mode = mode == "prss"       ? srr::workload_mode::prss
                        : mode == "interval" ? srr::workload_mode::interval
                        : mode == "gap"      ? srr::workload_mode::gap
                                             : srr::workload_mode::srr;
            return cmd_verify(spec, stats);
        }
        return cmd_bench(bn);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const srr::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    }
}
