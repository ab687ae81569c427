#ifndef SRR_VERIFY_HPP
#define SRR_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "oracle.hpp"
#include "reductions.hpp"
#include "serialize.hpp"
#include "srr_index.hpp"

// Seeded random workloads checked against the brute-force oracles.
namespace srr {

enum class workload_mode { srr, prss, interval, gap };

inline const char* workload_mode_name(workload_mode m)
{
    switch (m) {
    case workload_mode::srr: return "srr";
    case workload_mode::prss: return "prss";
    case workload_mode::interval: return "interval";
    case workload_mode::gap: return "gap";
    }
    return "?";
}

struct workload_spec {
    std::size_t trials = 1000;
    std::size_t max_len = 512;
    std::string alphabet = "abcd";
    label_t label_bound = 1024;
    std::uint64_t seed = 42;
    workload_mode mode = workload_mode::srr;
    std::size_t queries_per_trial = 8;
    std::size_t max_intervals = 16;
    std::size_t max_gap = 8;
    bool check_structure = true;
    bool round_trip = true;
};

struct verify_report {
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::size_t queries = 0;
    std::size_t top_path = 0;    // queries answered from a top-tree store
    std::size_t bottom_path = 0; // queries answered from the 2D store
    std::size_t no_locus = 0;
    std::size_t structure_violations = 0;
    std::size_t round_trip_failures = 0;
    std::string counterexample; // first mismatch, empty when all passed

    bool ok() const noexcept { return passed == trials; }
};

namespace detail {

/// Deterministic across standard libraries, unlike <random> distributions.
class workload_rng {
public:
    explicit workload_rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
    {
        return lo + gen_() % (hi - lo + 1);
    }

    bool coin() { return gen_() & 1u; }

private:
    std::mt19937_64 gen_;
};

inline std::string random_text(workload_rng& rng, std::size_t len, std::string_view alphabet)
{
    std::string s(len, '\0');
    for (auto& c : s)
        c = alphabet[rng.uniform(0, alphabet.size() - 1)];
    return s;
}

/// Half the time a substring of text (possibly empty when allow_empty), else random bytes.
inline std::string random_pattern(workload_rng& rng, std::string_view text, std::string_view alphabet,
                                  bool allow_empty)
{
    const std::size_t n = text.size();
    if (rng.coin()) {
        const std::size_t min_len = allow_empty ? 0 : 1;
        const std::size_t len = rng.uniform(min_len, std::min<std::size_t>(n, 12));
        const std::size_t start = rng.uniform(0, n - len);
        return std::string(text.substr(start, len));
    }
    return random_text(rng, rng.uniform(1, 8), alphabet);
}

template <class T>
std::string show(const std::vector<T>& xs)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? "," : "") << xs[i];
    os << ']';
    return os.str();
}

inline std::string show_intervals(const interval_set& pi)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < pi.size(); ++i)
        os << (i ? "," : "") << pi[i].first << ':' << pi[i].second;
    os << ']';
    return os.str();
}

class trial_checker {
public:
    trial_checker(std::size_t trial, verify_report& rep) : trial_(trial), rep_(rep) {}

    bool ok() const noexcept { return ok_; }

    /// Records a failure once per trial; the report keeps only the first.
    void fail(const std::string& what)
    {
        if (!ok_)
            return;
        ok_ = false;
        if (rep_.counterexample.empty())
            rep_.counterexample = "trial " + std::to_string(trial_) + ": " + what;
    }

    template <class T>
    void expect_eq(const T& expected, const T& got, const std::string& context)
    {
        if (!(expected == got))
            fail(context + " expected=" + render(expected) + " got=" + render(got));
    }

private:
    template <class T>
    static std::string render(const T& x)
    {
        if constexpr (std::is_same_v<T, bool>)
            return x ? "true" : "false";
        else if constexpr (std::is_arithmetic_v<T>)
            return std::to_string(x);
        else
            return show(x);
    }

    std::size_t trial_;
    verify_report& rep_;
    bool ok_ = true;
};

inline void check_index_structure(const srr_index& ix, trial_checker& chk, verify_report& rep)
{
    if (auto e = check_structure(ix)) {
        ++rep.structure_violations;
        chk.fail("structure: " + *e);
    }
}

/// Saves, reloads, and re-saves; returns the reloaded index.
inline stored_index round_trip(const stored_index& s, trial_checker& chk, verify_report& rep)
{
    const std::string bytes = to_bytes(s);
    stored_index back = from_bytes(bytes);
    if (to_bytes(back) != bytes) {
        ++rep.round_trip_failures;
        chk.fail("re-serialization differs from original bytes");
    }
    return back;
}

inline std::string describe(std::string_view text, const std::vector<label_t>* labels)
{
    std::string d = "text=\"" + std::string(text) + "\"";
    if (labels)
        d += " labels=" + show(*labels);
    return d;
}

inline void run_srr_trial(workload_rng& rng, const workload_spec& spec, std::size_t t, verify_report& rep)
{
    trial_checker chk(t, rep);
    labeled_string s;
    s.text = random_text(rng, rng.uniform(1, spec.max_len), spec.alphabet);
    s.u = spec.label_bound;
    s.labels.resize(s.size());
    for (auto& lab : s.labels)
        lab = rng.uniform(0, spec.label_bound);
    const std::string where = describe(s.text, &s.labels);

    srr_index ix(s);
    if (spec.check_structure)
        check_index_structure(ix, chk, rep);
    stored_index loaded;
    if (spec.round_trip)
        loaded = round_trip(ix, chk, rep);

    for (std::size_t q = 0; q < spec.queries_per_trial && chk.ok(); ++q) {
        std::string p = random_pattern(rng, s.text, spec.alphabet, true);
        label_t a = rng.uniform(0, s.u), b = rng.uniform(0, s.u);
        if (a > b)
            std::swap(a, b);
        const label_range r{a, b};
        const std::string ctx = where + " query P=\"" + p + "\" range=" + std::to_string(a) + ":" + std::to_string(b);

        const auto expected = oracle::naive_report(s, p, r);
        auto [got, st] = ix.report_with_stats(p, r);
        ++rep.queries;
        switch (st.path) {
        case query_path::top_tree_1d: ++rep.top_path; break;
        case query_path::bottom_2d: ++rep.bottom_path; break;
        case query_path::no_locus: ++rep.no_locus; break;
        }
        chk.expect_eq(expected, got, "report " + ctx);
        chk.expect_eq(oracle::naive_count(s, p, r), ix.count(p, r), "count " + ctx);
        chk.expect_eq(oracle::naive_empty(s, p, r), ix.empty(p, r), "empty " + ctx);
        chk.expect_eq(got, ix.report(p, r, routing::force_2d), "forced-2D report " + ctx);
        chk.expect_eq(ix.count(p, r), ix.count(p, r, routing::force_2d), "forced-2D count " + ctx);
        chk.expect_eq(ix.empty(p, r), ix.empty(p, r, routing::force_2d), "forced-2D empty " + ctx);
        chk.expect_eq(st.occ, got.size(), "stats occ " + ctx);
        if (spec.round_trip) {
            const auto& back = inner_of(loaded);
            chk.expect_eq(got, back.report(p, r), "reloaded report " + ctx);
            chk.expect_eq(ix.count(p, r), back.count(p, r), "reloaded count " + ctx);
        }
    }
    if (chk.ok())
        ++rep.passed;
}

inline void random_position_range(workload_rng& rng, std::size_t n, std::size_t& a, std::size_t& b)
{
    a = rng.uniform(1, n);
    b = rng.uniform(1, n);
    if (a > b)
        std::swap(a, b);
}

inline void run_prss_trial(workload_rng& rng, const workload_spec& spec, std::size_t t, verify_report& rep)
{
    trial_checker chk(t, rep);
    std::string text = random_text(rng, rng.uniform(1, spec.max_len), spec.alphabet);
    const std::string where = describe(text, nullptr);
    prss_index ix(text);
    if (spec.check_structure)
        check_index_structure(ix.inner(), chk, rep);
    stored_index loaded;
    if (spec.round_trip)
        loaded = round_trip(ix, chk, rep);

    for (std::size_t q = 0; q < spec.queries_per_trial && chk.ok(); ++q) {
        std::string p = random_pattern(rng, text, spec.alphabet, true);
        std::size_t a, b;
        random_position_range(rng, text.size(), a, b);
        const std::string ctx = where + " query P=\"" + p + "\" range=" + std::to_string(a) + ":" + std::to_string(b);
        auto got = ix.query(p, a, b);
        ++rep.queries;
        chk.expect_eq(oracle::naive_prss(text, p, a, b), got, "prss " + ctx);
        if (spec.round_trip)
            chk.expect_eq(got, std::get<prss_index>(loaded).query(p, a, b), "reloaded prss " + ctx);
    }
    if (chk.ok())
        ++rep.passed;
}

inline void run_interval_trial(workload_rng& rng, const workload_spec& spec, std::size_t t, verify_report& rep)
{
    trial_checker chk(t, rep);
    std::string text = random_text(rng, rng.uniform(1, spec.max_len), spec.alphabet);
    const std::size_t n = text.size();
    interval_set pi(rng.uniform(0, spec.max_intervals));
    for (auto& iv : pi) {
        std::size_t s, f;
        random_position_range(rng, n, s, f);
        // short intervals keep coverage partial
        if (f - s > n / 4)
            f = s + rng.uniform(0, n / 4);
        iv = {static_cast<pos_t>(s), static_cast<pos_t>(f)};
    }
    const std::string where = describe(text, nullptr) + " intervals=" + show_intervals(pi);
    interval_index ix(text, pi);
    if (spec.check_structure)
        check_index_structure(ix.inner(), chk, rep);
    stored_index loaded;
    if (spec.round_trip)
        loaded = round_trip(ix, chk, rep);

    for (std::size_t q = 0; q < spec.queries_per_trial && chk.ok(); ++q) {
        std::string p = random_pattern(rng, text, spec.alphabet, true);
        std::size_t a, b;
        random_position_range(rng, n, a, b);
        const std::string ctx = where + " query P=\"" + p + "\" range=" + std::to_string(a) + ":" + std::to_string(b);
        auto got = ix.query(p, a, b);
        ++rep.queries;
        chk.expect_eq(oracle::naive_interval(text, pi, p, a, b), got, "interval " + ctx);
        if (spec.round_trip)
            chk.expect_eq(got, std::get<interval_index>(loaded).query(p, a, b), "reloaded interval " + ctx);
    }
    if (chk.ok())
        ++rep.passed;
}

inline void run_gap_trial(workload_rng& rng, const workload_spec& spec, std::size_t t, verify_report& rep)
{
    trial_checker chk(t, rep);
    std::string text = random_text(rng, rng.uniform(1, spec.max_len), spec.alphabet);
    const std::size_t d = rng.uniform(0, spec.max_gap);
    const std::string where = describe(text, nullptr) + " d=" + std::to_string(d);
    gap_index ix(text, d);
    if (spec.check_structure) {
        check_index_structure(ix.inner(), chk, rep);
        if (auto e = check_structure(ix.reverse())) {
            ++rep.structure_violations;
            chk.fail("reverse structure: " + *e);
        }
    }
    stored_index loaded;
    if (spec.round_trip)
        loaded = round_trip(ix, chk, rep);

    for (std::size_t q = 0; q < spec.queries_per_trial && chk.ok(); ++q) {
        std::string p1, p2;
        if (rng.coin() && text.size() >= 2 + d) {
            // carve p1 and p2 out of one real gapped occurrence
            const std::size_t m1 = rng.uniform(1, std::min<std::size_t>(6, text.size() - d - 1));
            const std::size_t m2 = rng.uniform(1, std::min<std::size_t>(6, text.size() - d - m1));
            const std::size_t start = rng.uniform(0, text.size() - (m1 + d + m2));
            p1 = text.substr(start, m1);
            p2 = text.substr(start + m1 + d, m2);
        } else {
            p1 = random_pattern(rng, text, spec.alphabet, false);
            p2 = random_pattern(rng, text, spec.alphabet, false);
        }
        const std::string ctx = where + " query P1=\"" + p1 + "\" P2=\"" + p2 + "\"";
        auto got = ix.query(p1, p2);
        ++rep.queries;
        chk.expect_eq(oracle::naive_gap(text, d, p1, p2), got, "gap " + ctx);
        if (spec.round_trip)
            chk.expect_eq(got, std::get<gap_index>(loaded).query(p1, p2), "reloaded gap " + ctx);
    }
    if (chk.ok())
        ++rep.passed;
}

} // namespace detail

/// Runs spec.trials seeded random instances; deterministic given the spec.
inline verify_report run_verify(const workload_spec& spec)
{
    if (spec.trials < 1 || spec.max_len < 1 || spec.alphabet.empty())
        throw error(errc::range_out_of_bounds, "workload needs trials >= 1, max length >= 1, nonempty alphabet");
    verify_report rep;
    detail::workload_rng rng(spec.seed);
    for (std::size_t t = 1; t <= spec.trials; ++t) {
        ++rep.trials;
        switch (spec.mode) {
        case workload_mode::srr: detail::run_srr_trial(rng, spec, t, rep); break;
        case workload_mode::prss: detail::run_prss_trial(rng, spec, t, rep); break;
        case workload_mode::interval: detail::run_interval_trial(rng, spec, t, rep); break;
        case workload_mode::gap: detail::run_gap_trial(rng, spec, t, rep); break;
        }
    }
    return rep;
}

} // namespace srr

#endif // SRR_VERIFY_HPP
