// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <srr/oracle.hpp>
#include <srr/reductions.hpp>
#include <srr/serialize.hpp>
#include <srr/synthetic.hpp>
#include <srr/verify.hpp>

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(const std::string& name, const std::function<outcome()>& body)
{
    outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass)
        ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  (" << o.detail << ")" << std::endl;
}

srr::workload_spec workload(srr::workload_mode mode, std::size_t trials, std::uint64_t seed)
{
    srr::workload_spec w;
    w.mode = mode;
    w.trials = trials;
    w.seed = seed;
    w.max_len = 512;
    w.alphabet = "abcd";
    w.label_bound = 1024;
    w.max_intervals = 16;
    w.max_gap = 8;
    return w;
}

std::string summary(const srr::verify_report& r)
{
    std::ostringstream os;
    os << r.passed << "/" << r.trials << " trials, " << r.queries << " queries";
    if (!r.counterexample.empty())
        os << "; first counterexample: " << r.counterexample.substr(0, 400);
    return os.str();
}

// Shared between criteria so the core workload runs once.
srr::verify_report core_report;
std::vector<srr::verify_report> reduction_reports;

} // namespace

int main()
{
    criterion("gap reduction arithmetic: inner hit 7 -> 7-2-2 = 3; abxxbac d=2 ab/bac -> {1} via [3,3] and hit 5",
              [] {
                  const auto t0 = clock_type::now();
                  srr::gap_index single_hit("xxabyybac", 2);
                  auto a = single_hit.trace("ab", "bac");
                  srr::gap_index derived("abxxbac", 2);
                  auto b = derived.trace("ab", "bac");
                  const double secs = seconds_since(t0);
                  const bool ok = a.inner_hits == std::vector<srr::pos_t>{7} &&
                                  a.result == std::vector<srr::pos_t>{3} && b.reverse_locus &&
                                  b.reverse_locus.l == 3 && b.reverse_locus.r == 3 &&
                                  b.inner_hits == std::vector<srr::pos_t>{5} &&
                                  b.result == std::vector<srr::pos_t>{1} &&
                                  srr::oracle::naive_gap("abxxbac", 2, "ab", "bac") == b.result && secs < 1.0;
                  std::ostringstream os;
                  os << "interval [" << b.reverse_locus.l << "," << b.reverse_locus.r << "], inner hits "
                     << b.inner_hits.size() << ", result " << (b.result.empty() ? 0 : b.result[0]) << ", " << secs
                     << " s < 1 s";
                  return outcome{ok, os.str()};
              });

    criterion("oracle equivalence, core: 1000 instances, report/count/empty exact, < 60 s", [] {
        const auto t0 = clock_type::now();
        core_report = srr::run_verify(workload(srr::workload_mode::srr, 1000, 20240601));
        const double secs = seconds_since(t0);
        return outcome{core_report.ok() && secs < 60.0, summary(core_report) + ", " + std::to_string(secs) + " s"};
    });

    criterion("oracle equivalence, reductions: 1000 each of prss / intervals / gaps, < 120 s", [] {
        const auto t0 = clock_type::now();
        bool ok = true;
        std::string detail;
        for (auto mode : {srr::workload_mode::prss, srr::workload_mode::interval, srr::workload_mode::gap}) {
            reduction_reports.push_back(srr::run_verify(workload(mode, 1000, 777)));
            ok = ok && reduction_reports.back().ok();
            detail += std::string(srr::workload_mode_name(mode)) + " " + summary(reduction_reports.back()) + "; ";
        }
        const double secs = seconds_since(t0);
        return outcome{ok && secs < 120.0, detail + std::to_string(secs) + " s"};
    });

    criterion("path equivalence: forced 2D equals routed answers, each path used >= 100 times", [] {
        const bool ok = core_report.ok() && core_report.top_path >= 100 && core_report.bottom_path >= 100;
        return outcome{ok, "TopTree1D=" + std::to_string(core_report.top_path) +
                               " Bottom2D=" + std::to_string(core_report.bottom_path) +
                               " NoLocus=" + std::to_string(core_report.no_locus)};
    });

    criterion("structural invariants after every build: per-level top stores <= n, sa/rank inverse, intervals tile",
              [] {
                  std::size_t violations = core_report.structure_violations, builds = core_report.trials;
                  for (const auto& r : reduction_reports) {
                      violations += r.structure_violations;
                      builds += r.trials;
                  }
                  return outcome{violations == 0 && builds == 4000,
                                 std::to_string(builds) + " builds, " + std::to_string(violations) + " violations"};
              });

    criterion("serialization round-trip: 100 indexes of each kind, identical bytes and answers", [] {
        bool ok = true;
        std::string detail;
        for (auto mode : {srr::workload_mode::srr, srr::workload_mode::prss, srr::workload_mode::interval,
                          srr::workload_mode::gap}) {
            auto w = workload(mode, 100, 4242);
            w.round_trip = true;
            auto r = srr::run_verify(w);
            ok = ok && r.ok() && r.round_trip_failures == 0;
            detail += std::string(srr::workload_mode_name(mode)) + " " + std::to_string(r.passed) + "/100 ";
        }
        return outcome{ok, detail};
    });

    criterion("desk-scale performance: 1 MB PRSS build < 30 s, median m=10 report (occ <= 100) < 1 ms", [] {
        const std::string text = srr::english_like_text(1 << 20, 1);
        const auto t0 = clock_type::now();
        srr::prss_index ix(text);
        const double build_secs = seconds_since(t0);

        std::uint64_t state = 0x2545f4914f6cdd1dull;
        auto next = [&] {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        std::vector<std::string> patterns;
        for (int tries = 0; tries < 100000 && patterns.size() < 1000; ++tries) {
            std::string p = text.substr(next() % (text.size() - 10 + 1), 10);
            if (ix.count(p, 1, text.size()) <= 100)
                patterns.push_back(std::move(p));
        }
        std::vector<double> lat;
        std::size_t total = 0;
        for (const auto& p : patterns) {
            const auto q0 = clock_type::now();
            auto hits = ix.query(p, 1, text.size());
            lat.push_back(std::chrono::duration<double, std::milli>(clock_type::now() - q0).count());
            total += hits.size();
        }
        std::sort(lat.begin(), lat.end());
        const double median = lat.empty() ? 1e9 : lat[lat.size() / 2];
        std::ostringstream os;
        os << "build " << build_secs << " s, " << patterns.size() << " patterns, median " << median
           << " ms, mean occ " << (patterns.empty() ? 0.0 : double(total) / double(patterns.size()));
        return outcome{build_secs < 30.0 && median < 1.0 && patterns.size() >= 100, os.str()};
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
