// One PASS/FAIL line per acceptance criterion. All comparisons are exact; only runtimes have limits.

#include "hecke/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hecke;

namespace {

constexpr int kMaxLength = 20;
constexpr int kClassificationLength = 14;
constexpr int kPathLength = 16;
constexpr int kPathSeeds = 10;
constexpr int kWordLength = 10;
constexpr int kGrassmannianPair = 12;
constexpr int kNewtonBound = 8;
constexpr int kLeadingK0 = 8;
constexpr double kOracleSeconds = 60.0;
constexpr double kPropertySeconds = 300.0;

struct Timed {
    Report report;
    double seconds;
};

Timed timed(const std::function<Report()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r = f();
    return {std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

int failed = 0;

void line(int n, const char* title, const Report& r, double seconds, double limit, const std::string& extra = {}) {
    const bool ok = r.ok() && seconds < limit;
    if (!ok) ++failed;
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << (ok ? "PASS" : "FAIL") << " " << n << " " << title << ": " << r.cases << " cases, "
       << r.failures.size() << " failures, " << seconds << "s";
    if (limit < 1e9) os << " (limit " << limit << "s)";
    if (!extra.empty()) os << "; " << extra;
    std::cout << os.str() << "\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) std::cout << "    " << r.failures[i] << "\n";
}

std::string notes(const Report& r) {
    std::string s;
    for (const auto& n : r.notes) s += (s.empty() ? "" : "; ") + n;
    return s;
}

}  // namespace

int main() {
    constexpr double none = 1e18;

    // Each oracle criterion starts from an empty memo so the runtime is a cold-start figure.
    {
        Engine eng;
        auto t = timed([&] { return verify_closedform(Mode::Split, kMaxLength, eng); });
        line(1, "oracle equivalence, split coset, length <= 20", t.report, t.seconds, kOracleSeconds);
    }
    {
        Engine eng;
        auto t = timed([&] { return verify_closedform(Mode::SplitTau, kMaxLength, eng); });
        line(2, "oracle equivalence, tau coset, length <= 20", t.report, t.seconds, kOracleSeconds);
    }
    {
        Engine eng;
        auto t = timed([&] { return verify_closedform(Mode::Twisted, kMaxLength, eng); });
        line(3, "oracle equivalence, twisted, length <= 20", t.report, t.seconds, kOracleSeconds, notes(t.report));
    }
    {
        auto t = timed([] { return verify_classification(kClassificationLength); });
        line(4, "classification, conjugation orbits up to length 14", t.report, t.seconds, none);
    }
    {
        auto t = timed([] { return verify_dims(kMaxLength, kNewtonBound); });
        line(5, "ADLV dimension and emptiness statements, length <= 20, <nu,2rho> <= 8", t.report, t.seconds, none,
             notes(t.report));
    }
    {
        auto t = timed([] { return verify_points(kMaxLength); });
        line(6, "rational points, length <= 20, q in {2,3,4,5,7,9}", t.report, t.seconds, none);
    }
    {
        auto t = timed([] { return verify_ghkr(kMaxLength, kNewtonBound, kDefaultGhkrOffset); });
        std::ostringstream extra;
        extra << "threshold max(<nu,2rho> + " << kDefaultGhkrOffset << ", 2<nu,2rho> + 2); "
              << t.report.notes.back();
        line(7, "GHKR, four groups, <nu,2rho> <= 8, length <= 20", t.report, t.seconds, none, extra.str());
    }
    {
        Engine eng;
        auto t = timed([&] {
            Report r("properties");
            r.merge(verify_polynomial_properties(kMaxLength, eng));
            r.merge(verify_path_independence(kPathLength, kPathSeeds, eng));
            r.merge(verify_word_length(kWordLength));
            r.merge(verify_grassmannian(kGrassmannianPair, eng));
            return r;
        });
        line(8, "property suites (positivity, u=0, parity, degree, characters, 10 orders, word length, Grassmannian)",
             t.report, t.seconds, kPropertySeconds);
    }
    {
        auto t = timed([] { return verify_leading(kLeadingK0); });
        line(9, "leading coefficients, three families, k0 <= 8", t.report, t.seconds, none, notes(t.report));
    }
    std::cout << (failed ? "acceptance: FAILED " + std::to_string(failed) + " criteria" : "acceptance: all criteria pass")
              << "\n";
    return failed ? 1 : 0;
}
