// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
//
// Usage: acceptance [--only N[,M,...]] [--skip-slow]
//   --only       run a subset of criteria (1-12)
//   --skip-slow  skip the long nonlinear runs (criteria 9-11)

#include <chrono>
#include <cstdio>
#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "shearbq/checks.hpp"

using shearbq::checks::CheckResult;

namespace {

int failures = 0;

void report(int criterion, const CheckResult& r) {
    std::printf("[%s] criterion %2d  %-34s %s\n", r.pass ? "PASS" : "FAIL",
                criterion, r.name.c_str(), r.detail.c_str());
    if (!r.pass) ++failures;
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    bool skip_slow = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--skip-slow") == 0) skip_slow = true;
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            const std::string arg = argv[++i];
            std::size_t pos = 0;
            while (pos < arg.size()) {
                only.insert(std::stoi(arg.substr(pos)));
                pos = arg.find(',', pos);
                if (pos == std::string::npos) break;
                ++pos;
            }
        }
    }
    auto enabled = [&](int n) { return only.empty() || only.count(n) > 0; };
    const auto t0 = std::chrono::steady_clock::now();

    using namespace shearbq::checks;

    if (enabled(1)) report(1, phase_integral_bound());
    if (enabled(2)) report(2, couette_explicit());
    if (enabled(3)) report(3, rotation_period());
    if (enabled(4)) report(4, eigen_threshold());
    if (enabled(5))
        for (const auto& r : growth_exponents()) report(5, r);
    if (enabled(6)) {
        report(6, theta_envelope());
        report(6, wshear_envelope());
    }
    if (enabled(7))
        for (const auto& r : omega1_decomposition()) report(7, r);
    if (enabled(8)) report(8, multiplier_construction());

    if (!skip_slow) {
        if (enabled(9) || enabled(10)) {
            NonlinearCheckConfig nc;
            nc.alpha_positive = false;
            auto rs = nonlinear_bootstrap(nc);
            if (enabled(9)) report(9, rs[0]);
            if (enabled(10)) report(10, rs[1]);
            nc.alpha_positive = true;
            rs = nonlinear_bootstrap(nc);
            if (enabled(9)) report(9, rs[0]);
            if (enabled(10)) report(10, rs[1]);
        }
        if (enabled(11)) report(11, largealpha_energy());
    }
    if (enabled(12))
        for (const auto& r : solver_hygiene()) report(12, r);

    const auto t1 = std::chrono::steady_clock::now();
    const double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
            .count() /
        1000.0;
    std::printf("%s: %d failure(s), %.1f s total\n",
                failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                failures, secs);
    return failures;
}
