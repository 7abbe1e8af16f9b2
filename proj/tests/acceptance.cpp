/* Acceptance suite: runs every gate criterion at its pinned tolerance and
 * prints one pass/fail line per criterion. Exit status 0 iff all pass. */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "qrr/asymptotics.hpp"
#include "qrr/identities.hpp"
#include "qrr/partitions.hpp"

using namespace qrr;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool pass, const std::string& what, double seconds) {
    std::printf("[%s] criterion %d: %s  (%.2fs)\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), seconds);
    if (!pass) {
        ++failures;
    }
}

/* 1. The master dissection, symbolic in a and b, s = 1..6 at P = 50. */
void criterion_1() {
    Timer timer;
    bool pass = true;
    std::ostringstream detail;
    for (int s = 1; s <= 6; ++s) {
        IdentityReport r = verify("theorem-1.1", s, 50);
        if (!r.pass) {
            pass = false;
            detail << " s=" << s << " FAILED;";
        }
    }
    report(1, pass && timer.seconds() < 60.0,
           "master dissection s = 1..6, symbolic in a and b, P = 50, zero difference" +
               detail.str(),
           timer.seconds());
}

/* 2. Every registry identity at P = 50 (congruence through q^100). */
void criterion_2() {
    Timer timer;
    VerifyAllOptions options;
    options.prec = 50;
    options.s_max = 6;
    std::vector<IdentityReport> reports = verify_all(options);
    int failed = 0;
    std::ostringstream detail;
    for (const auto& r : reports) {
        if (!r.pass) {
            ++failed;
            detail << "\n       " << r.summary_line();
        }
    }
    std::ostringstream what;
    what << "all registry identities at P = 50: " << (reports.size() - failed) << "/"
         << reports.size() << " verifications exact";
    if (failed > 0) {
        what << detail.str()
             << "\n       (the printed parity-split display is not an identity; the"
             << "\n       corrected form stacks-substituted-parity verifies -- see README)";
    }
    report(2, failed == 0, what.str(), timer.seconds());
}

/* 3. Partition oracles: three-way coefficients n <= 20 for s <= 5, Durfee
 *    classification weights <= 12 for s <= 3, odd-gap counts weights <= 40. */
void criterion_3() {
    Timer timer;
    bool pass = true;
    std::ostringstream detail;
    for (int s = 1; s <= 5; ++s) {
        auto r = partitions::verify_thm31_coefficients(s, 20);
        if (!r.pass) {
            pass = false;
            detail << " " << r.name << ": " << r.detail << ";";
        }
    }
    for (int s = 1; s <= 3; ++s) {
        auto r = partitions::verify_durfee_rectangle(s, 12);
        if (!r.pass) {
            pass = false;
            detail << " " << r.name << ": " << r.detail << ";";
        }
    }
    auto odd_gaps = partitions::verify_a179080(40);
    if (!odd_gaps.pass) {
        pass = false;
        detail << " " << odd_gaps.name << ": " << odd_gaps.detail << ";";
    }
    report(3, pass,
           "partition oracles: dissection coefficients (n<=20, s<=5), Durfee classes "
           "(w<=12, s<=3), odd-gap counts (w<=40)" +
               detail.str(),
           timer.seconds());
}

/* 4. Ratio convergence for the product asymptotic over (a,s) in
 *    {0.5,1,2}x{1,2,3} and for the q->1 chains, schedule {0.90,0.95,0.98},
 *    final |ratio-1| < 0.1, under 30 seconds. */
void criterion_4() {
    Timer timer;
    const std::vector<double> schedule{0.90, 0.95, 0.98};
    bool pass = true;
    std::ostringstream detail;
    auto take = [&](const asym::AsymptoticCheck& check) {
        if (!check.pass) {
            pass = false;
            detail << " " << check.name << " failed;";
        }
    };
    for (double a : {0.5, 1.0, 2.0}) {
        for (int s : {1, 2, 3}) {
            take(asym::check_product_asymptotic(a, s, schedule));
        }
        for (const auto& check : asym::check_section7_chain(a, schedule)) {
            take(check);
        }
    }
    auto ri = asym::check_ri_chain(schedule);
    take(ri[0]);
    take(ri[1]);
    bool in_time = timer.seconds() < 30.0;
    if (!in_time) {
        detail << " exceeded the 30s budget;";
    }
    report(4, pass && in_time,
           "ratio convergence: product over {0.5,1,2}x{1,2,3} plus both q->1 chains, "
           "final |ratio-1| < 0.1" +
               detail.str(),
           timer.seconds());
}

/* 5. Dilogarithm identities to 1e-12 and reflection residuals on 100 points. */
void criterion_5() {
    Timer timer;
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    bool pass = true;
    std::ostringstream detail;

    double u = asym::solve_root(1.0, 2.0);
    double golden = asym::li2(1.0 - u) - 0.25 * asym::li2(u) + std::log(u) * std::log(u) -
                    std::log(1.0 - u) * std::log(1.0 - u) / 16.0;
    if (std::fabs(golden - pi2 / 24.0) > 1e-12) {
        pass = false;
        detail << " golden-ratio combination off by " << std::fabs(golden - pi2 / 24.0) << ";";
    }

    double v = asym::solve_root(1.0, 3.0);
    double cubic = 6.0 * asym::li2(v) - 30.0 * asym::li2(1.0 - v) - 36.0 * asym::li2(-v * v);
    if (std::fabs(cubic - pi2) > 1e-12) {
        pass = false;
        detail << " cubic-root combination off by " << std::fabs(cubic - pi2) << ";";
    }

    std::mt19937 rng(271828);
    std::uniform_real_distribution<double> unit(1e-6, 1.0 - 1e-6);
    for (int i = 0; i < 100; ++i) {
        double z = unit(rng);
        double residual = asym::li2(z) + asym::li2(1.0 - z) - pi2 / 6.0 +
                          std::log(z) * std::log(1.0 - z);
        if (std::fabs(residual) > 1e-12) {
            pass = false;
            detail << " reflection residual " << residual << " at z=" << z << ";";
            break;
        }
    }
    report(5, pass,
           "dilogarithm: pi^2/24 and pi^2 combinations to 1e-12, reflection residuals "
           "<= 1e-12 on 100 points" +
               detail.str(),
           timer.seconds());
}

/* 6. Mutation sensitivity on five sampled entries. */
void criterion_6() {
    Timer timer;
    struct Sample {
        const char* id;
        ParamSet params;
        Perturbation perturb;
    };
    const Sample samples[] = {
        {"theorem-1.1", {.s = 3}, {1, 19, 1, 0, 1}},
        {"gmr", {}, {0, 10, -2, 1, -1}},
        {"jtpi", {}, {1, 7, 1, 0, 1}},
        {"s3", {}, {1, 13, 0, 0, 1}},
        {"mcintosh-mu", {.mu = 1}, {0, 15, 0, 0, -1}},
    };
    bool pass = true;
    std::ostringstream detail;
    for (const auto& sample : samples) {
        const IdentityEntry* entry = find_entry(sample.id);
        IdentityReport clean = verify(*entry, sample.params, 50);
        IdentityReport hit = verify(*entry, sample.params, 50, sample.perturb);
        bool ok = clean.pass && !hit.pass && hit.first_diff &&
                  hit.first_diff->t_exp == sample.perturb.t_exp;
        if (!ok) {
            pass = false;
            detail << " " << sample.id << " did not flag the planted diff;";
        }
    }
    report(6, pass,
           "mutation sensitivity: +-1 coefficient perturbations flip five entries to fail "
           "with the planted exponent reported" +
               detail.str(),
           timer.seconds());
}

/* 7. Root facts behind the product asymptotic, to 1e-12 over the grid. */
void criterion_7() {
    Timer timer;
    bool pass = true;
    std::ostringstream detail;
    for (double a : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        for (int s : {1, 2, 3, 4, 6}) {
            double z1 = asym::product_root_z1(a, s);
            double z2 = asym::solve_root(std::pow(a, -s), static_cast<double>(s));
            double sum_err = std::fabs(z1 + z2 - 1.0);
            double link_err = std::fabs(z1 - std::pow(a, -s) * std::pow(z2, s));
            double pre = (z1 + (1.0 - z1) / s) * (z2 + s * (1.0 - z2));
            double pre_err = std::fabs(pre - (1.0 + (s - 1) * z1) * (1.0 + (s - 1) * z1) / s);
            if (sum_err > 1e-12 || link_err > 1e-12 || pre_err > 1e-12) {
                pass = false;
                detail << " (a=" << a << ",s=" << s << ") errs " << sum_err << "/" << link_err
                       << "/" << pre_err << ";";
            }
        }
    }
    report(7, pass,
           "root facts: z1+z2 = 1, z1 = a^(-s) z2^s and the prefactor identity to 1e-12 "
           "over the solver grid" +
               detail.str(),
           timer.seconds());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    if (failures > 0) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
