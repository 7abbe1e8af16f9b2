#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrr/qfunctions.hpp"
#include "qrr/qseries.hpp"

namespace qrr {

/* Parameter point of one verification: whichever of s, n, m, mu the entry
 * uses. Prints as "s=3" / "n=2,s=1" / "" for entries without parameters. */
struct ParamSet {
    std::optional<int> s;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> mu;
    std::string to_string() const;
    friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

struct FirstDiff {
    std::int64_t t_exp = 0;
    int expr_index = 0;  // expression that disagrees with expression 0
    CoeffPoly delta;     // expression[expr_index] - expression[0] at t_exp
};

struct IdentityReport {
    std::string id;
    ParamSet params;
    int denom = 1;
    std::int64_t prec = 0;
    bool pass = false;
    std::optional<FirstDiff> first_diff;
    std::string notes;
    double seconds = 0.0;

    std::string summary_line() const;  // one human-readable line
    std::string serialize() const;     // one-line structured record
};

enum class CheckKind {
    equality,  // all expressions pairwise equal through t^prec
    mod2,      // single expression, every coefficient even through t^prec
};

/* Test hook: adds delta * a^a_exp b^b_exp t^t_exp to one built expression
 * before comparing, to confirm the verifier notices. */
struct Perturbation {
    int expr_index = 1;
    std::int64_t t_exp = 0;
    int a_exp = 0;
    int b_exp = 0;
    long delta = 1;
};

struct IdentityEntry {
    std::string id;
    std::string what;  // what the identity says, for reports and --list
    CheckKind kind = CheckKind::equality;
    std::int64_t min_prec = 0;  // entries checked deeper than the run default
    std::string notes;          // fixed caveats, emitted with every report
    std::vector<ParamSet> grid;
    std::function<int(const ParamSet&)> denom_of;
    std::function<std::vector<QSeries>(const ParamSet&, std::int64_t prec)> build;
};

const std::vector<IdentityEntry>& registry();
const IdentityEntry* find_entry(std::string_view id);

IdentityReport verify(const IdentityEntry& entry, const ParamSet& params, std::int64_t prec,
                      const std::optional<Perturbation>& perturb = std::nullopt);

/* Convenience: look up by id; params.s selects the grid point when the entry
 * is parameterized by s alone. */
IdentityReport verify(std::string_view id, std::optional<int> s, std::int64_t prec);

struct VerifyAllOptions {
    std::int64_t prec = 50;
    int s_min = 1;           // clip s-parameterized grids
    int s_max = 6;
    int jobs = 0;            // 0: hardware concurrency
    std::string id_filter;   // empty: every entry
    std::optional<Perturbation> perturb;  // applied to every selected verification
};

/* Runs the selected grid, in parallel, with deterministic report order. */
std::vector<IdentityReport> verify_all(const VerifyAllOptions& options);

/* Exact coefficient of a^a_exp b^b_exp t^e; e must lie within the tracked
 * precision. */
BigInt coefficient_of(const QSeries& x, std::int64_t e, int a_exp, int b_exp);

}  // namespace qrr
