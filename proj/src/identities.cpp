#include "qrr/identities.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace qrr {

std::string ParamSet::to_string() const {
    std::ostringstream os;
    const char* sep = "";
    if (n) { os << sep << "n=" << *n; sep = ","; }
    if (m) { os << sep << "m=" << *m; sep = ","; }
    if (mu) { os << sep << "mu=" << *mu; sep = ","; }
    if (s) { os << sep << "s=" << *s; sep = ","; }
    return os.str();
}

std::string IdentityReport::summary_line() const {
    std::ostringstream os;
    os << (pass ? "pass" : "FAIL") << "  " << id;
    std::string p = params.to_string();
    if (!p.empty()) os << "(" << p << ")";
    os << "  D=" << denom << " P=" << prec;
    if (first_diff) {
        os << "  first diff at t^" << first_diff->t_exp << " in expr "
           << first_diff->expr_index << ": " << first_diff->delta.to_string();
    }
    os << "  [" << seconds << "s]";
    if (!notes.empty()) os << "  note: " << notes;
    return os.str();
}

std::string IdentityReport::serialize() const {
    nlohmann::ordered_json rec;
    rec["id"] = id;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    if (params.n) p["n"] = *params.n;
    if (params.m) p["m"] = *params.m;
    if (params.mu) p["mu"] = *params.mu;
    if (params.s) p["s"] = *params.s;
    rec["params"] = std::move(p);
    rec["denom"] = denom;
    rec["prec"] = prec;
    rec["status"] = pass ? "pass" : "fail";
    if (first_diff) {
        nlohmann::ordered_json d;
        d["e"] = first_diff->t_exp;
        d["expr"] = first_diff->expr_index;
        auto cs = nlohmann::ordered_json::array();
        for (const auto& [key, value] : first_diff->delta.terms()) {
            cs.push_back({{"a", key.a}, {"b", key.b}, {"c", value.str()}});
        }
        d["delta"] = std::move(cs);
        rec["first_diff"] = std::move(d);
    }
    rec["notes"] = notes;
    rec["seconds"] = seconds;
    return rec.dump();
}

const IdentityEntry* find_entry(std::string_view id) {
    for (const auto& entry : registry()) {
        if (entry.id == id) {
            return &entry;
        }
    }
    return nullptr;
}

IdentityReport verify(const IdentityEntry& entry, const ParamSet& params, std::int64_t prec,
                      const std::optional<Perturbation>& perturb) {
    auto start = std::chrono::steady_clock::now();
    IdentityReport report;
    report.id = entry.id;
    report.params = params;
    report.prec = std::max(prec, entry.min_prec);
    report.denom = entry.denom_of(params);
    report.notes = entry.notes;

    std::vector<QSeries> exprs = entry.build(params, report.prec);
    if (exprs.empty() || (entry.kind == CheckKind::equality && exprs.size() < 2)) {
        throw std::logic_error("identity entry built too few expressions");
    }
    for (auto& expr : exprs) {
        if (expr.prec() < report.prec) {
            throw std::logic_error("identity entry built short precision for " + entry.id);
        }
        if (expr.prec() > report.prec) {
            expr = expr.truncated(report.prec);
        }
    }
    if (perturb) {
        if (perturb->expr_index < 0 || perturb->expr_index >= static_cast<int>(exprs.size())) {
            throw std::invalid_argument("perturbation: expression index out of range");
        }
        exprs[static_cast<size_t>(perturb->expr_index)].add_term(
            perturb->t_exp,
            CoeffPoly::monomial(BigInt(perturb->delta), perturb->a_exp, perturb->b_exp));
    }

    report.pass = true;
    /* Always scan to full precision; keep the smallest discrepant exponent. */
    if (entry.kind == CheckKind::equality) {
        for (size_t i = 1; i < exprs.size(); ++i) {
            QSeries diff = sub(exprs[i], exprs[0]);
            if (!diff.is_zero()) {
                report.pass = false;
                std::int64_t e = diff.valuation();
                if (!report.first_diff || e < report.first_diff->t_exp) {
                    report.first_diff = FirstDiff{e, static_cast<int>(i), diff.coeff(e)};
                }
            }
        }
    } else {
        for (const auto& [e, c] : exprs[0].coeffs()) {
            if (!c.all_coeffs_even()) {
                report.pass = false;
                report.first_diff = FirstDiff{e, 0, c};
                break;
            }
        }
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

IdentityReport verify(std::string_view id, std::optional<int> s, std::int64_t prec) {
    const IdentityEntry* entry = find_entry(id);
    if (!entry) {
        throw std::invalid_argument("verify: unknown identity '" + std::string(id) + "'");
    }
    if (!s) {
        if (entry->grid.size() != 1) {
            throw std::invalid_argument("verify: entry '" + std::string(id) +
                                        "' needs a parameter");
        }
        return verify(*entry, entry->grid.front(), prec);
    }
    for (const auto& params : entry->grid) {
        if (params.s == *s) {
            return verify(*entry, params, prec);
        }
    }
    throw std::invalid_argument("verify: s=" + std::to_string(*s) +
                                " is outside the grid of '" + std::string(id) + "'");
}

std::vector<IdentityReport> verify_all(const VerifyAllOptions& options) {
    struct Job {
        const IdentityEntry* entry;
        ParamSet params;
    };
    /* A filter that selects nothing yields an empty report list; rejecting
     * unknown ids is the front end's concern. */
    std::vector<Job> jobs_list;
    for (const auto& entry : registry()) {
        if (!options.id_filter.empty() && entry.id != options.id_filter) {
            continue;
        }
        for (const auto& params : entry.grid) {
            if (params.s && (*params.s > options.s_max || *params.s < options.s_min)) {
                continue;
            }
            jobs_list.push_back({&entry, params});
        }
    }

    std::vector<IdentityReport> reports(jobs_list.size());
    unsigned workers = options.jobs > 0 ? static_cast<unsigned>(options.jobs)
                                        : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, std::max<size_t>(jobs_list.size(), 1));

    std::atomic<size_t> next{0};
    auto run = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs_list.size()) {
                return;
            }
            reports[i] =
                verify(*jobs_list[i].entry, jobs_list[i].params, options.prec, options.perturb);
        }
    };
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    return reports;
}

BigInt coefficient_of(const QSeries& x, std::int64_t e, int a_exp, int b_exp) {
    return x.coefficient(e, a_exp, b_exp);  // range-checks e against the precision
}

}  // namespace qrr
