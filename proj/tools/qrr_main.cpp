#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qrr/asymptotics.hpp"
#include "qrr/identities.hpp"
#include "qrr/partitions.hpp"
#include "qrr/qfunctions.hpp"

namespace {

using namespace qrr;

constexpr int k_exit_pass = 0;
constexpr int k_exit_fail = 1;
constexpr int k_exit_usage = 2;

std::ostream& output(std::ofstream& file, const std::string& path) {
    if (path.empty()) {
        return std::cout;
    }
    file.open(path);
    if (!file) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    return file;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator: " + text);
    }
    return Rational(num, den);
}

std::optional<Perturbation> parse_perturbation(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    Perturbation p;
    char colon = 0;
    std::istringstream is(text);
    if (!(is >> p.expr_index >> colon >> p.t_exp >> colon >> p.a_exp >> colon >> p.b_exp >>
          colon >> p.delta)) {
        throw std::invalid_argument("perturbation must look like expr:t_exp:a:b:delta");
    }
    return p;
}

/* "lo..hi" or a single value */
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::string human_series(const QSeries& x) {
    std::ostringstream os;
    os << "denom " << x.denom() << ", prec " << x.prec() << ":\n";
    if (x.is_zero()) {
        os << "  0\n";
        return os.str();
    }
    for (const auto& [e, c] : x.coeffs()) {
        os << "  t^" << e << ": " << c.to_string() << "\n";
    }
    return os.str();
}

int cmd_expand(const std::string& id, const std::string& spec_json, int s, std::int64_t prec,
               const std::string& a_text, const std::string& b_text, const std::string& format,
               const std::string& out_path) {
    QSeries series(1, 0);
    if (!spec_json.empty()) {
        SumSpec spec = SumSpec::deserialize(spec_json);
        BuildCtx ctx(s > 0 ? 2 * s : 1, prec);
        series = sum_expand(spec, ctx);
    } else if (id == "theta") {
        if (s < 1) {
            throw std::invalid_argument("expand theta needs --s");
        }
        BuildCtx ctx(2 * s, prec);
        series = theta_full(ctx, 1);
    } else {
        series = named_series(id, prec);
    }

    BigInt scale = 1;
    if (!a_text.empty() || !b_text.empty()) {
        SpecValue a_val{a_text.empty() ? Rational(1) : parse_rational(a_text), 0};
        SpecValue b_val{b_text.empty() ? Rational(1) : parse_rational(b_text), 0};
        Specialized sp = specialize(series, a_val, b_val);
        series = sp.series;
        scale = sp.scale;
    }

    std::ofstream file;
    std::ostream& os = output(file, out_path);
    if (format == "records") {
        if (scale != 1) {
            os << "{\"scale\":\"" << scale.str() << "\",\"series\":" << series.serialize()
               << "}\n";
        } else {
            os << series.serialize() << "\n";
        }
    } else {
        if (scale != 1) {
            os << "scale 1/" << scale.str() << " times\n";
        }
        os << human_series(series);
    }
    return k_exit_pass;
}

int cmd_verify(const VerifyAllOptions& options, const std::string& format,
               const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = output(file, out_path);
    std::vector<IdentityReport> reports = verify_all(options);
    bool all_pass = true;
    for (const auto& report : reports) {
        all_pass = all_pass && report.pass;
        os << (format == "records" ? report.serialize() : report.summary_line()) << "\n";
    }
    if (format != "records") {
        os << (all_pass ? "all identities verified" : "verification FAILED") << " ("
           << reports.size() << " reports)\n";
    }
    return all_pass ? k_exit_pass : k_exit_fail;
}

int cmd_asympt(const std::string& name, double a, int s, std::vector<double> schedule,
               double tol, const std::string& format, const std::string& out_path) {
    if (schedule.empty()) {
        schedule = {0.90, 0.95, 0.98};
    }
    for (size_t i = 0; i < schedule.size(); ++i) {
        if (!(schedule[i] > 0.0 && schedule[i] < 1.0) ||
            (i > 0 && schedule[i] <= schedule[i - 1])) {
            throw std::domain_error("schedule must increase strictly inside (0,1)");
        }
    }
    std::vector<asym::AsymptoticCheck> checks;
    if (name == "product") {
        checks.push_back(asym::check_product_asymptotic(a, s, schedule, tol));
    } else if (name == "section7") {
        checks = asym::check_section7_chain(a, schedule, tol);
    } else if (name == "ri-chain") {
        checks = asym::check_ri_chain(schedule, tol);
    } else {
        throw std::invalid_argument("unknown check '" + name +
                                    "' (expected product, section7 or ri-chain)");
    }
    std::ofstream file;
    std::ostream& os = output(file, out_path);
    bool all_pass = true;
    for (const auto& check : checks) {
        all_pass = all_pass && check.pass;
        os << (format == "records" ? check.serialize() : check.summary_line()) << "\n";
    }
    return all_pass ? k_exit_pass : k_exit_fail;
}

int cmd_partitions(int s, int max_weight, const std::string& which, const std::string& format,
                   const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = output(file, out_path);
    std::vector<partitions::OracleReport> reports;
    if (which == "thm31" || which == "all") {
        reports.push_back(partitions::verify_thm31_coefficients(s, max_weight));
    }
    if (which == "durfee" || which == "all") {
        reports.push_back(partitions::verify_durfee_rectangle(s, max_weight));
    }
    if (which == "a179080" || which == "all") {
        reports.push_back(partitions::verify_a179080(max_weight));
    }
    if (reports.empty()) {
        throw std::invalid_argument("unknown partition check '" + which + "'");
    }
    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        if (format == "records") {
            os << "{\"name\":\"" << r.name << "\",\"status\":\"" << (r.pass ? "pass" : "fail")
               << "\",\"cases\":" << r.cases_checked << ",\"detail\":\"" << r.detail << "\"}\n";
        } else {
            os << (r.pass ? "pass" : "FAIL") << "  " << r.name << "  (" << r.cases_checked
               << " cases)" << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
        }
    }
    return all_pass ? k_exit_pass : k_exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series engine: expansion, identity verification, partition "
                 "oracles and q->1 asymptotic checks"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "text or records (newline-delimited)")
        ->check(CLI::IsMember({"text", "records"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    auto* expand = app.add_subcommand("expand", "expand a named series or a sum spec");
    std::string expand_id;
    std::string expand_spec;
    int expand_s = 0;
    std::int64_t expand_prec = 50;
    std::string expand_a, expand_b;
    expand->add_option("id", expand_id, "series id (see --list) or 'theta'");
    expand->add_option("--spec", expand_spec, "sum-spec record instead of an id");
    expand->add_option("--s", expand_s, "theta grid parameter (denom = 2s)");
    expand->add_option("--prec", expand_prec, "precision in t units")->capture_default_str();
    expand->add_option("--a", expand_a, "specialize a to a rational, e.g. -1 or 3/2");
    expand->add_option("--b", expand_b, "specialize b to a rational");
    bool list_ids = false;
    expand->add_flag("--list", list_ids, "list the named series ids");

    auto* verify = app.add_subcommand("verify", "verify registry identities");
    VerifyAllOptions vopts;
    std::string verify_id;
    std::string s_range_text;
    std::string perturb_text;
    verify->add_option("--id", verify_id, "verify one identity (default: all)");
    verify->add_option("--s", s_range_text, "restrict s, e.g. 3 or 1..5");
    verify->add_option("--prec", vopts.prec, "precision in t units")->capture_default_str();
    verify->add_option("--jobs", vopts.jobs, "worker threads (0 = hardware)");
    verify->add_option("--perturb", perturb_text,
                       "test hook: expr:t_exp:a:b:delta added before comparing");

    auto* asympt = app.add_subcommand("asympt", "q->1 asymptotic checks");
    std::string asympt_name;
    double asympt_a = 1.0;
    int asympt_s = 2;
    std::vector<double> asympt_schedule;
    double asympt_tol = 0.1;
    asympt->add_option("name", asympt_name, "product, section7 or ri-chain")->required();
    asympt->add_option("--a", asympt_a, "parameter a > 0")->capture_default_str();
    asympt->add_option("--s", asympt_s, "parameter s >= 1")->capture_default_str();
    asympt->add_option("--schedule", asympt_schedule, "q values increasing in (0,1)")
        ->delimiter(',');
    asympt->add_option("--tol", asympt_tol, "final |ratio-1| bound")->capture_default_str();

    auto* parts = app.add_subcommand("partitions", "combinatorial oracle checks");
    std::string parts_which = "all";
    int parts_s = 2;
    int parts_weight = 12;
    parts->add_option("check", parts_which, "thm31, durfee, a179080 or all");
    parts->add_option("--s", parts_s, "rectangle parameter")->capture_default_str();
    parts->add_option("--max-weight", parts_weight, "largest weight enumerated")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) {
            if (list_ids) {
                for (const auto& id : named_series_ids()) {
                    std::cout << id << "\n";
                }
                return k_exit_pass;
            }
            if (expand_id.empty() && expand_spec.empty()) {
                throw std::invalid_argument("expand needs a series id or --spec");
            }
            return cmd_expand(expand_id, expand_spec, expand_s, expand_prec, expand_a,
                              expand_b, format, out_path);
        }
        if (verify->parsed()) {
            if (!verify_id.empty() && find_entry(verify_id) == nullptr) {
                throw std::invalid_argument("unknown identity '" + verify_id + "'");
            }
            vopts.id_filter = verify_id;
            vopts.perturb = parse_perturbation(perturb_text);
            if (!s_range_text.empty()) {
                auto [lo, hi] = parse_range(s_range_text);
                vopts.s_min = lo;
                vopts.s_max = hi;
            }
            return cmd_verify(vopts, format, out_path);
        }
        if (asympt->parsed()) {
            return cmd_asympt(asympt_name, asympt_a, asympt_s, asympt_schedule, asympt_tol,
                              format, out_path);
        }
        if (parts->parsed()) {
            return cmd_partitions(parts_s, parts_weight, parts_which, format, out_path);
        }
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return k_exit_usage;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return k_exit_usage;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return k_exit_fail;
    }
    return k_exit_usage;
}
