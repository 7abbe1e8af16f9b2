#include "qrr/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qrr::asym {

namespace {

constexpr double k_pi = std::numbers::pi;

void require_finite(double x, const char* where) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(where) + ": value is not finite");
    }
}

double li2_series(double z) {
    /* |z| <= 1/2: term n is z^n/n^2 <= 2^-n, so 50 terms reach 1e-16. */
    double sum = 0.0;
    double zn = 1.0;
    for (int n = 1; n <= 60; ++n) {
        zn *= z;
        sum += zn / (static_cast<double>(n) * n);
    }
    return sum;
}

}  // namespace

double li2(double z) {
    if (z > 1.0) {
        throw std::domain_error("li2: real branch requires z <= 1");
    }
    if (z == 1.0) {
        return k_pi * k_pi / 6.0;
    }
    if (z < -1.0) {
        double log_neg = std::log(-z);
        return -k_pi * k_pi / 6.0 - 0.5 * log_neg * log_neg - li2(1.0 / z);
    }
    if (z < -0.5) {
        return 0.5 * li2(z * z) - li2(-z);
    }
    if (z <= 0.5) {
        return li2_series(z);
    }
    return k_pi * k_pi / 6.0 - std::log(z) * std::log(1.0 - z) - li2(1.0 - z);
}

double solve_root(double a, double two_b) {
    if (a <= 0.0 || two_b <= 0.0) {
        throw std::domain_error("solve_root: requires a > 0 and 2b > 0");
    }
    auto f = [&](double z) { return a * std::pow(z, two_b) + z - 1.0; };
    /* f is strictly increasing on (0,1) with f(0+) = -1 and f(1) = a > 0. */
    double lo = 0.0, hi = 1.0;
    if (!(f(1.0) > 0.0)) {
        throw std::logic_error("solve_root: bracketing failed");
    }
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double z = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) {  // Newton polish
        double deriv = a * two_b * std::pow(z, two_b - 1.0) + 1.0;
        z -= f(z) / deriv;
    }
    require_finite(z, "solve_root");
    if (!(z > 0.0 && z < 1.0) || std::fabs(f(z)) > 1e-13) {
        throw std::logic_error("solve_root: residual too large");
    }
    return z;
}

double eval_sum_numeric(const SumSpec& spec, int denom, double a, double b, double q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::domain_error("eval_sum_numeric: q must lie in (0,1)");
    }
    const double base_val = spec.poch_base.sign * std::pow(a, spec.poch_base.a_exp) *
                            std::pow(b, spec.poch_base.b_exp) *
                            std::pow(q, static_cast<double>(spec.poch_base.t_exp) / denom);
    const double step_val = std::pow(q, static_cast<double>(spec.poch_step) / denom);

    /* (base; step)_len grown incrementally while len(n) is nondecreasing;
     * recomputed outright otherwise */
    const bool incremental = spec.poch_len.c1 >= 0;
    double poch = 1.0;
    double factor_arg = base_val;  // base * step^i for the next factor
    std::int64_t have = 0;         // factors accumulated in poch
    auto poch_at = [&](std::int64_t len) {
        double p = 1.0;
        double arg = base_val;
        for (std::int64_t i = 0; i < len; ++i) {
            p *= 1.0 - arg;
            arg *= step_val;
        }
        return p;
    };

    double sum = 0.0;
    int small_terms = 0;
    for (std::int64_t n = spec.n_start; small_terms < 3; ++n) {
        std::int64_t len = spec.poch_len(n);
        if (len < 0) {
            throw std::domain_error("eval_sum_numeric: negative Pochhammer length");
        }
        if (incremental) {
            while (have < len) {
                poch *= 1.0 - factor_arg;
                factor_arg *= step_val;
                ++have;
            }
        } else {
            poch = poch_at(len);
        }
        double term = std::pow(a, static_cast<double>(spec.a_exp(n))) *
                      std::pow(b, static_cast<double>(spec.b_exp(n))) *
                      std::pow(q, static_cast<double>(spec.q_exp(n)) / denom) / poch;
        if (spec.alternating && n % 2 != 0) {
            term = -term;
        }
        sum += term;
        require_finite(sum, "eval_sum_numeric");
        if (std::fabs(term) < 1e-16 * std::fabs(sum)) {
            ++small_terms;
        } else {
            small_terms = 0;
        }
        if (n - spec.n_start > 1000000) {
            throw std::domain_error("eval_sum_numeric: sum does not converge");
        }
    }
    return sum;
}

double theta_numeric(double a, std::int64_t unit, int denom, double q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::domain_error("theta_numeric: q must lie in (0,1)");
    }
    double sum = 1.0;
    for (int sign = -1; sign <= 1; sign += 2) {
        int small_terms = 0;
        for (std::int64_t n = 1; small_terms < 3; ++n) {
            double term = std::pow(a, static_cast<double>(sign * n)) *
                          std::pow(q, static_cast<double>(unit * n * n) / denom);
            sum += term;
            require_finite(sum, "theta_numeric");
            if (std::fabs(term) < 1e-16 * std::fabs(sum)) {
                ++small_terms;
            } else {
                small_terms = 0;
            }
            if (n > 1000000) {
                throw std::domain_error("theta_numeric: sum does not converge");
            }
        }
    }
    return sum;
}

double poch_infinite_numeric(double coeff, std::int64_t t_exp, std::int64_t step, int denom,
                             double q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::domain_error("poch_infinite_numeric: q must lie in (0,1)");
    }
    double prod = 1.0;
    double arg = coeff * std::pow(q, static_cast<double>(t_exp) / denom);
    double step_val = std::pow(q, static_cast<double>(step) / denom);
    while (std::fabs(arg) > 1e-18) {
        prod *= 1.0 - arg;
        arg *= step_val;
    }
    require_finite(prod, "poch_infinite_numeric");
    return prod;
}

double ramanujan_prediction(double a, double b, double c, double q) {
    if (a <= 0.0 || b <= 0.0) {
        throw std::domain_error("ramanujan_prediction: requires a > 0 and b > 0");
    }
    if (!(q > 0.0 && q < 1.0)) {
        throw std::domain_error("ramanujan_prediction: q must lie in (0,1)");
    }
    double z = solve_root(a, 2.0 * b);
    double log_z = std::log(z);
    double value = std::pow(z, c) / std::sqrt(z + 2.0 * b * (1.0 - z)) *
                   std::exp(-(li2(a * std::pow(z, 2.0 * b)) + b * log_z * log_z) / std::log(q));
    require_finite(value, "ramanujan_prediction");
    return value;
}

double product_root_z1(double a, int s) {
    if (a <= 0.0 || s < 1) {
        throw std::domain_error("product_root_z1: requires a > 0 and s >= 1");
    }
    auto f = [&](double w) { return a * w + std::pow(w, s) - 1.0; };
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double w = 0.5 * (lo + hi);
    double z1 = std::pow(w, s);
    if (std::fabs(a * std::pow(z1, 1.0 / s) + z1 - 1.0) > 1e-13) {
        throw std::logic_error("product_root_z1: residual too large");
    }
    return z1;
}

double product_prediction(double a, int s, double q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::domain_error("product_prediction: q must lie in (0,1)");
    }
    double z1 = product_root_z1(a, s);
    double log_a = std::log(a);
    double value = std::sqrt(static_cast<double>(s)) / (1.0 + (s - 1) * z1) *
                   std::exp(-(k_pi * k_pi / 6.0 + 0.5 * s * log_a * log_a) / std::log(q));
    require_finite(value, "product_prediction");
    return value;
}

std::string AsymptoticCheck::serialize() const {
    nlohmann::ordered_json rec;
    rec["name"] = name;
    rec["schedule"] = schedule;
    rec["ratios"] = ratios;
    rec["final_abs_err"] = final_abs_err;
    rec["tolerance"] = tolerance;
    rec["verdict"] = pass ? "pass" : "fail";
    rec["detail"] = detail;
    return rec.dump();
}

std::string AsymptoticCheck::summary_line() const {
    std::ostringstream os;
    os << (pass ? "pass" : "FAIL") << "  " << name;
    if (!ratios.empty()) {
        os << "  ratios:";
        for (double r : ratios) os << " " << r;
    }
    os << "  final |ratio-1| = " << final_abs_err;
    if (!detail.empty()) os << "  (" << detail << ")";
    return os.str();
}

bool ratios_converge(const std::vector<double>& ratios, double tolerance) {
    if (ratios.empty()) {
        return false;
    }
    for (double r : ratios) {
        if (!std::isfinite(r) || r <= 0.0) {
            return false;
        }
    }
    for (size_t i = 1; i < ratios.size(); ++i) {
        double prev = std::fabs(ratios[i - 1] - 1.0);
        double cur = std::fabs(ratios[i] - 1.0);
        if (cur >= prev && cur > 1e-9) {
            return false;
        }
    }
    return std::fabs(ratios.back() - 1.0) < tolerance;
}

namespace {

AsymptoticCheck ratio_check(std::string name, const std::vector<double>& schedule,
                            double tolerance, const std::function<double(double)>& lhs,
                            const std::function<double(double)>& prediction) {
    AsymptoticCheck check;
    check.name = std::move(name);
    check.schedule = schedule;
    check.tolerance = tolerance;
    for (double q : schedule) {
        double ratio = lhs(q) / prediction(q);
        require_finite(ratio, check.name.c_str());
        check.ratios.push_back(ratio);
    }
    check.final_abs_err = check.ratios.empty() ? 1.0 : std::fabs(check.ratios.back() - 1.0);
    check.pass = ratios_converge(check.ratios, tolerance);
    return check;
}

SumSpec dissection_sum_spec(int s) {
    /* sum a^n q^(n^2/(2s)) / (q)_n on the grid denom = 2s */
    SumSpec spec;
    spec.a_exp = {0, 1};
    spec.q_exp = {1, 0, 0};
    spec.poch_base = {1, 0, 0, 2 * s};
    spec.poch_step = 2 * s;
    return spec;
}

SumSpec dissection_dual_spec(int s) {
    /* sum a^(-ns) q^(n^2 s/2) / (q)_n on the same grid */
    SumSpec spec;
    spec.a_exp = {0, -s};
    spec.q_exp = {static_cast<std::int64_t>(s) * s, 0, 0};
    spec.poch_base = {1, 0, 0, 2 * s};
    spec.poch_step = 2 * s;
    return spec;
}

}  // namespace

AsymptoticCheck check_product_asymptotic(double a, int s, const std::vector<double>& schedule,
                                         double tolerance) {
    if (a <= 0.0) {
        throw std::domain_error("check_product_asymptotic: requires a > 0");
    }
    if (s < 1) {
        throw std::domain_error("check_product_asymptotic: requires s >= 1");
    }
    std::ostringstream name;
    name << "product(a=" << a << ",s=" << s << ")";
    return ratio_check(
        name.str(), schedule, tolerance,
        [&](double q) {
            return eval_sum_numeric(dissection_sum_spec(s), 2 * s, a, 1.0, q) *
                   eval_sum_numeric(dissection_dual_spec(s), 2 * s, a, 1.0, q);
        },
        [&](double q) { return product_prediction(a, s, q); });
}

std::vector<AsymptoticCheck> check_section7_chain(double a, const std::vector<double>& schedule,
                                                  double tolerance) {
    if (a <= 0.0) {
        throw std::domain_error("check_section7_chain: requires a > 0");
    }
    std::vector<AsymptoticCheck> checks;
    const double log_a = std::log(a);

    /* (i) the b = 1 sum-of-two-products form vs sqrt(2) e^{-(pi^2/6+log^2 a)/log q} */
    SumSpec sa;  // sum a^(-2m) q^(m^2) / (q)_m, denom 4
    sa.a_exp = {0, -2};
    sa.q_exp = {4, 0, 0};
    sa.poch_base = {1, 0, 0, 4};
    sa.poch_step = 4;
    SumSpec sb;  // sum a^n q^(n^2/4) / (q)_n
    sb.a_exp = {0, 1};
    sb.q_exp = {1, 0, 0};
    sb.poch_base = {1, 0, 0, 4};
    sb.poch_step = 4;
    SumSpec sc;  // sum a^(-2m-1) q^(m^2+m) / (q)_m
    sc.a_exp = {-1, -2};
    sc.q_exp = {4, 4, 0};
    sc.poch_base = {1, 0, 0, 4};
    sc.poch_step = 4;
    SumSpec sd;  // sum a^n q^((n+1)^2/4) / (q)_n
    sd.a_exp = {0, 1};
    sd.q_exp = {1, 2, 1};
    sd.poch_base = {1, 0, 0, 4};
    sd.poch_step = 4;
    checks.push_back(ratio_check(
        "sum-of-products", schedule, tolerance,
        [&, a](double q) {
            return eval_sum_numeric(sa, 4, a, 1.0, q) * eval_sum_numeric(sb, 4, a, 1.0, q) +
                   eval_sum_numeric(sc, 4, a, 1.0, q) * eval_sum_numeric(sd, 4, a, 1.0, q);
        },
        [&, a](double q) {
            return std::sqrt(2.0) *
                   std::exp(-(k_pi * k_pi / 6.0 + log_a * log_a) / std::log(q));
        }));

    /* (ii) 1/(q)_inf vs sqrt(-log q / 2 pi) e^{-pi^2/(6 log q)} */
    checks.push_back(ratio_check(
        "euler-product", schedule, tolerance,
        [](double q) { return 1.0 / poch_infinite_numeric(1.0, 1, 1, 1, q); },
        [](double q) {
            return std::sqrt(-std::log(q) / (2.0 * k_pi)) *
                   std::exp(-k_pi * k_pi / (6.0 * std::log(q)));
        }));

    /* (iii) theta(a, q^(1/4)) vs 2 sqrt(pi/-log q) e^{-log^2 a / log q} */
    checks.push_back(ratio_check(
        "theta", schedule, tolerance,
        [a](double q) { return theta_numeric(a, 1, 4, q); },
        [&, a](double q) {
            return 2.0 * std::sqrt(k_pi / -std::log(q)) *
                   std::exp(-log_a * log_a / std::log(q));
        }));
    return checks;
}

std::vector<AsymptoticCheck> check_ri_chain(const std::vector<double>& schedule,
                                            double tolerance) {
    std::vector<AsymptoticCheck> checks;

    /* (i) [sum q^(m^2)/(q)_m] / [sum q^(n^2)/(q^4;q^4)_n]
     *     vs (1/sqrt 2) e^{-pi^2/(24 log q)} */
    SumSpec top;
    top.q_exp = {1, 0, 0};
    top.poch_base = {1, 0, 0, 1};
    SumSpec bottom;
    bottom.q_exp = {1, 0, 0};
    bottom.poch_base = {1, 0, 0, 4};
    bottom.poch_step = 4;
    checks.push_back(ratio_check(
        "rogers-ratio", schedule, tolerance,
        [&](double q) {
            return eval_sum_numeric(top, 1, 1.0, 1.0, q) /
                   eval_sum_numeric(bottom, 1, 1.0, 1.0, q);
        },
        [](double q) {
            return std::exp(-k_pi * k_pi / (24.0 * std::log(q))) / std::sqrt(2.0);
        }));

    /* (ii) (-q^2;q^2)_inf against the same prediction */
    checks.push_back(ratio_check(
        "even-product", schedule, tolerance,
        [](double q) { return poch_infinite_numeric(-1.0, 2, 2, 1, q); },
        [](double q) {
            return std::exp(-k_pi * k_pi / (24.0 * std::log(q))) / std::sqrt(2.0);
        }));

    /* (iii) 6 Li2(v) - 30 Li2(1-v) - 36 Li2(-v^2) = pi^2 at the root of
     * z^3 + z - 1 */
    {
        AsymptoticCheck check;
        check.name = "dilog-cubic-root";
        check.tolerance = 1e-12;
        double v = solve_root(1.0, 3.0);
        double value = 6.0 * li2(v) - 30.0 * li2(1.0 - v) - 36.0 * li2(-v * v);
        check.final_abs_err = std::fabs(value - k_pi * k_pi);
        check.pass = check.final_abs_err <= 1e-12;
        std::ostringstream os;
        os << "value " << value << " vs pi^2 " << k_pi * k_pi;
        check.detail = os.str();
        checks.push_back(std::move(check));
    }

    /* (iv) Li2(1-v) + (5/4) log^2 v - (1/6) Li2(v) misses every m pi^2 / n
     * with m, n <= 24 by more than 1e-6 */
    {
        AsymptoticCheck check;
        check.name = "no-rational-pi2-multiple";
        check.tolerance = 1e-6;
        double v = solve_root(1.0, 3.0);
        double value = li2(1.0 - v) + 1.25 * std::log(v) * std::log(v) - li2(v) / 6.0;
        double best = 1e9;
        int best_m = 0, best_n = 0;
        for (int m = 1; m <= 24; ++m) {
            for (int n = 1; n <= 24; ++n) {
                double err = std::fabs(value - m * k_pi * k_pi / n);
                if (err < best) {
                    best = err;
                    best_m = m;
                    best_n = n;
                }
            }
        }
        check.final_abs_err = best;
        check.pass = best > 1e-6;
        std::ostringstream os;
        os << "value " << value << "; nearest multiple " << best_m << "pi^2/" << best_n
           << " misses by " << best;
        check.detail = os.str();
        checks.push_back(std::move(check));
    }
    return checks;
}

}  // namespace qrr::asym
