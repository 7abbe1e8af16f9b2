#pragma once

#include <string>
#include <vector>

#include "qrr/qfunctions.hpp"

namespace qrr::asym {

/* Real dilogarithm Li2(z) = sum z^n/n^2 for z <= 1, |error| <= 1e-13.
 * |z| <= 1/2 uses the defining series; (1/2, 1] the reflection
 * Li2(z) + Li2(1-z) = pi^2/6 - log(z)log(1-z); [-1, -1/2) the duplication
 * Li2(z^2) = 2(Li2(z) + Li2(-z)); below -1 the inversion
 * Li2(z) + Li2(1/z) = -pi^2/6 - log^2(-z)/2. */
double li2(double z);

/* The unique root in (0,1) of a z^(2b) + z - 1 = 0 for a > 0, 2b > 0;
 * residual <= 1e-13. */
double solve_root(double a, double two_b);

/* Numeric evaluation of a SumSpec at real parameters, summing until three
 * consecutive terms drop below 1e-16 relative. q must lie in (0,1). */
double eval_sum_numeric(const SumSpec& spec, int denom, double a, double b, double q);

/* sum_{n in Z} a^n q^(unit n^2 / denom). */
double theta_numeric(double a, std::int64_t unit, int denom, double q);

/* prod_{i>=0} (1 - coeff q^((t_exp + i step)/denom)). */
double poch_infinite_numeric(double coeff, std::int64_t t_exp, std::int64_t step, int denom,
                             double q);

/* z^c / sqrt(z + 2b(1-z)) exp(-(Li2(a z^(2b)) + b log^2 z)/log q) with z the
 * positive root of a z^(2b) + z - 1 = 0. */
double ramanujan_prediction(double a, double b, double c, double q);

/* Positive root of a z^(1/s) + z - 1 = 0, solved through w = z^(1/s) where
 * the equation reads a w + w^s - 1 = 0; residual <= 1e-13. */
double product_root_z1(double a, int s);

/* sqrt(s)/(1 + (s-1) z1) exp(-(pi^2/6 + (s/2) log^2 a)/log q) with z1 the
 * positive root of a z^(1/s) + z - 1 = 0. */
double product_prediction(double a, int s, double q);

struct AsymptoticCheck {
    std::string name;
    std::vector<double> schedule;
    std::vector<double> ratios;
    double final_abs_err = 0.0;
    double tolerance = 0.1;
    bool pass = false;
    std::string detail;

    std::string serialize() const;     // one-line structured record
    std::string summary_line() const;
};

/* Ratio verdict: |ratio-1| must shrink along the schedule (ratios already
 * within 1e-9 of 1 sit at the double-precision floor and are exempt from the
 * strict decrease) and the last ratio must satisfy |ratio-1| < tolerance. */
bool ratios_converge(const std::vector<double>& ratios, double tolerance);

/* LHS product of the two dissection sums against product_prediction. */
AsymptoticCheck check_product_asymptotic(double a, int s, const std::vector<double>& schedule,
                                         double tolerance = 0.1);

/* The q -> 1 chain behind the two-product relation: the sum-of-two-products
 * form, the Euler product, and the theta function, each against its
 * elementary prediction. */
std::vector<AsymptoticCheck> check_section7_chain(double a, const std::vector<double>& schedule,
                                                  double tolerance = 0.1);

/* The Rogers-identity ratio chain: two ratio checks, the dilogarithm
 * identities at the golden and plastic-type roots, and the scan showing the
 * s = 3 exponent is no small rational multiple of pi^2. */
std::vector<AsymptoticCheck> check_ri_chain(const std::vector<double>& schedule,
                                            double tolerance = 0.1);

}  // namespace qrr::asym
