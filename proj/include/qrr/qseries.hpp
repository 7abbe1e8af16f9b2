#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qrr/coeff_poly.hpp"

namespace qrr {

/* Truncated Puiseux series in q over CoeffPoly. Exponents are e/D for a fixed
 * positive denominator D; terms are stored sparsely by the integer numerator
 * e with 0 <= e <= prec. The series is known exactly modulo t^(prec+1), where
 * t = q^(1/D). All arithmetic is exact and tracks precision:
 *
 *   prec(x + y) = min(prec x, prec y)
 *   prec(x * y) = min(prec x + val y, prec y + val x)
 *
 * with val the least stored exponent (prec+1 for a stored-empty series). */
class QSeries {
public:
    using Coeffs = std::map<std::int64_t, CoeffPoly>;

    QSeries(int denom, std::int64_t prec);
    static QSeries one(int denom, std::int64_t prec);
    static QSeries monomial(CoeffPoly c, std::int64_t t_exp, int denom, std::int64_t prec);

    int denom() const { return denom_; }
    std::int64_t prec() const { return prec_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t valuation() const;

    /* Coefficient at exponent numerator e; requires e <= prec. */
    const CoeffPoly& coeff(std::int64_t e) const;
    BigInt coefficient(std::int64_t e, int a_exp, int b_exp) const;

    void set_coeff(std::int64_t e, CoeffPoly c);
    void add_term(std::int64_t e, const CoeffPoly& c);
    void add_term(std::int64_t e, CoeffPoly&& c);

    QSeries truncated(std::int64_t new_prec) const;

    friend QSeries add(const QSeries& x, const QSeries& y);
    friend QSeries sub(const QSeries& x, const QSeries& y);
    friend QSeries mul(const QSeries& x, const QSeries& y);

    /* x * c * t^t_exp; exponents shift up, precision rises with them. */
    QSeries times_monomial(const CoeffPoly& c, std::int64_t t_exp) const;
    QSeries negated() const;
    QSeries scaled(const BigInt& k) const;

    /* Reciprocal modulo t^(target_prec+1); the constant term must be 1. */
    friend QSeries invert(const QSeries& x, std::int64_t target_prec);

    /* q -> q^k: every exponent numerator and the precision scale by k. */
    QSeries rescaled(int k) const;
    /* Denominator refinement D -> new_denom (a multiple of D): relabels the
     * same series on a finer exponent grid. */
    QSeries embedded(int new_denom) const;
    /* Denominator coarsening by a factor g dividing D and every exponent. */
    QSeries reduced(int g) const;
    /* Relabel the denominator without touching numerators; as a substitution
     * this is q -> q^(D/new_denom) read on the fractional grid. */
    QSeries reinterpreted(int new_denom) const;
    QSeries with_negated_q() const;  // q -> -q; requires denom == 1
    QSeries with_negated_a() const;
    QSeries with_negated_b() const;
    QSeries with_unit_a() const;  // a -> 1, b kept symbolic
    QSeries with_unit_b() const;  // b -> 1, a kept symbolic

    bool operator==(const QSeries&) const = default;

    double eval_double(double a_val, double b_val, double q) const;

    /* Canonical one-line structured record
     *   {"denom":D,"prec":P,"terms":[{"e":E,"coeff":[{"a":A,"b":B,"c":"N"}]}]}
     * with terms sorted by e and coefficient keys sorted by (a, b).
     * serialize/deserialize round-trip bit-exactly. */
    std::string serialize() const;
    static QSeries deserialize(const std::string& record);

private:
    int denom_;
    std::int64_t prec_;
    Coeffs coeffs_;
};

/* Substitution value for one parameter: coeff * t^t_exp, t in the units of
 * the series being specialized. coeff is an exact rational. */
struct SpecValue {
    Rational coeff = 1;
    std::int64_t t_exp = 0;
};

/* Result of specializing a and b: the exact value is series / scale with
 * scale a positive integer (1 whenever no rational denominators occur). */
struct Specialized {
    QSeries series;
    BigInt scale;
};

/* Substitute a = a_val, b = b_val. a_val.coeff must be nonzero. When either
 * substitution shifts exponents (t_exp != 0), terms beyond the stored
 * precision could migrate below it, so the caller must supply result_prec
 * together with a bound of that kind; without shifts the precision carries
 * over unchanged. */
Specialized specialize(const QSeries& x, const SpecValue& a_val, const SpecValue& b_val,
                       std::optional<std::int64_t> result_prec = std::nullopt);

/* specialize() restricted to substitutions that stay in Z: asserts scale 1. */
QSeries specialize_unit(const QSeries& x, const SpecValue& a_val, const SpecValue& b_val,
                        std::optional<std::int64_t> result_prec = std::nullopt);

}  // namespace qrr
