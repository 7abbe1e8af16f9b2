#pragma once

#include <compare>
#include <map>
#include <string>

#include "qrr/bigint.hpp"

namespace qrr {

/* Exponent pair of one monomial a^a_exp b^b_exp. The parameter a may carry
 * negative powers; b never does. */
struct ParamExp {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const ParamExp&, const ParamExp&) = default;
};

/* Element of the coefficient ring Z[a, 1/a, b]: a Laurent polynomial in a and
 * an ordinary polynomial in b with arbitrary-precision integer coefficients.
 * Zero coefficients are never stored, so is_zero() == terms().empty(). */
class CoeffPoly {
public:
    using Terms = std::map<ParamExp, BigInt>;

    CoeffPoly() = default;
    explicit CoeffPoly(BigInt constant);
    explicit CoeffPoly(long constant) : CoeffPoly(BigInt(constant)) {}
    static CoeffPoly monomial(BigInt coeff, int a_exp, int b_exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    const Terms& terms() const { return terms_; }
    const BigInt& coeff(int a_exp, int b_exp) const;

    void add_term(const ParamExp& key, const BigInt& value);

    CoeffPoly& operator+=(const CoeffPoly& rhs);
    CoeffPoly& operator-=(const CoeffPoly& rhs);
    CoeffPoly operator-() const;
    friend CoeffPoly operator+(CoeffPoly lhs, const CoeffPoly& rhs);
    friend CoeffPoly operator-(CoeffPoly lhs, const CoeffPoly& rhs);
    friend CoeffPoly operator*(const CoeffPoly& lhs, const CoeffPoly& rhs);
    bool operator==(const CoeffPoly&) const = default;

    CoeffPoly times_monomial(const BigInt& coeff, int a_exp, int b_exp) const;
    CoeffPoly scaled(const BigInt& k) const;
    CoeffPoly with_negated_a() const;  // a -> -a
    CoeffPoly with_negated_b() const;  // b -> -b
    CoeffPoly with_unit_a() const;     // a -> 1, b kept symbolic
    CoeffPoly with_unit_b() const;     // b -> 1, a kept symbolic

    /* Substitute numeric values for a and b; a_val must be nonzero whenever a
     * negative power of a is present. */
    Rational eval(const Rational& a_val, const Rational& b_val) const;
    double eval_double(double a_val, double b_val) const;

    bool all_coeffs_even() const;

    /* Deterministic display form, e.g. "a^-1*b^2 + 2". */
    std::string to_string() const;

private:
    Terms terms_;
};

}  // namespace qrr
