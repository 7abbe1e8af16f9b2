#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qrr/qseries.hpp"

namespace qrr {

/* sign * a^a_exp * b^b_exp * t^t_exp with sign in {+1, -1}; the base A of a
 * q-Pochhammer factor (1 - A t^(i*step)) and the head of a sum term. */
struct Monomial {
    int sign = 1;
    int a_exp = 0;
    int b_exp = 0;
    std::int64_t t_exp = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct AffineInt {
    std::int64_t c0 = 0;
    std::int64_t c1 = 0;
    std::int64_t operator()(std::int64_t n) const { return c0 + c1 * n; }
};

struct QuadInt {
    std::int64_t c2 = 0;
    std::int64_t c1 = 0;
    std::int64_t c0 = 0;
    std::int64_t operator()(std::int64_t n) const { return (c2 * n + c1) * n + c0; }
};

/* Declarative one-parameter sum
 *
 *   sum_{n >= n_start} (-1)^(n if alternating) a^a_exp(n) b^b_exp(n)
 *                      t^q_exp(n) / (poch_base; t^poch_step)_{poch_len(n)}
 *
 * q_exp must diverge, so the expansion bound N*(P) = max{n : q_exp(n) <= P}
 * is finite and computed exactly. */
struct SumSpec {
    AffineInt a_exp{};
    AffineInt b_exp{};
    QuadInt q_exp{};
    bool alternating = false;
    Monomial poch_base{1, 0, 0, 0};
    std::int64_t poch_step = 1;
    AffineInt poch_len{0, 1};
    std::int64_t n_start = 0;

    std::string serialize() const;
    static SumSpec deserialize(const std::string& record);
};

/* Finite product prod_{i=0}^{n-1} (1 - base t^(i*step)). */
QSeries poch_finite(const Monomial& base, std::int64_t step, std::int64_t n,
                    int denom, std::int64_t prec);

/* Infinite product, truncated once factors reduce to 1 mod t^(prec+1).
 * The base must have positive t-valuation. */
QSeries poch_infinite(const Monomial& base, std::int64_t step, int denom, std::int64_t prec);

/* Target grid (denominator, precision) of one expansion run plus the cache of
 * Pochhammer inverses keyed by (base, step, length). Builders on one context
 * share the cache; contexts are not shared across threads. */
class BuildCtx {
public:
    BuildCtx(int denom, std::int64_t prec) : denom_(denom), prec_(prec) {}

    int denom() const { return denom_; }
    std::int64_t prec() const { return prec_; }

    const QSeries& inv_poch_finite(const Monomial& base, std::int64_t step, std::int64_t n);
    const QSeries& inv_poch_infinite(const Monomial& base, std::int64_t step);

    /* Shorthands on this grid. */
    QSeries zero() const { return QSeries(denom_, prec_); }
    QSeries one() const { return QSeries::one(denom_, prec_); }
    QSeries monomial(CoeffPoly c, std::int64_t e) const {
        return QSeries::monomial(std::move(c), e, denom_, prec_);
    }

private:
    struct Key {
        Monomial base;
        std::int64_t step;
        std::int64_t n;  // -1 for the infinite product
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    int denom_;
    std::int64_t prec_;
    std::map<Key, QSeries> cache_;
};

QSeries sum_expand(const SumSpec& spec, BuildCtx& ctx);

/* Two-sided theta sum_{n in Z} a^n t^(unit n^2); on the canonical grid for a
 * given s (denom = 2s) the unit is 1. */
QSeries theta_full(BuildCtx& ctx, std::int64_t unit);

enum class ThetaSide { positive, nonpositive };

/* One-sided halves: n >= 1, or n <= 0. */
QSeries partial_theta(ThetaSide side, BuildCtx& ctx, std::int64_t unit);

/* (1-b) sum_{n>=1} a^n t^(unit n^2) sum_{l=0}^{n-1} b^l / (q)_l, the
 * correction that vanishes at b = 1. */
QSeries correction_term(BuildCtx& ctx, std::int64_t unit);

/* Right side of the multi-sum generalization of Rogers' identity: the product
 * (-aq^s; q^s)_inf times the nested sum over (n_1, ..., n_{s-1}). */
QSeries bressoud_rhs(int s, BuildCtx& ctx);

/* Catalog of named series, all on the integer grid (denom = 1). */
QSeries named_series(std::string_view id, std::int64_t prec);
const std::vector<std::string>& named_series_ids();

/* Generic bounded iteration for sums whose exponent function eventually
 * exceeds the precision: calls fn(n) for every n >= n_start with
 * expo(n) <= prec, stopping once the exponent stays out of range. */
template <class ExpoFn, class TermFn>
void for_each_term(std::int64_t n_start, std::int64_t prec, ExpoFn&& expo, TermFn&& fn) {
    int overshoot = 0;
    for (std::int64_t n = n_start; overshoot < 3; ++n) {
        std::int64_t e = expo(n);
        if (e > prec) {
            ++overshoot;
        } else {
            overshoot = 0;
            fn(n);
        }
        if (n - n_start > 8'000'000) {
            throw std::domain_error("sum expansion does not terminate");
        }
    }
}

}  // namespace qrr
