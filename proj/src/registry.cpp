#include <algorithm>
#include <functional>

#include "qrr/identities.hpp"
#include "qrr/qfunctions.hpp"

namespace qrr {

namespace {

using std::int64_t;

CoeffPoly apow(int64_t k) {
    return CoeffPoly::monomial(BigInt(1), static_cast<int>(k), 0);
}

CoeffPoly abpow(int64_t k) {
    return CoeffPoly::monomial(BigInt(1), static_cast<int>(k), static_cast<int>(k));
}

Monomial q_base(const BuildCtx& ctx) { return {1, 0, 0, ctx.denom()}; }
Monomial bq_base(const BuildCtx& ctx) { return {1, 0, 1, ctx.denom()}; }

/* sum_{n >= n0, expo(n) <= prec} coeff(n) t^expo(n) inv(n) */
template <class Expo, class Coeff, class Inv>
QSeries series_sum(BuildCtx& ctx, int64_t n0, Expo expo, Coeff coeff, Inv inv) {
    QSeries acc = ctx.zero();
    for_each_term(n0, ctx.prec(), expo, [&](int64_t n) {
        acc = add(acc, inv(n).times_monomial(coeff(n), expo(n)));
    });
    return acc;
}

/* The s-dissection left-hand side: for each k < s the product of the m-sum
 * (exponents (sm+k)^2, parameter a^(-sm-k), denominator (bq)_m) with the
 * n-sum (exponents n(n+2js-2k), parameter (ab)^n, denominator (q)_n),
 * where j = [k != 0]; built on the grid D = 2s so q^(1/(2s)) = t. */
QSeries dissection_lhs(BuildCtx& ctx, int s) {
    const int D = ctx.denom();
    QSeries total = ctx.zero();
    for (int k = 0; k < s; ++k) {
        int64_t j = k == 0 ? 0 : 1;
        QSeries m_sum = series_sum(
            ctx, 0, [&](int64_t m) { return (s * m + k) * (s * m + k); },
            [&](int64_t m) { return apow(-(s * m + k)); },
            [&](int64_t m) -> const QSeries& { return ctx.inv_poch_finite(bq_base(ctx), D, m); });
        QSeries n_sum = series_sum(
            ctx, 0, [&](int64_t n) { return n * (n + 2 * j * s - 2 * k); },
            [&](int64_t n) { return abpow(n); },
            [&](int64_t n) -> const QSeries& { return ctx.inv_poch_finite(q_base(ctx), D, n); });
        total = add(total, mul(m_sum, n_sum));
    }
    return total;
}

QSeries dissection_rhs(BuildCtx& ctx) {
    return sub(mul(ctx.inv_poch_infinite(bq_base(ctx), ctx.denom()), theta_full(ctx, 1)),
               correction_term(ctx, 1));
}

/* Halves of the dissection: the inner n-sum restricted to n > sm+k (first
 * part) or 0 <= n <= sm+k (second part); these need one inner sum per m. */
QSeries dissection_half_lhs(BuildCtx& ctx, int s, bool upper_half) {
    const int D = ctx.denom();
    QSeries total = ctx.zero();
    for (int k = 0; k < s; ++k) {
        int64_t j = k == 0 ? 0 : 1;
        for (int64_t m = 0; (s * m + k) * (s * m + k) <= ctx.prec(); ++m) {
            int64_t cut = s * m + k;
            QSeries head = ctx.inv_poch_finite(bq_base(ctx), D, m)
                               .times_monomial(apow(-cut), cut * cut);
            QSeries n_sum = ctx.zero();
            if (upper_half) {
                n_sum = series_sum(
                    ctx, cut + 1, [&](int64_t n) { return n * (n + 2 * j * s - 2 * k); },
                    [&](int64_t n) { return abpow(n); },
                    [&](int64_t n) -> const QSeries& {
                        return ctx.inv_poch_finite(q_base(ctx), D, n);
                    });
            } else {
                for (int64_t n = 0; n <= cut; ++n) {
                    int64_t e = n * (n + 2 * j * s - 2 * k);
                    if (e > ctx.prec()) continue;
                    n_sum = add(n_sum, ctx.inv_poch_finite(q_base(ctx), D, n)
                                           .times_monomial(abpow(n), e));
                }
            }
            total = add(total, mul(head, n_sum));
        }
    }
    return total;
}

/* Sum side of the theta annihilation: a = -q^(-1/(2s)) substituted into the
 * dissection, as printed, with signs (-1)^(sm+k) and (-b)^n. */
QSeries annihilation_lhs(BuildCtx& ctx, int s) {
    const int D = ctx.denom();
    QSeries total = ctx.zero();
    for (int k = 0; k < s; ++k) {
        int64_t j = k == 0 ? 0 : 1;
        QSeries m_sum = series_sum(
            ctx, 0, [&](int64_t m) { return (s * m + k) * (s * m + k + 1); },
            [&](int64_t m) { return CoeffPoly(BigInt((s * m + k) % 2 != 0 ? -1 : 1)); },
            [&](int64_t m) -> const QSeries& { return ctx.inv_poch_finite(bq_base(ctx), D, m); });
        QSeries n_sum = series_sum(
            ctx, 0, [&](int64_t n) { return n * (n + 2 * j * s - 2 * k - 1); },
            [&](int64_t n) {
                return CoeffPoly::monomial(BigInt(n % 2 != 0 ? -1 : 1), 0, static_cast<int>(n));
            },
            [&](int64_t n) -> const QSeries& { return ctx.inv_poch_finite(q_base(ctx), D, n); });
        total = add(total, mul(m_sum, n_sum));
    }
    return total;
}

QSeries annihilation_rhs(BuildCtx& ctx) {
    /* -(1-b) sum_{n>=1} (-1)^n t^(n(n-1)) sum_{l<n} b^l/(q)_l */
    QSeries acc = ctx.zero();
    QSeries partial = ctx.zero();
    for (int64_t n = 1; n * (n - 1) <= ctx.prec(); ++n) {
        partial = add(partial,
                      ctx.inv_poch_finite(q_base(ctx), ctx.denom(), n - 1)
                          .times_monomial(CoeffPoly::monomial(1, 0, static_cast<int>(n - 1)), 0));
        acc = add(acc, partial.times_monomial(CoeffPoly(BigInt(n % 2 != 0 ? -1 : 1)), n * (n - 1)));
    }
    QSeries with_b = sub(acc, acc.times_monomial(CoeffPoly::monomial(1, 0, 1), 0));
    return with_b.negated();
}

QSeries g_sum(BuildCtx& ctx) {
    SumSpec spec;
    spec.q_exp = {1, 0, 0};
    spec.poch_base = q_base(ctx);
    spec.poch_step = ctx.denom();
    return sum_expand(spec, ctx);
}

QSeries h_sum(BuildCtx& ctx) {
    SumSpec spec;
    spec.q_exp = {1, 1, 0};
    spec.poch_base = q_base(ctx);
    spec.poch_step = ctx.denom();
    return sum_expand(spec, ctx);
}

/* G(q^4), H(q^4), f0(q^4), f1(q^4) on the integer grid. */
QSeries at_q4(const QSeries& x, int64_t prec) {
    return x.rescaled(4).truncated(std::min<int64_t>(prec, x.prec() * 4));
}

QSeries phi_theta(BuildCtx& ctx) {
    return specialize_unit(theta_full(ctx, ctx.denom()), {1, 0}, {1, 0});
}

QSeries phi_theta_neg(BuildCtx& ctx) {
    return specialize_unit(theta_full(ctx, ctx.denom()), {-1, 0}, {1, 0});
}

/* psi(q^2) = (q^4;q^4)_inf / (q^2;q^4)_inf on the integer grid. */
QSeries psi_q2(BuildCtx& ctx) {
    return mul(poch_infinite({1, 0, 0, 4}, 4, ctx.denom(), ctx.prec()),
               invert(poch_infinite({1, 0, 0, 2}, 4, ctx.denom(), ctx.prec()), ctx.prec()));
}

/* (-q;-q)_inf = (-q;q^2)_inf (q^2;q^2)_inf. */
QSeries neg_q_neg_q_inf(BuildCtx& ctx) {
    return mul(poch_infinite({-1, 0, 0, 1}, 2, ctx.denom(), ctx.prec()),
               poch_infinite({1, 0, 0, 2}, 2, ctx.denom(), ctx.prec()));
}

/* Pieces shared by the stacks congruence and the substituted chain. */
struct StacksParts {
    QSeries A;       // sum q^(m(2m+1)) / (-q^2;q^2)_m
    QSeries B1;      // sum_{n>=1} q^(n(n-1)/2) / (q^2;q^2)_n
    QSeries T;       // sum q^(2m^2+3m+1) / (-q^2;q^2)_m
    QSeries inv_nn;  // 1 / (-q;-q)_inf
};

StacksParts stacks_parts(BuildCtx& ctx) {
    const Monomial neg_q2{-1, 0, 0, 2};
    const Monomial q2{1, 0, 0, 2};
    StacksParts parts{ctx.zero(), ctx.zero(), ctx.zero(), ctx.zero()};
    parts.A = series_sum(
        ctx, 0, [](int64_t m) { return m * (2 * m + 1); },
        [](int64_t) { return CoeffPoly(BigInt(1)); },
        [&](int64_t m) -> const QSeries& { return ctx.inv_poch_finite(neg_q2, 2, m); });
    parts.B1 = series_sum(
        ctx, 1, [](int64_t n) { return n * (n - 1) / 2; },
        [](int64_t) { return CoeffPoly(BigInt(1)); },
        [&](int64_t n) -> const QSeries& { return ctx.inv_poch_finite(q2, 2, n); });
    parts.T = series_sum(
        ctx, 0, [](int64_t m) { return 2 * m * m + 3 * m + 1; },
        [](int64_t) { return CoeffPoly(BigInt(1)); },
        [&](int64_t m) -> const QSeries& { return ctx.inv_poch_finite(neg_q2, 2, m); });
    parts.inv_nn = invert(neg_q_neg_q_inf(ctx), ctx.prec());
    return parts;
}

/* The congruence expression A * {1 + B1 - T/(-q;-q)_inf}. */
QSeries congruence_expr(BuildCtx& ctx) {
    StacksParts p = stacks_parts(ctx);
    QSeries brace = sub(add(ctx.one(), p.B1), mul(p.inv_nn, p.T));
    return mul(p.A, brace);
}

QSeries stacks_rhs(BuildCtx& ctx);

/* Shared expressions of the substituted stack chain: the substituted left
 * side, the alternating double-sum middle, and the even-subscript head sum
 * of the parity-split form. */
struct StacksChain {
    QSeries e1;
    QSeries e2;
    QSeries head;
};

StacksChain stacks_chain(BuildCtx& ctx) {
    StacksParts p = stacks_parts(ctx);
    const Monomial neg_q2{-1, 0, 0, 2};
    const Monomial q2{1, 0, 0, 2};
    QSeries u = ctx.zero();  // sum_{n>=1} q^(n^2) (-q^2;q^2)_{n-1}
    for (int64_t n = 1; n * n <= ctx.prec(); ++n) {
        u = add(u, poch_finite(neg_q2, 2, n - 1, 1, ctx.prec())
                       .times_monomial(CoeffPoly(BigInt(1)), n * n));
    }
    QSeries brace = sub(add(ctx.one(), p.B1), mul(p.inv_nn, p.T));
    QSeries e1 = sub(mul(p.A, brace), mul(p.inv_nn, mul(p.T, u)).scaled(BigInt(2)));
    QSeries head = series_sum(
        ctx, 0, [](int64_t m) { return m * (2 * m + 1); },
        [](int64_t) { return CoeffPoly(BigInt(1)); },
        [&](int64_t m) -> const QSeries& { return ctx.inv_poch_finite(q2, 2, 2 * m); });
    return {std::move(e1), stacks_rhs(ctx), std::move(head)};
}

/* -2 sum_{n>=1} (-1)^n q^(n(n-1)/2) sum_{l=0}^{n-1} (-1)^l / (q^2;q^2)_l */
QSeries stacks_rhs(BuildCtx& ctx) {
    const Monomial q2{1, 0, 0, 2};
    QSeries acc = ctx.zero();
    QSeries partial = ctx.zero();
    for (int64_t n = 1; n * (n - 1) / 2 <= ctx.prec(); ++n) {
        partial = add(partial, ctx.inv_poch_finite(q2, 2, n - 1)
                                   .times_monomial(CoeffPoly(BigInt((n - 1) % 2 ? -1 : 1)), 0));
        acc = add(acc, partial.times_monomial(CoeffPoly(BigInt(n % 2 ? -1 : 1)), n * (n - 1) / 2));
    }
    return acc.scaled(BigInt(-2));
}

std::vector<ParamSet> s_grid(int lo, int hi) {
    std::vector<ParamSet> grid;
    for (int s = lo; s <= hi; ++s) {
        grid.push_back({.s = s});
    }
    return grid;
}

const std::vector<ParamSet> k_no_params{ParamSet{}};

int denom_one(const ParamSet&) { return 1; }
int denom_2s(const ParamSet& p) { return 2 * p.s.value(); }

std::vector<IdentityEntry> make_registry() {
    std::vector<IdentityEntry> reg;

    reg.push_back(
        {"theorem-1.1",
         "theta dissection: sum of s products of generalized Rogers-Ramanujan series "
         "equals theta/(bq)_inf minus the (1-b) correction",
         CheckKind::equality, 0, "", s_grid(1, 6), denom_2s,
         [](const ParamSet& p, int64_t prec) {
             BuildCtx ctx(2 * *p.s, prec);
             return std::vector<QSeries>{dissection_lhs(ctx, *p.s), dissection_rhs(ctx)};
         }});

    reg.push_back(
        {"firstPart", "dissection half over the positive partial theta", CheckKind::equality,
         0, "", s_grid(1, 6), denom_2s, [](const ParamSet& p, int64_t prec) {
             BuildCtx ctx(2 * *p.s, prec);
             QSeries rhs = sub(mul(ctx.inv_poch_infinite(bq_base(ctx), ctx.denom()),
                                   partial_theta(ThetaSide::positive, ctx, 1)),
                               correction_term(ctx, 1));
             return std::vector<QSeries>{dissection_half_lhs(ctx, *p.s, true), rhs};
         }});

    reg.push_back(
        {"secondPart", "dissection half over the nonpositive partial theta",
         CheckKind::equality, 0, "", s_grid(1, 6), denom_2s,
         [](const ParamSet& p, int64_t prec) {
             BuildCtx ctx(2 * *p.s, prec);
             QSeries rhs = mul(ctx.inv_poch_infinite(bq_base(ctx), ctx.denom()),
                               partial_theta(ThetaSide::nonpositive, ctx, 1));
             return std::vector<QSeries>{dissection_half_lhs(ctx, *p.s, false), rhs};
         }});

    reg.push_back({"gmr",
                   "two-product generalized modular relation (the s = 2 dissection in its "
                   "classical arrangement)",
                   CheckKind::equality, 0, "", k_no_params,
                   [](const ParamSet&) { return 4; },
                   [](const ParamSet&, int64_t prec) {
                       BuildCtx ctx(4, prec);
                       auto invq = [&](int64_t n) -> const QSeries& {
                           return ctx.inv_poch_finite(q_base(ctx), 4, n);
                       };
                       auto invbq = [&](int64_t m) -> const QSeries& {
                           return ctx.inv_poch_finite(bq_base(ctx), 4, m);
                       };
                       QSeries sa = series_sum(
                           ctx, 0, [](int64_t m) { return 4 * m * m; },
                           [](int64_t m) { return apow(-2 * m); }, invbq);
                       QSeries sb = series_sum(
                           ctx, 0, [](int64_t n) { return n * n; },
                           [](int64_t n) { return abpow(n); }, invq);
                       QSeries sc = series_sum(
                           ctx, 0, [](int64_t m) { return 4 * (m * m + m); },
                           [](int64_t m) { return apow(-2 * m - 1); }, invbq);
                       QSeries sd = series_sum(
                           ctx, 0, [](int64_t n) { return (n + 1) * (n + 1); },
                           [](int64_t n) { return abpow(n); }, invq);
                       QSeries lhs = add(mul(sa, sb), mul(sc, sd));
                       return std::vector<QSeries>{lhs, dissection_rhs(ctx)};
                   }});

    reg.push_back(
        {"thm-3.1-three-way",
         "Durfee-rectangle dissection of the two-parameter partition generating function; "
         "all three forms agree",
         CheckKind::equality, 0, "", s_grid(1, 5), denom_one,
         [](const ParamSet& p, int64_t prec) {
             int s = *p.s;
             BuildCtx ctx(1, prec);
             const Monomial aq{1, 1, 0, 1};
             const Monomial bq{1, 0, 1, 1};
             QSeries e1 = series_sum(
                 ctx, 0, [](int64_t n) { return n * n; }, [](int64_t n) { return abpow(n); },
                 [&](int64_t n) {
                     return mul(ctx.inv_poch_finite(aq, 1, n), ctx.inv_poch_finite(bq, 1, n));
                 });
             QSeries e2 = ctx.zero();
             for (int k = 0; k < s; ++k) {
                 int64_t j = k == 0 ? 0 : 1;
                 e2 = add(e2, series_sum(
                                  ctx, 0, [&](int64_t n) { return (s * n + k) * (n + j); },
                                  [&](int64_t n) {
                                      return CoeffPoly::monomial(1, static_cast<int>(s * n + k),
                                                                 static_cast<int>(n + j));
                                  },
                                  [&](int64_t n) {
                                      return mul(ctx.inv_poch_finite(aq, 1, n),
                                                 ctx.inv_poch_finite(bq, 1, s * n + k));
                                  }));
             }
             QSeries e3 = add(ctx.one(), series_sum(
                                             ctx, 1, [](int64_t n) { return n; },
                                             [](int64_t n) {
                                                 return CoeffPoly::monomial(
                                                     1, static_cast<int>(n), 1);
                                             },
                                             [&](int64_t n) -> const QSeries& {
                                                 return ctx.inv_poch_finite(bq, 1, n);
                                             }));
             return std::vector<QSeries>{e1, e2, e3};
         }});

    {
        std::vector<ParamSet> grid;
        for (int n = 1; n <= 6; ++n)
            for (int s = 1; s <= 4; ++s) grid.push_back({.s = s, .n = n});
        reg.push_back(
            {"cor-3.2", "dissection identity specialized at b = q^n, then a renamed to b",
             CheckKind::equality, 0, "", grid, denom_one,
             [](const ParamSet& p, int64_t prec) {
                 int s = *p.s;
                 int64_t nn = *p.n;
                 BuildCtx ctx(1, prec);
                 const Monomial bq{1, 0, 1, 1};
                 const Monomial qn1{1, 0, 0, nn + 1};
                 QSeries lhs = ctx.zero();
                 for (int k = 0; k < s; ++k) {
                     int64_t j = k == 0 ? 0 : 1;
                     lhs = add(lhs,
                               series_sum(
                                   ctx, 0,
                                   [&](int64_t m) { return (s * m + k + nn) * (m + j); },
                                   [&](int64_t m) {
                                       return CoeffPoly::monomial(1, 0,
                                                                  static_cast<int>(s * m + k));
                                   },
                                   [&](int64_t m) {
                                       return mul(ctx.inv_poch_finite(bq, 1, m),
                                                  ctx.inv_poch_finite(qn1, 1, s * m + k));
                                   }));
                 }
                 QSeries rhs = add(ctx.one(), series_sum(
                                                  ctx, 1, [&](int64_t m) { return m + nn; },
                                                  [](int64_t m) {
                                                      return CoeffPoly::monomial(
                                                          1, 0, static_cast<int>(m));
                                                  },
                                                  [&](int64_t m) -> const QSeries& {
                                                      return ctx.inv_poch_finite(qn1, 1, m);
                                                  }));
                 return std::vector<QSeries>{lhs, rhs};
             }});
    }

    {
        std::vector<ParamSet> grid;
        for (int m = 1; m <= 6; ++m)
            for (int s = 1; s <= 4; ++s) grid.push_back({.s = s, .m = m});
        reg.push_back(
            {"cor-3.3",
             "dissection identity specialized at b = 1, a = bq^m; sums to 1/(bq^(m+1))_inf",
             CheckKind::equality, 0, "", grid, denom_one,
             [](const ParamSet& p, int64_t prec) {
                 int s = *p.s;
                 int64_t mm = *p.m;
                 BuildCtx ctx(1, prec);
                 const Monomial q{1, 0, 0, 1};
                 const Monomial bqm1{1, 0, 1, mm + 1};
                 QSeries lhs = ctx.zero();
                 for (int k = 0; k < s; ++k) {
                     int64_t j = k == 0 ? 0 : 1;
                     lhs = add(lhs,
                               series_sum(
                                   ctx, 0,
                                   [&](int64_t n) { return (s * n + k) * (mm + n + j); },
                                   [&](int64_t n) {
                                       return CoeffPoly::monomial(1, 0,
                                                                  static_cast<int>(s * n + k));
                                   },
                                   [&](int64_t n) {
                                       return mul(ctx.inv_poch_finite(bqm1, 1, n),
                                                  ctx.inv_poch_finite(q, 1, s * n + k));
                                   }));
                 }
                 QSeries rhs = ctx.inv_poch_infinite(bqm1, 1);
                 return std::vector<QSeries>{lhs, rhs};
             }});
    }

    reg.push_back({"gen-jtpi",
                   "three-parameter generalization of the Jacobi triple product (the s = 1 "
                   "dissection)",
                   CheckKind::equality, 0, "", k_no_params,
                   [](const ParamSet&) { return 2; },
                   [](const ParamSet&, int64_t prec) {
                       BuildCtx ctx(2, prec);
                       return std::vector<QSeries>{dissection_lhs(ctx, 1), dissection_rhs(ctx)};
                   }});

    reg.push_back(
        {"jtpi", "Jacobi triple product: theta as the triple infinite product",
         CheckKind::equality, 0, "", k_no_params, denom_one,
         [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(1, prec);
             QSeries e1 = theta_full(ctx, 1);
             QSeries e2 = mul(mul(poch_infinite({-1, 1, 0, 1}, 2, 1, prec),
                                  poch_infinite({-1, -1, 0, 1}, 2, 1, prec)),
                              poch_infinite({1, 0, 0, 2}, 2, 1, prec));
             const Monomial q2{1, 0, 0, 2};
             QSeries sa = series_sum(
                 ctx, 0, [](int64_t m) { return m * m; }, [](int64_t m) { return apow(-m); },
                 [&](int64_t m) -> const QSeries& { return ctx.inv_poch_finite(q2, 2, m); });
             QSeries sb = series_sum(
                 ctx, 0, [](int64_t n) { return n * n; }, [](int64_t n) { return apow(n); },
                 [&](int64_t n) -> const QSeries& { return ctx.inv_poch_finite(q2, 2, n); });
             QSeries e3 = mul(poch_infinite({1, 0, 0, 2}, 2, 1, prec), mul(sa, sb));
             return std::vector<QSeries>{e1, e2, e3};
         }});

    reg.push_back(
        {"s3", "the s = 3 dissection in its printed three-product arrangement",
         CheckKind::equality, 0, "", k_no_params, [](const ParamSet&) { return 6; },
         [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(6, prec);
             auto invq = [&](int64_t n) -> const QSeries& {
                 return ctx.inv_poch_finite(q_base(ctx), 6, n);
             };
             auto invbq = [&](int64_t m) -> const QSeries& {
                 return ctx.inv_poch_finite(bq_base(ctx), 6, m);
             };
             auto product = [&](int64_t a_off, int64_t m_quad_lin, int64_t n_lin,
                                int64_t prefix) {
                 QSeries ms = series_sum(
                     ctx, 0, [&](int64_t m) { return 9 * m * m + m_quad_lin * m; },
                     [&](int64_t m) { return apow(-3 * m - a_off); }, invbq);
                 QSeries ns = series_sum(
                     ctx, 0, [&](int64_t n) { return n * (n + n_lin); },
                     [&](int64_t n) { return abpow(n); }, invq);
                 return mul(ms, ns).times_monomial(CoeffPoly(BigInt(1)), prefix);
             };
             QSeries lhs = add(product(0, 0, 0, 0),
                               add(product(1, 6, 4, 1), product(2, 12, 2, 4)));
             return std::vector<QSeries>{lhs, dissection_rhs(ctx)};
         }});

    reg.push_back({"rogers-1", "first Rogers identity: G(q) via (q^4;q^4) quotients",
                   CheckKind::equality, 0, "", k_no_params, denom_one,
                   [](const ParamSet&, int64_t prec) {
                       BuildCtx ctx(1, prec);
                       return std::vector<QSeries>{g_sum(ctx), named_series("rogers-rhs-1", prec)};
                   }});
    reg.push_back({"rogers-2", "second Rogers identity: H(q) via (q^4;q^4) quotients",
                   CheckKind::equality, 0, "", k_no_params, denom_one,
                   [](const ParamSet&, int64_t prec) {
                       BuildCtx ctx(1, prec);
                       return std::vector<QSeries>{h_sum(ctx), named_series("rogers-rhs-2", prec)};
                   }});

    reg.push_back(
        {"mre",
         "modular relation G(q)G(q^4) + qH(q)H(q^4) = phi(q)/(q^2;q^2)_inf = (-q;q^2)_inf^2, "
         "plus its derivation from the two-product relation at a = b = 1",
         CheckKind::equality, 0, "", k_no_params, denom_one,
         [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(1, prec);
             QSeries g = g_sum(ctx);
             QSeries h = h_sum(ctx);
             QSeries e1 = add(mul(g, at_q4(g, prec)),
                              mul(h, at_q4(h, prec)).times_monomial(CoeffPoly(BigInt(1)), 1));
             QSeries e2 = mul(phi_theta(ctx),
                              invert(poch_infinite({1, 0, 0, 2}, 2, 1, prec), prec));
             QSeries pq = poch_infinite({-1, 0, 0, 1}, 2, 1, prec);
             QSeries e3 = mul(pq, pq);
             /* derivation path: the two-product relation at a = b = 1 with q -> q^4,
              * then multiplied by (-q^2;q^2)_inf */
             const IdentityEntry* gmr = find_entry("gmr");
             QSeries gmr_lhs = gmr->build(ParamSet{}, prec).front();
             QSeries spec = specialize_unit(gmr_lhs, {1, 0}, {1, 0}).reinterpreted(1);
             QSeries e4 = mul(poch_infinite({-1, 0, 0, 2}, 2, 1, prec), spec);
             return std::vector<QSeries>{e1, e2, e3, e4};
         }});

    reg.push_back(
        {"gh5mock",
         "fifth-order mock theta relation: G(q)f0(q^4) - qH(q)f1(q^4) against the "
         "theta-plus-double-sum right side",
         CheckKind::equality, 0, "", k_no_params, denom_one,
         [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(1, prec);
             QSeries g = g_sum(ctx);
             QSeries h = h_sum(ctx);
             QSeries f0 = named_series("f0", prec);
             QSeries f1 = named_series("f1", prec);
             QSeries e1 = sub(mul(g, at_q4(f0, prec)),
                              mul(h, at_q4(f1, prec)).times_monomial(CoeffPoly(BigInt(1)), 1));
             const Monomial q4{1, 0, 0, 4};
             QSeries ds = ctx.zero();
             for (int64_t n = 0; (n + 1) * (n + 1) <= prec; ++n) {
                 for (int64_t l = 0; (n + l + 1) * (n + l + 1) <= prec; ++l) {
                     ds = add(ds, ctx.inv_poch_finite(q4, 4, l)
                                      .times_monomial(CoeffPoly(BigInt(n % 2 ? -1 : 1)),
                                                      (n + l + 1) * (n + l + 1)));
                 }
             }
             QSeries e2 = add(mul(poch_infinite({-1, 0, 0, 2}, 4, 1, prec), phi_theta_neg(ctx)),
                              mul(poch_infinite({-1, 0, 0, 2}, 2, 1, prec), ds).scaled(BigInt(2)));
             return std::vector<QSeries>{e1, e2};
         }});

    reg.push_back(
        {"mock-gen",
         "generalized third-order mock theta relation, symbolic in b", CheckKind::equality,
         0, "", k_no_params, denom_one, [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(1, prec);
             const Monomial neg_bq2{-1, 0, 1, 2};
             const Monomial neg_bq_q2{-1, 0, 1, 1};
             QSeries lhs = series_sum(
                 ctx, 0, [](int64_t m) { return m * m; },
                 [](int64_t m) { return CoeffPoly(BigInt(m % 2 ? -1 : 1)); },
                 [&](int64_t m) -> const QSeries& {
                     return ctx.inv_poch_finite(neg_bq2, 2, m);
                 });
             QSeries t1 = mul(phi_theta_neg(ctx),
                              ctx.inv_poch_infinite({-1, 0, 1, 1}, 1));
             QSeries t2 = series_sum(
                 ctx, 1, [](int64_t m) { return m * m; },
                 [](int64_t m) { return CoeffPoly(BigInt((m - 1) % 2 ? -1 : 1)); },
                 [&](int64_t m) -> const QSeries& {
                     return ctx.inv_poch_finite(neg_bq_q2, 2, m);
                 });
             QSeries one_plus_b = add(ctx.one(), ctx.monomial(CoeffPoly::monomial(1, 0, 1), 0));
             QSeries rhs = add(t1, mul(one_plus_b, t2));
             return std::vector<QSeries>{lhs, rhs};
         }});

    reg.push_back(
        {"mock-3rd",
         "third-order mock theta relation phi(q) + 2psi(q) = (-q;q^2)_inf^3 (q^2;q^2)_inf, "
         "plus its derivation through the generalized relation at b = 1, q -> -q",
         CheckKind::equality, 0, "", k_no_params, denom_one,
         [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(1, prec);
             QSeries phi_m = named_series("phi-mock", prec);
             QSeries psi_m = named_series("psi-mock", prec);
             QSeries e1 = add(phi_m, psi_m.scaled(BigInt(2)));
             QSeries p = poch_infinite({-1, 0, 0, 1}, 2, 1, prec);
             QSeries e2 = mul(mul(p, mul(p, p)), poch_infinite({1, 0, 0, 2}, 2, 1, prec));
             /* b = 1 in the generalized relation, then q -> -q; the substituted
              * right side equals phi(q) alone, so 2psi is added back. */
             const Monomial neg_q_q2{-1, 0, 0, 1};
             QSeries t1 = mul(phi_theta_neg(ctx),
                              invert(poch_infinite({-1, 0, 0, 1}, 1, 1, prec), prec));
             QSeries t2 = series_sum(
                 ctx, 1, [](int64_t m) { return m * m; },
                 [](int64_t m) { return CoeffPoly(BigInt((m - 1) % 2 ? -1 : 1)); },
                 [&](int64_t m) -> const QSeries& {
                     return ctx.inv_poch_finite(neg_q_q2, 2, m);
                 });
             QSeries rhs_b1 = add(t1, t2.scaled(BigInt(2)));
             QSeries e3 = add(rhs_b1.with_negated_q(), psi_m.scaled(BigInt(2)));
             return std::vector<QSeries>{e1, e2, e3};
         }});

    reg.push_back({"annihilation",
                   "theta annihilated at a = -q^(-1/(2s)): sum side equals the surviving "
                   "correction term, symbolic in b",
                   CheckKind::equality, 0, "", s_grid(1, 5), denom_2s,
                   [](const ParamSet& p, int64_t prec) {
                       BuildCtx ctx(2 * *p.s, prec);
                       return std::vector<QSeries>{annihilation_lhs(ctx, *p.s),
                                                   annihilation_rhs(ctx)};
                   }});

    reg.push_back({"rhs-zero",
                   "the annihilated dissection at b = 1: the s products sum to zero",
                   CheckKind::equality, 0, "", s_grid(1, 5), denom_2s,
                   [](const ParamSet& p, int64_t prec) {
                       int s = *p.s;
                       BuildCtx ctx(2 * s, prec);
                       const int D = ctx.denom();
                       QSeries total = ctx.zero();
                       for (int k = 0; k < s; ++k) {
                           int64_t j = k == 0 ? 0 : 1;
                           QSeries m_sum = series_sum(
                               ctx, 0,
                               [&](int64_t m) { return (s * m + k) * (s * m + k + 1); },
                               [&](int64_t m) {
                                   return CoeffPoly(BigInt((s * m + k) % 2 != 0 ? -1 : 1));
                               },
                               [&](int64_t m) -> const QSeries& {
                                   return ctx.inv_poch_finite(q_base(ctx), D, m);
                               });
                           QSeries n_sum = series_sum(
                               ctx, 0,
                               [&](int64_t n) { return n * (n + 2 * j * s - 2 * k - 1); },
                               [&](int64_t n) { return CoeffPoly(BigInt(n % 2 ? -1 : 1)); },
                               [&](int64_t n) -> const QSeries& {
                                   return ctx.inv_poch_finite(q_base(ctx), D, n);
                               });
                           total = add(total, mul(m_sum, n_sum));
                       }
                       return std::vector<QSeries>{total, ctx.zero()};
                   }});

    reg.push_back(
        {"stacks",
         "the s = 2, b = -1 annihilation with q -> q^2: stack-series products equal twice "
         "an alternating double sum",
         CheckKind::equality, 0, "", k_no_params, denom_one,
         [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(1, prec);
             const Monomial neg_q2{-1, 0, 0, 2};
             const Monomial q2{1, 0, 0, 2};
             auto inv_neg = [&](int64_t m) -> const QSeries& {
                 return ctx.inv_poch_finite(neg_q2, 2, m);
             };
             auto inv_q2 = [&](int64_t n) -> const QSeries& {
                 return ctx.inv_poch_finite(q2, 2, n);
             };
             auto plain = [](int64_t) { return CoeffPoly(BigInt(1)); };
             QSeries a1 = series_sum(ctx, 0, [](int64_t m) { return m * (2 * m + 1); }, plain,
                                     inv_neg);
             QSeries b1 = series_sum(ctx, 0, [](int64_t n) { return n * (n - 1) / 2; }, plain,
                                     inv_q2);
             QSeries t1 = series_sum(ctx, 0, [](int64_t m) { return 2 * m * m + 3 * m + 1; },
                                     plain, inv_neg);
             QSeries c1 = series_sum(ctx, 0, [](int64_t n) { return n * (n + 1) / 2; }, plain,
                                     inv_q2);
             QSeries lhs = sub(mul(a1, b1), mul(t1, c1));
             return std::vector<QSeries>{lhs, stacks_rhs(ctx)};
         }});

    {
        std::vector<ParamSet> grid{{.mu = 0}, {.mu = 1}};
        reg.push_back(
            {"mcintosh-mu", "false-theta transformation for the stack series, mu in {0,1}",
             CheckKind::equality, 0, "", grid, denom_one,
             [](const ParamSet& p, int64_t prec) {
                 int mu = *p.mu;
                 BuildCtx ctx(1, prec);
                 const Monomial q2{1, 0, 0, 2};
                 QSeries lhs = series_sum(
                     ctx, 0,
                     [&](int64_t n) { return (2 * n + mu) * (2 * n + mu + 1) / 2; },
                     [](int64_t) { return CoeffPoly(BigInt(1)); },
                     [&](int64_t n) -> const QSeries& { return ctx.inv_poch_finite(q2, 2, n); });
                 QSeries alt = series_sum(
                     ctx, 0, [&](int64_t n) { return n * (n + 1) / 2 - mu * n; },
                     [](int64_t n) { return CoeffPoly(BigInt(n % 2 ? -1 : 1)); },
                     [&](int64_t n) -> const QSeries& { return ctx.inv_poch_finite(q2, 2, n); });
                 QSeries rhs = mul(poch_infinite({-1, 0, 0, 1}, 1, 1, prec), alt);
                 return std::vector<QSeries>{lhs, rhs};
             }});
    }

    reg.push_back({"congruence",
                   "every coefficient of the stack-series combination is even",
                   CheckKind::mod2, 100, "", k_no_params, denom_one,
                   [](const ParamSet&, int64_t prec) {
                       BuildCtx ctx(1, prec);
                       return std::vector<QSeries>{congruence_expr(ctx)};
                   }});

    reg.push_back(
        {"stacks-substituted",
         "stack identity substituted into the alternating double-sum relation; includes "
         "the parity-split display in its printed form",
         CheckKind::equality, 0,
         "the printed parity-split double sum is not an identity: it first deviates at "
         "q^12 (see stacks-substituted-parity for a verified corrected form)",
         k_no_params, denom_one,
         [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(1, prec);
             StacksChain chain = stacks_chain(ctx);
             const Monomial q2{1, 0, 0, 2};
             const Monomial q4{1, 0, 0, 4};
             QSeries ds = ctx.zero();
             for (int64_t l = 1; 4 * l * l - l <= prec; ++l) {
                 for (int64_t m = 0;; ++m) {
                     int64_t e = 2 * (l + m) * (l + m) - (l + m) + 2 * l * l;
                     if (e > prec) break;
                     ds = add(ds, mul(ctx.inv_poch_finite(q2, 2, l + m - 1),
                                      ctx.inv_poch_finite(q4, 4, m))
                                      .times_monomial(CoeffPoly(BigInt(l % 2 ? -1 : 1)), e));
                 }
             }
             QSeries e3 = sub(chain.head.scaled(BigInt(2)), ds.scaled(BigInt(2)));
             return std::vector<QSeries>{chain.e1, chain.e2, e3};
         }});

    reg.push_back(
        {"stacks-substituted-parity",
         "the same chain with the parity split carried out directly: the double sum keeps "
         "denominators (q^2;q^2)_(2l-1) and a two-term numerator",
         CheckKind::equality, 0, "", k_no_params, denom_one,
         [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(1, prec);
             StacksChain chain = stacks_chain(ctx);
             const Monomial q2{1, 0, 0, 2};
             QSeries ds = ctx.zero();
             for (int64_t l = 1; 2 * l * l - l + 4 * l - 2 <= prec; ++l) {
                 for (int64_t m = 0;; ++m) {
                     int64_t lo = 2 * (l + m) * (l + m) - (l + m) + 4 * l - 2;
                     if (lo > prec) break;
                     int64_t hi = lo + 2 * (l + m);
                     const QSeries& inv = ctx.inv_poch_finite(q2, 2, 2 * l - 1);
                     QSeries term = inv.times_monomial(CoeffPoly(BigInt(-1)), lo);
                     if (hi <= prec) {
                         term = add(term, inv.times_monomial(CoeffPoly(BigInt(1)), hi));
                     }
                     ds = add(ds, term);
                 }
             }
             QSeries e3 = sub(chain.head.scaled(BigInt(2)), ds.scaled(BigInt(2)));
             return std::vector<QSeries>{chain.e1, chain.e2, e3};
         }});

    reg.push_back(
        {"gmr2",
         "companion two-theta relation, symbolic in a: theta(a) F(-a) - theta(-a) F(a) = "
         "2 q^(1/4) (q)_inf times the odd-index sum",
         CheckKind::equality, 0,
         "the source display writes (bq)_m in the right-side denominator although no b "
         "appears elsewhere; it is read as (q)_m",
         k_no_params, [](const ParamSet&) { return 4; },
         [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(4, prec);
             const Monomial q{1, 0, 0, 4};
             QSeries theta = theta_full(ctx, 1);
             QSeries f = series_sum(
                 ctx, 0, [](int64_t n) { return n * n; }, [](int64_t n) { return apow(n); },
                 [&](int64_t n) -> const QSeries& { return ctx.inv_poch_finite(q, 4, n); });
             QSeries e1 = sub(mul(theta, f.with_negated_a()),
                              mul(theta.with_negated_a(), f));
             QSeries odd = series_sum(
                 ctx, 0, [](int64_t m) { return 4 * (m * m + m); },
                 [](int64_t m) { return apow(-2 * m - 1); },
                 [&](int64_t m) -> const QSeries& { return ctx.inv_poch_finite(q, 4, m); });
             QSeries e2 = mul(poch_infinite(q, 4, 4, prec), odd)
                              .times_monomial(CoeffPoly(BigInt(2)), 1);
             return std::vector<QSeries>{e1, e2};
         }});

    reg.push_back(
        {"watson-1", "G(-q)phi(q) - G(q)phi(-q) = 2q H(q^4) psi(q^2)", CheckKind::equality,
         0, "", k_no_params, denom_one, [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(1, prec);
             QSeries g = g_sum(ctx);
             QSeries phi = phi_theta(ctx);
             QSeries e1 = sub(mul(g.with_negated_q(), phi), mul(g, phi.with_negated_q()));
             QSeries e2 = mul(at_q4(h_sum(ctx), prec), psi_q2(ctx))
                              .times_monomial(CoeffPoly(BigInt(2)), 1);
             return std::vector<QSeries>{e1, e2};
         }});
    reg.push_back(
        {"watson-2", "H(-q)phi(q) + H(q)phi(-q) = 2 G(q^4) psi(q^2)", CheckKind::equality,
         0, "", k_no_params, denom_one, [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(1, prec);
             QSeries h = h_sum(ctx);
             QSeries phi = phi_theta(ctx);
             QSeries e1 = add(mul(h.with_negated_q(), phi), mul(h, phi.with_negated_q()));
             QSeries e2 = mul(at_q4(g_sum(ctx), prec), psi_q2(ctx)).scaled(BigInt(2));
             return std::vector<QSeries>{e1, e2};
         }});

    reg.push_back(
        {"entry-3.20", "G(q)H(-q) + G(-q)H(q) = 2(-q^2;q^2)_inf^2", CheckKind::equality, 0,
         "", k_no_params, denom_one, [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(1, prec);
             QSeries g = g_sum(ctx);
             QSeries h = h_sum(ctx);
             QSeries e1 = add(mul(g, h.with_negated_q()), mul(g.with_negated_q(), h));
             QSeries p = poch_infinite({-1, 0, 0, 2}, 2, 1, prec);
             QSeries e2 = mul(p, p).scaled(BigInt(2));
             return std::vector<QSeries>{e1, e2};
         }});

    reg.push_back(
        {"entry-3.20-intermediate",
         "the a-symbolic cross-product relation that collapses to 2q^(1/4)",
         CheckKind::equality, 0, "", k_no_params, [](const ParamSet&) { return 4; },
         [](const ParamSet&, int64_t prec) {
             BuildCtx ctx(4, prec);
             const Monomial q{1, 0, 0, 4};
             auto invq = [&](int64_t n) -> const QSeries& {
                 return ctx.inv_poch_finite(q, 4, n);
             };
             QSeries fplus = series_sum(
                 ctx, 0, [](int64_t n) { return (n + 1) * (n + 1); },
                 [](int64_t n) { return apow(n); }, invq);
             QSeries fzero = series_sum(
                 ctx, 0, [](int64_t n) { return n * n; }, [](int64_t n) { return apow(n); },
                 invq);
             QSeries e1 = add(mul(fplus, fzero.with_negated_a()),
                              mul(fplus.with_negated_a(), fzero));
             QSeries e2 = ctx.monomial(CoeffPoly(BigInt(2)), 1);
             return std::vector<QSeries>{e1, e2};
         }});

    reg.push_back(
        {"bressoud",
         "multi-sum generalization of Rogers' identity, symbolic in a, s = 2..4",
         CheckKind::equality, 0, "", s_grid(2, 4), denom_one,
         [](const ParamSet& p, int64_t prec) {
             int s = *p.s;
             BuildCtx ctx(1, prec);
             const Monomial q{1, 0, 0, 1};
             QSeries lhs = series_sum(
                 ctx, 0, [&](int64_t m) { return m + s * m * (m - 1) / 2; },
                 [](int64_t m) { return apow(m); },
                 [&](int64_t m) -> const QSeries& { return ctx.inv_poch_finite(q, 1, m); });
             return std::vector<QSeries>{lhs, bressoud_rhs(s, ctx)};
         }});

    return reg;
}

}  // namespace

const std::vector<IdentityEntry>& registry() {
    static const std::vector<IdentityEntry> reg = make_registry();
    return reg;
}

}  // namespace qrr
