#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qrr/partitions.hpp"
#include "qrr/qfunctions.hpp"

using namespace qrr;

namespace {

void check_coeffs(const QSeries& got, const std::vector<long>& want) {
    REQUIRE(got.denom() == 1);
    REQUIRE(got.prec() >= static_cast<std::int64_t>(want.size()) - 1);
    for (size_t e = 0; e < want.size(); ++e) {
        INFO("exponent ", e);
        CHECK(got.coefficient(static_cast<std::int64_t>(e), 0, 0) == want[e]);
    }
}

/* Test-local dense expander over plain machine integers: an independent
 * route to sum_{n} q^(head(n)) / prod_{i<n} (1 + q^(i+1)), kept free of the
 * QSeries machinery on purpose. */
std::vector<long> dense_mock_sum(int prec, bool shift) {
    std::vector<long> acc(static_cast<size_t>(prec) + 1, 0);
    for (int n = 0; n * n + (shift ? n : 0) <= prec; ++n) {
        std::vector<long> den(static_cast<size_t>(prec) + 1, 0);
        den[0] = 1;
        for (int i = 1; i <= n; ++i) {  // multiply by (1 + q^i)
            for (int e = prec; e >= i; --e) {
                den[static_cast<size_t>(e)] += den[static_cast<size_t>(e - i)];
            }
        }
        std::vector<long> inv(static_cast<size_t>(prec) + 1, 0);
        inv[0] = 1;
        for (int e = 1; e <= prec; ++e) {
            long v = 0;
            for (int k = 1; k <= e; ++k) {
                v += den[static_cast<size_t>(k)] * inv[static_cast<size_t>(e - k)];
            }
            inv[static_cast<size_t>(e)] = -v;
        }
        int head = n * n + (shift ? n : 0);
        for (int e = head; e <= prec; ++e) {
            acc[static_cast<size_t>(e)] += inv[static_cast<size_t>(e - head)];
        }
    }
    return acc;
}

}  // namespace

TEST_CASE("finite Pochhammer products") {
    CHECK(poch_finite({1, 0, 0, 1}, 1, 0, 1, 10) == QSeries::one(1, 10));

    QSeries q3 = poch_finite({1, 0, 0, 1}, 1, 3, 1, 10);
    check_coeffs(q3, {1, -1, -1, 0, 1, 1, -1});

    QSeries bq2 = poch_finite({1, 0, 1, 1}, 1, 2, 1, 10);
    CHECK(bq2.coefficient(0, 0, 0) == 1);
    CHECK(bq2.coefficient(1, 0, 1) == -1);
    CHECK(bq2.coefficient(2, 0, 1) == -1);
    CHECK(bq2.coefficient(3, 0, 2) == 1);
    CHECK(bq2.coeffs().size() == 4);
}

TEST_CASE("infinite Pochhammer follows the pentagonal pattern") {
    QSeries euler = poch_infinite({1, 0, 0, 1}, 1, 1, 30);
    check_coeffs(euler, {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1,
                         0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK_THROWS_AS(poch_infinite({1, 0, 0, 0}, 1, 1, 10), std::domain_error);
}

TEST_CASE("pentagonal product against the alternating Euler sum") {
    /* sum (-z)^n q^(n(n-1)/2)/(q)_n at z = q, run on the half-integer grid
     * where n(n+1)/2 doubles to n(n+1) */
    const std::int64_t prec = 160;  // t-units at denom 2, so q^80
    BuildCtx ctx(2, prec);
    SumSpec spec;
    spec.q_exp = {1, 1, 0};
    spec.alternating = true;
    spec.poch_base = {1, 0, 0, 2};
    spec.poch_step = 2;
    QSeries lhs = sum_expand(spec, ctx);
    CHECK(lhs == poch_infinite({1, 0, 0, 2}, 2, 2, prec));
}

TEST_CASE("Euler sum identities, symbolic in a and b, to precision 80") {
    const std::int64_t prec = 80;
    BuildCtx ctx(1, prec);

    SumSpec z_q;  // sum q^l / (q)_l = 1/(q)_inf
    z_q.q_exp = {0, 1, 0};
    z_q.poch_base = {1, 0, 0, 1};
    CHECK(sum_expand(z_q, ctx) ==
          invert(poch_infinite({1, 0, 0, 1}, 1, 1, prec), prec));

    SumSpec z_bq;  // sum (bq)^l / (q)_l = 1/(bq)_inf
    z_bq.q_exp = {0, 1, 0};
    z_bq.b_exp = {0, 1};
    z_bq.poch_base = {1, 0, 0, 1};
    CHECK(sum_expand(z_bq, ctx) ==
          invert(poch_infinite({1, 0, 1, 1}, 1, 1, prec), prec));

    SumSpec z_nbq;  // sum (-bq)^l / (q)_l = 1/(-bq)_inf
    z_nbq.q_exp = {0, 1, 0};
    z_nbq.b_exp = {0, 1};
    z_nbq.alternating = true;
    z_nbq.poch_base = {1, 0, 0, 1};
    CHECK(sum_expand(z_nbq, ctx) ==
          invert(poch_infinite({-1, 0, 1, 1}, 1, 1, prec), prec));

    /* second Euler identity on the denom-2 grid: sum (-z)^n q^(n(n-1)/2)/(q)_n
     * = (z)_inf at z = -aq and z = -q/a */
    BuildCtx ctx2(2, 2 * prec);
    for (int a_exp : {1, -1}) {
        SumSpec spec;
        spec.q_exp = {1, 1, 0};
        spec.a_exp = {0, a_exp};
        spec.poch_base = {1, 0, 0, 2};
        spec.poch_step = 2;
        CHECK(sum_expand(spec, ctx2) ==
              poch_infinite({-1, a_exp, 0, 2}, 2, 2, 2 * prec));
    }
}

TEST_CASE("sum_expand rejects non-divergent exponents") {
    BuildCtx ctx(1, 10);
    SumSpec flat;
    flat.q_exp = {0, 0, 0};
    CHECK_THROWS_AS(sum_expand(flat, ctx), std::domain_error);
}

TEST_CASE("empty summation range gives the zero series") {
    BuildCtx ctx(1, 3);
    SumSpec spec;
    spec.q_exp = {1, 0, 0};
    spec.poch_base = {1, 0, 0, 1};
    spec.n_start = 2;  // first exponent 4 > prec
    CHECK(sum_expand(spec, ctx).is_zero());
}

TEST_CASE("named series against frozen and enumerated values") {
    check_coeffs(named_series("G", 10), {1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6});
    check_coeffs(named_series("H", 10), {1, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4});
    check_coeffs(named_series("psi-product", 16),
                 {1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0});
    check_coeffs(named_series("phi-theta", 16),
                 {1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 2});
    check_coeffs(named_series("mcintosh-mu0", 12), {1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1});
    check_coeffs(named_series("mcintosh-mu1", 12), {0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1});
    check_coeffs(named_series("partition-gf", 12), {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77});
    CHECK_THROWS_AS(named_series("no-such-series", 10), std::invalid_argument);

    /* G's coefficients, independently: partitions of w - n^2 into parts <= n */
    QSeries g = named_series("G", 16);
    for (int w = 0; w <= 16; ++w) {
        std::int64_t count = 0;
        for (int n = 0; n * n <= w; ++n) {
            partitions::for_each_partition(w - n * n, [&](const partitions::Partition& p) {
                if (p.empty() || p.front() <= n) {
                    ++count;
                }
            });
        }
        CHECK(g.coefficient(w, 0, 0) == count);
    }
}

TEST_CASE("fifth and third order mock series against a dense independent expansion") {
    std::vector<long> f0_dense = dense_mock_sum(12, false);
    std::vector<long> f1_dense = dense_mock_sum(12, true);
    check_coeffs(named_series("f0", 12), f0_dense);
    check_coeffs(named_series("f1", 12), f1_dense);
    /* frozen heads, f0 = 1 + q - q^2 + 2q^3 - ... */
    check_coeffs(named_series("f0", 10), {1, 1, -1, 1, 0, 0, -1, 1, 0, 1, -2});
    check_coeffs(named_series("f1", 10), {1, 0, 1, -1, 1, -1, 2, -2, 1, -1, 2});
    check_coeffs(named_series("phi-mock", 8), {1, 1, 0, -1, 1, 1, -1, -1, 0});
    check_coeffs(named_series("psi-mock", 8), {0, 1, 1, 1, 2, 2, 2, 3, 3});
}

TEST_CASE("theta builders") {
    BuildCtx ctx(4, 9);  // the s = 2 grid
    QSeries theta = theta_full(ctx, 1);
    CHECK(theta.coefficient(0, 0, 0) == 1);
    CHECK(theta.coefficient(1, 1, 0) == 1);
    CHECK(theta.coefficient(1, -1, 0) == 1);
    CHECK(theta.coefficient(4, 2, 0) == 1);
    CHECK(theta.coefficient(4, -2, 0) == 1);
    CHECK(theta.coefficient(9, 3, 0) == 1);
    CHECK(theta.coeffs().size() == 4);

    QSeries pos = partial_theta(ThetaSide::positive, ctx, 1);
    QSeries nonpos = partial_theta(ThetaSide::nonpositive, ctx, 1);
    CHECK(add(pos, nonpos) == theta);
    CHECK(pos.coefficient(1, 1, 0) == 1);
    CHECK(pos.coefficient(4, 2, 0) == 1);
    CHECK(pos.coefficient(9, 3, 0) == 1);
    CHECK(pos.coeffs().size() == 3);
    CHECK(nonpos.coefficient(0, 0, 0) == 1);
}

TEST_CASE("theta annihilated by the monomial substitution") {
    BuildCtx ctx(6, 48);  // s = 3 grid; stored terms reach |n| = 6
    QSeries theta = theta_full(ctx, 1);
    QSeries got = specialize_unit(theta, {-1, -1}, {1, 0}, 40);
    CHECK(got.is_zero());
}

TEST_CASE("correction term") {
    BuildCtx ctx(4, 20);
    QSeries corr = correction_term(ctx, 1);
    /* coefficient of t^1: a(1-b) from the n = 1, l = 0 term */
    CHECK(corr.coefficient(1, 1, 0) == 1);
    CHECK(corr.coefficient(1, 1, 1) == -1);
    /* vanishes identically at b = 1 */
    CHECK(specialize_unit(corr, {3, 0}, {1, 0}).is_zero());
}

TEST_CASE("correction term rewrite behind the mock theta relation") {
    /* a = -1, b -> -b, q -> q^2 turns the correction of the s = 1 grid into
     * (1+b) sum_m (-1)^m q^(m^2) sum_l (b q^(2m))^l q^(l^2) / (q^2;q^2)_l */
    const std::int64_t prec = 60;
    BuildCtx ctx(2, prec);
    QSeries lhs = correction_term(ctx, 1)
                      .with_negated_a()
                      .with_unit_a()
                      .with_negated_b()
                      .reinterpreted(1);

    BuildCtx ctx1(1, prec);
    const Monomial q2{1, 0, 0, 2};
    QSeries rhs = ctx1.zero();
    for (std::int64_t m = 1; m * m <= prec; ++m) {
        for (std::int64_t l = 0; m * m + 2 * m * l + l * l <= prec; ++l) {
            rhs = add(rhs, ctx1.inv_poch_finite(q2, 2, l)
                               .times_monomial(CoeffPoly::monomial(
                                                   BigInt(m % 2 ? -1 : 1), 0, static_cast<int>(l)),
                                               m * m + 2 * m * l + l * l));
        }
    }
    QSeries one_plus_b = add(ctx1.one(), ctx1.monomial(CoeffPoly::monomial(BigInt(1), 0, 1), 0));
    CHECK(lhs == mul(one_plus_b, rhs));
}

TEST_CASE("Bressoud right side at a = 1, s = 2 equals the quadratic sum") {
    const std::int64_t prec = 40;
    BuildCtx ctx(1, prec);
    QSeries rhs = specialize_unit(bressoud_rhs(2, ctx), {1, 0}, {1, 0});
    SumSpec lhs;  // sum q^(m^2) / (q)_m
    lhs.q_exp = {1, 0, 0};
    lhs.poch_base = {1, 0, 0, 1};
    CHECK(rhs == sum_expand(lhs, ctx));
}

TEST_CASE("named series stay integral at a = b = 1") {
    for (const auto& id : named_series_ids()) {
        QSeries x = named_series(id, 20);
        Specialized sp = specialize(x, {1, 0}, {1, 0});
        INFO("series ", id);
        CHECK(sp.scale == 1);
    }
}

TEST_CASE("sum spec records round-trip") {
    SumSpec spec;
    spec.a_exp = {0, -2};
    spec.b_exp = {1, 1};
    spec.q_exp = {4, 4, 0};
    spec.alternating = true;
    spec.poch_base = {-1, 0, 1, 2};
    spec.poch_step = 2;
    spec.n_start = 1;
    SumSpec back = SumSpec::deserialize(spec.serialize());
    CHECK(back.serialize() == spec.serialize());
    BuildCtx ctx(4, 25);
    CHECK(sum_expand(back, ctx) == sum_expand(spec, ctx));
}
