#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qrr/partitions.hpp"
#include "qrr/qfunctions.hpp"
#include "qrr/qseries.hpp"

using namespace qrr;

namespace {

QSeries from_terms(int denom, std::int64_t prec,
                   std::initializer_list<std::pair<std::int64_t, long>> terms) {
    QSeries s(denom, prec);
    for (const auto& [e, c] : terms) {
        s.add_term(e, CoeffPoly(BigInt(c)));
    }
    return s;
}

/* Small random series with unit constant term when asked; the generator is
 * seeded so failures replay. */
QSeries random_series(std::mt19937& rng, int denom, std::int64_t prec, bool unit) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> a_exp(-2, 2);
    std::uniform_int_distribution<int> b_exp(0, 2);
    std::uniform_int_distribution<int> fill(0, 3);
    QSeries s(denom, prec);
    if (unit) {
        s.add_term(0, CoeffPoly(BigInt(1)));
    }
    for (std::int64_t e = unit ? 1 : 0; e <= prec; ++e) {
        if (fill(rng) == 0) {
            s.add_term(e, CoeffPoly::monomial(BigInt(coeff(rng)), a_exp(rng), b_exp(rng)));
        }
    }
    return s;
}

}  // namespace

TEST_CASE("addition merges and cancels") {
    QSeries x = from_terms(1, 10, {{0, 1}, {1, 1}});
    QSeries y = from_terms(1, 10, {{0, 1}, {1, -1}});
    QSeries sum = add(x, y);
    CHECK(sum.coeff(0) == CoeffPoly(BigInt(2)));
    CHECK(sum.coeff(1).is_zero());
    CHECK(sum.coeffs().size() == 1);

    QSeries zero_low(1, 4);
    CHECK(add(x, zero_low).prec() == 4);
    CHECK(add(x, zero_low).coeff(1) == CoeffPoly(BigInt(1)));
}

TEST_CASE("like terms merge in the coefficient ring") {
    QSeries x(4, 9);
    x.add_term(1, CoeffPoly::monomial(BigInt(1), 1, 0));
    QSeries y(4, 9);
    y.add_term(1, CoeffPoly::monomial(BigInt(1), -1, 0));
    QSeries sum = add(x, y);
    CHECK(sum.coefficient(1, 1, 0) == 1);
    CHECK(sum.coefficient(1, -1, 0) == 1);
}

TEST_CASE("denominator mismatch is a usage error") {
    QSeries x(4, 9);
    QSeries y(2, 9);
    CHECK_THROWS_AS(add(x, y), std::invalid_argument);
    CHECK_THROWS_AS(mul(x, y), std::invalid_argument);
}

TEST_CASE("multiplication: (1-q)(1-q^2)(1-q^3)") {
    QSeries p = QSeries::one(1, 12);
    for (int k = 1; k <= 3; ++k) {
        QSeries f = QSeries::one(1, 12);
        f.add_term(k, CoeffPoly(BigInt(-1)));
        p = mul(p, f);
    }
    QSeries want = from_terms(1, 12, {{0, 1}, {1, -1}, {2, -1}, {4, 1}, {5, 1}, {6, -1}});
    CHECK(p == want);
}

TEST_CASE("multiplication: (1+aq)(1+q/a)") {
    QSeries x = QSeries::one(1, 8);
    x.add_term(1, CoeffPoly::monomial(BigInt(1), 1, 0));
    QSeries y = QSeries::one(1, 8);
    y.add_term(1, CoeffPoly::monomial(BigInt(1), -1, 0));
    QSeries p = mul(x, y);
    CHECK(p.coefficient(0, 0, 0) == 1);
    CHECK(p.coefficient(1, 1, 0) == 1);
    CHECK(p.coefficient(1, -1, 0) == 1);
    CHECK(p.coefficient(2, 0, 0) == 1);

    CHECK(mul(x, QSeries::one(1, 8)) == x);
}

TEST_CASE("inversion: geometric series in b") {
    QSeries x = QSeries::one(1, 6);
    x.add_term(1, CoeffPoly::monomial(BigInt(-1), 0, 1));
    QSeries inv = invert(x, 6);
    for (std::int64_t e = 0; e <= 6; ++e) {
        CHECK(inv.coefficient(e, 0, static_cast<int>(e)) == 1);
        CHECK(inv.coeff(e).terms().size() == 1);
    }
    CHECK(mul(x, inv).coeff(0).is_one());
}

TEST_CASE("inversion requires unit constant term") {
    QSeries x(1, 5);
    x.add_term(0, CoeffPoly(BigInt(2)));
    CHECK_THROWS_AS(invert(x, 5), std::domain_error);
}

TEST_CASE("inverting the Euler product counts partitions") {
    const std::int64_t prec = 24;
    QSeries gf = invert(poch_infinite({1, 0, 0, 1}, 1, 1, prec), prec);
    for (int n = 0; n <= prec; ++n) {
        CHECK(gf.coefficient(n, 0, 0) == partitions::count_all_partitions(n));
    }
}

TEST_CASE("invert is an involution on random unit series") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        QSeries x = random_series(rng, 1, 18, true);
        QSeries inv = invert(x, 18);
        CHECK(mul(x, inv) == QSeries::one(1, 18));
        CHECK(invert(inv, 18) == x);
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        QSeries x = random_series(rng, 2, 14, false);
        QSeries y = random_series(rng, 2, 14, false);
        QSeries z = random_series(rng, 2, 14, false);
        CHECK(add(x, y) == add(y, x));
        CHECK(mul(x, y) == mul(y, x));
        CHECK(add(add(x, y), z) == add(x, add(y, z)));
        /* associativity/distributivity compared to the shared precision */
        std::int64_t p = std::min({mul(mul(x, y), z).prec(), mul(x, mul(y, z)).prec()});
        CHECK(mul(mul(x, y), z).truncated(p) == mul(x, mul(y, z)).truncated(p));
        std::int64_t pd = std::min(mul(x, add(y, z)).prec(),
                                   add(mul(x, y), mul(x, z)).prec());
        CHECK(mul(x, add(y, z)).truncated(pd) ==
              add(mul(x, y), mul(x, z)).truncated(pd));
    }
}

TEST_CASE("rescale") {
    QSeries x = from_terms(1, 2, {{0, 1}, {1, 1}, {2, 1}});
    QSeries r = x.rescaled(4);
    CHECK(r.prec() == 8);
    CHECK(r.coefficient(0, 0, 0) == 1);
    CHECK(r.coefficient(4, 0, 0) == 1);
    CHECK(r.coefficient(8, 0, 0) == 1);
    CHECK(r.coefficient(3, 0, 0) == 0);
    CHECK(x.rescaled(1) == x);
}

TEST_CASE("rescale commutes with multiplication") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        QSeries x = random_series(rng, 1, 12, false);
        QSeries y = random_series(rng, 1, 12, false);
        for (int k : {2, 3}) {
            CHECK(mul(x, y).rescaled(k) == mul(x.rescaled(k), y.rescaled(k)));
        }
    }
}

TEST_CASE("rescaled G matches G built at q^4 directly") {
    BuildCtx ctx(1, 48);
    SumSpec g;
    g.q_exp = {1, 0, 0};
    g.poch_base = {1, 0, 0, 1};
    QSeries g_at_q = sum_expand(g, ctx);

    SumSpec g4;  // the same sum written directly in powers of q^4
    g4.q_exp = {4, 0, 0};
    g4.poch_base = {1, 0, 0, 4};
    g4.poch_step = 4;
    QSeries direct = sum_expand(g4, ctx);
    CHECK(g_at_q.truncated(12).rescaled(4) == direct);
}

TEST_CASE("precision tracking is sound under truncation") {
    QSeries full = invert(poch_infinite({1, 0, 0, 1}, 1, 1, 60), 60);
    QSeries low = invert(poch_infinite({1, 0, 0, 1}, 1, 1, 30), 30);
    CHECK(full.truncated(30) == low);

    std::mt19937 rng(3);
    QSeries x = random_series(rng, 1, 40, true);
    CHECK(invert(x, 40).truncated(25) == invert(x.truncated(25), 25));
}

TEST_CASE("embed and reduce denominators") {
    QSeries x = from_terms(1, 5, {{0, 1}, {2, 3}});
    QSeries e = x.embedded(4);
    CHECK(e.denom() == 4);
    CHECK(e.prec() == 20);
    CHECK(e.coefficient(8, 0, 0) == 3);
    CHECK(e.reduced(4) == x);
    CHECK_THROWS_AS(from_terms(2, 4, {{1, 1}}).reduced(2), std::domain_error);
}

TEST_CASE("specialize collapses parameters") {
    QSeries x(1, 4);
    CoeffPoly c = CoeffPoly::monomial(BigInt(1), 1, 0);
    c.add_term({-1, 0}, BigInt(1));
    x.add_term(0, c);
    QSeries got = specialize_unit(x, {1, 0}, {1, 0});
    CHECK(got.coefficient(0, 0, 0) == 2);

    CHECK_THROWS_AS(specialize(x, {0, 0}, {1, 0}), std::domain_error);

    Specialized half = specialize(x, {Rational(1, 2), 0}, {1, 0});
    CHECK(half.scale == 2);          // a + 1/a at a = 1/2 is 5/2
    CHECK(half.series.coefficient(0, 0, 0) == 5);
}

TEST_CASE("specialize with a monomial shifts exponents") {
    /* theta term a^n t^(n^2) at a = -t^(-1) becomes (-1)^n t^(n^2-n); the
     * first unknown theta exponent is 36, so shifts keep the result exact
     * through t^(36 - 6 - 1). */
    BuildCtx ctx(4, 35);
    QSeries theta = theta_full(ctx, 1);
    /* single term first: a^3 t^9 lands at t^6 with sign -1 */
    QSeries single = QSeries::monomial(CoeffPoly::monomial(BigInt(1), 3, 0), 9, 4, 35);
    CHECK(specialize_unit(single, {-1, -1}, {1, 0}, 29).coefficient(6, 0, 0) == -1);
    /* the full two-sided sum vanishes: the n and 1-n terms cancel in pairs */
    CHECK(specialize_unit(theta, {-1, -1}, {1, 0}, 29).is_zero());

    CHECK_THROWS_AS(specialize(theta, {-1, -1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("negating q, a and b") {
    QSeries x(1, 3);
    x.add_term(1, CoeffPoly::monomial(BigInt(1), 1, 1));
    x.add_term(2, CoeffPoly::monomial(BigInt(1), 0, 1));
    QSeries nq = x.with_negated_q();
    CHECK(nq.coefficient(1, 1, 1) == -1);
    CHECK(nq.coefficient(2, 0, 1) == 1);
    CHECK(x.with_negated_a().coefficient(1, 1, 1) == -1);
    CHECK(x.with_negated_b().coefficient(2, 0, 1) == -1);
    CHECK_THROWS_AS(QSeries(2, 3).with_negated_q(), std::domain_error);
}

TEST_CASE("serialization round-trips bit-exactly") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        QSeries x = random_series(rng, 6, 25, trial % 2 == 0);
        std::string record = x.serialize();
        QSeries back = QSeries::deserialize(record);
        CHECK(back == x);
        CHECK(back.serialize() == record);
    }
}

TEST_CASE("serialization golden record") {
    QSeries x(4, 9);
    CoeffPoly c = CoeffPoly::monomial(BigInt(1), 1, 0);
    c.add_term({-1, 0}, BigInt(1));
    x.add_term(0, CoeffPoly(BigInt(1)));
    x.add_term(1, c);
    CHECK(x.serialize() ==
          R"({"denom":4,"prec":9,"terms":[{"e":0,"coeff":[{"a":0,"b":0,"c":"1"}]},)"
          R"({"e":1,"coeff":[{"a":-1,"b":0,"c":"1"},{"a":1,"b":0,"c":"1"}]}]})");
    CHECK_THROWS_AS(QSeries::deserialize("{"), std::invalid_argument);
    CHECK_THROWS_AS(QSeries::deserialize(R"({"denom":1,"prec":2,"terms":[{"e":5,"coeff":[]}]})"),
                    std::invalid_argument);
}

TEST_CASE("coefficient access beyond precision is an error") {
    QSeries x(1, 5);
    CHECK_THROWS_AS(x.coeff(6), std::invalid_argument);
    CHECK(x.coeff(5).is_zero());
}
