#include "qrr/qfunctions.hpp"

#include <stdexcept>

#include "json.hpp"

namespace qrr {

namespace {

CoeffPoly head_poly(int sign, std::int64_t a_exp, std::int64_t b_exp) {
    if (b_exp < 0) {
        throw std::domain_error("sum term with negative power of b");
    }
    return CoeffPoly::monomial(BigInt(sign), static_cast<int>(a_exp), static_cast<int>(b_exp));
}

}  // namespace

QSeries poch_finite(const Monomial& base, std::int64_t step, std::int64_t n,
                    int denom, std::int64_t prec) {
    if (n < 0) {
        throw std::invalid_argument("poch_finite: negative length");
    }
    if (base.t_exp < 0 || step < 1) {
        throw std::invalid_argument("poch_finite: bad base or step");
    }
    QSeries out = QSeries::one(denom, prec);
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t e = base.t_exp + i * step;
        if (e > prec) {
            break;  // remaining factors are 1 mod t^(prec+1)
        }
        QSeries factor = QSeries::one(denom, prec);
        factor.add_term(e, CoeffPoly::monomial(BigInt(-base.sign), base.a_exp, base.b_exp));
        out = mul(out, factor);
    }
    return out;
}

QSeries poch_infinite(const Monomial& base, std::int64_t step, int denom, std::int64_t prec) {
    if (base.t_exp < 1) {
        throw std::domain_error("poch_infinite: base needs positive q-valuation");
    }
    if (step < 1) {
        throw std::invalid_argument("poch_infinite: step must be positive");
    }
    QSeries out = QSeries::one(denom, prec);
    for (std::int64_t e = base.t_exp; e <= prec; e += step) {
        QSeries factor = QSeries::one(denom, prec);
        factor.add_term(e, CoeffPoly::monomial(BigInt(-base.sign), base.a_exp, base.b_exp));
        out = mul(out, factor);
    }
    return out;
}

const QSeries& BuildCtx::inv_poch_finite(const Monomial& base, std::int64_t step, std::int64_t n) {
    Key key{base, step, n};
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        it = cache_.emplace(key, invert(poch_finite(base, step, n, denom_, prec_), prec_)).first;
    }
    return it->second;
}

const QSeries& BuildCtx::inv_poch_infinite(const Monomial& base, std::int64_t step) {
    Key key{base, step, -1};
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        it = cache_.emplace(key, invert(poch_infinite(base, step, denom_, prec_), prec_)).first;
    }
    return it->second;
}

QSeries sum_expand(const SumSpec& spec, BuildCtx& ctx) {
    if (spec.q_exp.c2 < 0 || (spec.q_exp.c2 == 0 && spec.q_exp.c1 <= 0)) {
        throw std::domain_error("sum_expand: exponent function does not diverge");
    }
    QSeries acc = ctx.zero();
    for_each_term(spec.n_start, ctx.prec(), spec.q_exp, [&](std::int64_t n) {
        std::int64_t len = spec.poch_len(n);
        if (len < 0) {
            throw std::domain_error("sum_expand: negative Pochhammer length");
        }
        const QSeries& inv = ctx.inv_poch_finite(spec.poch_base, spec.poch_step, len);
        int sign = (spec.alternating && (n % 2 != 0)) ? -1 : 1;
        acc = add(acc, inv.times_monomial(head_poly(sign, spec.a_exp(n), spec.b_exp(n)),
                                          spec.q_exp(n)));
    });
    return acc;
}

QSeries theta_full(BuildCtx& ctx, std::int64_t unit) {
    if (unit < 1) {
        throw std::invalid_argument("theta_full: unit must be positive");
    }
    QSeries out = ctx.one();
    for (std::int64_t n = 1; unit * n * n <= ctx.prec(); ++n) {
        CoeffPoly c = CoeffPoly::monomial(BigInt(1), static_cast<int>(n), 0);
        c.add_term({static_cast<int>(-n), 0}, BigInt(1));
        out.add_term(unit * n * n, std::move(c));
    }
    return out;
}

QSeries partial_theta(ThetaSide side, BuildCtx& ctx, std::int64_t unit) {
    if (unit < 1) {
        throw std::invalid_argument("partial_theta: unit must be positive");
    }
    QSeries out = ctx.zero();
    if (side == ThetaSide::nonpositive) {
        out.add_term(0, CoeffPoly(BigInt(1)));
    }
    for (std::int64_t n = 1; unit * n * n <= ctx.prec(); ++n) {
        int a_exp = side == ThetaSide::positive ? static_cast<int>(n) : static_cast<int>(-n);
        out.add_term(unit * n * n, CoeffPoly::monomial(BigInt(1), a_exp, 0));
    }
    return out;
}

QSeries correction_term(BuildCtx& ctx, std::int64_t unit) {
    if (unit < 1) {
        throw std::invalid_argument("correction_term: unit must be positive");
    }
    const Monomial q_base{1, 0, 0, ctx.denom()};
    QSeries acc = ctx.zero();
    QSeries partial = ctx.zero();  // sum_{l=0}^{n-1} b^l / (q)_l, grown one l per n
    for (std::int64_t n = 1; unit * n * n <= ctx.prec(); ++n) {
        const QSeries& inv = ctx.inv_poch_finite(q_base, ctx.denom(), n - 1);
        partial = add(partial, inv.times_monomial(
                                   CoeffPoly::monomial(BigInt(1), 0, static_cast<int>(n - 1)), 0));
        acc = add(acc, partial.times_monomial(
                           CoeffPoly::monomial(BigInt(1), static_cast<int>(n), 0), unit * n * n));
    }
    return sub(acc, acc.times_monomial(CoeffPoly::monomial(BigInt(1), 0, 1), 0));
}

QSeries bressoud_rhs(int s, BuildCtx& ctx) {
    if (s < 1) {
        throw std::invalid_argument("bressoud_rhs: s must be positive");
    }
    const Monomial qs_base{1, 0, 0, s};
    const Monomial neg_aqs{-1, 1, 0, s};
    const std::int64_t prec = ctx.prec();

    /* Nested sum over (n_1, ..., n_{s-1}), N = sum n_i, with exponent
     * s N(N-1)/2 + sum i*n_i; branches are pruned as soon as the exponent of
     * the all-zero completion exceeds the precision. */
    QSeries inner = ctx.zero();
    std::vector<std::int64_t> tuple(static_cast<size_t>(s - 1), 0);
    auto expo = [&](std::int64_t big_n, std::int64_t linear) {
        return s * big_n * (big_n - 1) / 2 + linear;
    };
    std::function<void(int, std::int64_t, std::int64_t)> walk =
        [&](int pos, std::int64_t big_n, std::int64_t linear) {
            if (pos == s - 1) {
                QSeries term = ctx.monomial(
                    CoeffPoly::monomial(BigInt(1), static_cast<int>(big_n), 0),
                    expo(big_n, linear));
                for (std::int64_t ni : tuple) {
                    term = mul(term, ctx.inv_poch_finite(qs_base, s, ni));
                }
                term = mul(term, ctx.inv_poch_finite(neg_aqs, s, big_n));
                inner = add(inner, term);
                return;
            }
            for (std::int64_t ni = 0;; ++ni) {
                std::int64_t n_next = big_n + ni;
                std::int64_t lin_next = linear + (pos + 1) * ni;
                if (expo(n_next, lin_next) > prec) {
                    break;
                }
                tuple[static_cast<size_t>(pos)] = ni;
                walk(pos + 1, n_next, lin_next);
            }
            tuple[static_cast<size_t>(pos)] = 0;
        };
    walk(0, 0, 0);
    return mul(poch_infinite(neg_aqs, s, ctx.denom(), prec), inner);
}

namespace {

QSeries mcintosh_lhs(int mu, BuildCtx& ctx) {
    SumSpec spec;
    /* (2n+mu)(2n+mu+1)/2 = 2n^2 + (2mu+1)n + mu(mu+1)/2 */
    spec.q_exp = {2, 2 * mu + 1, static_cast<std::int64_t>(mu) * (mu + 1) / 2};
    spec.poch_base = {1, 0, 0, 2};
    spec.poch_step = 2;
    return sum_expand(spec, ctx);
}

using Builder = std::function<QSeries(BuildCtx&)>;

const std::vector<std::pair<std::string, Builder>>& catalog() {
    static const std::vector<std::pair<std::string, Builder>> table = [] {
        std::vector<std::pair<std::string, Builder>> t;
        auto simple = [](QuadInt q_exp, Monomial base, std::int64_t step,
                         std::int64_t n_start = 0) {
            return [=](BuildCtx& ctx) {
                SumSpec spec;
                spec.q_exp = q_exp;
                spec.poch_base = base;
                spec.poch_step = step;
                spec.n_start = n_start;
                return sum_expand(spec, ctx);
            };
        };
        t.emplace_back("G", simple({1, 0, 0}, {1, 0, 0, 1}, 1));
        t.emplace_back("H", simple({1, 1, 0}, {1, 0, 0, 1}, 1));
        t.emplace_back("rogers-rhs-1", [=](BuildCtx& ctx) {
            return mul(poch_infinite({-1, 0, 0, 2}, 2, 1, ctx.prec()),
                       simple({1, 0, 0}, {1, 0, 0, 4}, 4)(ctx));
        });
        t.emplace_back("rogers-rhs-2", [=](BuildCtx& ctx) {
            return mul(poch_infinite({-1, 0, 0, 2}, 2, 1, ctx.prec()),
                       simple({1, 2, 0}, {1, 0, 0, 4}, 4)(ctx));
        });
        t.emplace_back("f0", simple({1, 0, 0}, {-1, 0, 0, 1}, 1));
        t.emplace_back("f1", simple({1, 1, 0}, {-1, 0, 0, 1}, 1));
        t.emplace_back("phi-mock", simple({1, 0, 0}, {-1, 0, 0, 2}, 2));
        t.emplace_back("psi-mock", simple({1, 0, 0}, {1, 0, 0, 1}, 2, 1));
        t.emplace_back("phi-theta", [](BuildCtx& ctx) {
            return specialize_unit(theta_full(ctx, 1), {1, 0}, {1, 0});
        });
        t.emplace_back("psi-product", [](BuildCtx& ctx) {
            return mul(poch_infinite({1, 0, 0, 2}, 2, 1, ctx.prec()),
                       invert(poch_infinite({1, 0, 0, 1}, 2, 1, ctx.prec()), ctx.prec()));
        });
        t.emplace_back("mcintosh-mu0", [](BuildCtx& ctx) { return mcintosh_lhs(0, ctx); });
        t.emplace_back("mcintosh-mu1", [](BuildCtx& ctx) { return mcintosh_lhs(1, ctx); });
        for (int s = 2; s <= 4; ++s) {
            t.emplace_back("bressoud-rhs-" + std::to_string(s),
                           [s](BuildCtx& ctx) { return bressoud_rhs(s, ctx); });
        }
        t.emplace_back("euler-product", [](BuildCtx& ctx) {
            return poch_infinite({1, 0, 0, 1}, 1, 1, ctx.prec());
        });
        t.emplace_back("partition-gf", [](BuildCtx& ctx) {
            return invert(poch_infinite({1, 0, 0, 1}, 1, 1, ctx.prec()), ctx.prec());
        });
        return t;
    }();
    return table;
}

}  // namespace

QSeries named_series(std::string_view id, std::int64_t prec) {
    for (const auto& [name, builder] : catalog()) {
        if (name == id) {
            BuildCtx ctx(1, prec);
            return builder(ctx);
        }
    }
    throw std::invalid_argument("named_series: unknown id '" + std::string(id) + "'");
}

const std::vector<std::string>& named_series_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [name, builder] : catalog()) {
            v.push_back(name);
        }
        return v;
    }();
    return ids;
}

std::string SumSpec::serialize() const {
    nlohmann::ordered_json rec;
    rec["a_exp"] = {a_exp.c0, a_exp.c1};
    rec["b_exp"] = {b_exp.c0, b_exp.c1};
    rec["q_exp"] = {q_exp.c2, q_exp.c1, q_exp.c0};
    rec["alternating"] = alternating;
    rec["poch_base"] = {{"sign", poch_base.sign},
                        {"a", poch_base.a_exp},
                        {"b", poch_base.b_exp},
                        {"t", poch_base.t_exp}};
    rec["poch_step"] = poch_step;
    rec["poch_len"] = {poch_len.c0, poch_len.c1};
    rec["n_start"] = n_start;
    return rec.dump();
}

SumSpec SumSpec::deserialize(const std::string& record) {
    nlohmann::json rec;
    try {
        rec = nlohmann::json::parse(record);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("SumSpec record: ") + err.what());
    }
    SumSpec spec;
    auto affine = [&](const char* key, AffineInt fallback) {
        if (!rec.contains(key)) return fallback;
        auto arr = rec[key];
        return AffineInt{arr.at(0).get<std::int64_t>(), arr.at(1).get<std::int64_t>()};
    };
    spec.a_exp = affine("a_exp", {});
    spec.b_exp = affine("b_exp", {});
    if (rec.contains("q_exp")) {
        auto arr = rec["q_exp"];
        spec.q_exp = {arr.at(0).get<std::int64_t>(), arr.at(1).get<std::int64_t>(),
                      arr.at(2).get<std::int64_t>()};
    }
    spec.alternating = rec.value("alternating", false);
    if (rec.contains("poch_base")) {
        auto base = rec["poch_base"];
        spec.poch_base = {base.value("sign", 1), base.value("a", 0), base.value("b", 0),
                          base.value("t", std::int64_t{0})};
    }
    spec.poch_step = rec.value("poch_step", std::int64_t{1});
    spec.poch_len = affine("poch_len", {0, 1});
    spec.n_start = rec.value("n_start", std::int64_t{0});
    return spec;
}

}  // namespace qrr
