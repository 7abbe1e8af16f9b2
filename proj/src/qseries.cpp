#include "qrr/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace qrr {

namespace {

const CoeffPoly k_zero_poly;

void require_same_denom(const QSeries& x, const QSeries& y) {
    if (x.denom() != y.denom()) {
        throw std::invalid_argument("QSeries: denominator mismatch (rescale first)");
    }
}

}  // namespace

QSeries::QSeries(int denom, std::int64_t prec) : denom_(denom), prec_(prec) {
    if (denom < 1) {
        throw std::invalid_argument("QSeries: denominator must be positive");
    }
    if (prec < 0) {
        throw std::invalid_argument("QSeries: negative precision");
    }
}

QSeries QSeries::one(int denom, std::int64_t prec) {
    QSeries s(denom, prec);
    s.coeffs_.emplace(0, CoeffPoly(BigInt(1)));
    return s;
}

QSeries QSeries::monomial(CoeffPoly c, std::int64_t t_exp, int denom, std::int64_t prec) {
    QSeries s(denom, prec);
    if (t_exp < 0) {
        throw std::invalid_argument("QSeries: negative exponent");
    }
    if (t_exp <= prec && !c.is_zero()) {
        s.coeffs_.emplace(t_exp, std::move(c));
    }
    return s;
}

std::int64_t QSeries::valuation() const {
    return coeffs_.empty() ? prec_ + 1 : coeffs_.begin()->first;
}

const CoeffPoly& QSeries::coeff(std::int64_t e) const {
    if (e < 0 || e > prec_) {
        throw std::invalid_argument("QSeries::coeff: exponent beyond tracked precision");
    }
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? k_zero_poly : it->second;
}

BigInt QSeries::coefficient(std::int64_t e, int a_exp, int b_exp) const {
    return coeff(e).coeff(a_exp, b_exp);
}

void QSeries::set_coeff(std::int64_t e, CoeffPoly c) {
    if (e < 0 || e > prec_) {
        throw std::invalid_argument("QSeries::set_coeff: exponent out of range");
    }
    if (c.is_zero()) {
        coeffs_.erase(e);
    } else {
        coeffs_[e] = std::move(c);
    }
}

void QSeries::add_term(std::int64_t e, const CoeffPoly& c) {
    add_term(e, CoeffPoly(c));
}

void QSeries::add_term(std::int64_t e, CoeffPoly&& c) {
    if (c.is_zero() || e > prec_) {
        return;
    }
    if (e < 0) {
        throw std::invalid_argument("QSeries::add_term: negative exponent");
    }
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) {
            coeffs_.erase(it);
        }
    }
}

QSeries QSeries::truncated(std::int64_t new_prec) const {
    if (new_prec > prec_) {
        throw std::invalid_argument("QSeries::truncated: cannot extend precision");
    }
    QSeries out(denom_, new_prec);
    for (const auto& [e, c] : coeffs_) {
        if (e > new_prec) break;
        out.coeffs_.emplace(e, c);
    }
    return out;
}

QSeries add(const QSeries& x, const QSeries& y) {
    require_same_denom(x, y);
    QSeries out(x.denom_, std::min(x.prec_, y.prec_));
    for (const auto& [e, c] : x.coeffs_) {
        if (e <= out.prec_) out.coeffs_.emplace(e, c);
    }
    for (const auto& [e, c] : y.coeffs_) {
        if (e <= out.prec_) out.add_term(e, c);
    }
    return out;
}

QSeries sub(const QSeries& x, const QSeries& y) {
    return add(x, y.negated());
}

QSeries mul(const QSeries& x, const QSeries& y) {
    require_same_denom(x, y);
    std::int64_t prec = std::min(x.prec_ + y.valuation(), y.prec_ + x.valuation());
    QSeries out(x.denom_, prec);
    for (const auto& [e1, c1] : x.coeffs_) {
        if (e1 > prec) break;
        for (const auto& [e2, c2] : y.coeffs_) {
            if (e1 + e2 > prec) break;
            out.add_term(e1 + e2, c1 * c2);
        }
    }
    return out;
}

QSeries QSeries::times_monomial(const CoeffPoly& c, std::int64_t t_exp) const {
    if (t_exp < 0) {
        throw std::invalid_argument("QSeries::times_monomial: negative exponent");
    }
    QSeries out(denom_, prec_ + t_exp);
    if (c.is_zero()) {
        return out;
    }
    for (const auto& [e, v] : coeffs_) {
        CoeffPoly prod = v * c;
        if (!prod.is_zero()) {
            out.coeffs_.emplace(e + t_exp, std::move(prod));
        }
    }
    return out;
}

QSeries QSeries::negated() const {
    QSeries out(denom_, prec_);
    for (const auto& [e, c] : coeffs_) {
        out.coeffs_.emplace(e, -c);
    }
    return out;
}

QSeries QSeries::scaled(const BigInt& k) const {
    QSeries out(denom_, prec_);
    if (k == 0) {
        return out;
    }
    for (const auto& [e, c] : coeffs_) {
        out.coeffs_.emplace(e, c.scaled(k));
    }
    return out;
}

QSeries invert(const QSeries& x, std::int64_t target_prec) {
    if (!x.coeff(0).is_one()) {
        throw std::domain_error("invert: constant term must be 1");
    }
    /* y_0 = 1 and y_e = -sum_{k=1..e} x_k y_{e-k}; y_e only needs x up to e,
     * so the result is exact through min(target, prec x). */
    std::int64_t prec = std::min(target_prec, x.prec());
    QSeries out(x.denom(), prec);
    std::vector<CoeffPoly> y(static_cast<size_t>(prec) + 1);
    y[0] = CoeffPoly(BigInt(1));
    out.set_coeff(0, y[0]);
    for (std::int64_t e = 1; e <= prec; ++e) {
        CoeffPoly acc;
        for (const auto& [k, xc] : x.coeffs()) {
            if (k < 1) continue;
            if (k > e) break;
            if (!y[e - k].is_zero()) {
                acc += xc * y[e - k];
            }
        }
        y[e] = -acc;
        if (!y[e].is_zero()) {
            out.set_coeff(e, y[e]);
        }
    }
    return out;
}

QSeries QSeries::rescaled(int k) const {
    if (k < 1) {
        throw std::invalid_argument("QSeries::rescaled: factor must be positive");
    }
    if (k == 1) {
        return *this;
    }
    QSeries out(denom_, prec_ * k);
    for (const auto& [e, c] : coeffs_) {
        out.coeffs_.emplace(e * k, c);
    }
    return out;
}

QSeries QSeries::embedded(int new_denom) const {
    if (new_denom < denom_ || new_denom % denom_ != 0) {
        throw std::invalid_argument("QSeries::embedded: new denominator must be a multiple");
    }
    int f = new_denom / denom_;
    QSeries out = rescaled(f);
    out.denom_ = new_denom;
    return out;
}

QSeries QSeries::reduced(int g) const {
    if (g < 1 || denom_ % g != 0) {
        throw std::invalid_argument("QSeries::reduced: factor must divide denominator");
    }
    QSeries out(denom_ / g, prec_ / g);
    for (const auto& [e, c] : coeffs_) {
        if (e % g != 0) {
            throw std::domain_error("QSeries::reduced: exponent not divisible by factor");
        }
        if (e / g <= out.prec_) {
            out.coeffs_.emplace(e / g, c);
        }
    }
    return out;
}

QSeries QSeries::reinterpreted(int new_denom) const {
    if (new_denom < 1) {
        throw std::invalid_argument("QSeries::reinterpreted: denominator must be positive");
    }
    QSeries out = *this;
    out.denom_ = new_denom;
    return out;
}

QSeries QSeries::with_negated_q() const {
    if (denom_ != 1) {
        throw std::domain_error("QSeries::with_negated_q: requires integer exponents");
    }
    QSeries out(denom_, prec_);
    for (const auto& [e, c] : coeffs_) {
        out.coeffs_.emplace(e, (e % 2 != 0) ? -c : c);
    }
    return out;
}

QSeries QSeries::with_negated_a() const {
    QSeries out(denom_, prec_);
    for (const auto& [e, c] : coeffs_) {
        out.coeffs_.emplace(e, c.with_negated_a());
    }
    return out;
}

QSeries QSeries::with_negated_b() const {
    QSeries out(denom_, prec_);
    for (const auto& [e, c] : coeffs_) {
        out.coeffs_.emplace(e, c.with_negated_b());
    }
    return out;
}

QSeries QSeries::with_unit_a() const {
    QSeries out(denom_, prec_);
    for (const auto& [e, c] : coeffs_) {
        out.add_term(e, c.with_unit_a());
    }
    return out;
}

QSeries QSeries::with_unit_b() const {
    QSeries out(denom_, prec_);
    for (const auto& [e, c] : coeffs_) {
        out.add_term(e, c.with_unit_b());
    }
    return out;
}

double QSeries::eval_double(double a_val, double b_val, double q) const {
    double t = std::pow(q, 1.0 / denom_);
    double total = 0.0;
    for (const auto& [e, c] : coeffs_) {
        total += c.eval_double(a_val, b_val) * std::pow(t, static_cast<double>(e));
    }
    return total;
}

std::string QSeries::serialize() const {
    nlohmann::ordered_json rec;
    rec["denom"] = denom_;
    rec["prec"] = prec_;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : coeffs_) {
        nlohmann::ordered_json term;
        term["e"] = e;
        auto cs = nlohmann::ordered_json::array();
        for (const auto& [key, value] : c.terms()) {
            cs.push_back({{"a", key.a}, {"b", key.b}, {"c", value.str()}});
        }
        term["coeff"] = std::move(cs);
        terms.push_back(std::move(term));
    }
    rec["terms"] = std::move(terms);
    return rec.dump();
}

QSeries QSeries::deserialize(const std::string& record) {
    nlohmann::json rec;
    try {
        rec = nlohmann::json::parse(record);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("QSeries record: ") + err.what());
    }
    if (!rec.is_object() || !rec.contains("denom") || !rec.contains("prec") ||
        !rec.contains("terms") || !rec["terms"].is_array()) {
        throw std::invalid_argument("QSeries record: missing denom/prec/terms");
    }
    QSeries out(rec["denom"].get<int>(), rec["prec"].get<std::int64_t>());
    for (const auto& term : rec["terms"]) {
        std::int64_t e = term.at("e").get<std::int64_t>();
        if (e < 0 || e > out.prec_) {
            throw std::invalid_argument("QSeries record: exponent out of range");
        }
        CoeffPoly c;
        for (const auto& entry : term.at("coeff")) {
            c.add_term({entry.at("a").get<int>(), entry.at("b").get<int>()},
                       BigInt(entry.at("c").get<std::string>()));
        }
        if (c.is_zero()) {
            throw std::invalid_argument("QSeries record: zero coefficient stored");
        }
        if (out.coeffs_.count(e)) {
            throw std::invalid_argument("QSeries record: duplicate exponent");
        }
        out.coeffs_.emplace(e, std::move(c));
    }
    return out;
}

Specialized specialize(const QSeries& x, const SpecValue& a_val, const SpecValue& b_val,
                       std::optional<std::int64_t> result_prec) {
    if (a_val.coeff == 0) {
        throw std::domain_error("specialize: a = 0 is outside the domain");
    }
    bool shifts = a_val.t_exp != 0 || b_val.t_exp != 0;
    if (shifts && !result_prec) {
        throw std::invalid_argument(
            "specialize: monomial substitution needs an explicit result precision");
    }
    std::int64_t prec = result_prec.value_or(x.prec());
    if (!shifts && prec > x.prec()) {
        throw std::invalid_argument("specialize: cannot extend precision");
    }

    std::map<std::int64_t, Rational> values;
    for (const auto& [e, c] : x.coeffs()) {
        for (const auto& [key, value] : c.terms()) {
            std::int64_t shifted = e + key.a * a_val.t_exp + key.b * b_val.t_exp;
            if (shifted < 0) {
                throw std::domain_error("specialize: substitution drives an exponent below 0");
            }
            if (shifted > prec) {
                continue;
            }
            Rational term = value;
            if (key.a >= 0) {
                for (int i = 0; i < key.a; ++i) term *= a_val.coeff;
            } else {
                for (int i = 0; i < -key.a; ++i) term /= a_val.coeff;
            }
            for (int i = 0; i < key.b; ++i) term *= b_val.coeff;
            values[shifted] += term;
        }
    }

    BigInt scale = 1;
    for (const auto& [e, v] : values) {
        if (v != 0) {
            scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(v));
        }
    }
    QSeries series(x.denom(), prec);
    for (const auto& [e, v] : values) {
        Rational scaled = v * scale;
        series.add_term(e, CoeffPoly(boost::multiprecision::numerator(scaled)));
    }
    return {std::move(series), std::move(scale)};
}

QSeries specialize_unit(const QSeries& x, const SpecValue& a_val, const SpecValue& b_val,
                        std::optional<std::int64_t> result_prec) {
    Specialized r = specialize(x, a_val, b_val, result_prec);
    if (r.scale != 1) {
        throw std::domain_error("specialize_unit: substitution left the integer ring");
    }
    return std::move(r.series);
}

}  // namespace qrr
