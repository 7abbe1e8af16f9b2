#include "qrr/coeff_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qrr {

namespace {
const BigInt k_zero = 0;
}

CoeffPoly::CoeffPoly(BigInt constant) {
    if (constant != 0) {
        terms_.emplace(ParamExp{0, 0}, std::move(constant));
    }
}

CoeffPoly CoeffPoly::monomial(BigInt coeff, int a_exp, int b_exp) {
    CoeffPoly p;
    p.add_term({a_exp, b_exp}, coeff);
    return p;
}

bool CoeffPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == ParamExp{0, 0});
}

bool CoeffPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ParamExp{0, 0} &&
           terms_.begin()->second == 1;
}

const BigInt& CoeffPoly::coeff(int a_exp, int b_exp) const {
    auto it = terms_.find({a_exp, b_exp});
    return it == terms_.end() ? k_zero : it->second;
}

void CoeffPoly::add_term(const ParamExp& key, const BigInt& value) {
    if (value == 0) {
        return;
    }
    if (key.b < 0) {
        throw std::invalid_argument("CoeffPoly: negative power of b");
    }
    auto [it, inserted] = terms_.emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& rhs) {
    for (const auto& [key, value] : rhs.terms_) {
        add_term(key, value);
    }
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& rhs) {
    for (const auto& [key, value] : rhs.terms_) {
        add_term(key, -value);
    }
    return *this;
}

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly out;
    for (const auto& [key, value] : terms_) {
        out.terms_.emplace(key, -value);
    }
    return out;
}

CoeffPoly operator+(CoeffPoly lhs, const CoeffPoly& rhs) {
    lhs += rhs;
    return lhs;
}

CoeffPoly operator-(CoeffPoly lhs, const CoeffPoly& rhs) {
    lhs -= rhs;
    return lhs;
}

CoeffPoly operator*(const CoeffPoly& lhs, const CoeffPoly& rhs) {
    CoeffPoly out;
    for (const auto& [k1, v1] : lhs.terms_) {
        for (const auto& [k2, v2] : rhs.terms_) {
            out.add_term({k1.a + k2.a, k1.b + k2.b}, v1 * v2);
        }
    }
    return out;
}

CoeffPoly CoeffPoly::times_monomial(const BigInt& coeff, int a_exp, int b_exp) const {
    CoeffPoly out;
    if (coeff == 0) {
        return out;
    }
    for (const auto& [key, value] : terms_) {
        out.terms_.emplace(ParamExp{key.a + a_exp, key.b + b_exp}, value * coeff);
    }
    return out;
}

CoeffPoly CoeffPoly::scaled(const BigInt& k) const {
    return times_monomial(k, 0, 0);
}

CoeffPoly CoeffPoly::with_negated_a() const {
    CoeffPoly out;
    for (const auto& [key, value] : terms_) {
        out.terms_.emplace(key, (key.a % 2 != 0) ? -value : value);
    }
    return out;
}

CoeffPoly CoeffPoly::with_negated_b() const {
    CoeffPoly out;
    for (const auto& [key, value] : terms_) {
        out.terms_.emplace(key, (key.b % 2 != 0) ? -value : value);
    }
    return out;
}

CoeffPoly CoeffPoly::with_unit_a() const {
    CoeffPoly out;
    for (const auto& [key, value] : terms_) {
        out.add_term({0, key.b}, value);
    }
    return out;
}

CoeffPoly CoeffPoly::with_unit_b() const {
    CoeffPoly out;
    for (const auto& [key, value] : terms_) {
        out.add_term({key.a, 0}, value);
    }
    return out;
}

Rational CoeffPoly::eval(const Rational& a_val, const Rational& b_val) const {
    Rational total = 0;
    for (const auto& [key, value] : terms_) {
        if (key.a < 0 && a_val == 0) {
            throw std::domain_error("CoeffPoly::eval: a = 0 with negative power of a");
        }
        Rational term = value;
        if (key.a >= 0) {
            for (int i = 0; i < key.a; ++i) term *= a_val;
        } else {
            for (int i = 0; i < -key.a; ++i) term /= a_val;
        }
        for (int i = 0; i < key.b; ++i) term *= b_val;
        total += term;
    }
    return total;
}

double CoeffPoly::eval_double(double a_val, double b_val) const {
    double total = 0.0;
    for (const auto& [key, value] : terms_) {
        total += value.convert_to<double>() * std::pow(a_val, key.a) * std::pow(b_val, key.b);
    }
    return total;
}

bool CoeffPoly::all_coeffs_even() const {
    for (const auto& [key, value] : terms_) {
        if (value % 2 != 0) {
            return false;
        }
    }
    return true;
}

std::string CoeffPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, value] : terms_) {
        BigInt mag = value < 0 ? BigInt(-value) : value;
        if (first) {
            if (value < 0) os << "-";
        } else {
            os << (value < 0 ? " - " : " + ");
        }
        first = false;
        bool has_param = key.a != 0 || key.b != 0;
        if (mag != 1 || !has_param) {
            os << mag.str();
            if (has_param) os << "*";
        }
        if (key.a != 0) {
            os << "a";
            if (key.a != 1) os << "^" << key.a;
            if (key.b != 0) os << "*";
        }
        if (key.b != 0) {
            os << "b";
            if (key.b != 1) os << "^" << key.b;
        }
    }
    return os.str();
}

}  // namespace qrr
