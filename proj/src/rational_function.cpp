#include "toric/rational_function.hpp"

#include "toric/errors.hpp"

#include <algorithm>

namespace toric {

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(Rational(1), num_.variables())) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::constant(const Rational& c, std::vector<std::string> variables) {
    return RationalFunction(Polynomial::constant(c, std::move(variables)));
}

void RationalFunction::normalize() {
    if (num_.variables() != den_.variables()) {
        auto vars = merge_variables(num_.variables(), den_.variables());
        num_ = num_.with_variables(vars);
        den_ = den_.with_variables(vars);
    }
    const auto& vars = num_.variables();
    if (num_.is_zero()) {
        den_ = Polynomial::constant(Rational(1), vars);
        return;
    }
    Exponent m = den_.monomial_gcd();
    Exponent mn = num_.monomial_gcd();
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] = std::min(m[i], mn[i]);
        any = any || m[i] != 0;
    }
    if (any) {
        num_ = num_.divide_monomial(m);
        den_ = den_.divide_monomial(m);
    }
    Rational scale = den_.content();
    if (den_.leading_coefficient() < 0) scale = -scale;
    if (scale != 1) {
        Rational inv = Rational(1) / scale;
        den_ *= inv;
        num_ *= inv;
    }
    if (den_.is_constant()) return;
    // num = c * den for some constant c
    Polynomial prim = num_.primitive_part();
    if (prim == den_) {
        num_ = Polynomial::constant(num_.content(), vars);
        den_ = Polynomial::constant(Rational(1), vars);
    } else if (-prim == den_) {
        num_ = Polynomial::constant(-num_.content(), vars);
        den_ = Polynomial::constant(Rational(1), vars);
    }
}

Rational RationalFunction::eval(std::span<const Rational> x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw PoleError("denominator " + den_.to_string() + " vanishes at the evaluation point");
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::with_variables(const std::vector<std::string>& variables) const {
    RationalFunction out;
    out.num_ = num_.with_variables(variables);
    out.den_ = den_.with_variables(variables);
    return out;
}

RationalFunction RationalFunction::substituted(const std::map<std::string, Polynomial>& values) const {
    Polynomial den = den_.substituted(values);
    if (den.is_zero()) throw PoleError("denominator " + den_.to_string() + " vanishes identically after substitution");
    return RationalFunction(num_.substituted(values), den);
}

RationalFunction RationalFunction::renamed(std::vector<std::string> names) const {
    RationalFunction out;
    out.num_ = num_.renamed(names);
    out.den_ = den_.renamed(std::move(names));
    return out;
}

std::string RationalFunction::to_string() const {
    auto wrap = [](const Polynomial& p) {
        std::string s = p.to_string();
        return p.terms().size() > 1 ? "(" + s + ")" : s;
    };
    if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
    return wrap(num_) + "/" + wrap(den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a) {
    RationalFunction out = a;
    out.num_ = -out.num_;
    return out;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction ratfun_arith(ArithOp op, const RationalFunction& f, const RationalFunction& g) {
    switch (op) {
    case ArithOp::Add: return f + g;
    case ArithOp::Mul: return f * g;
    case ArithOp::Div: return f / g;
    }
    throw Error("unknown arithmetic operation");
}

} // namespace toric
