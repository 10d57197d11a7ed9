#pragma once

#include "toric/polynomial.hpp"

namespace toric {

/// Element of the fraction field Q(x1..xn), stored as numerator/denominator.
///
/// Canonical form: numerator and denominator share one variable list; common
/// monomial factors are cancelled; the denominator is a primitive integer
/// polynomial whose grlex-leading coefficient is positive. No multivariate
/// gcd is taken, so equal fractions may have different representations;
/// compare with ratfun_equal (or ==), which cross-multiplies.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
    RationalFunction(Polynomial numerator); // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction constant(const Rational& c, std::vector<std::string> variables = {});

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    const std::vector<std::string>& variables() const { return num_.variables(); }

    bool is_zero() const { return num_.is_zero(); }

    /// Throws PoleError when the denominator vanishes at x.
    Rational eval(std::span<const Rational> x) const;

    RationalFunction with_variables(const std::vector<std::string>& variables) const;
    RationalFunction renamed(std::vector<std::string> names) const;
    /// Substitutes into numerator and denominator. Throws PoleError when the
    /// denominator becomes identically zero.
    RationalFunction substituted(const std::map<std::string, Polynomial>& values) const;

    std::string to_string() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    /// Throws DivisionByZero when b is the zero function.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);

    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

    /// Equality in the fraction field.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    /// Structural equality of the stored representation.
    bool same_representation(const RationalFunction& other) const {
        return num_.variables() == other.num_.variables() && num_.terms() == other.num_.terms() &&
               den_.terms() == other.den_.terms();
    }

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

inline bool ratfun_equal(const RationalFunction& a, const RationalFunction& b) { return a == b; }

enum class ArithOp { Add, Mul, Div };
RationalFunction ratfun_arith(ArithOp op, const RationalFunction& f, const RationalFunction& g);

inline Rational poly_eval(const Polynomial& f, std::span<const Rational> x) { return f.eval(x); }
inline Rational ratfun_eval(const RationalFunction& f, std::span<const Rational> x) { return f.eval(x); }

} // namespace toric
