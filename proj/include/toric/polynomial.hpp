#pragma once

#include "toric/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, ties broken
/// lexicographically with the first variable most significant.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients over an
/// ordered list of named variables. No zero coefficient is ever stored.
///
/// Binary operations accept operands over different variable lists; the
/// result lives over the union (left operand's variables first).
class Polynomial {
public:
    using Terms = std::map<Exponent, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables);
    Polynomial(std::vector<std::string> variables, Terms terms);

    static Polynomial constant(const Rational& c, std::vector<std::string> variables = {});
    static Polynomial variable(std::vector<std::string> variables, std::size_t index);
    /// sum_i coeffs[i] * var_i + constant
    static Polynomial linear(std::vector<std::string> variables, std::span<const Rational> coeffs,
                             const Rational& constant);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t num_variables() const { return vars_.size(); }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    std::uint32_t total_degree() const;
    /// Coefficient of the grlex-largest monomial. Throws on the zero polynomial.
    const Rational& leading_coefficient() const;

    Rational eval(std::span<const Rational> x) const;

    /// Re-expresses the polynomial over `variables`, which must contain every
    /// variable that actually occurs.
    Polynomial with_variables(const std::vector<std::string>& variables) const;
    /// Same polynomial, variables renamed positionally.
    Polynomial renamed(std::vector<std::string> names) const;
    /// Replaces each variable named in `values` by the given polynomial; the
    /// result keeps this polynomial's variable list.
    Polynomial substituted(const std::map<std::string, Polynomial>& values) const;

    Polynomial pow(unsigned exponent) const;

    /// Positive rational c such that (*this / c) has coprime integer
    /// coefficients. Zero for the zero polynomial.
    Rational content() const;
    Polynomial primitive_part() const;

    /// Largest monomial dividing every term (all zeros for the zero polynomial).
    Exponent monomial_gcd() const;
    /// Divides every term by the monomial `m`; m must divide each term.
    Polynomial divide_monomial(const Exponent& m) const;

    std::string to_string() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a);

    /// Equality as polynomials; variables that do not occur are irrelevant.
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void drop_zeros();
    void align_with(const Polynomial& other);

    std::vector<std::string> vars_;
    Terms terms_;
};

/// Union of two variable lists, order of first appearance.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

/// "x1", "x2", ... "x<count>"
std::vector<std::string> numbered_variables(std::string_view prefix, std::size_t count);

/// Parses expressions such as "(1-y2)*(2-y1-y2)^2 + 3/2*y1" over the given
/// variables. Supports + - * ^ (nonnegative integer exponents), parentheses
/// and rational constants; unknown identifiers raise ParseError.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

} // namespace toric
