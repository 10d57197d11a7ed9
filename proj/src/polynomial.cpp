#include "toric/polynomial.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace toric {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
    auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

Polynomial::Polynomial(std::vector<std::string> variables, Terms terms)
    : vars_(std::move(variables)), terms_(std::move(terms)) {
    for (const auto& [e, c] : terms_)
        if (e.size() != vars_.size())
            throw DimensionMismatch("exponent vector length " + std::to_string(e.size()) +
                                    " does not match " + std::to_string(vars_.size()) + " variables");
    drop_zeros();
}

Polynomial Polynomial::constant(const Rational& c, std::vector<std::string> variables) {
    Polynomial p(std::move(variables));
    if (c != 0) p.terms_.emplace(Exponent(p.vars_.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
    if (index >= variables.size()) throw DimensionMismatch("variable index out of range");
    Polynomial p(std::move(variables));
    Exponent e(p.vars_.size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::linear(std::vector<std::string> variables, std::span<const Rational> coeffs,
                              const Rational& constant) {
    if (coeffs.size() != variables.size())
        throw DimensionMismatch("linear form needs one coefficient per variable");
    Polynomial p(std::move(variables));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Exponent e(p.vars_.size(), 0);
        e[i] = 1;
        p.terms_.emplace(std::move(e), coeffs[i]);
    }
    if (constant != 0) p.terms_.emplace(Exponent(p.vars_.size(), 0), constant);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                              [](auto x) { return x == 0; }));
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Exponent(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::total_degree() const {
    if (terms_.empty()) return 0;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw DivisionByZero("leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
}

Rational Polynomial::eval(std::span<const Rational> x) const {
    if (x.size() != vars_.size())
        throw DimensionMismatch("evaluation point has " + std::to_string(x.size()) + " coordinates, polynomial has " +
                                std::to_string(vars_.size()) + " variables");
    // Powers are cached per variable; fixture degrees are small.
    std::vector<std::vector<Rational>> powers(vars_.size(), std::vector<Rational>{Rational(1)});
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * x[i]);
            term *= pw[e[i]];
        }
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::with_variables(const std::vector<std::string>& variables) const {
    if (variables == vars_) return *this;
    std::vector<std::size_t> target(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(variables.begin(), variables.end(), vars_[i]);
        target[i] = it == variables.end() ? variables.size() : static_cast<std::size_t>(it - variables.begin());
    }
    Polynomial out(variables);
    for (const auto& [e, c] : terms_) {
        Exponent f(variables.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (target[i] == variables.size())
                throw DimensionMismatch("variable '" + vars_[i] + "' occurs but is not in the target variable list");
            f[target[i]] = e[i];
        }
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

Polynomial Polynomial::renamed(std::vector<std::string> names) const {
    if (names.size() != vars_.size()) throw DimensionMismatch("rename needs one name per variable");
    Polynomial out = *this;
    out.vars_ = std::move(names);
    return out;
}

Polynomial Polynomial::substituted(const std::map<std::string, Polynomial>& values) const {
    std::vector<const Polynomial*> repl(vars_.size(), nullptr);
    std::vector<Polynomial> aligned;
    aligned.reserve(values.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = values.find(vars_[i]);
        if (it == values.end()) continue;
        aligned.push_back(it->second.with_variables(vars_));
        repl[i] = &aligned.back();
    }
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent kept = e;
        Polynomial factor = constant(c, vars_);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!repl[i] || e[i] == 0) continue;
            factor *= repl[i]->pow(e[i]);
            kept[i] = 0;
        }
        Terms mono;
        mono[kept] = Rational(1);
        factor *= Polynomial(vars_, std::move(mono));
        out += factor;
    }
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(Rational(1), vars_);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    Integer g = 0, l = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational out(g, l);
    out.canonicalize();
    return out;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Polynomial out = *this;
    out *= Rational(1) / content();
    return out;
}

Exponent Polynomial::monomial_gcd() const {
    Exponent g(vars_.size(), 0);
    if (terms_.empty()) return g;
    g = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], e[i]);
    return g;
}

Polynomial Polynomial::divide_monomial(const Exponent& m) const {
    if (m.size() != vars_.size()) throw DimensionMismatch("monomial length mismatch");
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < m[i]) throw DivisionByZero("monomial does not divide term");
            f[i] -= m[i];
        }
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool is_unit_monomial = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        bool wrote = false;
        if (mag != 1 || is_unit_monomial) {
            os << toric::to_string(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

void Polynomial::drop_zeros() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

void Polynomial::align_with(const Polynomial& other) {
    if (vars_ == other.vars_) return;
    *this = with_variables(merge_variables(vars_, other.vars_));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    align_with(other);
    const Polynomial& rhs = other.vars_ == vars_ ? other : other.with_variables(vars_);
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_) {
        auto vars = merge_variables(a.vars_, b.vars_);
        return a.with_variables(vars) * b.with_variables(vars);
    }
    Polynomial out(a.vars_);
    Exponent e(a.vars_.size());
    Rational prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            prod = ca * cb;
            auto [it, inserted] = out.terms_.try_emplace(e, prod);
            if (!inserted) it->second += prod;
        }
    }
    out.drop_zeros();
    return out;
}

Polynomial operator-(Polynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto vars = merge_variables(a.vars_, b.vars_);
    return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

std::vector<std::string> numbered_variables(std::string_view prefix, std::size_t count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) out.push_back(std::string(prefix) + std::to_string(i));
    return out;
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p.with_variables(vars_);
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                Polynomial d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
                acc *= Rational(1) / d.constant_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Polynomial::constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))), vars_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) fail("unknown variable '" + name + "'");
            return Polynomial::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
    return ExpressionParser(text, variables).parse();
}

} // namespace toric
