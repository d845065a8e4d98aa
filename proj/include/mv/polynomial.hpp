#pragma once

// Sparse multivariate polynomials with rational coefficients.

#include "mv/arith.hpp"

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace mv {

using Exponents = std::vector<int>;

class EvenPolynomial {
public:
    EvenPolynomial() = default;
    explicit EvenPolynomial(std::vector<std::string> variables);
    // Variables named prefix1..prefixN.
    static EvenPolynomial zero(int arity, const std::string& prefix = "b");
    static EvenPolynomial constant(int arity, const Rational& c, const std::string& prefix = "b");
    static EvenPolynomial variable(int arity, int index, const std::string& prefix = "b");
    static EvenPolynomial monomial(int arity, const Exponents& e, const Rational& c,
                                   const std::string& prefix = "b");

    int arity() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool has_only_even_exponents() const;
    bool is_symmetric() const;

    void add_term(const Exponents& e, const Rational& c);
    Rational coefficient(const Exponents& e) const;

    EvenPolynomial operator+(const EvenPolynomial& o) const;
    EvenPolynomial operator-(const EvenPolynomial& o) const;
    EvenPolynomial operator*(const EvenPolynomial& o) const;
    EvenPolynomial operator*(const Rational& q) const;
    EvenPolynomial& operator+=(const EvenPolynomial& o);
    bool operator==(const EvenPolynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const EvenPolynomial& o) const { return !(*this == o); }

    Rational evaluate(const std::vector<Rational>& values) const;
    Rational evaluate(const std::map<std::string, Rational>& assignment) const;

    // Variable i of this polynomial becomes variable target[i] of a polynomial
    // in new_vars; several variables may land on the same target.
    EvenPolynomial remap(const std::vector<int>& target, const std::vector<std::string>& new_vars) const;
    // Replace variable `from` by variable `to` (same variable list).
    EvenPolynomial substitute(int from, int to) const;
    // Replace every variable i by the polynomial forms[i] (all in the same ring).
    EvenPolynomial substitute(const std::vector<EvenPolynomial>& forms) const;
    // Homogeneous part of degree d.
    EvenPolynomial restrict_top_degree(int d) const;
    EvenPolynomial with_variables(std::vector<std::string> names) const;

    // Canonical text: terms sorted by total degree descending then exponent
    // vector descending, e.g. "3/4*b1^2 + 3/4*b2^2".
    std::string to_string() const;
    nlohmann::ordered_json to_json() const;
    static EvenPolynomial from_json(const nlohmann::json& j);

private:
    void check_arity(const EvenPolynomial& o) const;
    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

inline EvenPolynomial operator*(const Rational& q, const EvenPolynomial& p) { return p * q; }

std::vector<std::string> default_variables(int arity, const std::string& prefix = "b");

// Monomial symmetric polynomial m_lambda in `arity` variables (sum over the
// distinct permutations of the exponent vector lambda padded with zeros).
EvenPolynomial monomial_symmetric(int arity, const std::vector<int>& lambda, const Rational& c = 1);

}  // namespace mv
