#pragma once

// Exact rational arithmetic, pi-graded values and even zeta values.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mv {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when a computation needs data that is not available (missing table
// entry, infeasible interpolation, unpinned abelian volume).
class Unavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);

Integer factorial(long n);
Integer binomial(long n, long k);
// n!! with the conventions (-1)!! = 0!! = 1.
Integer double_factorial(long n);

Rational bernoulli(long n);

class PiValue {
public:
    PiValue() = default;
    PiValue(Rational coefficient, int pi_power);

    const Rational& coefficient() const { return coeff_; }
    int pi_power() const { return power_; }
    bool is_zero() const { return coeff_ == 0; }

    PiValue operator+(const PiValue& o) const;
    PiValue operator-(const PiValue& o) const;
    PiValue operator-() const;
    PiValue operator*(const PiValue& o) const;
    PiValue operator*(const Rational& q) const;
    PiValue operator/(const Rational& q) const;
    PiValue& operator+=(const PiValue& o) { return *this = *this + o; }
    PiValue& operator-=(const PiValue& o) { return *this = *this - o; }
    bool operator==(const PiValue& o) const { return coeff_ == o.coeff_ && power_ == o.power_; }
    bool operator!=(const PiValue& o) const { return !(*this == o); }

    // "a/b * pi^d"
    std::string to_string() const;
    static PiValue parse(const std::string& s);
    double approx() const;

private:
    Rational coeff_{0};
    int power_ = 0;
};

inline PiValue operator*(const Rational& q, const PiValue& v) { return v * q; }

// zeta(2k) as a rational multiple of pi^(2k).
PiValue zeta_even(long arg);

}  // namespace mv
