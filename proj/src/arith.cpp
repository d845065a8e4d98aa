#include "mv/arith.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <regex>
#include <vector>

namespace mv {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    static const std::regex re(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("malformed rational: '" + s + "'");
    Integer num(m[1].str());
    Integer den(m[2].matched ? m[2].str() : std::string("1"));
    return make_rational(num, den);
}

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer double_factorial(long n) {
    if (n < -1) throw std::domain_error("double factorial below -1");
    Integer r = 1;
    for (long i = n; i > 1; i -= 2) r *= i;
    return r;
}

Rational bernoulli(long n) {
    if (n < 0) throw std::domain_error("negative Bernoulli index");
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        Rational s = 0;
        for (long k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * cache[k];
        cache.push_back(-s / Rational(m + 1));
    }
    return cache[n];
}

PiValue::PiValue(Rational coefficient, int pi_power) : coeff_(std::move(coefficient)), power_(pi_power) {
    if (power_ < 0) throw std::domain_error("negative pi power");
    if (coeff_ == 0) power_ = 0;
}

PiValue PiValue::operator+(const PiValue& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (power_ != o.power_)
        throw std::logic_error("mixed pi grades: pi^" + std::to_string(power_) + " + pi^" +
                               std::to_string(o.power_));
    return PiValue(coeff_ + o.coeff_, power_);
}

PiValue PiValue::operator-() const { return PiValue(-coeff_, power_); }
PiValue PiValue::operator-(const PiValue& o) const { return *this + (-o); }

PiValue PiValue::operator*(const PiValue& o) const {
    if (is_zero() || o.is_zero()) return PiValue();
    return PiValue(coeff_ * o.coeff_, power_ + o.power_);
}

PiValue PiValue::operator*(const Rational& q) const { return PiValue(coeff_ * q, power_); }

PiValue PiValue::operator/(const Rational& q) const {
    if (q == 0) throw std::domain_error("division by zero");
    return PiValue(coeff_ / q, power_);
}

std::string PiValue::to_string() const {
    const Rational& c = coeff_;
    return c.get_num().get_str() + "/" + c.get_den().get_str() + " * pi^" + std::to_string(power_);
}

PiValue PiValue::parse(const std::string& s) {
    static const std::regex re(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*\*\s*pi\^(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("malformed pi value: '" + s + "'");
    return PiValue(make_rational(Integer(m[1].str()), Integer(m[2].str())), std::stoi(m[3].str()));
}

double PiValue::approx() const { return coeff_.get_d() * std::pow(std::numbers::pi, power_); }

PiValue zeta_even(long arg) {
    if (arg < 2 || arg % 2 != 0) throw std::domain_error("odd zeta value requested");
    long k = arg / 2;
    Rational b = bernoulli(arg);
    Rational c = b * Rational(Integer(1) << static_cast<mp_bitcnt_t>(arg)) / Rational(2 * factorial(arg));
    if ((k + 1) % 2 != 0) c = -c;
    return PiValue(c, static_cast<int>(arg));
}

}  // namespace mv
