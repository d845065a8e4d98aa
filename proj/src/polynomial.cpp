#include "mv/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mv {

std::vector<std::string> default_variables(int arity, const std::string& prefix) {
    std::vector<std::string> v;
    for (int i = 1; i <= arity; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

EvenPolynomial::EvenPolynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

EvenPolynomial EvenPolynomial::zero(int arity, const std::string& prefix) {
    return EvenPolynomial(default_variables(arity, prefix));
}

EvenPolynomial EvenPolynomial::constant(int arity, const Rational& c, const std::string& prefix) {
    EvenPolynomial p(default_variables(arity, prefix));
    p.add_term(Exponents(arity, 0), c);
    return p;
}

EvenPolynomial EvenPolynomial::variable(int arity, int index, const std::string& prefix) {
    Exponents e(arity, 0);
    e.at(index) = 1;
    return monomial(arity, e, 1, prefix);
}

EvenPolynomial EvenPolynomial::monomial(int arity, const Exponents& e, const Rational& c,
                                        const std::string& prefix) {
    EvenPolynomial p(default_variables(arity, prefix));
    p.add_term(e, c);
    return p;
}

int EvenPolynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool EvenPolynomial::is_homogeneous() const {
    std::set<int> degs;
    for (const auto& [e, c] : terms_) degs.insert(std::accumulate(e.begin(), e.end(), 0));
    return degs.size() <= 1;
}

bool EvenPolynomial::has_only_even_exponents() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x % 2 != 0) return false;
    return true;
}

bool EvenPolynomial::is_symmetric() const {
    for (const auto& [e, c] : terms_) {
        Exponents s = e;
        std::sort(s.begin(), s.end());
        do {
            if (coefficient(s) != c) return false;
        } while (std::next_permutation(s.begin(), s.end()));
    }
    return true;
}

void EvenPolynomial::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != arity()) throw std::invalid_argument("arity mismatch in add_term");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational EvenPolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void EvenPolynomial::check_arity(const EvenPolynomial& o) const {
    if (o.arity() != arity())
        throw std::invalid_argument("arity mismatch: " + std::to_string(arity()) + " vs " +
                                    std::to_string(o.arity()));
}

EvenPolynomial EvenPolynomial::operator+(const EvenPolynomial& o) const {
    EvenPolynomial r = *this;
    r += o;
    return r;
}

EvenPolynomial& EvenPolynomial::operator+=(const EvenPolynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

EvenPolynomial EvenPolynomial::operator-(const EvenPolynomial& o) const { return *this + o * Rational(-1); }

EvenPolynomial EvenPolynomial::operator*(const EvenPolynomial& o) const {
    check_arity(o);
    EvenPolynomial r(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(e1.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

EvenPolynomial EvenPolynomial::operator*(const Rational& q) const {
    EvenPolynomial r(vars_);
    if (q == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * q);
    return r;
}

Rational EvenPolynomial::evaluate(const std::vector<Rational>& values) const {
    if (static_cast<int>(values.size()) != arity()) throw std::invalid_argument("arity mismatch in evaluate");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= values[i];
        s += t;
    }
    return s;
}

Rational EvenPolynomial::evaluate(const std::map<std::string, Rational>& assignment) const {
    std::vector<Rational> v;
    for (const auto& name : vars_) {
        auto it = assignment.find(name);
        if (it == assignment.end()) throw std::invalid_argument("no value for variable " + name);
        v.push_back(it->second);
    }
    return evaluate(v);
}

EvenPolynomial EvenPolynomial::remap(const std::vector<int>& target, const std::vector<std::string>& new_vars) const {
    if (static_cast<int>(target.size()) != arity()) throw std::invalid_argument("arity mismatch in remap");
    EvenPolynomial r(new_vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne.at(target[i]) += e[i];
        r.add_term(ne, c);
    }
    return r;
}

EvenPolynomial EvenPolynomial::substitute(int from, int to) const {
    std::vector<int> target(arity());
    std::iota(target.begin(), target.end(), 0);
    target.at(from) = to;
    return remap(target, vars_);
}

EvenPolynomial EvenPolynomial::substitute(const std::vector<EvenPolynomial>& forms) const {
    if (static_cast<int>(forms.size()) != arity()) throw std::invalid_argument("arity mismatch in substitute");
    if (forms.empty()) return *this;
    const auto& names = forms.front().variables();
    EvenPolynomial r(names);
    // powers[i][k] = forms[i]^k
    std::vector<std::vector<EvenPolynomial>> powers(forms.size());
    for (const auto& [e, c] : terms_) {
        EvenPolynomial t = EvenPolynomial::constant(static_cast<int>(names.size()), c).with_variables(names);
        for (size_t i = 0; i < e.size(); ++i) {
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(EvenPolynomial::constant(static_cast<int>(names.size()), 1).with_variables(names));
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * forms[i]);
            t = t * pw[e[i]];
        }
        r += t;
    }
    return r;
}

EvenPolynomial EvenPolynomial::restrict_top_degree(int d) const {
    EvenPolynomial r(vars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
    return r;
}

EvenPolynomial EvenPolynomial::with_variables(std::vector<std::string> names) const {
    if (static_cast<int>(names.size()) != arity()) throw std::invalid_argument("arity mismatch in with_variables");
    EvenPolynomial r = *this;
    r.vars_ = std::move(names);
    return r;
}

namespace {

std::vector<std::pair<Exponents, Rational>> canonical_terms(const std::map<Exponents, Rational>& terms) {
    std::vector<std::pair<Exponents, Rational>> v(terms.begin(), terms.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    return v;
}

}  // namespace

std::string EvenPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : canonical_terms(terms_)) {
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rational a = abs(c);
        std::string coef = mv::to_string(a);
        std::string body;
        if (mono.empty()) body = coef;
        else if (a == 1) body = mono;
        else body = coef + "*" + mono;
        if (first) s += (c < 0 ? "-" : "") + body;
        else s += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return s;
}

nlohmann::ordered_json EvenPolynomial::to_json() const {
    nlohmann::ordered_json j;
    j["variables"] = vars_;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : canonical_terms(terms_)) {
        nlohmann::ordered_json t;
        t["exponents"] = e;
        t["coefficient"] = mv::to_string(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

EvenPolynomial EvenPolynomial::from_json(const nlohmann::json& j) {
    EvenPolynomial p(j.at("variables").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) p.add_term(t.at("exponents").get<Exponents>(), parse_rational(t.at("coefficient").get<std::string>()));
    return p;
}

EvenPolynomial monomial_symmetric(int arity, const std::vector<int>& lambda, const Rational& c) {
    if (static_cast<int>(lambda.size()) > arity) return EvenPolynomial::zero(arity);
    Exponents e(lambda.begin(), lambda.end());
    e.resize(arity, 0);
    std::sort(e.begin(), e.end());
    EvenPolynomial p = EvenPolynomial::zero(arity);
    do {
        p.add_term(e, c);
    } while (std::next_permutation(e.begin(), e.end()));
    return p;
}

}  // namespace mv
