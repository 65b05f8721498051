#include "bohr/polynomial.hpp"

#include <stdexcept>

namespace bohr {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) {
    normalize();
}

RationalPolynomial RationalPolynomial::from_ints(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.emplace_back(v);
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::monomial(int degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return RationalPolynomial(std::move(v));
}

void RationalPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& RationalPolynomial::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::operator-() const {
    auto c = c_;
    for (auto& v : c) v = -v;
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
    return *this + (-o);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& s) const {
    auto c = c_;
    for (auto& v : c) v *= s;
    return RationalPolynomial(std::move(c));
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& d) const {
    if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo;
    const int dd = d.degree();
    if (degree() >= dd) quo.assign(static_cast<size_t>(degree() - dd) + 1, Rational(0));
    while (static_cast<int>(rem.size()) - 1 >= dd) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        const int rd = static_cast<int>(rem.size()) - 1;
        if (rd < dd) break;
        Rational f = rem.back() / d.leading();
        quo[static_cast<size_t>(rd - dd)] = f;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(rd - dd + i)] -= f * d.coeffs()[static_cast<size_t>(i)];
        rem.pop_back();
    }
    return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial RationalPolynomial::gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() != 1) a = a * (Rational(1) / a.leading());
    return a;
}

RationalPolynomial RationalPolynomial::squarefree_part() const {
    if (is_zero() || degree() == 0) return *this;
    auto g = gcd(*this, derivative());
    if (g.degree() <= 0) return *this;
    return divmod(g).first;
}

RationalPolynomial pow(const RationalPolynomial& p, int e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    RationalPolynomial acc({Rational(1)});
    for (int i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& squarefree) {
    std::vector<RationalPolynomial> chain;
    chain.push_back(squarefree);
    chain.push_back(squarefree.derivative());
    while (!chain.back().is_zero()) {
        auto rem = chain[chain.size() - 2].divmod(chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

}  // namespace bohr
