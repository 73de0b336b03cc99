#include "qjet/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <numbers>
#include <sstream>

namespace qjet {

namespace {

using PolyQ = std::vector<Rational>;  // dense, coeffs[i] on x^i

void trim(PolyQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

PolyQ mul(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Quotient of exact division a / b (b monic or not; remainder must vanish).
PolyQ divide_exact(PolyQ a, const PolyQ& b) {
    trim(a);
    PolyQ q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    if (!a.empty()) throw Error("inexact polynomial division");
    return q;
}

// p mod m, m monic.
PolyQ mod(PolyQ p, const PolyQ& m) {
    trim(p);
    while (p.size() >= m.size()) {
        Rational c = p.back();
        size_t shift = p.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) p[shift + i] -= c * m[i];
        trim(p);
    }
    return p;
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Rational>& Cyclotomic::cyclotomic_polynomial(unsigned order) {
    static std::map<unsigned, PolyQ> cache;
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
    PolyQ num(order + 1, Rational(0));
    num[0] = -1;
    num[order] = 1;
    for (unsigned d = 1; d < order; ++d) {
        if (order % d == 0) num = divide_exact(num, cyclotomic_polynomial(d));
    }
    return cache.emplace(order, std::move(num)).first->second;
}

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    coeffs_.resize(euler_phi(order_), Rational(0));
    reduce_();
}

Cyclotomic::Cyclotomic(long num, long den) : order_(1) {
    if (den == 0) throw DivisionByZero("rational literal");
    Rational r(num, den);
    r.canonicalize();
    coeffs_ = {r};
}

Cyclotomic Cyclotomic::zeta(unsigned order) {
    if (order == 0) throw IndexOutOfRange("zeta order must be positive");
    if (order == 1) return Cyclotomic(Rational(1));
    if (order == 2) return Cyclotomic(Rational(-1));
    std::vector<Rational> c(euler_phi(order), Rational(0));
    c[1] = 1;
    return Cyclotomic(order, std::move(c));
}

void Cyclotomic::reduce_() {
    // demote to Q when all zeta coefficients vanish
    if (order_ > 1) {
        bool rational = true;
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) { rational = false; break; }
        if (rational) {
            coeffs_.resize(1);
            order_ = 1;
        }
    }
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

const Rational& Cyclotomic::rational() const {
    if (order_ != 1) throw Error("not a rational cyclotomic value");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted_(const Cyclotomic& x, unsigned order) {
    if (x.order_ == order) return x;
    if (order % x.order_ != 0) throw Error("bad cyclotomic promotion");
    unsigned step = order / x.order_;
    const PolyQ& phi = cyclotomic_polynomial(order);
    PolyQ dense(euler_phi(x.order_) * step + 1, Rational(0));
    for (size_t i = 0; i < x.coeffs_.size(); ++i) dense[i * step] = x.coeffs_[i];
    dense = mod(std::move(dense), phi);
    dense.resize(euler_phi(order), Rational(0));
    // keep the requested order; callers add coefficient vectors directly
    Cyclotomic r;
    r.order_ = order;
    r.coeffs_ = std::move(dense);
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    unsigned n = std::lcm(order_, o.order_);
    Cyclotomic a = promoted_(*this, n), b = promoted_(o, n);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    a.reduce_();
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    unsigned n = std::lcm(order_, o.order_);
    Cyclotomic a = promoted_(*this, n), b = promoted_(o, n);
    PolyQ prod = mul(a.coeffs_, b.coeffs_);
    prod = mod(std::move(prod), cyclotomic_polynomial(n));
    prod.resize(euler_phi(n), Rational(0));
    return Cyclotomic(n, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("cyclotomic inverse of zero");
    if (order_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
    // extended Euclid in Q[x] for gcd(this, Phi_N) = 1
    PolyQ r0 = cyclotomic_polynomial(order_);
    PolyQ r1 = coeffs_;
    trim(r1);
    PolyQ s0 = {}, s1 = {Rational(1)};  // coefficients of `this`
    while (!r1.empty()) {
        // quotient of r0 by r1
        PolyQ q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
        PolyQ rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            trim(rem);
        }
        PolyQ qs = mul(q, s1);
        PolyQ s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant), s0 * this == r0 (mod Phi)
    if (r0.size() != 1) throw Error("cyclotomic inverse: non-unit gcd");
    Rational lead = r0[0];
    for (auto& c : s0) c /= lead;
    s0 = mod(std::move(s0), cyclotomic_polynomial(order_));
    s0.resize(euler_phi(order_), Rational(0));
    return Cyclotomic(order_, std::move(s0));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    unsigned n = std::lcm(order_, o.order_);
    return promoted_(*this, n).coeffs_ == promoted_(o, n).coeffs_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
    if (order_ != o.order_) return order_ < o.order_;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int c = cmp(coeffs_[i], o.coeffs_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool unit_coeff = (c == 1) && i > 0;
        if (!unit_coeff) out << c.get_str();
        if (i > 0) {
            if (!unit_coeff) out << "*";
            out << "zeta" << order_;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    std::complex<double> zeta =
        std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(order_));
    std::complex<double> pw(1.0, 0.0);
    for (const auto& c : coeffs_) {
        z += c.get_d() * pw;
        pw *= zeta;
    }
    return z;
}

}  // namespace qjet
