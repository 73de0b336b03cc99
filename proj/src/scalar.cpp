#include "qjet/scalar.hpp"

#include <sstream>

namespace qjet {

Scalar::Scalar(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
    normalize_();
}

Scalar Scalar::parameter(const std::string& name) {
    return Scalar(Poly::variable(ParamTable::instance().intern(name)));
}

void Scalar::normalize_() {
    if (num_.is_zero()) {
        den_ = Poly(Cyclotomic(1));
        return;
    }
    if (!den_.is_constant() || !num_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
    }
    // scale so the denominator has leading coefficient 1
    Cyclotomic lead = den_.leading_coeff();
    if (!(lead == Cyclotomic(1))) {
        Cyclotomic inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool Scalar::is_one() const {
    return num_.is_constant() && den_.is_constant() && num_.constant() == Cyclotomic(1) &&
           den_.constant() == Cyclotomic(1);
}

Cyclotomic Scalar::constant() const {
    if (!is_constant()) throw Error("scalar is not constant: " + str());
    return num_.constant() / den_.constant();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("scalar inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    return *this * o.inverse();
}

Scalar Scalar::pow(long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -e : e;
    Scalar r = Scalar::one();
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    // cross multiplication; canonical forms make this cheap in common cases
    if (num_ == o.num_ && den_ == o.den_) return true;
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

bool Scalar::operator<(const Scalar& o) const {
    if (num_ == o.num_) return den_ < o.den_;
    return num_ < o.num_;
}

Scalar Scalar::eval(const std::map<std::string, Cyclotomic>& bindings) const {
    std::map<unsigned, Cyclotomic> by_index;
    auto& table = ParamTable::instance();
    for (auto& [name, value] : bindings) by_index.emplace(table.intern(name), value);
    Poly n = num_.eval(by_index);
    Poly d = den_.eval(by_index);
    if (d.is_zero()) throw PoleAtBinding(str());
    return Scalar(n, d);
}

Scalar Scalar::subst(const std::string& name, const Scalar& value) const {
    unsigned var = ParamTable::instance().intern(name);
    // substitute into numerator and denominator as fractions
    Poly vn = value.num(), vd = value.den();
    auto subst_poly = [&](const Poly& p) {
        // p(x -> vn/vd) = sum c_m vn^e vd^(deg-e) ... / vd^deg
        unsigned deg = p.degree_in(var);
        Poly out;
        for (auto& [m, c] : p.terms()) {
            unsigned e = m.degree_in(var);
            Monomial rest;
            for (auto& [v, d] : m.exps)
                if (v != var) rest.exps.emplace_back(v, d);
            Poly t = Poly::term(rest, c);
            for (unsigned i = 0; i < e; ++i) t = t * vn;
            for (unsigned i = e; i < deg; ++i) t = t * vd;
            out += t;
        }
        return std::make_pair(out, deg);
    };
    auto [n, dn] = subst_poly(num_);
    auto [d, dd] = subst_poly(den_);
    // rebalance the cleared denominators vd^dn vs vd^dd
    for (unsigned i = dn; i < dd; ++i) n = n * vd;
    for (unsigned i = dd; i < dn; ++i) d = d * vd;
    if (d.is_zero()) throw PoleAtBinding(str());
    return Scalar(n, d);
}

std::string Scalar::str() const {
    if (den_.is_constant() && den_.constant() == Cyclotomic(1)) return num_.str();
    std::ostringstream out;
    bool np = num_.term_count() > 1;
    bool dp = den_.term_count() > 1;
    if (np) out << "(" << num_.str() << ")";
    else out << num_.str();
    out << "/";
    if (dp) out << "(" << den_.str() << ")";
    else out << den_.str();
    return out.str();
}

}  // namespace qjet
