#include "qjet/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qjet {

ParamTable& ParamTable::instance() {
    static ParamTable table;
    return table;
}

unsigned ParamTable::intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    unsigned idx = static_cast<unsigned>(names_.size());
    names_.push_back(name);
    index_.emplace(name, idx);
    return idx;
}

unsigned ParamTable::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown parameter: " + name);
    return it->second;
}

bool ParamTable::known(const std::string& name) const { return index_.count(name) > 0; }

const std::string& ParamTable::name(unsigned idx) const {
    if (idx >= names_.size()) throw IndexOutOfRange("parameter index");
    return names_[idx];
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (auto& [v, e] : exps) d += e;
    return d;
}

unsigned Monomial::degree_in(unsigned var) const {
    for (auto& [v, e] : exps)
        if (v == var) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = exps.begin(), b = o.exps.begin();
    while (a != exps.end() || b != o.exps.end()) {
        if (b == o.exps.end() || (a != exps.end() && a->first < b->first)) {
            r.exps.push_back(*a++);
        } else if (a == exps.end() || b->first < a->first) {
            r.exps.push_back(*b++);
        } else {
            r.exps.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (auto& [v, e] : exps)
        if (o.degree_in(v) < e) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (auto& [v, e] : exps) {
        unsigned oe = o.degree_in(v);
        if (oe > e) throw Error("monomial division");
        if (e - oe > 0) r.exps.emplace_back(v, e - oe);
    }
    for (auto& [v, e] : o.exps)
        if (degree_in(v) < e) throw Error("monomial division");
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    unsigned da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    // lex with lower-index variables more significant; higher power first
    auto a = exps.begin(), b = o.exps.begin();
    while (a != exps.end() && b != o.exps.end()) {
        if (a->first != b->first) return a->first > b->first;
        if (a->second != b->second) return a->second < b->second;
        ++a, ++b;
    }
    return false;
}

std::string Monomial::str() const {
    if (exps.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (auto& [v, e] : exps) {
        if (!first) out << "*";
        first = false;
        out << ParamTable::instance().name(v);
        if (e > 1) out << "^" << e;
    }
    return out.str();
}

Poly::Poly(const Cyclotomic& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Poly Poly::variable(unsigned var) {
    Poly p;
    Monomial m;
    m.exps.emplace_back(var, 1);
    p.terms_.emplace(std::move(m), Cyclotomic(1));
    return p;
}

Poly Poly::term(const Monomial& m, const Cyclotomic& c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

const Cyclotomic& Poly::constant() const {
    static const Cyclotomic zero;
    if (terms_.empty()) return zero;
    if (!is_constant()) throw Error("poly is not constant");
    return terms_.begin()->second;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

unsigned Poly::degree_in(unsigned var) const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(var));
    return d;
}

std::vector<unsigned> Poly::variables() const {
    std::vector<unsigned> vars;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.exps)
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    return vars;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw Error("leading monomial of zero");
    return terms_.rbegin()->first;
}

const Cyclotomic& Poly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading coeff of zero");
    return terms_.rbegin()->second;
}

void Poly::insert_(const Monomial& m, const Cyclotomic& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.insert_(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.insert_(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.insert_(m1 * m2, c1 * c2);
    return r;
}

Poly Poly::mul_term(const Monomial& m, const Cyclotomic& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (auto& [m1, c1] : terms_) r.terms_.emplace(m1 * m, c1 * c);
    return r;
}

Poly Poly::eval(const std::map<unsigned, Cyclotomic>& bindings) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        Cyclotomic coeff = c;
        Monomial rest;
        for (auto& [v, e] : m.exps) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                rest.exps.emplace_back(v, e);
            } else {
                for (unsigned i = 0; i < e; ++i) coeff *= it->second;
            }
        }
        r.insert_(rest, coeff);
    }
    return r;
}

Poly Poly::subst(unsigned var, const Poly& value) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        Monomial rest;
        unsigned e = 0;
        for (auto& [v, d] : m.exps) {
            if (v == var) e = d;
            else rest.exps.emplace_back(v, d);
        }
        Poly t = Poly::term(rest, c);
        for (unsigned i = 0; i < e; ++i) t = t * value;
        r += t;
    }
    return r;
}

Poly Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division");
    Poly rem = *this, q;
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        if (!d.leading_monomial().divides(lm)) throw Error("inexact poly division");
        Monomial qm = lm / d.leading_monomial();
        Cyclotomic qc = rem.leading_coeff() / d.leading_coeff();
        q.insert_(qm, qc);
        rem = rem - d.mul_term(qm, qc);
    }
    return q;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // print leading terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string cs = it->second.str();
        bool negated = false;
        if (!first && cs.size() && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
            cs.find(" - ") == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (!first) out << (negated ? " - " : " + ");
        first = false;
        bool needs_parens = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        if (it->first.is_one()) {
            if (needs_parens) out << "(" << cs << ")";
            else out << cs;
        } else {
            if (cs == "1") {
                out << it->first.str();
            } else if (needs_parens) {
                out << "(" << cs << ")*" << it->first.str();
            } else {
                out << cs << "*" << it->first.str();
            }
        }
    }
    return out.str();
}

namespace {

// View of p as univariate in `var` with Poly coefficients.
std::map<unsigned, Poly> as_univariate(const Poly& p, unsigned var) {
    std::map<unsigned, Poly> coeffs;
    for (auto& [m, c] : p.terms()) {
        unsigned e = m.degree_in(var);
        Monomial rest;
        for (auto& [v, d] : m.exps)
            if (v != var) rest.exps.emplace_back(v, d);
        coeffs[e] += Poly::term(rest, c);
    }
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        if (it->second.is_zero()) it = coeffs.erase(it);
        else ++it;
    }
    return coeffs;
}

Poly from_univariate(const std::map<unsigned, Poly>& coeffs, unsigned var) {
    Poly r;
    for (auto& [e, c] : coeffs) {
        Monomial m;
        if (e > 0) m.exps.emplace_back(var, e);
        r += c.mul_term(m, Cyclotomic(1));
    }
    return r;
}

Poly content_wrt(const Poly& p, unsigned var) {
    Poly g;
    for (auto& [e, c] : as_univariate(p, var)) g = poly_gcd(g, c);
    return g;
}

// Pseudo-remainder of a by b in variable var.
Poly pseudo_rem(Poly a, const Poly& b, unsigned var) {
    unsigned db = b.degree_in(var);
    auto bu = as_univariate(b, var);
    const Poly& blead = bu.rbegin()->second;
    while (!a.is_zero() && a.degree_in(var) >= db) {
        auto au = as_univariate(a, var);
        unsigned da = au.rbegin()->first;
        const Poly alead = au.rbegin()->second;
        // a := blead * a - alead * x^(da-db) * b
        Monomial shift;
        if (da - db > 0) shift.exps.emplace_back(var, da - db);
        a = blead * a - alead * b.mul_term(shift, Cyclotomic(1));
        if (!a.is_zero() && a.degree_in(var) >= da && da >= db) {
            // degree must strictly drop; guards against stalls
            auto check = as_univariate(a, var);
            if (check.rbegin()->first >= da) throw Error("pseudo division stalled");
        }
    }
    return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero() || b.is_zero()) {
        const Poly& nz = a.is_zero() ? b : a;
        return nz.scaled(nz.leading_coeff().inverse());
    }
    if (a.is_constant() || b.is_constant()) return Poly(Cyclotomic(1));

    // main variable: highest index occurring in either
    unsigned var = std::max(a.variables().back(), b.variables().back());
    if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
        // one of them does not involve the main variable: gcd divides its content
        const Poly& flat = a.degree_in(var) == 0 ? a : b;
        const Poly& other = a.degree_in(var) == 0 ? b : a;
        return poly_gcd(flat, content_wrt(other, var));
    }

    Poly ca = content_wrt(a, var), cb = content_wrt(b, var);
    Poly cg = poly_gcd(ca, cb);
    Poly pa = a.divide_exact(ca), pb = b.divide_exact(cb);

    // primitive PRS
    Poly f = pa, g = pb;
    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
    while (!g.is_zero()) {
        Poly r = pseudo_rem(f, g, var);
        f = std::move(g);
        if (r.is_zero()) { g = Poly(); break; }
        Poly cr = content_wrt(r, var);
        g = r.divide_exact(cr);
    }
    if (f.degree_in(var) == 0) return cg;  // coprime in main var
    Poly result = cg * f.divide_exact(content_wrt(f, var));
    return result.scaled(result.leading_coeff().inverse());
}

}  // namespace qjet
