#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qjet/cyclotomic.hpp"

namespace qjet {

// Process-wide registry of parameter symbols (lambda, nu, q, ...).
// Indices follow first declaration, which fixes the graded-lex order.
class ParamTable {
  public:
    static ParamTable& instance();
    unsigned intern(const std::string& name);
    // Throws if unknown.
    unsigned index_of(const std::string& name) const;
    bool known(const std::string& name) const;
    const std::string& name(unsigned idx) const;
    size_t size() const { return names_.size(); }

  private:
    std::vector<std::string> names_;
    std::map<std::string, unsigned> index_;
};

// Sparse exponent vector, entries (var index, exponent > 0) sorted by var.
struct Monomial {
    std::vector<std::pair<unsigned, unsigned>> exps;

    unsigned total_degree() const;
    unsigned degree_in(unsigned var) const;
    bool is_one() const { return exps.empty(); }
    Monomial operator*(const Monomial& o) const;
    // Exact division; throws if not divisible.
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps == o.exps; }
    // graded lexicographic, higher-index variables later in lex comparison
    bool operator<(const Monomial& o) const;
    std::string str() const;
};

// Multivariate polynomial over the cyclotomic field, sparse and sorted
// (leading monomial last in the map iteration order).
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Cyclotomic& c);
    static Poly variable(unsigned var);
    static Poly term(const Monomial& m, const Cyclotomic& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Cyclotomic& constant() const;  // valid when is_constant()
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }

    unsigned total_degree() const;
    unsigned degree_in(unsigned var) const;
    std::vector<unsigned> variables() const;

    const Monomial& leading_monomial() const;
    const Cyclotomic& leading_coeff() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    Poly mul_term(const Monomial& m, const Cyclotomic& c) const;
    Poly scaled(const Cyclotomic& c) const { return mul_term(Monomial{}, c); }

    // Substitute vars present in `bindings` by field values; others stay.
    Poly eval(const std::map<unsigned, Cyclotomic>& bindings) const;
    // Substitute a variable by a polynomial.
    Poly subst(unsigned var, const Poly& value) const;

    // Exact division; throws Error if remainder nonzero.
    Poly divide_exact(const Poly& d) const;

    std::string str() const;

  private:
    void insert_(const Monomial& m, const Cyclotomic& c);
    std::map<Monomial, Cyclotomic> terms_;
};

// GCD over Q(zeta_N)[params], normalized to leading coefficient 1.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace qjet
