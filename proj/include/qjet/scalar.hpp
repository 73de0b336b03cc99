#pragma once

#include "qjet/poly.hpp"

namespace qjet {

// Element of Q(zeta_N)(p1,...,pm): a reduced fraction of multivariate
// polynomials over the cyclotomic field. All arithmetic is exact; a value
// is identically zero iff its normalized numerator is the zero polynomial.
class Scalar {
  public:
    Scalar() : num_(), den_(Cyclotomic(1)) {}
    Scalar(const Poly& num, const Poly& den);
    explicit Scalar(const Poly& p) : num_(p), den_(Cyclotomic(1)) {}
    explicit Scalar(const Cyclotomic& c) : num_(Poly(c)), den_(Cyclotomic(1)) {}
    explicit Scalar(long n) : Scalar(Cyclotomic(n)) {}
    Scalar(long num, long den) : Scalar(Cyclotomic(num, den)) {}

    static Scalar parameter(const std::string& name);
    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Cyclotomic constant() const;  // valid when is_constant()

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(long e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // deterministic order for use as map key / sorted output
    bool operator<(const Scalar& o) const;

    // Substitute parameters (by name) with cyclotomic values; unbound
    // parameters stay symbolic. Throws PoleAtBinding if the denominator
    // vanishes after substitution.
    Scalar eval(const std::map<std::string, Cyclotomic>& bindings) const;
    // Substitute a parameter by another scalar (e.g. a family constraint).
    Scalar subst(const std::string& name, const Scalar& value) const;

    std::string str() const;

  private:
    void normalize_();
    Poly num_, den_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

}  // namespace qjet
