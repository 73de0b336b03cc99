#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "qjet/errors.hpp"

namespace qjet {

using Rational = mpq_class;

// Element of the cyclotomic field Q(zeta_N), stored as a rational
// coefficient vector of 1, zeta, ..., zeta^{phi(N)-1} reduced mod the
// N-th cyclotomic polynomial. Values that turn out rational are demoted
// to N = 1 so representation is canonical across computation paths.
class Cyclotomic {
  public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& r) : order_(1), coeffs_(1, r) {}
    Cyclotomic(long num, long den);
    explicit Cyclotomic(long n) : Cyclotomic(Rational(n)) {}

    // zeta_N
    static Cyclotomic zeta(unsigned order);
    static Cyclotomic imaginary_unit() { return zeta(4); }

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const { return order_ == 1; }
    // Valid only when is_rational().
    const Rational& rational() const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic inverse() const;

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    // Total order usable as map key (not a numeric order).
    bool operator<(const Cyclotomic& o) const;

    std::string str() const;
    std::complex<double> to_complex() const;

    // Coefficients of Phi_N, degree phi(N), monic; cached per order.
    static const std::vector<Rational>& cyclotomic_polynomial(unsigned order);

  private:
    Cyclotomic(unsigned order, std::vector<Rational> coeffs);
    void reduce_();
    static Cyclotomic promoted_(const Cyclotomic& x, unsigned order);

    unsigned order_;
    std::vector<Rational> coeffs_;  // size phi(order_)
};

unsigned euler_phi(unsigned n);

}  // namespace qjet
