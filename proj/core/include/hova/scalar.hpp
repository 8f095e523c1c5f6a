/* Exact arithmetic in the cyclotomic-rational fields Q(zeta_m).
 *
 * A Scalar is a residue modulo the m-th cyclotomic polynomial: a conductor m
 * together with a rational coefficient vector of length phi(m).  Conductor 1
 * degenerates to a plain rational.  All operations are exact; mixed-conductor
 * operands are lifted to the lcm conductor first.
 */

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hova {

using Rational = mpq_class;

/// Thrown on division by zero and on malformed scalar strings.
struct ScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long euler_phi(long m);

/// Monic integer coefficients of the m-th cyclotomic polynomial,
/// constant term first (size phi(m) + 1).  Results are cached.
const std::vector<Rational>& cyclotomic_polynomial(long m);

class Scalar {
  public:
    /// Zero of conductor 1.
    Scalar() : conductor_(1), coeffs_(1, Rational(0)) {}

    Scalar(long value) : Scalar() { coeffs_[0] = Rational(value); }
    Scalar(const Rational& value) : conductor_(1), coeffs_(1, value) {}

    /// Residue with explicit conductor; the vector is reduced mod Phi_m.
    Scalar(long conductor, std::vector<Rational> coeffs);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar rational(long num, long den);

    /// zeta_m^k.
    static Scalar root_of_unity(long m, long k = 1);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    /// The rational value; requires is_rational().
    Rational rational_value() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;

    /// Re-express in conductor M (m must divide M).
    Scalar lifted(long M) const;

    /// Canonical string: "p/q" for rationals, otherwise
    /// "c0 + c1*z + c2*z^2 + ..." with zero terms omitted.
    std::string str() const;

    /// Parses the canonical string form in the field of the given conductor.
    static Scalar parse(const std::string& text, long conductor);

  private:
    void reduce();

    long conductor_;
    std::vector<Rational> coeffs_;  // length phi(conductor_), low degree first
};

inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace hova
