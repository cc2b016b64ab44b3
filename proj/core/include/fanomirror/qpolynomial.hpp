#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace fano {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "7", "-3", "3/2" or "-10/4" (normalized to "-5/2").
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

/// Polynomial in the Novikov parameter q with exact rational coefficients.
///
/// Stored sparsely as power -> coefficient; zero coefficients are never
/// stored, so the zero polynomial has an empty map and equality is structural.
class QPolynomial {
 public:
  using Map = std::map<int, Rational>;

  QPolynomial() = default;
  QPolynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  QPolynomial(long constant) : QPolynomial(Rational(constant)) {}  // NOLINT
  QPolynomial(int constant) : QPolynomial(Rational(constant)) {}   // NOLINT

  static QPolynomial monomial(Rational coeff, int q_power);

  const Map& coefficients() const { return coeffs_; }
  Rational coefficient(int q_power) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// Single stored power (or zero).
  bool is_monomial() const { return coeffs_.size() <= 1; }
  int lowest_power() const;   // undefined on zero; throws
  int highest_power() const;  // undefined on zero; throws

  /// Value at q = 1.
  Rational at_one() const;
  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);
  QPolynomial& operator*=(const Rational& scalar);
  QPolynomial& operator/=(const Rational& scalar);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(QPolynomial a, const Rational& s) { return a *= s; }
  friend QPolynomial operator*(const Rational& s, QPolynomial a) { return a *= s; }
  friend QPolynomial operator/(QPolynomial a, const Rational& s) { return a /= s; }
  QPolynomial operator-() const;

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Adds coeff * q^power in place.
  void add_term(int q_power, Rational coeff);

 private:
  Map coeffs_;
};

/// Canonical text form, increasing q power: "0", "6", "3q", "90q^2",
/// "1/8q^2", "2 + q", "-1/2 - q^3".
std::string to_string(const QPolynomial& p);
/// Inverse of to_string. Also accepts "3*q", "q^0" and surrounding spaces.
QPolynomial parse_qpolynomial(std::string_view text);

}  // namespace fano
