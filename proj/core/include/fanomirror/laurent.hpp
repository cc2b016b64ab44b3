#pragma once

#include <map>
#include <string>
#include <vector>

#include "fanomirror/qpolynomial.hpp"

namespace fano {

using ExponentVector = std::vector<int>;

/// Sparse Laurent polynomial in named variables with QPolynomial coefficients.
/// Exponent vectors are kept in lexicographic order, which makes every
/// printed or serialized form canonical.
class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, QPolynomial>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::vector<std::string> variables);

  static LaurentPolynomial constant(std::vector<std::string> variables, const QPolynomial& value);
  static LaurentPolynomial monomial(std::vector<std::string> variables, ExponentVector exponent,
                                    const QPolynomial& coeff = QPolynomial(1));

  std::size_t rank() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  QPolynomial coefficient(const ExponentVector& exponent) const;
  void add_term(const ExponentVector& exponent, const QPolynomial& coeff);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const QPolynomial& scalar);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const QPolynomial& s) { return a *= s; }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

  /// Checks shared rank and variable names; throws DimensionError otherwise.
  void require_compatible(const LaurentPolynomial& other) const;

 private:
  std::vector<std::string> variables_;
  TermMap terms_;
};

/// x1, x2, ... for ranks above three, x, y, z otherwise.
std::vector<std::string> default_variables(std::size_t rank);

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial power(const LaurentPolynomial& f, unsigned d);
QPolynomial constant_term(const LaurentPolynomial& f);

/// (c_0, ..., c_D) with c_d the constant term of f^d. One multiplication per degree.
std::vector<QPolynomial> classical_periods(const LaurentPolynomial& f, unsigned max_degree);

/// min over the support of <e, v>. Throws UndefinedTropicalizationError on zero.
Rational tropical_value(const LaurentPolynomial& f, std::vector<Rational> v);

std::vector<ExponentVector> support(const LaurentPolynomial& f);

struct MinExponent {
  ExponentVector exponent;
  bool attained = false;
};
/// Componentwise minimum of the support, and whether it is itself a support point.
MinExponent min_exponent_vector(const LaurentPolynomial& f);

/// Sets q = 1; coefficients become constant q-polynomials.
LaurentPolynomial specialize_q_to_one(const LaurentPolynomial& f);

/// Readable form such as "x + y + q*x^-1*y^-1"; not a serialization format.
std::string to_string(const LaurentPolynomial& f);

}  // namespace fano
