#include "fanomirror/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fanomirror/errors.hpp"

namespace fano {

LaurentPolynomial::LaurentPolynomial(std::vector<std::string> variables)
    : variables_(std::move(variables)) {
  if (variables_.empty()) throw DimensionError("Laurent polynomial needs at least one variable");
  std::set<std::string> seen(variables_.begin(), variables_.end());
  if (seen.size() != variables_.size()) throw DimensionError("variable names must be distinct");
}

LaurentPolynomial LaurentPolynomial::constant(std::vector<std::string> variables,
                                              const QPolynomial& value) {
  LaurentPolynomial f(std::move(variables));
  f.add_term(ExponentVector(f.rank(), 0), value);
  return f;
}

LaurentPolynomial LaurentPolynomial::monomial(std::vector<std::string> variables,
                                              ExponentVector exponent, const QPolynomial& coeff) {
  LaurentPolynomial f(std::move(variables));
  f.add_term(exponent, coeff);
  return f;
}

QPolynomial LaurentPolynomial::coefficient(const ExponentVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? QPolynomial() : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& exponent, const QPolynomial& coeff) {
  if (exponent.size() != rank()) {
    throw DimensionError("exponent of length " + std::to_string(exponent.size()) +
                         " in rank " + std::to_string(rank()) + " polynomial");
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentPolynomial::require_compatible(const LaurentPolynomial& other) const {
  if (rank() != other.rank()) {
    throw DimensionError("rank mismatch: " + std::to_string(rank()) + " vs " +
                         std::to_string(other.rank()));
  }
  if (variables_ != other.variables_) throw DimensionError("variable names differ");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  require_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  require_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const QPolynomial& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, c] : terms_) c *= scalar;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.require_compatible(b);
  LaurentPolynomial out(a.variables_);
  ExponentVector e(a.rank());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::vector<std::string> default_variables(std::size_t rank) {
  if (rank <= 3) {
    static const char* names[] = {"x", "y", "z"};
    return {names, names + rank};
  }
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= rank; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g) { return f * g; }

LaurentPolynomial power(const LaurentPolynomial& f, unsigned d) {
  LaurentPolynomial result = LaurentPolynomial::constant(f.variables(), 1);
  for (unsigned i = 0; i < d; ++i) result = result * f;
  return result;
}

QPolynomial constant_term(const LaurentPolynomial& f) {
  return f.coefficient(ExponentVector(f.rank(), 0));
}

std::vector<QPolynomial> classical_periods(const LaurentPolynomial& f, unsigned max_degree) {
  std::vector<QPolynomial> out;
  out.reserve(max_degree + 1);
  LaurentPolynomial current = LaurentPolynomial::constant(f.variables(), 1);
  out.push_back(constant_term(current));
  for (unsigned d = 1; d <= max_degree; ++d) {
    current = current * f;
    out.push_back(constant_term(current));
  }
  return out;
}

Rational tropical_value(const LaurentPolynomial& f, std::vector<Rational> v) {
  if (f.is_zero()) throw UndefinedTropicalizationError("tropicalization of the zero polynomial");
  if (v.size() != f.rank()) throw DimensionError("evaluation point has the wrong length");
  for (auto& x : v) x.canonicalize();
  bool first = true;
  Rational best;
  for (const auto& [e, _] : f.terms()) {
    Rational pairing = 0;
    for (std::size_t i = 0; i < e.size(); ++i) pairing += e[i] * v[i];
    if (first || pairing < best) best = pairing;
    first = false;
  }
  return best;
}

std::vector<ExponentVector> support(const LaurentPolynomial& f) {
  std::vector<ExponentVector> out;
  out.reserve(f.size());
  for (const auto& [e, _] : f.terms()) out.push_back(e);
  return out;
}

MinExponent min_exponent_vector(const LaurentPolynomial& f) {
  if (f.is_zero()) throw UndefinedTropicalizationError("minimum exponent of the zero polynomial");
  MinExponent out;
  out.exponent = f.terms().begin()->first;
  for (const auto& [e, _] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) out.exponent[i] = std::min(out.exponent[i], e[i]);
  }
  out.attained = f.terms().count(out.exponent) != 0;
  return out;
}

LaurentPolynomial specialize_q_to_one(const LaurentPolynomial& f) {
  LaurentPolynomial out(f.variables());
  for (const auto& [e, c] : f.terms()) out.add_term(e, c.at_one());
  return out;
}

namespace {

std::string monomial_text(const std::vector<std::string>& vars, const ExponentVector& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  // Highest exponents first reads more naturally: x + y + x^-1*y^-1.
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_text(f.variables(), e);
    std::string coeff = to_string(c);
    bool negative = !c.is_zero() && c.is_monomial() && c.coefficients().begin()->second < 0;
    if (negative) coeff = to_string(-c);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << '-';
    first = false;
    if (mono.empty()) {
      os << coeff;
    } else if (coeff == "1") {
      os << mono;
    } else if (c.is_monomial()) {
      os << coeff << '*' << mono;
    } else {
      os << '(' << coeff << ")*" << mono;
    }
  }
  return os.str();
}

}  // namespace fano
