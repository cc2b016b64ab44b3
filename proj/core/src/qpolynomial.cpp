#include "fanomirror/qpolynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fanomirror/errors.hpp"

namespace fano {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s) || s.size() > 9) {
    throw ParseError("bad integer exponent in '" + std::string(context) + "'");
  }
  int v = std::stoi(std::string(s));
  return negative ? -v : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den))) {
    throw ParseError("not an exact rational: '" + std::string(text) + "'");
  }
  std::string canonical(s.front() == '+' ? s.substr(1) : s);
  Rational value;
  if (slash != std::string_view::npos) {
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  value.set_str(canonical, 10);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }
std::string to_string(const Integer& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

QPolynomial::QPolynomial(Rational constant) {
  constant.canonicalize();
  if (constant != 0) coeffs_.emplace(0, std::move(constant));
}

QPolynomial QPolynomial::monomial(Rational coeff, int q_power) {
  if (q_power < 0) throw InvalidArgumentError("Novikov exponent must be non-negative");
  QPolynomial p;
  coeff.canonicalize();
  if (coeff != 0) p.coeffs_.emplace(q_power, std::move(coeff));
  return p;
}

Rational QPolynomial::coefficient(int q_power) const {
  auto it = coeffs_.find(q_power);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int QPolynomial::lowest_power() const {
  if (coeffs_.empty()) throw InvalidArgumentError("lowest_power of zero q-polynomial");
  return coeffs_.begin()->first;
}

int QPolynomial::highest_power() const {
  if (coeffs_.empty()) throw InvalidArgumentError("highest_power of zero q-polynomial");
  return coeffs_.rbegin()->first;
}

Rational QPolynomial::at_one() const {
  Rational sum = 0;
  for (const auto& [_, c] : coeffs_) sum += c;
  return sum;
}

bool QPolynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return is_integer(kv.second); });
}

bool QPolynomial::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

void QPolynomial::add_term(int q_power, Rational coeff) {
  coeff.canonicalize();
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(q_power, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  for (const auto& [k, c] : other.coeffs_) add_term(k, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  for (const auto& [k, c] : other.coeffs_) add_term(k, -c);
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  Rational tmp;
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) {
      tmp = ca * cb;
      out.add_term(ka + kb, tmp);
    }
  }
  return out;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) { return *this = *this * other; }

QPolynomial& QPolynomial::operator*=(const Rational& raw) {
  Rational scalar = raw;
  scalar.canonicalize();
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [_, c] : coeffs_) c *= scalar;
  return *this;
}

QPolynomial& QPolynomial::operator/=(const Rational& raw) {
  Rational scalar = raw;
  scalar.canonicalize();
  if (scalar == 0) throw InvalidArgumentError("division of q-polynomial by zero");
  for (auto& [_, c] : coeffs_) c /= scalar;
  return *this;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial out = *this;
  for (auto& [_, c] : out.coeffs_) c = -c;
  return out;
}

std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [power, c] : p.coefficients()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (power == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 'q';
    if (power != 1) os << '^' << power;
  }
  return os.str();
}

QPolynomial parse_qpolynomial(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParseError("empty q-polynomial");

  QPolynomial out;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError("malformed q-polynomial '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    // A term runs until the next sign that is not an exponent sign.
    while (end < compact.size() &&
           !((compact[end] == '+' || compact[end] == '-') && compact[end - 1] != '^')) {
      ++end;
    }
    std::string_view term(compact.data() + pos, end - pos);
    if (term.empty()) throw ParseError("malformed q-polynomial '" + std::string(text) + "'");

    Rational coeff = 1;
    int power = 0;
    auto qpos = term.find('q');
    if (qpos == std::string_view::npos) {
      coeff = parse_rational(term);
    } else {
      std::string_view head = term.substr(0, qpos);
      if (!head.empty() && head.back() == '*') head.remove_suffix(1);
      if (!head.empty()) coeff = parse_rational(head);
      std::string_view tail = term.substr(qpos + 1);
      if (tail.empty()) {
        power = 1;
      } else if (tail.front() == '^') {
        power = parse_int(tail.substr(1), text);
      } else {
        throw ParseError("malformed q-polynomial term '" + std::string(term) + "'");
      }
      if (power < 0) throw ParseError("negative Novikov exponent in '" + std::string(text) + "'");
    }
    out.add_term(power, negative ? Rational(-coeff) : coeff);
    pos = end;
  }
  return out;
}

}  // namespace fano
