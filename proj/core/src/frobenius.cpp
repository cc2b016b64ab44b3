#include "fanomirror/frobenius.hpp"

#include <algorithm>
#include <sstream>

#include "fanomirror/errors.hpp"

namespace fano {

TruncatedSeries::TruncatedSeries(std::map<int, QPolynomial> coeffs, std::optional<int> floor)
    : floor_(floor) {
  for (auto& [e, c] : coeffs) {
    if (trusted(e)) add_term(e, c);
  }
}

TruncatedSeries TruncatedSeries::monomial(int exponent, const QPolynomial& coeff) {
  return TruncatedSeries({{exponent, coeff}}, std::nullopt);
}

QPolynomial TruncatedSeries::coefficient(int exponent) const {
  if (!trusted(exponent)) {
    throw UntrustedCoefficientError("coefficient of t^" + std::to_string(exponent) +
                                    " lies below the trusted floor t^" + std::to_string(*floor_));
  }
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? QPolynomial() : it->second;
}

int TruncatedSeries::top() const {
  if (coeffs_.empty()) throw InvalidArgumentError("top exponent of the zero series");
  return coeffs_.rbegin()->first;
}

void TruncatedSeries::truncate(int new_floor) {
  if (floor_ && *floor_ >= new_floor) return;
  floor_ = new_floor;
  coeffs_.erase(coeffs_.begin(), coeffs_.lower_bound(new_floor));
}

void TruncatedSeries::add_term(int exponent, const QPolynomial& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  for (const auto& [e, c] : other.coeffs_) {
    if (trusted(e)) add_term(e, c);
  }
  if (other.floor_) truncate(*other.floor_);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  for (const auto& [e, c] : other.coeffs_) {
    if (trusted(e)) add_term(e, -c);
  }
  if (other.floor_) truncate(*other.floor_);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const QPolynomial& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [_, c] : coeffs_) c *= scalar;
  return *this;
}

namespace {

// A zero series known only above its floor behaves like O(t^floor).
int effective_top(const TruncatedSeries& s) { return s.is_zero() ? *s.floor() - 1 : s.top(); }

bool exact_zero(const TruncatedSeries& s) { return s.is_zero() && !s.floor(); }

}  // namespace

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b,
                                std::optional<int> requested_floor) {
  if (exact_zero(a) || exact_zero(b)) return TruncatedSeries({}, requested_floor);
  std::optional<int> floor;
  if (a.floor()) floor = *a.floor() + effective_top(b);
  if (b.floor()) floor = std::max(floor.value_or(*b.floor() + effective_top(a)), *b.floor() + effective_top(a));
  if (requested_floor) {
    if (floor && *requested_floor < *floor) {
      throw UntrustedCoefficientError("requested t^" + std::to_string(*requested_floor) +
                                      " but the product is only trusted down to t^" + std::to_string(*floor));
    }
    floor = requested_floor;
  }
  std::map<int, QPolynomial> out;
  for (const auto& [ea, ca] : a.coefficients()) {
    for (auto it = b.coefficients().rbegin(); it != b.coefficients().rend(); ++it) {
      int e = ea + it->first;
      if (floor && e < *floor) break;
      out[e] += ca * it->second;
    }
  }
  return TruncatedSeries(std::move(out), floor);
}

ThetaSeries::ThetaSeries(int p, TruncatedSeries series) : p_(p), series_(std::move(series)) {
  if (p_ < 0) throw InvalidArgumentError("theta series index must be non-negative");
  if (!series_.trusted(p_) || series_.coefficient(p_) != QPolynomial(1)) {
    throw ReconstructionError("theta series N_" + std::to_string(p_) + " does not lead with t^" +
                              std::to_string(p_));
  }
  for (const auto& [e, c] : series_.coefficients()) {
    if (e >= 0 && e != p_) {
      throw ReconstructionError("theta series N_" + std::to_string(p_) + " has a stray term at t^" +
                                std::to_string(e));
    }
  }
}

ThetaSeries ThetaSeries::trivial(int p) { return ThetaSeries(p, TruncatedSeries::monomial(p)); }

std::optional<int> ThetaSeries::valid_to() const {
  if (!series_.floor()) return std::nullopt;
  return std::max(0, -*series_.floor());
}

QPolynomial ThetaSeries::tail(int i) const {
  if (i <= 0) throw InvalidArgumentError("tail index must be positive");
  auto limit = valid_to();
  if (limit && i > *limit) {
    throw UntrustedCoefficientError("a_" + std::to_string(i) + " of N_" + std::to_string(p_) +
                                    " is beyond its validity (" + std::to_string(*limit) + ")");
  }
  return series_.coefficient(-i);
}

QPolynomial ThetaSeries::two_point(int i) const { return tail(i) / Rational(i); }

namespace {

// t^0 coefficient of s^power for an exact series with top exponent 1,
// dropping at each step the terms that can no longer reach t^0.
QPolynomial constant_of_power(const TruncatedSeries& s, int power) {
  TruncatedSeries acc = TruncatedSeries::monomial(0);
  for (int m = 1; m <= power; ++m) acc = series_multiply(acc, s, -(power - m));
  return acc.coefficient(0);
}

}  // namespace

ThetaSeries reconstruct_n1(const PeriodSequence& periods) {
  const int order = periods.order();
  if (order < 0) throw InconsistentPeriodsError("empty period sequence");
  if (periods.coeffs[0] != QPolynomial(1)) throw InconsistentPeriodsError("c_0 must be 1");
  if (order >= 1 && !periods.coeffs[1].is_zero()) {
    throw InconsistentPeriodsError("c_1 must vanish: N_1 has no t^0 term");
  }
  std::map<int, QPolynomial> coeffs{{1, QPolynomial(1)}};
  for (int i = 1; i < order; ++i) {
    QPolynomial known = constant_of_power(TruncatedSeries(coeffs, std::nullopt), i + 1);
    QPolynomial a = (periods.coeffs[i + 1] - known) / Rational(i + 1);
    if (!a.is_zero()) coeffs[-i] = a;
  }
  return ThetaSeries(1, TruncatedSeries(std::move(coeffs), 1 - order));
}

QPolynomial one_step_constants(const ThetaSeries& n1, int q_order, int r, const ThetaSeries* nq) {
  if (r < 0 || r > q_order) throw InvalidArgumentError("one-step constant needs 0 <= r <= q");
  QPolynomial value;
  if (q_order - r > 0) value = Rational(q_order - r) * n1.two_point(q_order - r);
  if (r == 0) {
    if (!nq) throw InvalidArgumentError("the r = 0 one-step constant also needs N_q");
    if (q_order > 0) value += nq->two_point(1);
  }
  return value;
}

QPolynomial structure_constant(const std::vector<ThetaSeries>& series, int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw InvalidArgumentError("structure constant indices must be non-negative");
  if (r > p + q) return QPolynomial();
  if (r == p + q) return QPolynomial(1);
  if (static_cast<int>(series.size()) <= std::max(p, q)) {
    throw InvalidArgumentError("structure constant needs N_" + std::to_string(std::max(p, q)));
  }
  QPolynomial value;
  if (p - r > 0) value += Rational(p - r) * series[q].two_point(p - r);
  if (q - r > 0) value += Rational(q - r) * series[p].two_point(q - r);
  return value;
}

ThetaSeries extend_series(const std::vector<ThetaSeries>& series) {
  const int n = static_cast<int>(series.size());
  if (n < 2) throw InvalidArgumentError("extending needs at least N_0 and N_1");
  TruncatedSeries result = series_multiply(series[1].series(), series[n - 1].series());
  std::vector<std::pair<QPolynomial, const TruncatedSeries*>> corrections;
  for (int j = 0; j < n; ++j) {
    QPolynomial c = structure_constant(series, 1, n - 1, j);
    if (c.is_zero()) continue;
    if (const auto& f = series[j].series().floor()) result.truncate(*f);
    corrections.emplace_back(std::move(c), &series[j].series());
  }
  for (const auto& [c, s] : corrections) {
    TruncatedSeries scaled = *s;
    scaled *= c;
    result -= scaled;
  }
  return ThetaSeries(n, std::move(result));
}

std::vector<ThetaSeries> theta_series_from_periods(const PeriodSequence& periods, int max_p) {
  std::vector<ThetaSeries> out{ThetaSeries::trivial(0)};
  if (max_p >= 1) out.push_back(reconstruct_n1(periods));
  for (int n = 2; n <= max_p; ++n) out.push_back(extend_series(out));
  return out;
}

QPolynomial StructureTable::entry(int p, int q, int r) const {
  if (p < 0 || q < 0 || r < 0) throw InvalidArgumentError("structure constant indices must be non-negative");
  if (p + q > max_p_) throw InvalidArgumentError("table does not reach p + q = " + std::to_string(p + q));
  if (r > p + q) return QPolynomial();
  auto it = entries_.find({p, q, r});
  return it == entries_.end() ? QPolynomial() : it->second;
}

void StructureTable::set(int p, int q, int r, const QPolynomial& value) {
  if (p + q > max_p_ || r > p + q) throw InvalidArgumentError("entry outside the table range");
  if (value.is_zero()) {
    entries_.erase({p, q, r});
  } else {
    entries_[{p, q, r}] = value;
  }
}

StructureTable StructureTable::trivial(int max_p) {
  StructureTable t(max_p);
  for (int p = 0; p <= max_p; ++p) {
    for (int q = 0; p + q <= max_p; ++q) t.entries_[{p, q, p + q}] = QPolynomial(1);
  }
  return t;
}

StructureTable structure_table(const std::vector<ThetaSeries>& series, int max_p) {
  StructureTable t(max_p);
  for (int p = 0; p <= max_p; ++p) {
    for (int q = 0; p + q <= max_p; ++q) {
      for (int r = 0; r <= p + q; ++r) {
        QPolynomial v = structure_constant(series, p, q, r);
        if (!v.is_zero()) t.entries_[{p, q, r}] = std::move(v);
      }
    }
  }
  return t;
}

QPolynomial residue_product(const std::vector<ThetaSeries>& factors) {
  TruncatedSeries acc = TruncatedSeries::monomial(0);
  for (const auto& f : factors) acc = series_multiply(acc, f.series());
  return acc.coefficient(0);
}

namespace {

QPolynomial clip(const QPolynomial& x, std::optional<int> window) {
  if (!window) return x;
  QPolynomial out;
  for (const auto& [p, c] : x.coefficients()) {
    if (p <= *window) out.add_term(p, c);
  }
  return out;
}

}  // namespace

std::vector<AssociativityViolation> associativity_check(const StructureTable& table, int max_p,
                                                        std::optional<int> q_window) {
  std::vector<AssociativityViolation> out;
  max_p = std::min(max_p, table.max_p());
  for (int p = 0; p <= max_p; ++p) {
    for (int q = 0; p + q <= max_p; ++q) {
      for (int r = 0; p + q + r <= max_p; ++r) {
        for (int u = 0; u <= p + q + r; ++u) {
          QPolynomial left, right;
          for (int s = 0; s <= p + q; ++s) {
            QPolynomial a = table.entry(p, q, s);
            if (!a.is_zero()) left += a * table.entry(s, r, u);
          }
          for (int s = 0; s <= q + r; ++s) {
            QPolynomial a = table.entry(q, r, s);
            if (!a.is_zero()) right += a * table.entry(p, s, u);
          }
          left = clip(left, q_window);
          right = clip(right, q_window);
          if (!(left == right)) out.push_back({p, q, r, u, std::move(left), std::move(right)});
        }
      }
    }
  }
  return out;
}

std::vector<QPolynomial> unregularize(const PeriodSequence& periods) {
  std::vector<QPolynomial> out;
  Integer factorial = 1;
  for (std::size_t d = 0; d < periods.coeffs.size(); ++d) {
    if (d > 0) factorial *= static_cast<unsigned long>(d);
    out.push_back(periods.coeffs[d] / Rational(factorial));
  }
  return out;
}

std::vector<int> grading_violations(const PeriodSequence& periods, int index) {
  if (index <= 0) throw InvalidArgumentError("Fano index must be positive");
  std::vector<int> out;
  for (std::size_t d = 0; d < periods.coeffs.size(); ++d) {
    const QPolynomial& c = periods.coeffs[d];
    if (c.is_zero()) continue;
    int di = static_cast<int>(d);
    bool fine = di % index == 0 && c.is_monomial() && c.lowest_power() == di / index;
    if (!fine) out.push_back(di);
  }
  return out;
}

std::string to_string(const TruncatedSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (auto it = s.coefficients().rbegin(); it != s.coefficients().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    std::string coeff = to_string(c);
    bool bare = coeff == "1";
    if (e == 0) {
      os << coeff;
      continue;
    }
    if (!bare) os << (c.is_monomial() ? coeff : "(" + coeff + ")") << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  if (s.floor()) {
    if (!first) os << " + ";
    os << "O(t^" << *s.floor() - 1 << ')';
  } else if (first) {
    os << '0';
  }
  return os.str();
}

}  // namespace fano
