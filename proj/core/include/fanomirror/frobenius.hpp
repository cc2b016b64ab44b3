#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fanomirror/qpolynomial.hpp"

namespace fano {

/// Laurent series in t with finitely many terms above a trust floor.
/// Coefficients at exponents >= floor are exact; below it nothing is known.
/// A missing floor means the series is an exact Laurent polynomial.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(std::map<int, QPolynomial> coeffs, std::optional<int> floor);
  static TruncatedSeries monomial(int exponent, const QPolynomial& coeff = QPolynomial(1));

  const std::map<int, QPolynomial>& coefficients() const { return coeffs_; }
  const std::optional<int>& floor() const { return floor_; }
  bool trusted(int exponent) const { return !floor_ || exponent >= *floor_; }
  /// Throws UntrustedCoefficientError below the floor.
  QPolynomial coefficient(int exponent) const;
  /// Highest stored exponent; throws on the zero series.
  int top() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Raises the floor, discarding coefficients below it.
  void truncate(int new_floor);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const QPolynomial& scalar);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void add_term(int exponent, const QPolynomial& coeff);

  std::map<int, QPolynomial> coeffs_;
  std::optional<int> floor_;
};

/// Exact product. The result is trusted down to
/// max(floor(a) + top(b), floor(b) + top(a)); asking for a lower
/// `requested_floor` throws UntrustedCoefficientError. A higher one drops
/// the terms below it.
TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b,
                                std::optional<int> requested_floor = std::nullopt);

/// t^p + sum_{i>0} a_i t^{-i}, with a_i = i * N_{p,i}.
class ThetaSeries {
 public:
  ThetaSeries() : ThetaSeries(0, TruncatedSeries::monomial(0)) {}
  /// Validates the leading form; throws ReconstructionError otherwise.
  ThetaSeries(int p, TruncatedSeries series);
  /// The exact series t^p.
  static ThetaSeries trivial(int p);

  int p() const { return p_; }
  const TruncatedSeries& series() const { return series_; }
  /// Largest i with a_i trusted; nullopt when every a_i is exact.
  std::optional<int> valid_to() const;
  /// a_i, the coefficient of t^{-i}.
  QPolynomial tail(int i) const;
  /// N_{p,i} = a_i / i.
  QPolynomial two_point(int i) const;

  friend bool operator==(const ThetaSeries&, const ThetaSeries&) = default;

 private:
  int p_ = 0;
  TruncatedSeries series_;
};

struct PeriodSequence {
  std::vector<QPolynomial> coeffs;
  /// Fano index, when known; c_d is then expected to sit in q^{d/index}.
  std::optional<int> index;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// The unique N_1 whose powers have t^0 coefficients c_d for d <= T.
ThetaSeries reconstruct_n1(const PeriodSequence& periods);

/// N_{1,q}^r = (q - r) N_{1,q-r} for r >= 1. At r = 0 the one-step constant
/// also needs N_q; pass it to get q N_{1,q} + N_{q,1}.
QPolynomial one_step_constants(const ThetaSeries& n1, int q_order, int r,
                               const ThetaSeries* nq = nullptr);

/// N_{p,q}^r from the two-point invariants; 1 when r = p + q and 0 above.
QPolynomial structure_constant(const std::vector<ThetaSeries>& series, int p, int q, int r);

/// N_n = N_1 N_{n-1} - sum_{j<n} N_{1,n-1}^j N_j from series N_0..N_{n-1}.
ThetaSeries extend_series(const std::vector<ThetaSeries>& series);

/// N_0, ..., N_{max_p} reconstructed from a period sequence.
std::vector<ThetaSeries> theta_series_from_periods(const PeriodSequence& periods, int max_p);

class StructureTable {
 public:
  using Key = std::tuple<int, int, int>;

  explicit StructureTable(int max_p = 0) : max_p_(max_p) {}

  int max_p() const { return max_p_; }
  const std::map<Key, QPolynomial>& entries() const { return entries_; }
  /// Zero outside the stored range r <= p + q.
  QPolynomial entry(int p, int q, int r) const;
  void set(int p, int q, int r, const QPolynomial& value);

  static StructureTable trivial(int max_p);

 private:
  friend StructureTable structure_table(const std::vector<ThetaSeries>&, int);
  int max_p_ = 0;
  std::map<Key, QPolynomial> entries_;
};

StructureTable structure_table(const std::vector<ThetaSeries>& series, int max_p);

/// t^0 coefficient of N_{p_1} ... N_{p_d}.
QPolynomial residue_product(const std::vector<ThetaSeries>& factors);

struct AssociativityViolation {
  int p = 0, q = 0, r = 0, u = 0;
  QPolynomial left, right;
};

/// Compares (theta_p theta_q) theta_r with theta_p (theta_q theta_r) for
/// p + q + r <= max_p. With a q-window, only q-powers up to it are compared.
std::vector<AssociativityViolation> associativity_check(const StructureTable& table, int max_p,
                                                        std::optional<int> q_window = std::nullopt);

/// n_d = c_d / d!, the coefficients of the unregularized series g(t).
std::vector<QPolynomial> unregularize(const PeriodSequence& periods);

/// Degrees d whose c_d is not concentrated in q^{d/index} (or is nonzero off index Z).
std::vector<int> grading_violations(const PeriodSequence& periods, int index);

std::string to_string(const TruncatedSeries& s);

}  // namespace fano
