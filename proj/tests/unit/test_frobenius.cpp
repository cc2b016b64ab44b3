#include <gtest/gtest.h>

#include "../support/printers.hpp"

#include "../support/oracles.hpp"
#include "fanomirror/catalog.hpp"
#include "fanomirror/errors.hpp"
#include "fanomirror/frobenius.hpp"

using namespace fano;

namespace {

QPolynomial qm(long c, int power) { return QPolynomial::monomial(Rational(c), power); }

// c_{3m} = (3m)! / (m!)^3 q^m for the projective plane.
PeriodSequence plane_periods(int order) {
  PeriodSequence s;
  s.index = 3;
  for (int d = 0; d <= order; ++d) {
    if (d % 3) {
      s.coeffs.emplace_back();
      continue;
    }
    unsigned long m = d / 3;
    mpz_class f = oracle::factorial(m);
    s.coeffs.push_back(QPolynomial::monomial(Rational(mpz_class(oracle::factorial(3 * m) / (f * f * f))), static_cast<int>(m)));
  }
  return s;
}

PeriodSequence trivial_periods(int order) {
  PeriodSequence s;
  s.coeffs.assign(order + 1, QPolynomial());
  s.coeffs[0] = 1;
  return s;
}

}  // namespace

TEST(Series, FloorSemantics) {
  TruncatedSeries s({{2, 1}, {0, 3}, {-4, 7}}, -3);
  EXPECT_EQ(s.coefficients().size(), 2u);
  EXPECT_EQ(s.top(), 2);
  EXPECT_EQ(s.coefficient(0), QPolynomial(3));
  EXPECT_EQ(s.coefficient(-3), QPolynomial());
  EXPECT_THROW(s.coefficient(-4), UntrustedCoefficientError);
  s.truncate(-1);
  EXPECT_EQ(*s.floor(), -1);
  s.truncate(-10);
  EXPECT_EQ(*s.floor(), -1);
  EXPECT_THROW(TruncatedSeries().top(), InvalidArgumentError);
}

TEST(Series, AdditionKeepsTheHigherFloor) {
  TruncatedSeries a({{1, 1}, {-2, 1}}, -2);
  TruncatedSeries b({{0, 1}, {-1, 1}}, -1);
  a += b;
  EXPECT_EQ(*a.floor(), -1);
  EXPECT_EQ(a.coefficients().size(), 3u);
  a -= b;
  EXPECT_EQ(a, TruncatedSeries({{1, 1}}, -1));
  TruncatedSeries exact = TruncatedSeries::monomial(3);
  exact += TruncatedSeries::monomial(3, -1);
  EXPECT_TRUE(exact.is_zero());
  EXPECT_FALSE(exact.floor().has_value());
}

TEST(Series, MultiplicationFloor) {
  // (t + t^-2 + O(t^-4)) (t^2 + O(t^-3)) is trusted from max(-4+2, -3+1) = -2.
  TruncatedSeries a({{1, 1}, {-2, 1}}, -4);
  TruncatedSeries b({{2, 1}}, -3);
  TruncatedSeries p = series_multiply(a, b);
  EXPECT_EQ(*p.floor(), -2);
  EXPECT_EQ(p.coefficient(3), QPolynomial(1));
  EXPECT_EQ(p.coefficient(0), QPolynomial(1));
  EXPECT_THROW(series_multiply(a, b, -3), UntrustedCoefficientError);
  EXPECT_EQ(*series_multiply(a, b, 1).floor(), 1);
  TruncatedSeries e = series_multiply(TruncatedSeries::monomial(1, 2), TruncatedSeries::monomial(-1, qm(1, 1)));
  EXPECT_EQ(e, TruncatedSeries::monomial(0, qm(2, 1)));
}

TEST(Theta, LeadingFormIsChecked) {
  EXPECT_THROW(ThetaSeries(2, TruncatedSeries::monomial(1)), ReconstructionError);
  EXPECT_THROW(ThetaSeries(1, TruncatedSeries({{1, 1}, {0, 1}}, std::nullopt)), ReconstructionError);
  EXPECT_THROW(ThetaSeries(1, TruncatedSeries({{1, 2}}, std::nullopt)), ReconstructionError);
  ThetaSeries t = ThetaSeries::trivial(3);
  EXPECT_FALSE(t.valid_to().has_value());
  EXPECT_EQ(t.tail(5), QPolynomial());
  EXPECT_THROW(t.tail(0), InvalidArgumentError);
}

TEST(Reconstruction, TrivialPeriodsGiveMonomials) {
  auto series = theta_series_from_periods(trivial_periods(12), 6);
  ASSERT_EQ(series.size(), 7u);
  for (int p = 0; p <= 6; ++p) {
    EXPECT_EQ(series[p].p(), p);
    for (const auto& [e, c] : series[p].series().coefficients()) {
      EXPECT_EQ(e, p);
      EXPECT_EQ(c, QPolynomial(1));
    }
  }
}

TEST(Reconstruction, PlaneFirstSeries) {
  ThetaSeries n1 = reconstruct_n1(plane_periods(12));
  EXPECT_EQ(n1.valid_to(), 11);
  EXPECT_EQ(n1.tail(2), qm(2, 1));
  EXPECT_EQ(n1.tail(5), qm(5, 2));
  EXPECT_EQ(n1.tail(8), qm(32, 3));
  EXPECT_EQ(n1.tail(11), qm(286, 4));
  for (int i : {1, 3, 4, 6, 7, 9, 10}) EXPECT_TRUE(n1.tail(i).is_zero()) << i;
  EXPECT_THROW(n1.tail(12), UntrustedCoefficientError);
  EXPECT_EQ(n1.two_point(8), qm(4, 3));
}

TEST(Reconstruction, PowersReproduceThePeriods) {
  PeriodSequence periods = plane_periods(12);
  ThetaSeries n1 = reconstruct_n1(periods);
  TruncatedSeries power = TruncatedSeries::monomial(0);
  for (int d = 1; d <= 12; ++d) {
    power = series_multiply(power, n1.series());
    EXPECT_EQ(power.coefficient(0), periods.coeffs[d]) << d;
  }
}

TEST(Reconstruction, PlaneSecondSeries) {
  auto series = theta_series_from_periods(plane_periods(12), 2);
  const ThetaSeries& n2 = series[2];
  EXPECT_EQ(n2.tail(1), qm(4, 1));
  EXPECT_EQ(n2.tail(4), qm(14, 2));
  EXPECT_EQ(n2.tail(7), qm(84, 3));
  EXPECT_EQ(n2.tail(10), qm(725, 4));
  EXPECT_EQ(n2.valid_to(), 10);
}

TEST(Reconstruction, InconsistentInput) {
  PeriodSequence bad = plane_periods(6);
  bad.coeffs[1] = 1;
  EXPECT_THROW(reconstruct_n1(bad), InconsistentPeriodsError);
  bad = plane_periods(6);
  bad.coeffs[0] = 2;
  EXPECT_THROW(reconstruct_n1(bad), InconsistentPeriodsError);
  EXPECT_THROW(reconstruct_n1(PeriodSequence{}), InconsistentPeriodsError);
}

TEST(StructureConstants, OneStep) {
  auto series = theta_series_from_periods(plane_periods(12), 3);
  const ThetaSeries& n1 = series[1];
  EXPECT_EQ(one_step_constants(n1, 3, 1), qm(2, 1));
  EXPECT_EQ(one_step_constants(n1, 3, 3), QPolynomial());
  EXPECT_EQ(one_step_constants(n1, 2, 0, &series[2]), qm(6, 1));
  EXPECT_THROW(one_step_constants(n1, 2, 0), InvalidArgumentError);
  EXPECT_THROW(one_step_constants(n1, 2, 3), InvalidArgumentError);
  for (int q = 1; q <= 3; ++q) {
    for (int r = 0; r <= q; ++r) EXPECT_EQ(one_step_constants(n1, q, r, &series[q]), structure_constant(series, 1, q, r));
  }
}

TEST(StructureConstants, AgreeWithResidues) {
  auto series = theta_series_from_periods(plane_periods(15), 4);
  StructureTable table = structure_table(series, 4);
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; p + q <= 4; ++q) {
      EXPECT_EQ(table.entry(p, q, p + q), QPolynomial(1));
      EXPECT_EQ(table.entry(p, q, 0), residue_product({series[p], series[q]})) << p << q;
      EXPECT_EQ(table.entry(p, q, 1), table.entry(q, p, 1));
    }
  }
  EXPECT_EQ(table.entry(1, 2, 0), qm(6, 1));
  EXPECT_EQ(table.entry(1, 1, 5), QPolynomial());
  EXPECT_THROW(table.entry(3, 3, 0), InvalidArgumentError);
  EXPECT_EQ(residue_product({series[1], series[1], series[1]}), qm(6, 1));
}

TEST(StructureConstants, TrivialTable) {
  StructureTable t = StructureTable::trivial(5);
  EXPECT_EQ(t.entry(2, 3, 5), QPolynomial(1));
  EXPECT_EQ(t.entry(2, 3, 4), QPolynomial());
  EXPECT_TRUE(associativity_check(t, 5).empty());
  EXPECT_EQ(structure_table(theta_series_from_periods(trivial_periods(10), 5), 5).entries(), t.entries());
}

TEST(Associativity, PlaneHoldsAndCorruptionIsCaught) {
  auto series = theta_series_from_periods(plane_periods(15), 4);
  StructureTable table = structure_table(series, 4);
  EXPECT_TRUE(associativity_check(table, 4, 2).empty());
  table.set(1, 1, 0, table.entry(1, 1, 0) + qm(1, 1));
  EXPECT_FALSE(associativity_check(table, 4, 2).empty());
}

TEST(Regularization, Unregularize) {
  auto n = unregularize(plane_periods(6));
  EXPECT_EQ(n[0], QPolynomial(1));
  EXPECT_EQ(n[3], qm(1, 1));
  EXPECT_EQ(n[6], QPolynomial::monomial(Rational(1, 8), 2));
}

TEST(Regularization, Grading) {
  PeriodSequence p = plane_periods(9);
  EXPECT_TRUE(grading_violations(p, 3).empty());
  EXPECT_EQ(grading_violations(p, 1), (std::vector<int>{3, 6, 9}));
  p.coeffs[4] = qm(1, 1);
  EXPECT_EQ(grading_violations(p, 3), (std::vector<int>{4}));
  EXPECT_THROW(grading_violations(p, 0), InvalidArgumentError);
}

TEST(Catalog, EntriesAreConsistent) {
  EXPECT_EQ(catalog().size(), 4u);
  EXPECT_EQ(catalog_entry("p2").fano_index, 3);
  EXPECT_THROW(catalog_entry("nope"), InvalidArgumentError);
  EXPECT_EQ(catalog_entry("p2").expected_head, std::vector<QPolynomial>(plane_periods(6).coeffs));
}

TEST(Printing, SeriesString) {
  EXPECT_EQ(to_string(TruncatedSeries({{1, 1}, {-2, qm(2, 1)}}, -3)), "t + 2q*t^-2 + O(t^-4)");
}
