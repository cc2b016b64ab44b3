#include <gtest/gtest.h>

#include "../support/printers.hpp"

#include "../support/oracles.hpp"
#include "fanomirror/errors.hpp"
#include "fanomirror/grassmannian.hpp"

using namespace fano;

namespace {

const BoxContext G24(2, 4);

bool is_signed_equal(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a == b || a == b * QPolynomial(-1);
}

// Three-term relations p_{Sac} p_{Sbd} = p_{Sab} p_{Scd} + p_{Sad} p_{Sbc}.
int count_failed_relations(BoxContext ctx, int* checked) {
  GridNetwork net = build_rectangles_network(ctx);
  int failed = 0;
  std::vector<int> all;
  for (int i = 1; i <= ctx.n; ++i) all.push_back(i);
  std::function<void(std::size_t, std::set<int>)> choose = [&](std::size_t from, std::set<int> s) {
    if (static_cast<int>(s.size()) == ctx.k - 2) {
      std::vector<int> rest;
      for (int x : all) {
        if (!s.count(x)) rest.push_back(x);
      }
      auto p = [&](int x, int y) {
        std::set<int> w = s;
        w.insert(x);
        w.insert(y);
        return flow_polynomial(net, from_west_steps(ctx, w));
      };
      for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = a + 1; b < rest.size(); ++b)
          for (std::size_t c = b + 1; c < rest.size(); ++c)
            for (std::size_t d = c + 1; d < rest.size(); ++d) {
              int A = rest[a], B = rest[b], C = rest[c], Dd = rest[d];
              ++*checked;
              if (!(p(A, C) * p(B, Dd) == p(A, B) * p(C, Dd) + p(A, Dd) * p(B, C))) ++failed;
            }
      return;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
      auto t = s;
      t.insert(all[i]);
      choose(i + 1, t);
    }
  };
  choose(0, {});
  return failed;
}

}  // namespace

TEST(Network, FaceCounts) {
  for (auto [k, n, faces] : {std::tuple{2, 4, 5}, {1, 2, 2}, {2, 5, 7}, {3, 6, 10}}) {
    GridNetwork net = build_rectangles_network(BoxContext(k, n));
    EXPECT_EQ(static_cast<int>(net.faces().size()), faces);
    int base = 0;
    for (const auto& f : net.faces()) base += f.base;
    EXPECT_EQ(base, 1);
    EXPECT_EQ(static_cast<int>(net.variables().size()), k * (n - k));
  }
}

TEST(Network, FaceLabelsAreTheSeedRectangles) {
  GridNetwork net = build_rectangles_network(G24);
  std::set<std::vector<int>> labels;
  for (const auto& f : net.faces()) {
    EXPECT_TRUE(f.label.is_rectangle());
    labels.insert(f.label.rows());
  }
  EXPECT_EQ(labels, (std::set<std::vector<int>>{{}, {1}, {2}, {1, 1}, {2, 2}}));
  for (const auto& f : net.faces()) {
    if (f.base) EXPECT_EQ(f.label, YoungDiagram::full(G24));
  }
  EXPECT_EQ(net.variables(), (std::vector<std::string>{"y_0", "y_1x1", "y_1x2", "y_2x1"}));
}

TEST(Network, BoundaryLabelling) {
  GridNetwork net = build_rectangles_network(BoxContext(2, 5));
  EXPECT_EQ(net.source_vertex(1), (GridVertex{0, 2}));
  EXPECT_EQ(net.source_vertex(2), (GridVertex{0, 1}));
  EXPECT_EQ(net.sink_vertex(3), (GridVertex{1, 0}));
  EXPECT_EQ(net.sink_vertex(5), (GridVertex{3, 0}));
  EXPECT_THROW(net.source_vertex(3), InvalidArgumentError);
  EXPECT_THROW(net.sink_vertex(2), InvalidArgumentError);
  EXPECT_EQ(net.vertices().size(), 5u + 6u);
  // A path from source s to sink k+r takes (r-1) + (k+1-s) - 1 interior moves.
  EXPECT_EQ(net.paths(1, 5).size(), oracle::binomial(3, 1).get_ui());
  EXPECT_EQ(net.paths(2, 3).size(), 1u);
}

TEST(Network, EdgeAndFaceWeightsAgreeOnEveryPath) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}, {1, 4}, {3, 5}}) {
    GridNetwork net = build_rectangles_network(BoxContext(k, n));
    for (int s = 1; s <= k; ++s) {
      for (int t = k + 1; t <= n; ++t) {
        for (const auto& p : net.paths(s, t)) EXPECT_EQ(net.face_weight(p), net.edge_weight(p));
      }
    }
  }
}

TEST(Flow, EmptyDiagramGivesOne) {
  for (auto [k, n] : {std::pair{2, 4}, {1, 2}, {3, 6}}) {
    GridNetwork net = build_rectangles_network(BoxContext(k, n));
    EXPECT_EQ(flow_polynomial(net, YoungDiagram::empty(BoxContext(k, n))), LaurentPolynomial::constant(net.variables(), 1));
  }
}

TEST(Flow, BoundaryRectanglesAreMonomials) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    BoxContext ctx(k, n);
    GridNetwork net = build_rectangles_network(ctx);
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(flow_count(net, boundary_rectangle(i, ctx)), 1u);
      EXPECT_EQ(flow_polynomial(net, boundary_rectangle(i, ctx)).size(), 1u);
    }
  }
}

TEST(Flow, CoefficientsAreOneAndMatchDeterminant) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      BoxContext ctx(k, n);
      GridNetwork net = build_rectangles_network(ctx);
      for (const auto& lambda : all_diagrams(ctx)) {
        LaurentPolynomial p = flow_polynomial(net, lambda);
        EXPECT_EQ(p.size(), flow_count(net, lambda));
        for (const auto& [e, c] : p.terms()) EXPECT_EQ(c, QPolynomial(1));
        EXPECT_TRUE(is_signed_equal(path_matrix_determinant(net, lambda), p)) << to_string(lambda);
      }
    }
  }
}

TEST(Flow, ThreeTermPlueckerRelations) {
  for (auto [k, n, expected] : {std::tuple{2, 4, 1}, {2, 5, 5}, {2, 6, 15}, {3, 6, 30}}) {
    int checked = 0;
    EXPECT_EQ(count_failed_relations(BoxContext(k, n), &checked), 0);
    EXPECT_EQ(checked, expected);
  }
}

TEST(Division, ExactAndInexact) {
  std::vector<std::string> xy{"x", "y"};
  LaurentPolynomial f(xy), g(xy), h(xy);
  f.add_term({2, 0}, 1);
  f.add_term({0, 2}, -1);
  g.add_term({1, 0}, 1);
  g.add_term({0, 1}, -1);
  h.add_term({1, 0}, 1);
  h.add_term({0, 1}, 1);
  EXPECT_EQ(exact_divide(f, g), h);
  EXPECT_EQ(exact_divide(f * LaurentPolynomial::monomial(xy, {-3, 1}), g), h * LaurentPolynomial::monomial(xy, {-3, 1}));
  EXPECT_EQ(exact_divide(h, LaurentPolynomial::monomial(xy, {1, 1}, 2)).terms().size(), 2u);
  LaurentPolynomial one = LaurentPolynomial::constant(xy, 1);
  EXPECT_THROW(exact_divide(h, g), ChartRestrictionError);
  EXPECT_THROW(exact_divide(one, h), ChartRestrictionError);
  EXPECT_THROW(exact_divide(h, LaurentPolynomial(xy)), ChartRestrictionError);
}

TEST(Superpotential, Gr24Shape) {
  LaurentPolynomial w = superpotential_chart(G24);
  EXPECT_EQ(w.rank(), 4u);
  int with_q = 0;
  for (const auto& [e, c] : w.terms()) {
    EXPECT_TRUE(c.is_monomial());
    EXPECT_LE(c.highest_power(), 1);
    with_q += c.highest_power() == 1;
  }
  EXPECT_EQ(with_q, 1);
  LaurentPolynomial at_one = specialize_q_to_one(w);
  for (const auto& [e, c] : at_one.terms()) {
    EXPECT_TRUE(c.has_integer_coefficients());
    EXPECT_TRUE(c.has_nonnegative_coefficients());
  }
  EXPECT_EQ(at_one.size(), 6u);
  EXPECT_EQ(superpotential_q_index(G24), 2);
}

TEST(Superpotential, SummandsAreTheThetaRestrictions) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}, {1, 3}}) {
    BoxContext ctx(k, n);
    GridNetwork net = build_rectangles_network(ctx);
    LaurentPolynomial sum(net.variables());
    for (int i = 0; i < n; ++i) {
      LaurentPolynomial t = theta_restriction(i, net);
      EXPECT_EQ(t * flow_polynomial(net, boundary_rectangle(i, ctx)), flow_polynomial(net, boundary_rectangle_box(i, ctx)));
      if (i == n - k) t *= QPolynomial::monomial(1, 1);
      sum += t;
    }
    EXPECT_EQ(sum, superpotential_chart(ctx));
  }
}

TEST(Superpotential, SmallestCase) {
  BoxContext ctx(1, 2);
  LaurentPolynomial w = superpotential_chart(ctx);
  EXPECT_EQ(w.rank(), 1u);
  EXPECT_EQ(w.size(), 2u);
}

TEST(Theta, FirstRestrictionHasTrivialDenominator) {
  GridNetwork net = build_rectangles_network(G24);
  EXPECT_EQ(theta_restriction(0, G24), flow_polynomial(net, boundary_rectangle_box(0, G24)));
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(min_exponent_vector(theta_restriction(i, G24)).attained);
}

TEST(Valuations, ReportsAreCleanForSmallBoxes) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      ValuationReport r = verify_valuations(BoxContext(k, n));
      EXPECT_TRUE(r.ok()) << k << ' ' << n;
      EXPECT_EQ(r.rows.size(), oracle::binomial(n, k).get_ui());
      EXPECT_EQ(static_cast<int>(r.theta.size()), n * n);
    }
  }
  ValuationReport r = verify_valuations(G24);
  EXPECT_TRUE(r.rows.front().lambda.is_empty());
  EXPECT_EQ(r.rows.front().got, (std::vector<int>{0, 0, 0, 0}));
  EXPECT_TRUE(r.rows.front().attained);
}

TEST(Valuations, TamperedExpectationIsReported) {
  ValuationReport r = verify_valuations(G24);
  r.rows[1].expected[0] += 1;
  r.theta[0].expected += 1;
  EXPECT_EQ(r.mismatches().size(), 1u);
  EXPECT_EQ(r.theta_mismatches().size(), 1u);
  EXPECT_FALSE(r.ok());
}

TEST(NewtonOkounkov, Gr24Body) {
  RationalPolytope body = nobody_polytope(G24);
  EXPECT_EQ(body.dimension(), 4);
  EXPECT_EQ(geometry_flags(body), (GeometryFlags{true, true, true}));
  EXPECT_EQ(lattice_point_count(body, 0), 1);
  EXPECT_EQ(lattice_point_count(body, 1), oracle::count_ssyt({4, 4}, 4));
  EXPECT_EQ(lattice_point_count(body, 1), schur_dimension(std::vector<int>{4, 4}, 4));
  EXPECT_EQ(lattice_point_count(body, 2), schur_dimension(std::vector<int>{8, 8}, 4));
}

TEST(NewtonOkounkov, Gr25BodyIsPositive) {
  RationalPolytope body = nobody_polytope(BoxContext(2, 5));
  EXPECT_EQ(geometry_flags(body), (GeometryFlags{true, true, true}));
  EXPECT_EQ(lattice_point_count(body, 1), schur_dimension(std::vector<int>{5, 5}, 5));
}

TEST(GrassPeriods, Gr24MatchesQuadricSeries) {
  auto c = grass_periods(G24, 12);
  EXPECT_EQ(c[0], QPolynomial(1));
  for (unsigned long d = 0; d <= 12; ++d) {
    if (d % 4) {
      EXPECT_TRUE(c[d].is_zero()) << d;
      continue;
    }
    unsigned long m = d / 4;
    mpz_class f6 = oracle::factorial(m);
    f6 = f6 * f6 * f6;
    mpz_class value = oracle::factorial(4 * m) * oracle::factorial(2 * m) / (f6 * f6);
    EXPECT_EQ(c[d], QPolynomial::monomial(Rational(value), static_cast<int>(m))) << d;
  }
}
