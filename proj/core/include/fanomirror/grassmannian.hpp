#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanomirror/laurent.hpp"
#include "fanomirror/polytope.hpp"
#include "fanomirror/young.hpp"

namespace fano {

/// Grid vertex (row, column). Row 0 holds the sources above the grid and
/// column 0 the sinks to its left; interior vertices have row in 1..n-k and
/// column in 1..k.
using GridVertex = std::pair<int, int>;
using GridPath = std::vector<GridVertex>;

struct GridEdge {
  GridVertex from;
  GridVertex to;
  ExponentVector weight;
};

struct GridFace {
  /// Region between rows a and a+1 and columns b and b+1; the unbounded
  /// face below and right of the grid has `outer` set.
  int a = 0;
  int b = 0;
  bool outer = false;
  YoungDiagram label;
  ExponentVector weight;
  bool base = false;
};

/// The (n-k) x k grid network of the rectangles seed. Boundary vertex s in
/// 1..k is a source entering column k+1-s from above; boundary vertex k+r is
/// a sink leaving row r to the west. Edges point south and west.
class GridNetwork {
 public:
  explicit GridNetwork(BoxContext ctx);

  const BoxContext& context() const { return ctx_; }
  /// Chart variables, one per non-base face, in seed order.
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<YoungDiagram>& variable_labels() const { return labels_; }
  const std::vector<GridFace>& faces() const { return faces_; }
  const std::vector<GridEdge>& edges() const { return edges_; }
  std::vector<GridVertex> vertices() const;

  GridVertex source_vertex(int label) const;
  GridVertex sink_vertex(int label) const;
  std::vector<GridPath> paths(int source, int sink) const;

  /// Sum of the weights of the faces on the right-hand side of the path.
  ExponentVector face_weight(const GridPath& path) const;
  /// Sum of the edge weights along the path.
  ExponentVector edge_weight(const GridPath& path) const;

  std::optional<std::size_t> variable_index(const YoungDiagram& label) const;

 private:
  const GridFace& face(int a, int b) const;

  BoxContext ctx_;
  std::vector<std::string> variables_;
  std::vector<YoungDiagram> labels_;
  std::vector<GridFace> faces_;
  std::vector<GridEdge> edges_;
  std::map<std::pair<GridVertex, GridVertex>, std::size_t> edge_index_;
};

GridNetwork build_rectangles_network(BoxContext ctx);

/// Sources and sinks used by the flows of lambda: {1..k} minus the west
/// steps, and the west steps minus {1..k}.
std::pair<std::vector<int>, std::vector<int>> flow_endpoints(const YoungDiagram& lambda);

/// Sum over vertex-disjoint path families, each weighted by its faces.
LaurentPolynomial flow_polynomial(const GridNetwork& net, const YoungDiagram& lambda);
/// Number of vertex-disjoint path families (the flow count).
std::size_t flow_count(const GridNetwork& net, const YoungDiagram& lambda);
/// det of the path-weight matrix built from edge weights.
LaurentPolynomial path_matrix_determinant(const GridNetwork& net, const YoungDiagram& lambda);

/// Exact quotient; throws ChartRestrictionError when g does not divide f.
LaurentPolynomial exact_divide(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// The i-th summand p_{mu_i^box} / p_{mu_i}, without q.
LaurentPolynomial theta_restriction(int i, BoxContext ctx);
LaurentPolynomial theta_restriction(int i, const GridNetwork& net);

/// Sum of the theta restrictions, the summand i = n-k carrying q.
LaurentPolynomial superpotential_chart(BoxContext ctx);
int superpotential_q_index(BoxContext ctx);

struct ValuationRow {
  YoungDiagram lambda;
  std::vector<int> expected;
  std::vector<int> got;
  bool attained = false;
  bool ok() const { return attained && expected == got; }
};

struct ThetaValuation {
  int i = 0;
  int j = 0;
  int expected = 0;
  int got = 0;
  bool attained = false;
  bool ok() const { return attained && expected == got; }
};

struct ValuationReport {
  BoxContext context;
  std::vector<ValuationRow> rows;
  std::vector<ThetaValuation> theta;

  std::vector<ValuationRow> mismatches() const;
  std::vector<ThetaValuation> theta_mismatches() const;
  bool ok() const { return mismatches().empty() && theta_mismatches().empty(); }
};

ValuationReport verify_valuations(BoxContext ctx);

RationalPolytope nobody_polytope(BoxContext ctx);
std::vector<QPolynomial> grass_periods(BoxContext ctx, unsigned max_degree);

}  // namespace fano
