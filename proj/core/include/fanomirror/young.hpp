#pragma once

#include <set>
#include <vector>

#include "fanomirror/qpolynomial.hpp"

namespace fano {

/// Diagrams live in an (n-k) x k box: at most n-k rows, each of length <= k.
struct BoxContext {
  int k = 1;
  int n = 2;

  BoxContext() = default;
  BoxContext(int k, int n);
  int rows() const { return n - k; }
  int columns() const { return k; }
  BoxContext transposed() const { return BoxContext(n - k, n); }
  friend bool operator==(const BoxContext&, const BoxContext&) = default;
};

class YoungDiagram {
 public:
  YoungDiagram() = default;
  YoungDiagram(BoxContext ctx, std::vector<int> rows);
  static YoungDiagram empty(BoxContext ctx) { return YoungDiagram(ctx, {}); }
  static YoungDiagram full(BoxContext ctx);
  /// `height` rows of length `width`.
  static YoungDiagram rectangle(BoxContext ctx, int height, int width);

  const BoxContext& context() const { return ctx_; }
  const std::vector<int>& rows() const { return rows_; }
  int row(int i) const { return i < static_cast<int>(rows_.size()) ? rows_[i] : 0; }
  int size() const;
  bool is_empty() const { return rows_.empty(); }
  bool is_rectangle() const;
  /// Cells as 1-indexed (row, column) pairs.
  std::set<std::pair<int, int>> cells() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) { return a.rows_ <=> b.rows_; }

 private:
  BoxContext ctx_;
  std::vector<int> rows_;
};

enum class StepDirection { West, South };

/// Positions (1-indexed from the NE corner) of the west or south steps
/// of a boundary path.
struct StepSet {
  BoxContext context;
  StepDirection direction = StepDirection::West;
  std::set<int> members;

  StepSet() = default;
  StepSet(BoxContext ctx, StepDirection dir, std::set<int> steps);
  StepSet complement() const;
  friend bool operator==(const StepSet&, const StepSet&) = default;
};

StepSet to_steps(const YoungDiagram& lambda, StepDirection direction);
YoungDiagram from_steps(const StepSet& steps);
YoungDiagram from_west_steps(BoxContext ctx, const std::set<int>& west);

/// mu_i: west steps on the cyclic interval [i+1, i+k].
YoungDiagram boundary_rectangle(int i, BoxContext ctx);
/// mu_i with its outer rim removed: west steps [i+1, i+k-1] and i+k+1, cyclically.
YoungDiagram boundary_rectangle_box(int i, BoxContext ctx);

/// Largest number of cells of mu \ lambda (both top-left justified) on one
/// diagonal line row - column = const.
int max_diag(const YoungDiagram& mu, const YoungDiagram& lambda);

/// Reflection into the transposed box: west steps of the image are the
/// south steps of the input.
YoungDiagram sigma_reflect(const YoungDiagram& lambda);

std::vector<int> valuation_vector(const YoungDiagram& lambda, const std::vector<YoungDiagram>& seed);

/// max_diag(mu_i^box, mu_j) - max_diag(mu_i, mu_j).
int theta_valuation_delta(int i, int j, BoxContext ctx);

/// s_lambda(1,...,1) with n ones, by the hook-content formula.
Integer schur_dimension(const std::vector<int>& rows, int n);
Integer schur_dimension(const YoungDiagram& lambda, int n);

/// Every diagram in the box, ordered by size and then by rows.
std::vector<YoungDiagram> all_diagrams(BoxContext ctx);
/// The rectangles seed: empty diagram, then height a = 1..n-k and width b = 1..k.
std::vector<YoungDiagram> rectangles(BoxContext ctx);

std::string to_string(const YoungDiagram& lambda);

}  // namespace fano
