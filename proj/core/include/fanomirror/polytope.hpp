#pragma once

#include <map>
#include <vector>

#include "fanomirror/laurent.hpp"
#include "fanomirror/qpolynomial.hpp"

namespace fano {

using RationalVector = std::vector<Rational>;

/// {v : <normal, v> >= offset}
struct Halfspace {
  std::vector<long> normal;
  Rational offset;

  bool contains(const RationalVector& v) const;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

class HalfspaceSystem {
 public:
  HalfspaceSystem() = default;
  HalfspaceSystem(int dimension, std::vector<Halfspace> facets);

  int dimension() const { return dimension_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  bool contains(const RationalVector& v) const;
  /// The r-th dilation: every offset multiplied by r.
  HalfspaceSystem dilate(long r) const;

 private:
  int dimension_ = 0;
  std::vector<Halfspace> facets_;
};

/// All basic feasible solutions, deduplicated and sorted.
std::vector<RationalVector> vertices(const HalfspaceSystem& system);

class RationalPolytope {
 public:
  explicit RationalPolytope(HalfspaceSystem system);

  const HalfspaceSystem& halfspaces() const { return system_; }
  int dimension() const { return system_.dimension(); }
  const std::vector<RationalVector>& vertices() const { return vertices_; }

 private:
  HalfspaceSystem system_;
  std::vector<RationalVector> vertices_;
};

/// {v : <e, v> >= -1 for every e}. May be unbounded.
RationalPolytope polar_from_support(const std::vector<ExponentVector>& exponents);

/// Integer points of the r-th dilation. Throws UnboundedPolytopeError.
Integer lattice_point_count(const RationalPolytope& polytope, long r);

struct GeometryFlags {
  bool bounded = false;
  bool full_dimensional = false;
  bool origin_interior = false;
  friend bool operator==(const GeometryFlags&, const GeometryFlags&) = default;
};

GeometryFlags geometry_flags(const RationalPolytope& polytope);
bool is_bounded(const HalfspaceSystem& system);

/// Rank of a list of rational vectors, and of their affine span.
int matrix_rank(std::vector<RationalVector> rows);
int affine_rank(const std::vector<RationalVector>& points);

}  // namespace fano
