#include "fanomirror/polytope.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>

#include "fanomirror/errors.hpp"

namespace fano {

namespace {

using Matrix = std::vector<RationalVector>;

// Visits every size-`choose` subset of {0..total-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t total, std::size_t choose, Fn&& fn) {
  if (choose > total) return;
  std::vector<std::size_t> idx(choose);
  for (std::size_t i = 0; i < choose; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = choose;
    while (i > 0 && idx[i - 1] == total - choose + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < choose; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Unique solution of the square system formed by the chosen facets at equality.
std::optional<RationalVector> solve_tight(const std::vector<Halfspace>& facets,
                                          const std::vector<std::size_t>& chosen, int dim) {
  Matrix m;
  m.reserve(chosen.size());
  for (std::size_t i : chosen) {
    RationalVector row(facets[i].normal.begin(), facets[i].normal.end());
    row.push_back(facets[i].offset);
    m.push_back(std::move(row));
  }
  auto pivots = row_reduce(m, dim);
  if (static_cast<int>(pivots.size()) != dim) return std::nullopt;
  RationalVector x(dim);
  for (int i = 0; i < dim; ++i) x[i] = m[i][dim];
  return x;
}

Rational pairing(const std::vector<long>& a, const RationalVector& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * v[i];
  return s;
}

// Integer ceiling of a rational.
Integer ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

long to_long_checked(const Integer& x) {
  if (!x.fits_slong_p()) throw InvalidArgumentError("lattice enumeration bound exceeds native range");
  return x.get_si();
}

}  // namespace

bool Halfspace::contains(const RationalVector& v) const { return pairing(normal, v) >= offset; }

HalfspaceSystem::HalfspaceSystem(int dimension, std::vector<Halfspace> facets)
    : dimension_(dimension), facets_(std::move(facets)) {
  if (dimension_ <= 0) throw DimensionError("polytope dimension must be positive");
  for (auto& h : facets_) {
    h.offset.canonicalize();
    if (static_cast<int>(h.normal.size()) != dimension_) {
      throw DimensionError("facet normal length differs from the dimension");
    }
    if (std::all_of(h.normal.begin(), h.normal.end(), [](long x) { return x == 0; })) {
      throw InvalidArgumentError("facet normal is the zero vector");
    }
  }
}

bool HalfspaceSystem::contains(const RationalVector& v) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Halfspace& h) { return h.contains(v); });
}

HalfspaceSystem HalfspaceSystem::dilate(long r) const {
  std::vector<Halfspace> scaled = facets_;
  for (auto& h : scaled) h.offset *= r;
  return HalfspaceSystem(dimension_, std::move(scaled));
}

std::vector<RationalVector> vertices(const HalfspaceSystem& system) {
  const int dim = system.dimension();
  const auto& facets = system.facets();
  std::set<RationalVector> found;
  for_each_subset(facets.size(), static_cast<std::size_t>(dim), [&](const std::vector<std::size_t>& idx) {
    auto x = solve_tight(facets, idx, dim);
    if (x && system.contains(*x)) found.insert(std::move(*x));
  });
  return {found.begin(), found.end()};
}

RationalPolytope::RationalPolytope(HalfspaceSystem system)
    : system_(std::move(system)), vertices_(fano::vertices(system_)) {}

RationalPolytope polar_from_support(const std::vector<ExponentVector>& exponents) {
  if (exponents.empty()) throw InvalidArgumentError("polar dual of an empty support");
  const std::size_t dim = exponents.front().size();
  std::set<ExponentVector> unique;
  for (const auto& e : exponents) {
    if (e.size() != dim) throw DimensionError("support exponents have different lengths");
    unique.insert(e);
  }
  std::vector<Halfspace> facets;
  for (const auto& e : unique) {
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) continue;  // 0 >= -1 always
    facets.push_back(Halfspace{{e.begin(), e.end()}, Rational(-1)});
  }
  return RationalPolytope(HalfspaceSystem(static_cast<int>(dim), std::move(facets)));
}

int matrix_rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows.front().size();
  return static_cast<int>(row_reduce(rows, cols).size());
}

int affine_rank(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalVector d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return matrix_rank(std::move(diffs));
}

bool is_bounded(const HalfspaceSystem& system) {
  const int dim = system.dimension();
  const auto& facets = system.facets();
  std::vector<RationalVector> normals;
  for (const auto& h : facets) normals.emplace_back(h.normal.begin(), h.normal.end());
  if (matrix_rank(normals) < dim) return false;

  // The recession cone {d : A d >= 0} is pointed, so it is nonzero exactly
  // when it has an extreme ray: a one-dimensional kernel of dim-1 tight rows.
  bool ray_found = false;
  for_each_subset(facets.size(), static_cast<std::size_t>(dim - 1), [&](const std::vector<std::size_t>& idx) {
    if (ray_found) return;
    Matrix m;
    for (std::size_t i : idx) m.push_back(normals[i]);
    auto pivots = row_reduce(m, dim);
    if (static_cast<int>(pivots.size()) != dim - 1) return;
    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    RationalVector d(dim, 0);
    d[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) d[pivots[r]] = -m[r][free_col];
    for (int sign : {1, -1}) {
      bool inside = true;
      for (const auto& h : facets) {
        if (sign * pairing(h.normal, d) < 0) {
          inside = false;
          break;
        }
      }
      if (inside) ray_found = true;
    }
  });
  return !ray_found;
}

GeometryFlags geometry_flags(const RationalPolytope& polytope) {
  GeometryFlags flags;
  const auto& system = polytope.halfspaces();
  const int dim = system.dimension();
  flags.bounded = is_bounded(system);
  flags.origin_interior = std::all_of(system.facets().begin(), system.facets().end(),
                                      [](const Halfspace& h) { return h.offset < 0; });
  if (flags.bounded) {
    flags.full_dimensional = affine_rank(polytope.vertices()) == dim;
    return flags;
  }

  // Unbounded: intersect with a box large enough to strictly contain a point
  // of every minimal face (Hadamard bound on the Cramer numerators).
  Integer scale = 1;
  for (const auto& h : system.facets()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), h.offset.get_den_mpz_t());
  }
  Integer widest = 1;
  for (const auto& h : system.facets()) {
    Integer norm = abs(Rational(h.offset * scale).get_num());
    for (long a : h.normal) norm += std::abs(a);
    if (norm > widest) widest = norm;
  }
  Integer bound;
  mpz_pow_ui(bound.get_mpz_t(), widest.get_mpz_t(), static_cast<unsigned long>(dim));
  bound += 1;
  std::vector<Halfspace> boxed = system.facets();
  for (int i = 0; i < dim; ++i) {
    std::vector<long> e(dim, 0);
    e[i] = 1;
    boxed.push_back(Halfspace{e, Rational(-bound)});
    e[i] = -1;
    boxed.push_back(Halfspace{e, Rational(-bound)});
  }
  HalfspaceSystem clipped(dim, std::move(boxed));
  flags.full_dimensional = affine_rank(fano::vertices(clipped)) == dim;
  return flags;
}

Integer lattice_point_count(const RationalPolytope& polytope, long r) {
  if (r < 0) throw InvalidArgumentError("dilation factor must be non-negative");
  const auto& system = polytope.halfspaces();
  if (!is_bounded(system)) throw UnboundedPolytopeError("lattice count of an unbounded polyhedron");
  const int dim = system.dimension();
  const auto& verts = polytope.vertices();
  if (verts.empty()) return 0;

  std::vector<long> lo(dim), hi(dim);
  for (int i = 0; i < dim; ++i) {
    Rational mn = verts.front()[i], mx = verts.front()[i];
    for (const auto& v : verts) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = to_long_checked(ceil_of(mn * r));
    hi[i] = to_long_checked(floor_of(mx * r));
    if (lo[i] > hi[i]) return 0;
  }

  const std::size_t m = system.facets().size();
  std::vector<long> bound(m);
  for (std::size_t f = 0; f < m; ++f) bound[f] = to_long_checked(ceil_of(system.facets()[f].offset * r));

  // best[f][i]: the largest value coordinates i.. can still add to facet f.
  std::vector<std::vector<long>> best(m, std::vector<long>(dim + 1, 0));
  for (std::size_t f = 0; f < m; ++f) {
    const auto& a = system.facets()[f].normal;
    for (int i = dim - 1; i >= 0; --i) {
      best[f][i] = best[f][i + 1] + std::max(a[i] * lo[i], a[i] * hi[i]);
    }
  }

  std::vector<long> partial(m, 0);
  unsigned long long count = 0;
  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth == dim) {
      ++count;
      return;
    }
    for (long x = lo[depth]; x <= hi[depth]; ++x) {
      bool viable = true;
      for (std::size_t f = 0; f < m; ++f) {
        partial[f] += system.facets()[f].normal[depth] * x;
        if (partial[f] + best[f][depth + 1] < bound[f]) viable = false;
      }
      if (viable) self(self, depth + 1);
      for (std::size_t f = 0; f < m; ++f) partial[f] -= system.facets()[f].normal[depth] * x;
    }
  };
  recurse(recurse, 0);
  return Integer(std::to_string(count));
}

}  // namespace fano
