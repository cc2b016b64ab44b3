#include "fanomirror/young.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fanomirror/errors.hpp"

namespace fano {

BoxContext::BoxContext(int k_, int n_) : k(k_), n(n_) {
  if (k <= 0 || k >= n) {
    throw InvalidArgumentError("box context needs 0 < k < n, got k=" + std::to_string(k) +
                               " n=" + std::to_string(n));
  }
}

YoungDiagram::YoungDiagram(BoxContext ctx, std::vector<int> rows) : ctx_(ctx), rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  if (static_cast<int>(rows_.size()) > ctx_.rows()) {
    throw InvalidArgumentError("diagram has more than n-k rows");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0 || rows_[i] > ctx_.columns()) throw InvalidArgumentError("row length outside [0, k]");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw InvalidArgumentError("rows must be weakly decreasing");
  }
}

YoungDiagram YoungDiagram::full(BoxContext ctx) { return rectangle(ctx, ctx.rows(), ctx.columns()); }

YoungDiagram YoungDiagram::rectangle(BoxContext ctx, int height, int width) {
  return YoungDiagram(ctx, std::vector<int>(height, width));
}

int YoungDiagram::size() const {
  int s = 0;
  for (int r : rows_) s += r;
  return s;
}

bool YoungDiagram::is_rectangle() const {
  return std::all_of(rows_.begin(), rows_.end(), [&](int r) { return r == rows_.front(); });
}

std::set<std::pair<int, int>> YoungDiagram::cells() const {
  std::set<std::pair<int, int>> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (int j = 1; j <= rows_[i]; ++j) out.emplace(static_cast<int>(i) + 1, j);
  }
  return out;
}

StepSet::StepSet(BoxContext ctx, StepDirection dir, std::set<int> steps)
    : context(ctx), direction(dir), members(std::move(steps)) {
  int expected = dir == StepDirection::West ? ctx.k : ctx.n - ctx.k;
  if (static_cast<int>(members.size()) != expected) {
    throw InvalidArgumentError("step set has " + std::to_string(members.size()) + " members, expected " +
                               std::to_string(expected));
  }
  for (int s : members) {
    if (s < 1 || s > ctx.n) throw InvalidArgumentError("step position outside 1..n");
  }
}

StepSet StepSet::complement() const {
  std::set<int> rest;
  for (int s = 1; s <= context.n; ++s) {
    if (!members.count(s)) rest.insert(s);
  }
  auto other = direction == StepDirection::West ? StepDirection::South : StepDirection::West;
  return StepSet(context, other, std::move(rest));
}

StepSet to_steps(const YoungDiagram& lambda, StepDirection direction) {
  const BoxContext& ctx = lambda.context();
  std::set<int> west;
  int x = ctx.columns();
  int pos = 0;
  for (int y = 0; y <= ctx.rows(); ++y) {
    int target = y < ctx.rows() ? lambda.row(y) : 0;
    while (x > target) {
      west.insert(++pos);
      --x;
    }
    if (y < ctx.rows()) ++pos;
  }
  StepSet w(ctx, StepDirection::West, std::move(west));
  return direction == StepDirection::West ? w : w.complement();
}

YoungDiagram from_steps(const StepSet& steps) {
  StepSet west = steps.direction == StepDirection::West ? steps : steps.complement();
  const BoxContext& ctx = west.context;
  std::vector<int> rows;
  int x = ctx.columns();
  for (int pos = 1; pos <= ctx.n; ++pos) {
    if (west.members.count(pos)) {
      --x;
    } else {
      rows.push_back(x);
    }
  }
  return YoungDiagram(ctx, std::move(rows));
}

YoungDiagram from_west_steps(BoxContext ctx, const std::set<int>& west) {
  return from_steps(StepSet(ctx, StepDirection::West, west));
}

namespace {

int cyclic(int position, int n) { return ((position - 1) % n + n) % n + 1; }

}  // namespace

YoungDiagram boundary_rectangle(int i, BoxContext ctx) {
  if (i < 0 || i >= ctx.n) throw InvalidArgumentError("boundary index outside 0..n-1");
  std::set<int> west;
  for (int t = 1; t <= ctx.k; ++t) west.insert(cyclic(i + t, ctx.n));
  return from_west_steps(ctx, west);
}

YoungDiagram boundary_rectangle_box(int i, BoxContext ctx) {
  if (i < 0 || i >= ctx.n) throw InvalidArgumentError("boundary index outside 0..n-1");
  std::set<int> west;
  for (int t = 1; t < ctx.k; ++t) west.insert(cyclic(i + t, ctx.n));
  west.insert(cyclic(i + ctx.k + 1, ctx.n));
  return from_west_steps(ctx, west);
}

int max_diag(const YoungDiagram& mu, const YoungDiagram& lambda) {
  if (!(mu.context() == lambda.context())) throw InvalidArgumentError("diagrams live in different boxes");
  auto inner = lambda.cells();
  std::map<int, int> per_line;
  int best = 0;
  for (const auto& [i, j] : mu.cells()) {
    if (inner.count({i, j})) continue;
    best = std::max(best, ++per_line[i - j]);
  }
  return best;
}

YoungDiagram sigma_reflect(const YoungDiagram& lambda) {
  StepSet south = to_steps(lambda, StepDirection::South);
  return from_west_steps(lambda.context().transposed(), south.members);
}

std::vector<int> valuation_vector(const YoungDiagram& lambda, const std::vector<YoungDiagram>& seed) {
  std::vector<int> out;
  out.reserve(seed.size());
  for (const auto& mu : seed) out.push_back(max_diag(lambda, mu));
  return out;
}

int theta_valuation_delta(int i, int j, BoxContext ctx) {
  YoungDiagram target = boundary_rectangle(j, ctx);
  return max_diag(boundary_rectangle_box(i, ctx), target) - max_diag(boundary_rectangle(i, ctx), target);
}

Integer schur_dimension(const std::vector<int>& rows, int n) {
  std::vector<int> r = rows;
  while (!r.empty() && r.back() == 0) r.pop_back();
  if (n <= 0) throw InvalidArgumentError("schur_dimension needs n > 0");
  if (static_cast<int>(r.size()) > n) throw InvalidArgumentError("partition has more than n rows");
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i] > r[i - 1] || r[i] < 0) throw InvalidArgumentError("not a partition");
  }
  std::vector<int> conjugate(r.empty() ? 0 : r.front(), 0);
  for (int len : r) {
    for (int j = 0; j < len; ++j) ++conjugate[j];
  }
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (int j = 0; j < r[i]; ++j) {
      num *= n + j - static_cast<int>(i);
      den *= (r[i] - j - 1) + (conjugate[j] - static_cast<int>(i) - 1) + 1;
    }
  }
  return num / den;
}

Integer schur_dimension(const YoungDiagram& lambda, int n) { return schur_dimension(lambda.rows(), n); }

std::vector<YoungDiagram> all_diagrams(BoxContext ctx) {
  std::vector<YoungDiagram> out;
  std::vector<int> rows;
  auto rec = [&](auto&& self, int limit) -> void {
    if (static_cast<int>(rows.size()) == ctx.rows()) {
      out.emplace_back(ctx, rows);
      return;
    }
    for (int v = 0; v <= limit; ++v) {
      rows.push_back(v);
      self(self, v);
      rows.pop_back();
    }
  };
  rec(rec, ctx.columns());
  std::sort(out.begin(), out.end(), [](const YoungDiagram& a, const YoungDiagram& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.rows() < b.rows();
  });
  return out;
}

std::vector<YoungDiagram> rectangles(BoxContext ctx) {
  std::vector<YoungDiagram> out{YoungDiagram::empty(ctx)};
  for (int a = 1; a <= ctx.rows(); ++a) {
    for (int b = 1; b <= ctx.columns(); ++b) out.push_back(YoungDiagram::rectangle(ctx, a, b));
  }
  return out;
}

std::string to_string(const YoungDiagram& lambda) {
  if (lambda.is_empty()) return "()";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < lambda.rows().size(); ++i) {
    if (i) os << ',';
    os << lambda.rows()[i];
  }
  os << ')';
  return os.str();
}

}  // namespace fano
