#include <algorithm>
#include <numeric>

#include "fanomirror/errors.hpp"
#include "fanomirror/grassmannian.hpp"

namespace fano {

namespace {

std::string variable_name(const YoungDiagram& label) {
  if (label.is_empty()) return "y_0";
  return "y_" + std::to_string(label.rows().size()) + "x" + std::to_string(label.rows().front());
}

void accumulate(ExponentVector& into, const ExponentVector& add, int times = 1) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += times * add[i];
}

}  // namespace

GridNetwork::GridNetwork(BoxContext ctx) : ctx_(ctx) {
  const int h = ctx.rows();
  const int w = ctx.columns();
  const YoungDiagram full = YoungDiagram::full(ctx);
  for (const auto& rect : rectangles(ctx)) {
    if (rect == full) continue;
    labels_.push_back(rect);
    variables_.push_back(variable_name(rect));
  }
  const std::size_t nvars = labels_.size();
  auto index_of = [&](const YoungDiagram& d) { return *variable_index(d); };

  for (int a = 0; a < h; ++a) {
    for (int b = 0; b < w; ++b) {
      GridFace f;
      f.a = a;
      f.b = b;
      f.weight.assign(nvars, 0);
      if (a == 0 && b == 0) {
        f.label = full;
        f.base = true;
      } else if (a == 0) {
        f.label = YoungDiagram::rectangle(ctx, h, b);
        for (int aa = 1; aa <= h; ++aa) --f.weight[index_of(YoungDiagram::rectangle(ctx, aa, b))];
      } else if (b == 0) {
        f.label = YoungDiagram::rectangle(ctx, a, w);
        for (int bb = 1; bb <= w; ++bb) --f.weight[index_of(YoungDiagram::rectangle(ctx, a, bb))];
      } else {
        f.label = YoungDiagram::rectangle(ctx, a, b);
        ++f.weight[index_of(f.label)];
      }
      faces_.push_back(std::move(f));
    }
  }
  GridFace outer;
  outer.outer = true;
  outer.label = YoungDiagram::empty(ctx);
  outer.weight.assign(nvars, 1);
  faces_.push_back(std::move(outer));

  // South edges leaving row a in column c carry the faces of row band a
  // from column c eastward; the edge into a sink at row r carries every face
  // from band r down, plus the outer face. West edges carry nothing.
  for (int a = 0; a < h; ++a) {
    for (int c = 1; c <= w; ++c) {
      ExponentVector wt(nvars, 0);
      for (int b = c; b < w; ++b) accumulate(wt, face(a, b).weight);
      edges_.push_back({{a, c}, {a + 1, c}, std::move(wt)});
    }
  }
  for (int r = 1; r <= h; ++r) {
    for (int c = 2; c <= w; ++c) edges_.push_back({{r, c}, {r, c - 1}, ExponentVector(nvars, 0)});
    ExponentVector wt = faces_.back().weight;
    for (int a = r; a < h; ++a) {
      for (int b = 0; b < w; ++b) accumulate(wt, face(a, b).weight);
    }
    edges_.push_back({{r, 1}, {r, 0}, std::move(wt)});
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_index_[{edges_[i].from, edges_[i].to}] = i;
}

const GridFace& GridNetwork::face(int a, int b) const { return faces_[a * ctx_.columns() + b]; }

std::optional<std::size_t> GridNetwork::variable_index(const YoungDiagram& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<GridVertex> GridNetwork::vertices() const {
  std::vector<GridVertex> out;
  for (int s = 1; s <= ctx_.k; ++s) out.push_back(source_vertex(s));
  for (int r = 1; r <= ctx_.rows(); ++r) {
    for (int c = 1; c <= ctx_.columns(); ++c) out.emplace_back(r, c);
  }
  for (int t = ctx_.k + 1; t <= ctx_.n; ++t) out.push_back(sink_vertex(t));
  return out;
}

GridVertex GridNetwork::source_vertex(int label) const {
  if (label < 1 || label > ctx_.k) throw InvalidArgumentError("not a source label");
  return {0, ctx_.k + 1 - label};
}

GridVertex GridNetwork::sink_vertex(int label) const {
  if (label <= ctx_.k || label > ctx_.n) throw InvalidArgumentError("not a sink label");
  return {label - ctx_.k, 0};
}

std::vector<GridPath> GridNetwork::paths(int source, int sink) const {
  const GridVertex start = source_vertex(source);
  const GridVertex stop = sink_vertex(sink);
  std::vector<GridPath> out;
  GridPath current{start, {1, start.second}};
  auto walk = [&](auto&& self) -> void {
    auto [r, c] = current.back();
    if (r == stop.first && c == 1) {
      current.push_back(stop);
      out.push_back(current);
      current.pop_back();
      return;
    }
    if (r < stop.first) {
      current.emplace_back(r + 1, c);
      self(self);
      current.pop_back();
    }
    if (c > 1) {
      current.emplace_back(r, c - 1);
      self(self);
      current.pop_back();
    }
  };
  walk(walk);
  return out;
}

ExponentVector GridNetwork::face_weight(const GridPath& path) const {
  const int h = ctx_.rows();
  const int w = ctx_.columns();
  std::vector<int> descent_column(h, 0);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i + 1].first == path[i].first + 1) descent_column[path[i].first] = path[i].second;
  }
  const int exit_row = path.back().first;
  ExponentVector out = faces_.back().weight;
  for (int a = 0; a < h; ++a) {
    for (int b = 0; b < w; ++b) {
      if (a >= exit_row || b >= descent_column[a]) accumulate(out, face(a, b).weight);
    }
  }
  return out;
}

ExponentVector GridNetwork::edge_weight(const GridPath& path) const {
  ExponentVector out(variables_.size(), 0);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto it = edge_index_.find({path[i], path[i + 1]});
    if (it == edge_index_.end()) throw InvalidArgumentError("path uses a missing edge");
    accumulate(out, edges_[it->second].weight);
  }
  return out;
}

GridNetwork build_rectangles_network(BoxContext ctx) { return GridNetwork(ctx); }

std::pair<std::vector<int>, std::vector<int>> flow_endpoints(const YoungDiagram& lambda) {
  const auto west = to_steps(lambda, StepDirection::West).members;
  std::vector<int> sources, sinks;
  for (int s = 1; s <= lambda.context().k; ++s) {
    if (!west.count(s)) sources.push_back(s);
  }
  for (int t : west) {
    if (t > lambda.context().k) sinks.push_back(t);
  }
  return {sources, sinks};
}

namespace {

// Enumerates vertex-disjoint families, calling visit(paths) for each.
template <typename Visit>
void for_each_flow(const GridNetwork& net, const YoungDiagram& lambda, Visit&& visit) {
  auto [sources, sinks] = flow_endpoints(lambda);
  const std::size_t m = sources.size();
  std::vector<std::vector<std::vector<GridPath>>> candidates(m, std::vector<std::vector<GridPath>>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) candidates[i][j] = net.paths(sources[i], sinks[j]);
  }
  const int h = net.context().rows();
  const int w = net.context().columns();
  std::vector<char> used_vertex((h + 1) * (w + 1), 0);
  std::vector<char> used_sink(m, 0);
  std::vector<const GridPath*> chosen;
  auto cell = [&](const GridVertex& v) -> char& { return used_vertex[v.first * (w + 1) + v.second]; };

  auto place = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      visit(chosen);
      return;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (used_sink[j]) continue;
      used_sink[j] = 1;
      for (const auto& path : candidates[i][j]) {
        bool clash = false;
        for (const auto& v : path) {
          if (cell(v)) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
        for (const auto& v : path) cell(v) = 1;
        chosen.push_back(&path);
        self(self, i + 1);
        chosen.pop_back();
        for (const auto& v : path) cell(v) = 0;
      }
      used_sink[j] = 0;
    }
  };
  place(place, 0);
}

}  // namespace

LaurentPolynomial flow_polynomial(const GridNetwork& net, const YoungDiagram& lambda) {
  if (!(lambda.context() == net.context())) throw InvalidArgumentError("diagram and network boxes differ");
  LaurentPolynomial out(net.variables());
  ExponentVector zero(net.variables().size(), 0);
  for_each_flow(net, lambda, [&](const std::vector<const GridPath*>& family) {
    ExponentVector e = zero;
    for (const auto* p : family) accumulate(e, net.face_weight(*p));
    out.add_term(e, 1);
  });
  return out;
}

std::size_t flow_count(const GridNetwork& net, const YoungDiagram& lambda) {
  std::size_t count = 0;
  for_each_flow(net, lambda, [&](const std::vector<const GridPath*>&) { ++count; });
  return count;
}

LaurentPolynomial path_matrix_determinant(const GridNetwork& net, const YoungDiagram& lambda) {
  auto [sources, sinks] = flow_endpoints(lambda);
  const std::size_t m = sources.size();
  std::vector<std::vector<LaurentPolynomial>> matrix(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      LaurentPolynomial entry(net.variables());
      for (const auto& p : net.paths(sources[i], sinks[j])) entry.add_term(net.edge_weight(p), 1);
      matrix[i].push_back(std::move(entry));
    }
  }
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPolynomial det(net.variables());
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) inversions += perm[a] > perm[b];
    }
    LaurentPolynomial term = LaurentPolynomial::constant(net.variables(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < m && !term.is_zero(); ++i) term = term * matrix[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace fano
