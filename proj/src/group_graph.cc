// Copyright 2026 The igcr Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "igcr/group_graph.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

#include "igcr/errors.h"

namespace igcr {

GroupGraph BuildGroupGraph(const IpInstance& instance, const Basis& basis,
                           std::span<const Rational> d) {
  GroupGraph g;
  g.snf_ = ComputeSmithNormalForm(basis.basis_matrix());
  const IntVector& w = g.snf_.w;
  const Integer count = abs(basis.determinant());
  if (cmp(count, kMaxGroupVertices) > 0) {
    throw CapacityError("group graph would have " + ToString(count) +
                            " vertices",
                        kMaxGroupVertices);
  }
  g.vertex_count_ = count.get_ui();

  const IntMatrix sa_n = Multiply(g.snf_.s, basis.nonbasic_matrix());
  g.nonbasic_ = basis.nonbasic();
  for (std::size_t j = 0; j < sa_n.cols(); ++j) {
    g.generators_.push_back(CanonicalMod(sa_n.column(j), w));
  }
  g.weights_ = ReducedCosts(instance, basis, d);
  g.destination_label_ = CanonicalMod(Multiply(g.snf_.s, instance.b()), w);

  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] > 1) {
      g.dims_.push_back(k);
      g.radix_.push_back(w[k].get_ui());
    }
  }
  g.stride_.assign(g.dims_.size(), 1);
  for (std::size_t k = g.dims_.size(); k-- > 1;) {
    g.stride_[k - 1] = g.stride_[k] * g.radix_[k];
  }
  for (const IntVector& gen : g.generators_) {
    std::vector<std::size_t> digits(g.dims_.size());
    for (std::size_t k = 0; k < g.dims_.size(); ++k) {
      digits[k] = gen[g.dims_[k]].get_ui();
    }
    g.generator_digits_.push_back(std::move(digits));
  }
  g.destination_ = g.Encode(g.destination_label_);
  return g;
}

VertexId GroupGraph::Successor(VertexId u, std::size_t cls) const {
  const auto& step = generator_digits_[cls];
  VertexId v = u;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    const std::size_t digit = (u / stride_[k]) % radix_[k];
    std::size_t next = digit + step[k];
    if (next >= radix_[k]) next -= radix_[k];
    v = v - digit * stride_[k] + next * stride_[k];
  }
  return v;
}

IntVector GroupGraph::Label(VertexId u) const {
  IntVector label(snf_.w.size(), Integer(0));
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    label[dims_[k]] = static_cast<unsigned long>((u / stride_[k]) % radix_[k]);
  }
  return label;
}

VertexId GroupGraph::Encode(std::span<const Integer> label) const {
  if (label.size() != snf_.w.size()) throw DomainError("label length");
  VertexId id = 0;
  for (std::size_t k = 0; k < label.size(); ++k) {
    if (sgn(label[k]) < 0 || label[k] >= snf_.w[k]) {
      throw DomainError("label is not a canonical residue vector");
    }
  }
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    id += label[dims_[k]].get_ui() * stride_[k];
  }
  return id;
}

std::string GroupGraph::LabelString(VertexId u) const {
  const IntVector label = Label(u);
  return FormatVector(label);
}

const char* ToString(PathCounts::Status status) {
  switch (status) {
    case PathCounts::Status::kOptimal:
      return "optimal";
    case PathCounts::Status::kUnreachable:
      return "unreachable";
    case PathCounts::Status::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNoClass = static_cast<std::size_t>(-1);

struct SearchState {
  std::vector<Rational> dist;
  std::vector<bool> reached;
  std::vector<VertexId> pred;
  std::vector<std::size_t> pred_class;

  explicit SearchState(std::size_t n)
      : dist(n), reached(n, false), pred(n, 0), pred_class(n, kNoClass) {}
};

PathCounts Reconstruct(const GroupGraph& graph, const SearchState& state) {
  PathCounts out;
  out.status = PathCounts::Status::kOptimal;
  out.counts.assign(graph.num_classes(), Integer(0));
  out.cost = state.dist[graph.destination()];
  VertexId v = graph.destination();
  std::size_t steps = 0;
  while (v != graph.source()) {
    if (++steps > graph.vertex_count()) {
      throw std::logic_error("predecessor walk did not reach the source");
    }
    out.counts[state.pred_class[v]] += 1;
    v = state.pred[v];
  }
  return out;
}

PathCounts LabelSetting(const GroupGraph& graph) {
  SearchState state(graph.vertex_count());
  using Entry = std::pair<Rational, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<bool> settled(graph.vertex_count(), false);
  state.dist[graph.source()] = 0;
  state.reached[graph.source()] = true;
  heap.emplace(Rational(0), graph.source());
  while (!heap.empty()) {
    auto [du, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = true;
    if (u == graph.destination()) break;
    for (std::size_t cls = 0; cls < graph.num_classes(); ++cls) {
      const VertexId v = graph.Successor(u, cls);
      if (settled[v]) continue;
      Rational cand = du + graph.weights()[cls];
      if (!state.reached[v] || cand < state.dist[v]) {
        state.reached[v] = true;
        state.dist[v] = cand;
        state.pred[v] = u;
        state.pred_class[v] = cls;
        heap.emplace(std::move(cand), v);
      }
    }
  }
  if (!state.reached[graph.destination()]) {
    return PathCounts{PathCounts::Status::kUnreachable, {}, Rational(0)};
  }
  return Reconstruct(graph, state);
}

PathCounts LabelCorrecting(const GroupGraph& graph) {
  const std::size_t n = graph.vertex_count();
  SearchState state(n);
  state.dist[graph.source()] = 0;
  state.reached[graph.source()] = true;

  auto relax_round = [&]() {
    bool changed = false;
    for (VertexId u = 0; u < n; ++u) {
      if (!state.reached[u]) continue;
      for (std::size_t cls = 0; cls < graph.num_classes(); ++cls) {
        const VertexId v = graph.Successor(u, cls);
        Rational cand = state.dist[u] + graph.weights()[cls];
        if (!state.reached[v] || cand < state.dist[v]) {
          state.reached[v] = true;
          state.dist[v] = std::move(cand);
          state.pred[v] = u;
          state.pred_class[v] = cls;
          changed = true;
        }
      }
    }
    return changed;
  };

  bool changed = true;
  for (std::size_t round = 0; round + 1 < n && changed; ++round) {
    changed = relax_round();
  }
  if (!state.reached[graph.destination()]) {
    return PathCounts{PathCounts::Status::kUnreachable, {}, Rational(0)};
  }
  // Every reached vertex lies in the subgroup generated from the source, and
  // in a finite group each vertex of that subgroup reaches every other, so
  // any improvable vertex means a negative cycle through the destination's
  // component.
  if (changed && relax_round()) {
    return PathCounts{PathCounts::Status::kUnbounded, {}, Rational(0)};
  }
  return Reconstruct(graph, state);
}

}  // namespace

PathCounts ShortestPath(const GroupGraph& graph) {
  const bool nonnegative =
      std::all_of(graph.weights().begin(), graph.weights().end(),
                  [](const Rational& q) { return sgn(q) >= 0; });
  return nonnegative ? LabelSetting(graph) : LabelCorrecting(graph);
}

std::string ToDot(const GroupGraph& graph) {
  if (graph.vertex_count() > 64) {
    throw CapacityError("DOT export is limited to 64 vertices",
                        graph.vertex_count());
  }
  static const char* kStyles[] = {"solid", "dashed", "dotted", "bold"};
  std::string out = "digraph group {\n";
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    out += "  v" + std::to_string(u) + " [label=\"" + graph.LabelString(u) +
           "\"";
    if (u == graph.source()) out += ", shape=box";
    if (u == graph.destination()) out += ", peripheries=2";
    out += "];\n";
  }
  for (std::size_t cls = 0; cls < graph.num_classes(); ++cls) {
    for (VertexId u = 0; u < graph.vertex_count(); ++u) {
      out += "  v" + std::to_string(u) + " -> v" +
             std::to_string(graph.Successor(u, cls)) + " [style=" +
             kStyles[cls % 4] + ", label=\"" +
             ToString(graph.weights()[cls]) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace igcr
