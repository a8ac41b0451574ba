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

// The group graph of a basis: vertices are the residue vectors
// Z_{w_1} x ... x Z_{w_m} of the Smith normal form of A_B, and each nonbasic
// column j contributes one arc class u -> u + g_j (mod w) of weight equal to
// its reduced cost. Arcs are implicit; only the generators are stored.
//
// Vertex ids are a mixed-radix encoding over the coordinates with w_k > 1,
// most significant coordinate first, so id order is the lexicographic order
// of labels.

#ifndef IGCR_GROUP_GRAPH_H_
#define IGCR_GROUP_GRAPH_H_

#include <cstddef>
#include <string>
#include <vector>

#include "igcr/exact_linalg.h"
#include "igcr/lp.h"
#include "igcr/rational.h"

namespace igcr {

// Largest vertex count a graph may have before construction refuses.
inline constexpr std::size_t kMaxGroupVertices = std::size_t{1} << 24;

using VertexId = std::size_t;

class GroupGraph {
 public:
  const SmithNormalForm& snf() const { return snf_; }
  const IntVector& w() const { return snf_.w; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t num_classes() const { return generators_.size(); }

  // Full-length canonical residues, one per nonbasic column.
  const std::vector<IntVector>& generators() const { return generators_; }
  const RationalVector& weights() const { return weights_; }
  const std::vector<std::size_t>& nonbasic() const { return nonbasic_; }

  VertexId source() const { return 0; }
  VertexId destination() const { return destination_; }
  const IntVector& destination_label() const { return destination_label_; }

  VertexId Successor(VertexId u, std::size_t cls) const;

  // Full-coordinate label (trivial w_k = 1 coordinates are reported as 0).
  IntVector Label(VertexId u) const;
  // Throws DomainError for a label that is not a canonical residue vector.
  VertexId Encode(std::span<const Integer> label) const;

  // "(1, 1)"
  std::string LabelString(VertexId u) const;

 private:
  friend GroupGraph BuildGroupGraph(const IpInstance&, const Basis&,
                                    std::span<const Rational>);

  SmithNormalForm snf_;
  std::vector<IntVector> generators_;
  RationalVector weights_;
  std::vector<std::size_t> nonbasic_;
  IntVector destination_label_;
  VertexId destination_ = 0;
  std::size_t vertex_count_ = 1;

  // Collapsed storage: positions with w_k > 1, their radices and strides.
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> stride_;
  // generator_digits_[cls][k] = g_cls restricted to dims_[k].
  std::vector<std::vector<std::size_t>> generator_digits_;
};

// Throws SingularMatrixError for a singular basis (through Basis) and
// CapacityError when |det A_B| exceeds kMaxGroupVertices.
GroupGraph BuildGroupGraph(const IpInstance& instance, const Basis& basis,
                           std::span<const Rational> d);

struct PathCounts {
  enum class Status { kOptimal, kUnreachable, kUnbounded };

  Status status = Status::kUnreachable;
  // Arcs traversed per class (x_N); filled when kOptimal.
  IntVector counts;
  Rational cost;
};

const char* ToString(PathCounts::Status status);

// Minimum-weight source-to-destination path. Uses a label-setting search
// when all weights are nonnegative and label-correcting rounds with one
// extra negative-cycle detection round otherwise.
PathCounts ShortestPath(const GroupGraph& graph);

// Graphviz rendering; one edge style per arc class. Throws CapacityError
// for graphs with more than 64 vertices.
std::string ToDot(const GroupGraph& graph);

}  // namespace igcr

#endif  // IGCR_GROUP_GRAPH_H_
