// Copyright 2026 The Portanet Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PORTANET_GRAPH_HPP_
#define PORTANET_GRAPH_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "portanet/tensor.hpp"
#include "portanet/types.hpp"

namespace portanet {

/// Shape and element type of one named tensor. Shapes are NHWC.
struct TensorSpec {
  std::string name;
  std::array<int64_t, 4> shape{1, 1, 1, 1};
  DataType dtype = DataType::F32;

  int64_t elements() const { return shape[0] * shape[1] * shape[2] * shape[3]; }
  int64_t bytes() const { return elements() * static_cast<int64_t>(byte_size(dtype)); }
  int64_t bytes_as(DataType dt) const { return elements() * static_cast<int64_t>(byte_size(dt)); }

  friend bool operator==(const TensorSpec&, const TensorSpec&) = default;
};

using AttrValue = std::variant<int64_t, std::string>;

/// Weight references attached to a node. Conv-family nodes carry a filter
/// and an optional bias; PRELU carries a per-channel slope; every other kind
/// carries nothing.
struct NodeWeights {
  std::optional<std::string> filter;
  std::optional<std::string> bias;
  std::optional<std::string> slope;

  bool any() const { return filter || bias || slope; }
  friend bool operator==(const NodeWeights&, const NodeWeights&) = default;
};

struct Node {
  std::string id;
  OpKind kind = OpKind::CONV_2D;
  std::map<std::string, AttrValue> attrs;
  std::vector<std::string> inputs;
  std::string output;
  NodeWeights weights;

  int64_t attr_int(const std::string& name) const;
  std::string attr_str(const std::string& name) const;
  PaddingMode attr_padding() const;
  bool has_attr(const std::string& name) const { return attrs.count(name) > 0; }

  friend bool operator==(const Node&, const Node&) = default;
};

/// One stored weight tensor: float values plus the seed it was initialized
/// from, when it came from the seeded initializer.
struct WeightTensor {
  Tensor values;
  std::optional<uint64_t> seed;
};

using WeightStore = std::map<std::string, WeightTensor>;

/// Directed acyclic operator graph. Passes treat graphs as immutable and
/// return new ones; a resolved graph additionally carries a TensorSpec for
/// every edge in `specs`.
struct Graph {
  std::vector<TensorSpec> inputs;
  std::vector<std::string> outputs;
  std::vector<Node> nodes;
  WeightStore weights;
  std::optional<uint64_t> seed;  // master seed used for synthetic weights

  // Filled by infer_shapes; covers graph inputs and every node output.
  std::map<std::string, TensorSpec> specs;

  bool is_input(const std::string& name) const;
  const TensorSpec* find_spec(const std::string& name) const;
  const TensorSpec& spec(const std::string& name) const;  // throws ShapeError
  const Node* find_producer(const std::string& tensor) const;
  bool has_kind(OpKind kind) const;
};

/// One broken invariant found by validate(). Violations are data, not
/// failures: a graph with violations is still a value you can inspect.
struct Violation {
  std::string rule;
  std::string node_id;  // empty for graph-level rules
  std::string message;
};

// Stable rule identifiers used in Violation::rule.
namespace rules {
inline constexpr const char* kMissingAttr = "MissingAttr";
inline constexpr const char* kUnknownAttr = "UnknownAttr";
inline constexpr const char* kBadAttrValue = "BadAttrValue";
inline constexpr const char* kDuplicateNodeId = "DuplicateNodeId";
inline constexpr const char* kDuplicateProducer = "DuplicateProducer";
inline constexpr const char* kUndefinedInput = "UndefinedInput";
inline constexpr const char* kMissingWeights = "MissingWeights";
inline constexpr const char* kUnexpectedWeights = "UnexpectedWeights";
inline constexpr const char* kUnknownWeightTensor = "UnknownWeightTensor";
inline constexpr const char* kBadWeightShape = "BadWeightShape";
inline constexpr const char* kCycle = "Cycle";
inline constexpr const char* kUnknownOutput = "UnknownOutput";
inline constexpr const char* kEmptyGraph = "EmptyGraph";
}  // namespace rules

/// Structural validation of every node and graph invariant. Returns an empty
/// list iff the graph is well formed.
std::vector<Violation> validate(const Graph& graph);

/// Throws SpecError listing the violations unless validate() is clean.
void require_valid(const Graph& graph, const std::string& context);

/// Deterministic topological order (Kahn's algorithm, ties broken by node
/// id). Returns indices into graph.nodes. Throws Error on a cycle.
std::vector<size_t> topo_order(const Graph& graph);

/// Graph with nodes reordered into the deterministic topological order.
Graph topo_sorted(const Graph& graph);

/// Resolves a TensorSpec for every edge. `input_shapes`, when non-empty,
/// replaces the shapes of the named graph inputs first, so the same topology
/// can be re-resolved at a different resolution. Idempotent.
Graph infer_shapes(const Graph& graph,
                   const std::map<std::string, std::array<int64_t, 4>>& input_shapes = {});

/// True once infer_shapes has populated a spec for every node output.
bool shapes_resolved(const Graph& graph);

/// Fills every referenced weight tensor that has no values yet with the
/// seeded uniform initializer (range +-1/sqrt(fan_in), PRELU slopes 0.25).
/// Existing values are left untouched.
void initialize_weights(Graph& graph, uint64_t master_seed);

/// Shapes the weight store entries for one node from resolved input specs
/// (e.g. conv filter HWIO). Used by builders and rewrite passes.
std::vector<int64_t> expected_filter_shape(const Node& node, const std::array<int64_t, 4>& input_shape);

}  // namespace portanet

#endif  // PORTANET_GRAPH_HPP_
