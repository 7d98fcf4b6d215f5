#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mex/core.hpp"

namespace mex {

// ---------------------------------------------------------------------------
// Graphic matroids

struct GraphInstance {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
};

/// True iff the edges in `x` form a forest.
bool graphic_is_independent(const GraphInstance& g, ElementSet x);

class GraphicMatroid : public Matroid {
 public:
  explicit GraphicMatroid(GraphInstance g);
  int rank() const override { return rank_; }
  bool is_independent(ElementSet x) const override { return graphic_is_independent(graph_, x); }
  const GraphInstance& graph() const { return graph_; }

 private:
  GraphInstance graph_;
  int rank_;
};

/// Center is vertex 0, rim vertices v_1..v_{n-1} are 1..n-1. Spoke s_i joins
/// the center and v_i; rim r_i joins v_i and v_{i+1}, indices mod n-1.
/// Element ids: s_i -> i-1, r_i -> (n-1) + i-1.
struct WheelInstance {
  int n = 0;
  GraphInstance graph;

  int spokes() const { return n - 1; }
  /// Zero-based: spoke(i) is s_{i+1}.
  Element spoke(int i) const { return i; }
  /// Zero-based: rim(i) is r_{i+1}, joining v_{i+1} and v_{i+2}.
  Element rim(int i) const { return spokes() + i; }
  bool is_spoke(Element e) const { return e < spokes(); }
};

WheelInstance wheel(int n);
GraphInstance k4_graph();

// ---------------------------------------------------------------------------
// Uniform and partition matroids

struct UniformInstance {
  int rank = 0;
  std::vector<std::string> labels;
};

class UniformMatroid : public Matroid {
 public:
  explicit UniformMatroid(UniformInstance u);
  int rank() const override { return rank_; }
  bool is_independent(ElementSet x) const override { return x.size() <= rank_; }

 private:
  int rank_;
};

UniformInstance uniform(int rank, int size);

/// Parts partition the ground set; independent sets meet part i in at most
/// capacities[i] elements.
struct PartitionInstance {
  std::vector<ElementSet> parts;
  std::vector<int> capacities;
  std::vector<std::string> labels;
};

class PartitionMatroid : public Matroid {
 public:
  explicit PartitionMatroid(PartitionInstance p);
  int rank() const override { return rank_; }
  bool is_independent(ElementSet x) const override;
  const PartitionInstance& instance() const { return inst_; }

 private:
  PartitionInstance inst_;
  int rank_;
};

/// Random partition matroid whose parts have size 2c for capacity c in
/// [1, max_capacity], so the whole ground set splits into two disjoint bases.
PartitionInstance random_partition(std::mt19937_64& rng, int max_parts, int max_capacity);
/// Random coloring of a partition instance built by random_partition.
BasisPair random_partition_coloring(const PartitionInstance& p, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Split matroids

/// Independent sets: |X ∩ ground| ≤ rank and |X ∩ H_i| ≤ bounds[i]. The
/// ground is a subset of the global element ids so the same type serves as a
/// direct-sum component.
struct ElementarySplitInstance {
  ElementSet ground;
  int rank = 0;
  std::vector<ElementSet> hyperedges;
  std::vector<int> bounds;
  std::vector<std::string> labels;
};

bool split_is_independent(const ElementarySplitInstance& s, ElementSet x);

struct UniformComponent {
  ElementSet ground;
  int rank = 0;
};

struct SplitDirectSum {
  std::optional<ElementarySplitInstance> elementary;
  std::vector<UniformComponent> uniforms;
  std::vector<std::string> labels;

  int rank() const;
};

class SplitMatroid : public Matroid {
 public:
  explicit SplitMatroid(SplitDirectSum d);
  int rank() const override { return rank_; }
  bool is_independent(ElementSet x) const override;
  const SplitDirectSum& instance() const { return sum_; }

 private:
  SplitDirectSum sum_;
  int rank_;
};

SplitDirectSum as_direct_sum(ElementarySplitInstance e);
/// Appends U(rank, size) on fresh element ids labeled u1, u2, ...
SplitDirectSum with_uniform(SplitDirectSum d, int rank, int size);

/// K4 as a rank-3 elementary split matroid: the four triangles, bound 2,
/// labeled like k4_graph().
ElementarySplitInstance k4_as_split();

/// Random elementary split instance with 2*rank ≤ ground_size ≤ max_ground that
/// passes validation and admits at least one pair of disjoint bases.
ElementarySplitInstance random_elementary_split(std::mt19937_64& rng, int max_ground, int max_rank);

// ---------------------------------------------------------------------------
// Spikes

/// Tip t is element 0; leg i (1-based) is {x_i, y_i} = {2i-1, 2i}.
struct SpikeInstance {
  enum class C3Rule { Explicit, OddX };

  int r = 0;
  C3Rule rule = C3Rule::Explicit;
  /// Explicit leg-transversal circuits; ignored for OddX.
  std::vector<ElementSet> c3;
  std::vector<std::string> labels;

  Element tip() const { return 0; }
  Element x(int i) const { return 2 * i - 1; }
  Element y(int i) const { return 2 * i; }
  /// 1-based leg index of a non-tip element.
  int leg_of(Element e) const { return (e + 1) / 2; }
  Element partner(Element e) const { return e % 2 == 1 ? e + 1 : e - 1; }
  ElementSet leg(int i) const { return ElementSet{x(i), y(i)}; }
  int ground_size() const { return 2 * r + 1; }

  bool is_transversal(ElementSet z) const;
  bool in_c3(ElementSet z) const;
  /// All C3 members, materializing predicate rules.
  std::vector<ElementSet> c3_members() const;
};

bool spike_is_independent(const SpikeInstance& k, ElementSet x);

class SpikeMatroid : public Matroid {
 public:
  explicit SpikeMatroid(SpikeInstance k);
  int rank() const override { return spike_.r; }
  bool is_independent(ElementSet x) const override { return spike_is_independent(spike_, x); }
  const SpikeInstance& spike() const { return spike_; }

 private:
  SpikeInstance spike_;
};

SpikeInstance free_spike(int r);
SpikeInstance binary_spike(int r);

/// Base matroid with one element removed from the ground set.
class DeletionView : public Matroid {
 public:
  DeletionView(std::shared_ptr<const Matroid> base, Element deleted);
  int rank() const override { return base_->rank(); }
  bool is_independent(ElementSet x) const override {
    return !x.contains(deleted_) && base_->is_independent(x);
  }
  ElementSet ground() const override { return base_->ground().without(deleted_); }
  Element deleted() const { return deleted_; }
  const Matroid& base() const { return *base_; }

 private:
  std::shared_ptr<const Matroid> base_;
  Element deleted_;
};

// ---------------------------------------------------------------------------
// Validation: empty result iff every structural invariant holds.

std::vector<std::string> validate_instance(const GraphInstance& g);
std::vector<std::string> validate_instance(const WheelInstance& w);
std::vector<std::string> validate_instance(const ElementarySplitInstance& s);
std::vector<std::string> validate_instance(const SplitDirectSum& d);
std::vector<std::string> validate_instance(const PartitionInstance& p);
/// For r ≤ 5 also checks the circuit axioms of C1 ∪ C2 ∪ C3 ∪ C4 exhaustively.
std::vector<std::string> validate_instance(const SpikeInstance& k);

}  // namespace mex
