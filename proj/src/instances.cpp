#include "mex/instances.hpp"

#include <algorithm>
#include <numeric>

namespace mex {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

// ---------------------------------------------------------------------------

bool graphic_is_independent(const GraphInstance& g, ElementSet x) {
  UnionFind uf(g.vertices);
  for (Element e : x.elements()) {
    auto [u, v] = g.edges[e];
    if (!uf.unite(u, v)) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(GraphInstance g) : Matroid(g.labels), graph_(std::move(g)) {
  UnionFind uf(graph_.vertices);
  int components = graph_.vertices;
  for (auto [u, v] : graph_.edges) {
    if (uf.unite(u, v)) --components;
  }
  rank_ = graph_.vertices - components;
}

WheelInstance wheel(int n) {
  if (n < 4) throw Error(ErrorCode::DomainError, "wheel needs at least 4 vertices");
  const int m = n - 1;
  WheelInstance w;
  w.n = n;
  w.graph.vertices = n;
  for (int i = 1; i <= m; ++i) {
    w.graph.edges.emplace_back(0, i);
    w.graph.labels.push_back("s" + std::to_string(i));
  }
  for (int i = 1; i <= m; ++i) {
    w.graph.edges.emplace_back(i, i % m + 1);
    w.graph.labels.push_back("r" + std::to_string(i));
  }
  return w;
}

GraphInstance k4_graph() {
  // a,b,c is the path 0-1-2-3; e is the chord 0-3.
  GraphInstance g;
  g.vertices = 4;
  g.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {0, 3}, {1, 3}};
  g.labels = {"a", "b", "c", "d", "e", "f"};
  return g;
}

// ---------------------------------------------------------------------------

UniformMatroid::UniformMatroid(UniformInstance u) : Matroid(std::move(u.labels)), rank_(u.rank) {
  if (rank_ < 0 || rank_ > ground_size()) throw Error(ErrorCode::DomainError, "uniform rank out of range");
}

UniformInstance uniform(int rank, int size) {
  UniformInstance u;
  u.rank = rank;
  for (int i = 1; i <= size; ++i) u.labels.push_back(std::to_string(i));
  return u;
}

PartitionMatroid::PartitionMatroid(PartitionInstance p) : Matroid(p.labels), inst_(std::move(p)), rank_(0) {
  if (inst_.parts.size() != inst_.capacities.size()) {
    throw Error(ErrorCode::InvalidInput, "one capacity per part required");
  }
  for (std::size_t i = 0; i < inst_.parts.size(); ++i) rank_ += std::min(inst_.capacities[i], inst_.parts[i].size());
}

bool PartitionMatroid::is_independent(ElementSet x) const {
  for (std::size_t i = 0; i < inst_.parts.size(); ++i) {
    if ((x & inst_.parts[i]).size() > inst_.capacities[i]) return false;
  }
  return x.subset_of(ground());
}

PartitionInstance random_partition(std::mt19937_64& rng, int max_parts, int max_capacity) {
  if (max_parts < 1 || max_capacity < 1) throw Error(ErrorCode::DomainError, "random partition needs a part");
  PartitionInstance p;
  const int parts = std::uniform_int_distribution<int>(1, max_parts)(rng);
  int next = 0;
  for (int i = 0; i < parts; ++i) {
    const int c = std::uniform_int_distribution<int>(1, max_capacity)(rng);
    if (next + 2 * c > kMaxGround) break;
    ElementSet part;
    for (int j = 0; j < 2 * c; ++j) part.insert(next++);
    p.parts.push_back(part);
    p.capacities.push_back(c);
  }
  for (int e = 1; e <= next; ++e) p.labels.push_back(std::to_string(e));
  return p;
}

BasisPair random_partition_coloring(const PartitionInstance& p, std::mt19937_64& rng) {
  BasisPair out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    auto elems = p.parts[i].elements();
    std::shuffle(elems.begin(), elems.end(), rng);
    for (std::size_t j = 0; j < elems.size(); ++j) {
      (static_cast<int>(j) < p.capacities[i] ? out.red : out.blue).insert(elems[j]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool split_is_independent(const ElementarySplitInstance& s, ElementSet x) {
  if ((x & s.ground).size() > s.rank) return false;
  for (std::size_t i = 0; i < s.hyperedges.size(); ++i) {
    if ((x & s.hyperedges[i]).size() > s.bounds[i]) return false;
  }
  return true;
}

int SplitDirectSum::rank() const {
  int r = elementary ? elementary->rank : 0;
  for (const auto& u : uniforms) r += u.rank;
  return r;
}

SplitMatroid::SplitMatroid(SplitDirectSum d) : Matroid(d.labels), sum_(std::move(d)), rank_(sum_.rank()) {}

bool SplitMatroid::is_independent(ElementSet x) const {
  if (sum_.elementary && !split_is_independent(*sum_.elementary, x)) return false;
  for (const auto& u : sum_.uniforms) {
    if ((x & u.ground).size() > u.rank) return false;
  }
  return true;
}

SplitDirectSum as_direct_sum(ElementarySplitInstance e) {
  SplitDirectSum d;
  d.labels = e.labels;
  d.elementary = std::move(e);
  return d;
}

SplitDirectSum with_uniform(SplitDirectSum d, int rank, int size) {
  const int first = static_cast<int>(d.labels.size());
  if (rank < 0 || rank > size || first + size > kMaxGround) {
    throw Error(ErrorCode::DomainError, "uniform component does not fit");
  }
  UniformComponent u;
  u.rank = rank;
  int tag = 0;
  for (const auto& l : d.labels) tag += l.rfind('u', 0) == 0 ? 1 : 0;
  for (int i = 0; i < size; ++i) {
    u.ground.insert(first + i);
    d.labels.push_back("u" + std::to_string(tag + i + 1));
  }
  d.uniforms.push_back(u);
  return d;
}

ElementarySplitInstance k4_as_split() {
  const GraphInstance g = k4_graph();
  ElementarySplitInstance s;
  s.ground = ElementSet::full(6);
  s.rank = 3;
  s.labels = g.labels;
  // Each triangle of K4 misses exactly one vertex.
  for (int missing = 0; missing < 4; ++missing) {
    ElementSet tri;
    for (Element e = 0; e < 6; ++e) {
      if (g.edges[e].first != missing && g.edges[e].second != missing) tri.insert(e);
    }
    s.hyperedges.push_back(tri);
    s.bounds.push_back(2);
  }
  return s;
}

namespace {

bool has_disjoint_basis_pair(const ElementarySplitInstance& s) {
  const int n = static_cast<int>(s.labels.size());
  std::vector<ElementSet> bases;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    ElementSet x(bits);
    if (x.size() == s.rank && split_is_independent(s, x)) bases.push_back(x);
  }
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      if ((bases[i] & bases[j]).empty()) return true;
    }
  }
  return false;
}

}  // namespace

ElementarySplitInstance random_elementary_split(std::mt19937_64& rng, int max_ground, int max_rank) {
  if (max_rank < 2 || max_ground < 4) {
    throw Error(ErrorCode::DomainError, "random split instance needs max_rank >= 2 and max_ground >= 4");
  }
  for (;;) {
    const int r = std::uniform_int_distribution<int>(2, std::min(max_rank, max_ground / 2))(rng);
    const int n = std::uniform_int_distribution<int>(2 * r, max_ground)(rng);
    const int q = std::uniform_int_distribution<int>(1, 4)(rng);

    ElementarySplitInstance s;
    s.ground = ElementSet::full(n);
    s.rank = r;
    for (int i = 1; i <= n; ++i) s.labels.push_back("e" + std::to_string(i));
    for (int h = 0; h < q; ++h) {
      const int bound = std::uniform_int_distribution<int>(1, r - 1)(rng);
      const int size = std::uniform_int_distribution<int>(bound + 1, n - (r - bound))(rng);
      std::vector<Element> ids(n);
      std::iota(ids.begin(), ids.end(), 0);
      std::shuffle(ids.begin(), ids.end(), rng);
      ids.resize(size);
      s.hyperedges.push_back(ElementSet::of(ids));
      s.bounds.push_back(bound);
    }
    if (validate_instance(s).empty() && has_disjoint_basis_pair(s)) return s;
  }
}

// ---------------------------------------------------------------------------

bool SpikeInstance::is_transversal(ElementSet z) const {
  if (z.contains(tip())) return false;
  for (int i = 1; i <= r; ++i) {
    if ((z & leg(i)).size() != 1) return false;
  }
  return true;
}

bool SpikeInstance::in_c3(ElementSet z) const {
  if (!is_transversal(z)) return false;
  if (rule == C3Rule::OddX) {
    int xs = 0;
    for (int i = 1; i <= r; ++i) xs += z.contains(x(i)) ? 1 : 0;
    return xs % 2 == 1;
  }
  return std::find(c3.begin(), c3.end(), z) != c3.end();
}

std::vector<ElementSet> SpikeInstance::c3_members() const {
  if (rule == C3Rule::Explicit) return c3;
  std::vector<ElementSet> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << r); ++choice) {
    ElementSet z;
    for (int i = 1; i <= r; ++i) z.insert(((choice >> (i - 1)) & 1U) ? x(i) : y(i));
    if (in_c3(z)) out.push_back(z);
  }
  return out;
}

bool spike_is_independent(const SpikeInstance& k, ElementSet x) {
  if (x.size() > k.r) return false;
  int full_legs = 0;
  for (int i = 1; i <= k.r; ++i) {
    if (k.leg(i).subset_of(x)) {
      if (x.contains(k.tip())) return false;  // C1
      if (++full_legs >= 2) return false;     // C2
    }
  }
  // C3 members have size r, so containment means equality.
  if (x.size() == k.r && k.in_c3(x)) return false;
  return true;
}

SpikeMatroid::SpikeMatroid(SpikeInstance k) : Matroid(k.labels), spike_(std::move(k)) {
  if (spike_.r < 3) throw Error(ErrorCode::DomainError, "spikes need r >= 3");
}

namespace {

SpikeInstance spike_skeleton(int r) {
  if (r < 3) throw Error(ErrorCode::DomainError, "spikes need r >= 3");
  SpikeInstance k;
  k.r = r;
  k.labels.push_back("t");
  for (int i = 1; i <= r; ++i) {
    k.labels.push_back("x" + std::to_string(i));
    k.labels.push_back("y" + std::to_string(i));
  }
  return k;
}

}  // namespace

SpikeInstance free_spike(int r) { return spike_skeleton(r); }

SpikeInstance binary_spike(int r) {
  SpikeInstance k = spike_skeleton(r);
  k.rule = SpikeInstance::C3Rule::OddX;
  return k;
}

DeletionView::DeletionView(std::shared_ptr<const Matroid> base, Element deleted)
    : Matroid(base->labels()), base_(std::move(base)), deleted_(deleted) {
  if (deleted_ < 0 || deleted_ >= ground_size()) throw Error(ErrorCode::DomainError, "deleted element out of range");
}

// ---------------------------------------------------------------------------

std::vector<std::string> validate_instance(const GraphInstance& g) {
  std::vector<std::string> v;
  if (g.labels.size() != g.edges.size()) v.push_back("label count differs from edge count");
  if (g.edges.size() > static_cast<std::size_t>(kMaxGround)) v.push_back("more than 64 edges");
  UnionFind uf(std::max(g.vertices, 1));
  int components = g.vertices;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [a, b] = g.edges[i];
    if (a < 0 || b < 0 || a >= g.vertices || b >= g.vertices) {
      v.push_back("edge " + std::to_string(i) + " has an endpoint out of range");
      continue;
    }
    if (a == b) v.push_back("edge " + std::to_string(i) + " is a self-loop");
    if (uf.unite(a, b)) --components;
  }
  if (g.vertices > 0 && components != 1) v.push_back("graph is not connected");
  std::vector<std::string> sorted = g.labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) v.push_back("duplicate labels");
  return v;
}

std::vector<std::string> validate_instance(const WheelInstance& w) {
  std::vector<std::string> v = validate_instance(w.graph);
  if (w.n < 4) v.push_back("wheel needs at least 4 vertices");
  if (w.graph.edges.size() != static_cast<std::size_t>(2 * (w.n - 1))) v.push_back("wheel must have 2(n-1) edges");
  for (int i = 0; i < w.spokes() && v.empty(); ++i) {
    if (w.graph.edges[w.spoke(i)] != std::pair<int, int>{0, i + 1}) v.push_back("spoke labeling broken");
    if (w.graph.edges[w.rim(i)] != std::pair<int, int>{i + 1, (i + 1) % w.spokes() + 1}) {
      v.push_back("rim labeling broken");
    }
  }
  return v;
}

std::vector<std::string> validate_instance(const ElementarySplitInstance& s) {
  std::vector<std::string> v;
  if (s.hyperedges.size() != s.bounds.size()) {
    v.push_back("one bound per hyperedge required");
    return v;
  }
  if (s.ground.size() < s.rank) v.push_back("ground set smaller than rank");
  const std::size_t q = s.hyperedges.size();
  for (std::size_t i = 0; i < q; ++i) {
    const std::string hi = "H" + std::to_string(i + 1);
    if (!s.hyperedges[i].subset_of(s.ground)) v.push_back(hi + " leaves the ground set");
    if (s.bounds[i] < 0) v.push_back(hi + " has a negative bound");
    if ((s.ground - s.hyperedges[i]).size() + s.bounds[i] < s.rank) v.push_back("|S \\ " + hi + "| + r_i < r");
    for (std::size_t j = i + 1; j < q; ++j) {
      if ((s.hyperedges[i] & s.hyperedges[j]).size() > s.bounds[i] + s.bounds[j] - s.rank) {
        v.push_back("|" + hi + " ∩ H" + std::to_string(j + 1) + "| exceeds r_i + r_j - r");
      }
    }
  }
  return v;
}

std::vector<std::string> validate_instance(const SplitDirectSum& d) {
  std::vector<std::string> v;
  ElementSet covered;
  auto claim = [&](ElementSet part, const std::string& what) {
    if (!(covered & part).empty()) v.push_back(what + " overlaps another component");
    covered = covered | part;
  };
  if (d.elementary) {
    for (auto& msg : validate_instance(*d.elementary)) v.push_back("elementary: " + msg);
    claim(d.elementary->ground, "elementary component");
  }
  for (std::size_t i = 0; i < d.uniforms.size(); ++i) {
    const auto& u = d.uniforms[i];
    if (u.rank < 0 || u.rank > u.ground.size()) v.push_back("uniform component " + std::to_string(i) + " rank out of range");
    claim(u.ground, "uniform component " + std::to_string(i));
  }
  if (covered != ElementSet::full(static_cast<int>(d.labels.size()))) v.push_back("components do not partition the ground set");
  return v;
}

std::vector<std::string> validate_instance(const PartitionInstance& p) {
  std::vector<std::string> v;
  if (p.parts.size() != p.capacities.size()) v.push_back("one capacity per part required");
  ElementSet covered;
  for (const auto& part : p.parts) {
    if (!(covered & part).empty()) v.push_back("parts overlap");
    covered = covered | part;
  }
  if (covered != ElementSet::full(static_cast<int>(p.labels.size()))) v.push_back("parts do not cover the ground set");
  for (int c : p.capacities) {
    if (c < 0) v.push_back("negative capacity");
  }
  return v;
}

std::vector<std::string> validate_instance(const SpikeInstance& k) {
  std::vector<std::string> v;
  if (k.r < 3) {
    v.push_back("spikes need r >= 3");
    return v;
  }
  if (k.labels.size() != static_cast<std::size_t>(k.ground_size())) v.push_back("spike needs 2r+1 labels");
  for (ElementSet z : k.c3) {
    if (!k.is_transversal(z)) v.push_back("C3 member " + std::to_string(z.bits()) + " is not a leg transversal");
  }
  if (!v.empty() || k.r > 5) return v;

  // Exhaustive circuit-axiom check over the 2^(2r+1) subsets.
  const int n = k.ground_size();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<char> small_circuit(subsets, 0);
  std::vector<ElementSet> circuits;
  for (int i = 1; i <= k.r; ++i) {
    small_circuit[k.leg(i).with(k.tip()).bits()] = 1;
    for (int j = i + 1; j <= k.r; ++j) small_circuit[(k.leg(i) | k.leg(j)).bits()] = 1;
  }
  for (ElementSet z : k.c3_members()) small_circuit[z.bits()] = 1;
  // contains_small[X]: X contains a member of C1 ∪ C2 ∪ C3.
  std::vector<char> contains_small = small_circuit;
  for (int b = 0; b < n; ++b) {
    for (std::uint64_t x = 0; x < subsets; ++x) {
      if ((x >> b) & 1U) contains_small[x] |= contains_small[x ^ (std::uint64_t{1} << b)];
    }
  }
  std::vector<char> is_circuit = small_circuit;
  for (std::uint64_t x = 0; x < subsets; ++x) {
    if (ElementSet(x).size() == k.r + 1 && !contains_small[x]) is_circuit[x] = 1;
  }
  for (std::uint64_t x = 0; x < subsets; ++x) {
    if (is_circuit[x]) circuits.emplace_back(x);
  }
  std::vector<char> dependent = is_circuit;
  for (int b = 0; b < n; ++b) {
    for (std::uint64_t x = 0; x < subsets; ++x) {
      if ((x >> b) & 1U) dependent[x] |= dependent[x ^ (std::uint64_t{1} << b)];
    }
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i == j) continue;
      if (circuits[i].subset_of(circuits[j])) {
        v.push_back("circuit contained in another circuit");
        return v;
      }
      if (j < i) continue;
      const ElementSet both = circuits[i] | circuits[j];
      for (Element e : (circuits[i] & circuits[j]).elements()) {
        if (!dependent[both.without(e).bits()]) {
          v.push_back("circuit elimination fails for circuits " + std::to_string(circuits[i].bits()) + " and " +
                      std::to_string(circuits[j].bits()));
          return v;
        }
      }
    }
  }
  return v;
}

}  // namespace mex
