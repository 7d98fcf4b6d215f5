#include "mex/sbo.hpp"

#include <queue>
#include <string>

namespace mex::sbo {

namespace {

void require_bijection(const std::map<Element, Element>& phi, ElementSet from, ElementSet to, const char* name) {
  ElementSet dom;
  ElementSet img;
  for (auto [e, f] : phi) {
    dom.insert(e);
    img.insert(f);
  }
  if (dom != from || img != to || static_cast<int>(phi.size()) != to.size()) {
    throw Error(ErrorCode::InvalidInput, std::string(name) + " is not a bijection from the red to the blue side");
  }
}

std::map<Element, Element> part_map(const std::vector<ElementSet>& parts, const BasisPair& p) {
  std::map<Element, Element> phi;
  for (ElementSet part : parts) {
    const auto red = (p.red & part).elements();
    const auto blue = (p.blue & part).elements();
    if (red.size() != blue.size()) {
      throw Error(ErrorCode::DomainError, "a part holds " + std::to_string(red.size()) + " red and " +
                                              std::to_string(blue.size()) + " blue elements");
    }
    for (std::size_t i = 0; i < red.size(); ++i) phi[red[i]] = blue[i];
  }
  return phi;
}

/// p1 -> (x, complement) by phi1, then on to p2 by phi2.
ExchangeSequence route(const Matroid& m, const BasisPair& p1, const BasisPair& p2, const SboBijections& bij,
                       ElementSet x) {
  ExchangeSequence seq;
  BasisPair cur = p1;
  for (Element e : (p1.red - x).elements()) {
    const Exchange step{e, bij.phi1.at(e)};
    cur = apply_exchange(m, cur, step);
    seq.push_back(step);
  }
  for (Element f : (p2.red - x).elements()) {
    const Exchange step{bij.phi2.at(f), f};
    cur = apply_exchange(m, cur, step);
    seq.push_back(step);
  }
  if (cur != p2) throw Error(ErrorCode::InternalBoundViolation, "route does not end at the target pair");
  return seq;
}

}  // namespace

SboBipartition sbo_bipartition(const BasisPair& p1, const BasisPair& p2, const SboBijections& bij) {
  if (!compatible(p1, p2)) throw Error(ErrorCode::IncompatiblePairs, "pairs cover different sets");
  require_bijection(bij.phi1, p1.red, p1.blue, "phi1");
  require_bijection(bij.phi2, p2.red, p2.blue, "phi2");

  std::vector<std::vector<Element>> adj(kMaxGround);
  auto link = [&](Element a, Element b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (auto [e, f] : bij.phi1) link(e, f);
  for (auto [e, f] : bij.phi2) link(e, f);

  std::vector<int> side(kMaxGround, -1);
  SboBipartition out;
  // Ascending R1 order: each component is first entered at its smallest R1 element.
  for (Element root : p1.red.elements()) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::queue<Element> q;
    q.push(root);
    while (!q.empty()) {
      const Element v = q.front();
      q.pop();
      (side[v] == 0 ? out.s : out.t).insert(v);
      for (Element u : adj[v]) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          q.push(u);
        } else if (side[u] == side[v]) {
          throw Error(ErrorCode::NotBipartite, "odd cycle through element " + std::to_string(v));
        }
      }
    }
  }
  return out;
}

SboResult solve_sbo(const Matroid& m, const BasisPair& p1, const BasisPair& p2, const SboBijections& bij,
                    const WeightFn& w) {
  if (!is_valid_pair(m, p1) || !is_valid_pair(m, p2)) throw Error(ErrorCode::NotABasis, "pairs must be disjoint bases");
  if (w.size() != m.ground_size()) throw Error(ErrorCode::InvalidInput, "weight vector has wrong length");
  const SboBipartition st = sbo_bipartition(p1, p2, bij);

  SboResult res;
  res.weight_via_s = w.sum(p1.red ^ st.s) + w.sum(p2.red ^ st.s);
  res.weight_via_t = w.sum(p1.red ^ st.t) + w.sum(p2.red ^ st.t);
  res.via_s = res.weight_via_s <= res.weight_via_t;
  res.sequence = route(m, p1, p2, bij, res.via_s ? st.s : st.t);

  const SequenceReport rep = verify_sequence(m, p1, p2, res.sequence, w);
  const Rational expected = res.via_s ? res.weight_via_s : res.weight_via_t;
  if (!rep.valid || rep.weight != expected || rep.weight > w.sum(p1.united()) || rep.max_usage > 2) {
    throw Error(ErrorCode::InternalBoundViolation, "route violates the weight or usage bound");
  }
  return res;
}

SboBijections partition_bijection(const std::vector<ElementSet>& parts, const BasisPair& p1, const BasisPair& p2) {
  return {part_map(parts, p1), part_map(parts, p2)};
}

}  // namespace mex::sbo
