#include "mex/io.hpp"

#include <fstream>

namespace mex::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing member \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return member(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("member \"") + key + "\" has the wrong type");
  }
}

Element index_of(const std::vector<std::string>& labels, const std::string& l) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == l) return static_cast<Element>(i);
  }
  bad("unknown label \"" + l + "\"");
}

ElementSet set_from(const std::vector<std::string>& labels, const Json& arr) {
  if (!arr.is_array()) bad("expected an array of labels");
  ElementSet s;
  for (const auto& l : arr) {
    if (!l.is_string()) bad("labels must be strings");
    const Element e = index_of(labels, l.get<std::string>());
    if (s.contains(e)) bad("label \"" + l.get<std::string>() + "\" repeated");
    s.insert(e);
  }
  return s;
}

Json set_to(const std::vector<std::string>& labels, ElementSet s) {
  Json arr = Json::array();
  for (Element e : s.elements()) arr.push_back(labels[e]);
  return arr;
}

std::vector<std::string> labels_or(const Json& j, std::vector<std::string> fallback) {
  if (!j.contains("labels")) return fallback;
  auto labels = get<std::vector<std::string>>(j, "labels");
  if (labels.size() != fallback.size()) {
    bad("expected " + std::to_string(fallback.size()) + " labels, got " + std::to_string(labels.size()));
  }
  return labels;
}

std::vector<ElementSet> sets_from(const std::vector<std::string>& labels, const Json& arr) {
  if (!arr.is_array()) bad("expected an array of label arrays");
  std::vector<ElementSet> out;
  for (const auto& s : arr) out.push_back(set_from(labels, s));
  return out;
}

Json sets_to(const std::vector<std::string>& labels, const std::vector<ElementSet>& sets) {
  Json arr = Json::array();
  for (ElementSet s : sets) arr.push_back(set_to(labels, s));
  return arr;
}

void require_valid(const std::vector<std::string>& violations) {
  if (violations.empty()) return;
  std::string msg = "invalid instance:";
  for (const auto& v : violations) msg += " " + v + ";";
  bad(msg);
}

int checked_size(int n, int lo, const char* what) {
  if (n < lo || n > kMaxGround) bad(std::string(what) + " out of range");
  return n;
}

Instance parse_instance(const Json& j) {
  const auto type = get<std::string>(j, "type");
  if (type == "wheel") {
    WheelInstance w = wheel(checked_size(get<int>(j, "n"), 4, "wheel size"));
    w.graph.labels = labels_or(j, w.graph.labels);
    require_valid(validate_instance(w));
    return make_instance(w);
  }
  if (type == "graph") {
    GraphInstance g;
    g.vertices = get<int>(j, "vertices");
    g.edges = get<std::vector<std::pair<int, int>>>(j, "edges");
    checked_size(static_cast<int>(g.edges.size()), 0, "edge count");
    std::vector<std::string> fallback;
    for (std::size_t i = 1; i <= g.edges.size(); ++i) fallback.push_back("e" + std::to_string(i));
    g.labels = labels_or(j, fallback);
    require_valid(validate_instance(g));
    return make_instance(g);
  }
  if (type == "uniform") {
    const int size = checked_size(get<int>(j, "size"), 1, "uniform size");
    UniformInstance u = uniform(get<int>(j, "rank"), size);
    if (u.rank < 0 || u.rank > size) bad("uniform rank out of range");
    u.labels = labels_or(j, u.labels);
    return make_instance(u);
  }
  if (type == "partition") {
    PartitionInstance p;
    p.labels = get<std::vector<std::string>>(j, "labels");
    checked_size(static_cast<int>(p.labels.size()), 1, "ground size");
    p.parts = sets_from(p.labels, member(j, "parts"));
    p.capacities = get<std::vector<int>>(j, "capacities");
    require_valid(validate_instance(p));
    return make_instance(p);
  }
  if (type == "elementary_split") {
    ElementarySplitInstance s;
    s.labels = get<std::vector<std::string>>(j, "labels");
    s.ground = ElementSet::full(checked_size(static_cast<int>(s.labels.size()), 1, "ground size"));
    s.rank = get<int>(j, "rank");
    s.hyperedges = sets_from(s.labels, member(j, "hyperedges"));
    s.bounds = get<std::vector<int>>(j, "bounds");
    require_valid(validate_instance(s));
    return make_instance(s);
  }
  if (type == "split_sum") {
    SplitDirectSum d;
    d.labels = get<std::vector<std::string>>(j, "labels");
    checked_size(static_cast<int>(d.labels.size()), 1, "ground size");
    if (j.contains("elementary") && !j.at("elementary").is_null()) {
      const Json& e = j.at("elementary");
      ElementarySplitInstance s;
      s.labels = d.labels;
      s.ground = set_from(d.labels, member(e, "ground"));
      s.rank = get<int>(e, "rank");
      s.hyperedges = sets_from(d.labels, member(e, "hyperedges"));
      s.bounds = get<std::vector<int>>(e, "bounds");
      d.elementary = s;
    }
    if (j.contains("uniforms")) {
      for (const auto& u : j.at("uniforms")) d.uniforms.push_back({set_from(d.labels, member(u, "ground")), get<int>(u, "rank")});
    }
    require_valid(validate_instance(d));
    return make_instance(d);
  }
  if (type == "spike") {
    const int r = get<int>(j, "r");
    if (r < 3 || 2 * r + 1 > kMaxGround) bad("spike rank out of range");
    SpikeInstance k = free_spike(r);
    k.labels = labels_or(j, k.labels);
    if (j.contains("c3")) {
      const Json& c3 = j.at("c3");
      if (c3.is_string()) {
        if (c3.get<std::string>() != "odd_x") bad("c3 rule must be \"odd_x\" or an explicit list");
        k.rule = SpikeInstance::C3Rule::OddX;
      } else {
        k.c3 = sets_from(k.labels, c3);
      }
    }
    require_valid(validate_instance(k));
    return make_instance(k);
  }
  bad("unknown instance type \"" + type + "\"");
}

}  // namespace

std::string Instance::type() const {
  static const char* names[] = {"graph", "wheel", "uniform", "partition", "elementary_split", "split_sum", "spike"};
  return names[data.index()];
}

Instance make_instance(InstanceData data) {
  Instance inst{std::move(data), nullptr};
  inst.matroid = std::visit(
      [](const auto& d) -> std::shared_ptr<const Matroid> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, GraphInstance>) return std::make_shared<GraphicMatroid>(d);
        if constexpr (std::is_same_v<T, WheelInstance>) return std::make_shared<GraphicMatroid>(d.graph);
        if constexpr (std::is_same_v<T, UniformInstance>) return std::make_shared<UniformMatroid>(d);
        if constexpr (std::is_same_v<T, PartitionInstance>) return std::make_shared<PartitionMatroid>(d);
        if constexpr (std::is_same_v<T, ElementarySplitInstance>) return std::make_shared<SplitMatroid>(as_direct_sum(d));
        if constexpr (std::is_same_v<T, SplitDirectSum>) return std::make_shared<SplitMatroid>(d);
        if constexpr (std::is_same_v<T, SpikeInstance>) return std::make_shared<SpikeMatroid>(d);
      },
      inst.data);
  return inst;
}

Instance instance_from_json(const Json& j) {
  if (j.is_object() && j.contains("instance")) return parse_instance(j.at("instance"));
  return parse_instance(j);
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["type"] = inst.type();
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, GraphInstance>) {
          j["vertices"] = d.vertices;
          j["edges"] = d.edges;
          j["labels"] = d.labels;
        } else if constexpr (std::is_same_v<T, WheelInstance>) {
          j["n"] = d.n;
          j["labels"] = d.graph.labels;
        } else if constexpr (std::is_same_v<T, UniformInstance>) {
          j["rank"] = d.rank;
          j["size"] = d.labels.size();
          j["labels"] = d.labels;
        } else if constexpr (std::is_same_v<T, PartitionInstance>) {
          j["labels"] = d.labels;
          j["parts"] = sets_to(d.labels, d.parts);
          j["capacities"] = d.capacities;
        } else if constexpr (std::is_same_v<T, ElementarySplitInstance>) {
          j["labels"] = d.labels;
          j["rank"] = d.rank;
          j["hyperedges"] = sets_to(d.labels, d.hyperedges);
          j["bounds"] = d.bounds;
        } else if constexpr (std::is_same_v<T, SplitDirectSum>) {
          j["labels"] = d.labels;
          if (d.elementary) {
            j["elementary"] = {{"ground", set_to(d.labels, d.elementary->ground)},
                               {"rank", d.elementary->rank},
                               {"hyperedges", sets_to(d.labels, d.elementary->hyperedges)},
                               {"bounds", d.elementary->bounds}};
          }
          j["uniforms"] = Json::array();
          for (const auto& u : d.uniforms) j["uniforms"].push_back({{"ground", set_to(d.labels, u.ground)}, {"rank", u.rank}});
        } else if constexpr (std::is_same_v<T, SpikeInstance>) {
          j["r"] = d.r;
          j["labels"] = d.labels;
          if (d.rule == SpikeInstance::C3Rule::OddX) {
            j["c3"] = "odd_x";
          } else {
            j["c3"] = sets_to(d.labels, d.c3);
          }
        }
      },
      inst.data);
  return j;
}

std::pair<BasisPair, BasisPair> pairs_from_json(const Matroid& m, const Json& j) {
  const Json& p = j.is_object() && j.contains("pair") ? j.at("pair") : j;
  auto part = [&](const char* key) { return set_from(m.labels(), member(p, key)); };
  const BasisPair p1{part("R1"), part("B1")};
  const BasisPair p2{part("R2"), part("B2")};
  for (const BasisPair* q : {&p1, &p2}) {
    if (!is_valid_pair(m, *q)) throw Error(ErrorCode::NotABasis, "pair sides must be disjoint bases");
  }
  if (!compatible(p1, p2)) throw Error(ErrorCode::IncompatiblePairs, "R1 ∪ B1 differs from R2 ∪ B2");
  return {p1, p2};
}

Json pairs_to_json(const Matroid& m, const BasisPair& p1, const BasisPair& p2) {
  return {{"R1", set_to(m.labels(), p1.red)},
          {"B1", set_to(m.labels(), p1.blue)},
          {"R2", set_to(m.labels(), p2.red)},
          {"B2", set_to(m.labels(), p2.blue)}};
}

WeightFn weights_from_json(const Matroid& m, const Json& j) {
  const Json& w = j.is_object() && j.contains("weights") ? j.at("weights") : j;
  if (!w.is_object()) bad("weights must map labels to rationals");
  std::vector<Rational> v(m.ground_size());
  std::vector<bool> seen(m.ground_size(), false);
  for (const auto& [label, value] : w.items()) {
    const Element e = index_of(m.labels(), label);
    if (value.is_string()) {
      v[e] = parse_rational(value.get<std::string>());
    } else if (value.is_number_integer()) {
      v[e] = Rational(value.get<std::int64_t>());
    } else {
      bad("weight of \"" + label + "\" must be a \"p/q\" string or an integer");
    }
    seen[e] = true;
  }
  for (Element e = 0; e < m.ground_size(); ++e) {
    if (!seen[e]) bad("no weight for \"" + m.label(e) + "\"");
  }
  try {
    return WeightFn(std::move(v));
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json weights_to_json(const Matroid& m, const WeightFn& w) {
  Json j = Json::object();
  for (Element e = 0; e < m.ground_size(); ++e) j[m.label(e)] = format_rational(w(e));
  return j;
}

ExchangeSequence sequence_from_json(const Matroid& m, const Json& j) {
  const Json& arr = j.is_array() ? j : member(j, "sequence");
  if (!arr.is_array()) bad("sequence must be an array");
  ExchangeSequence s;
  for (const auto& step : arr) {
    if (!step.is_array() || step.size() != 2 || !step[0].is_string() || !step[1].is_string()) {
      bad("each step must be a pair of labels");
    }
    s.push_back({index_of(m.labels(), step[0].get<std::string>()), index_of(m.labels(), step[1].get<std::string>())});
  }
  return s;
}

Json sequence_to_json(const Matroid& m, const ExchangeSequence& seq) {
  Json arr = Json::array();
  for (auto x : seq.steps) arr.push_back({m.label(x.out), m.label(x.in)});
  return arr;
}

Json summary_to_json(const SequenceReport& rep) {
  return {{"length", rep.length},
          {"weight", format_rational(rep.weight)},
          {"max_usage", rep.max_usage},
          {"monotone", rep.monotone}};
}

sbo::SboBijections bijections_from_json(const Matroid& m, const Json& j) {
  auto read = [&](const char* key) {
    std::map<Element, Element> phi;
    const Json& obj = member(j, key);
    if (!obj.is_object()) bad(std::string(key) + " must map labels to labels");
    for (const auto& [from, to] : obj.items()) {
      if (!to.is_string()) bad(std::string(key) + " values must be labels");
      phi[index_of(m.labels(), from)] = index_of(m.labels(), to.get<std::string>());
    }
    return phi;
  };
  return {read("phi1"), read("phi2")};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace mex::io
