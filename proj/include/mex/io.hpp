#pragma once

#include <json.hpp>
#include <memory>
#include <string>
#include <utility>
#include <variant>

#include "mex/core.hpp"
#include "mex/instances.hpp"
#include "mex/sbo.hpp"

namespace mex::io {

using Json = nlohmann::ordered_json;

using InstanceData = std::variant<GraphInstance, WheelInstance, UniformInstance, PartitionInstance,
                                  ElementarySplitInstance, SplitDirectSum, SpikeInstance>;

/// A loaded instance file together with its independence oracle.
struct Instance {
  InstanceData data;
  std::shared_ptr<const Matroid> matroid;

  /// "graph", "wheel", "uniform", "partition", "elementary_split", "split_sum" or "spike".
  std::string type() const;
};

Instance make_instance(InstanceData data);

/// Accepts a bare instance document or a bundle with an "instance" member.
/// Throws Error(InvalidInput) on malformed or structurally invalid input.
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

/// Accepts a bare pair document or a bundle with a "pair" member.
std::pair<BasisPair, BasisPair> pairs_from_json(const Matroid& m, const Json& j);
Json pairs_to_json(const Matroid& m, const BasisPair& p1, const BasisPair& p2);

/// Label -> "p/q". Every label of `m` must be present.
WeightFn weights_from_json(const Matroid& m, const Json& j);
Json weights_to_json(const Matroid& m, const WeightFn& w);

/// Reads the "sequence" member: an array of [out, in] label pairs.
ExchangeSequence sequence_from_json(const Matroid& m, const Json& j);
Json sequence_to_json(const Matroid& m, const ExchangeSequence& seq);
Json summary_to_json(const SequenceReport& rep);

/// {"phi1": {label: label}, "phi2": {label: label}}.
sbo::SboBijections bijections_from_json(const Matroid& m, const Json& j);

/// Throws Error(InvalidInput) if the file is missing or not JSON.
Json read_json_file(const std::string& path);

}  // namespace mex::io
