// mex: solve, verify and explore symmetric exchange sequences between
// compatible basis pairs. Every invocation prints one JSON object on stdout
// and a one-line summary on stderr.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "mex/io.hpp"
#include "mex/oracle.hpp"
#include "mex/sbo.hpp"
#include "mex/spike.hpp"
#include "mex/split.hpp"
#include "mex/wheel.hpp"

using namespace mex;
using io::Json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInvalid = 2, kPrecondition = 3, kInternal = 4, kNotFound = 5 };

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput:
    case ErrorCode::IncompatiblePairs:
    case ErrorCode::NotABasis:
    case ErrorCode::NotAColoring:
    case ErrorCode::DomainError:
    case ErrorCode::NotBipartite:
    case ErrorCode::InfeasibleExchange:
      return kInvalid;
    case ErrorCode::PreconditionViolation:
    case ErrorCode::OrientationMismatch:
    case ErrorCode::TooLarge:
      return kPrecondition;
    case ErrorCode::InternalBoundViolation:
    case ErrorCode::CompletionNotFound:
      return kInternal;
    case ErrorCode::NotFound:
      return kNotFound;
  }
  return kInternal;
}

struct Inputs {
  std::string instance;
  std::string pair;
  std::string weights;
  std::string sequence;
  std::string bijections;
  std::string solver = "auto";
  std::string out;
  int samples = 5;
  std::uint64_t seed = 1;
  std::string name;
  std::vector<int> params;
};

struct Loaded {
  io::Instance inst;
  BasisPair p1;
  BasisPair p2;
  WeightFn w;
};

Loaded load(const Inputs& in) {
  io::Instance inst = io::instance_from_json(io::read_json_file(in.instance));
  const Matroid& m = *inst.matroid;
  auto [p1, p2] = io::pairs_from_json(m, io::read_json_file(in.pair));
  WeightFn w = in.weights.empty() ? WeightFn::unit(m.ground_size())
                                  : io::weights_from_json(m, io::read_json_file(in.weights));
  return {std::move(inst), p1, p2, std::move(w)};
}

template <typename T>
const T& as(const io::Instance& inst, const std::string& solver) {
  if (const T* p = std::get_if<T>(&inst.data)) return *p;
  throw Error(ErrorCode::PreconditionViolation, "solver " + solver + " does not apply to " + inst.type() + " instances");
}

std::string infer_solver(const io::Instance& inst) {
  const std::string t = inst.type();
  if (t == "wheel" || t == "spike") return t;
  if (t == "partition") return "sbo";
  if (t == "uniform" || t == "elementary_split" || t == "split_sum") return "split";
  throw Error(ErrorCode::PreconditionViolation, "no solver for " + t + " instances; pick one with --solver");
}

Json cmd_solve(const Inputs& in) {
  const Loaded l = load(in);
  const Matroid& m = *l.inst.matroid;
  const std::string solver = in.solver == "auto" ? infer_solver(l.inst) : in.solver;
  const int r = m.rank();
  const int common = (l.p1.red & l.p2.red).size();

  ExchangeSequence seq;
  std::optional<int> length_bound;
  Json extra = Json::object();
  if (solver == "wheel") {
    seq = wheels::solve_wheel(as<WheelInstance>(l.inst, solver), l.p1, l.p2, l.w);
    length_bound = r;
  } else if (solver == "spike") {
    seq = spike::solve_spike(as<SpikeInstance>(l.inst, solver), l.p1, l.p2, l.w);
    length_bound = r;
  } else if (solver == "split") {
    SplitDirectSum d;
    if (const auto* u = std::get_if<UniformInstance>(&l.inst.data)) {
      d = with_uniform(SplitDirectSum{}, u->rank, static_cast<int>(u->labels.size()));
    } else if (const auto* e = std::get_if<ElementarySplitInstance>(&l.inst.data)) {
      d = as_direct_sum(*e);
    } else {
      d = as<SplitDirectSum>(l.inst, solver);
    }
    seq = split::solve_split(d, l.p1, l.p2, l.w);
    length_bound = std::min(r, r - common + 1);
  } else if (solver == "sbo") {
    sbo::SboBijections bij;
    if (!in.bijections.empty()) {
      bij = io::bijections_from_json(m, io::read_json_file(in.bijections));
    } else if (const auto* p = std::get_if<PartitionInstance>(&l.inst.data)) {
      bij = sbo::partition_bijection(p->parts, l.p1, l.p2);
    } else {
      throw Error(ErrorCode::PreconditionViolation, "sbo needs --bijections for " + l.inst.type() + " instances");
    }
    const sbo::SboResult res = sbo::solve_sbo(m, l.p1, l.p2, bij, l.w);
    seq = res.sequence;
    extra = {{"route", res.via_s ? "S" : "T"},
             {"weight_via_s", format_rational(res.weight_via_s)},
             {"weight_via_t", format_rational(res.weight_via_t)}};
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown solver " + solver);
  }

  const SequenceReport rep = verify_sequence(m, l.p1, l.p2, seq, l.w);
  const Rational weight_bound = l.w.sum(l.p1.united());
  const bool ok = rep.valid && (!length_bound || static_cast<int>(rep.length) <= *length_bound) &&
                  rep.weight <= weight_bound && rep.max_usage <= 2;
  if (!ok) throw Error(ErrorCode::InternalBoundViolation, "solver output fails its bounds");
  const auto [lb_len, lb_weight] = lower_bounds(l.p1, l.p2, l.w);

  Json j;
  j["command"] = "solve";
  j["solver"] = solver;
  j["sequence"] = io::sequence_to_json(m, seq);
  j["summary"] = io::summary_to_json(rep);
  j["bounds"] = {{"length", length_bound ? Json(*length_bound) : Json(nullptr)},
                 {"weight", format_rational(weight_bound)},
                 {"usage", 2},
                 {"ok", ok}};
  j["lower_bounds"] = {{"length", lb_len}, {"weight", format_rational(lb_weight)}};
  if (!extra.empty()) j["sbo"] = extra;
  if (!in.out.empty()) {
    std::ofstream f(in.out);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + in.out);
    f << Json{{"sequence", j["sequence"]}, {"summary", j["summary"]}}.dump(2) << '\n';
  }
  std::cerr << "solve(" << solver << "): length " << rep.length
            << (length_bound ? " <= " + std::to_string(*length_bound) : std::string()) << ", weight "
            << format_rational(rep.weight) << " <= " << format_rational(weight_bound) << ", max usage "
            << rep.max_usage << (rep.monotone ? ", monotone" : "") << '\n';
  return j;
}

Json cmd_verify(const Inputs& in, int& code) {
  const Loaded l = load(in);
  const Matroid& m = *l.inst.matroid;
  const ExchangeSequence seq = io::sequence_from_json(m, io::read_json_file(in.sequence));
  const SequenceReport rep = verify_sequence(m, l.p1, l.p2, seq, l.w);
  Json j;
  j["command"] = "verify";
  j["valid"] = rep.valid;
  j["failure_step"] = rep.failure_step ? Json(*rep.failure_step) : Json(nullptr);
  j["summary"] = io::summary_to_json(rep);
  code = rep.valid ? kOk : kNegative;
  std::cerr << "verify: " << (rep.valid ? "valid" : "invalid");
  if (rep.failure_step) std::cerr << " at step " << *rep.failure_step;
  std::cerr << ", length " << rep.length << ", weight " << format_rational(rep.weight) << '\n';
  return j;
}

Json cmd_oracle(const Inputs& in) {
  const Loaded l = load(in);
  const Matroid& m = *l.inst.matroid;
  const auto d = oracle::exchange_distance(m, l.p1, l.p2);
  const auto wd = oracle::weighted_exchange_distance(m, l.p1, l.p2, l.w);
  const bool mono = oracle::exists_monotone_sequence(m, l.p1, l.p2);
  const auto [lb_len, lb_weight] = lower_bounds(l.p1, l.p2, l.w);
  Json j;
  j["command"] = "oracle";
  j["distance"] = d ? Json(*d) : Json(nullptr);
  j["weighted_distance"] = wd ? Json(format_rational(*wd)) : Json(nullptr);
  j["monotone_exists"] = mono;
  j["lower_bounds"] = {{"length", lb_len}, {"weight", format_rational(lb_weight)}};
  j["rank"] = m.rank();
  j["weight_of_union"] = format_rational(l.w.sum(l.p1.united()));
  std::cerr << "oracle: distance " << (d ? std::to_string(*d) : "unreachable") << ", weighted "
            << (wd ? format_rational(*wd) : "unreachable") << '\n';
  return j;
}

Json cmd_check(const Inputs& in, int& code) {
  const io::Instance inst = io::instance_from_json(io::read_json_file(in.instance));
  const Matroid& m = *inst.matroid;
  std::vector<WeightFn> ws{WeightFn::unit(m.ground_size())};
  for (WeightFn& w : oracle::random_weightings(m.ground_size(), in.samples, in.seed)) ws.push_back(std::move(w));
  const oracle::SweepReport rep = oracle::conjecture_sweep(m, ws);
  Json j;
  j["command"] = "check";
  j["type"] = inst.type();
  j["samples"] = in.samples;
  j["seed"] = in.seed;
  j["rank"] = rep.rank;
  j["pair_classes"] = rep.pair_classes;
  j["ordered_pairs"] = rep.ordered_pairs;
  j["weightings"] = rep.weightings;
  j["max_distance"] = rep.max_distance;
  j["max_length_ratio"] = format_rational(rep.max_length_ratio);
  j["max_weight_ratio"] = format_rational(rep.max_weight_ratio);
  if (rep.max_distance_witness) {
    j["max_distance_witness"] = io::pairs_to_json(m, rep.max_distance_witness->first, rep.max_distance_witness->second);
  }
  j["violation_count"] = rep.violations.size();
  j["violations"] = Json::array();
  for (std::size_t i = 0; i < rep.violations.size() && i < 20; ++i) {
    const auto& v = rep.violations[i];
    j["violations"].push_back({{"pair", io::pairs_to_json(m, v.p1, v.p2)}, {"weighting", v.weighting}, {"what", v.what}});
  }
  code = rep.violations.empty() ? kOk : kNegative;
  std::cerr << "check(" << inst.type() << "): " << rep.ordered_pairs << " ordered pairs x " << rep.weightings
            << " weightings, max distance " << rep.max_distance << " (rank " << rep.rank << "), "
            << rep.violations.size() << " violations\n";
  return j;
}

int param(const Inputs& in, std::size_t i, const std::string& what) {
  if (in.params.size() <= i) throw Error(ErrorCode::InvalidInput, in.name + " needs " + what);
  return in.params[i];
}

Json cmd_gen(const Inputs& in) {
  const std::string& n = in.name;
  auto bundle = [](const io::Instance& inst, const BasisPair& p1, const BasisPair& p2, Json witness) {
    return Json{{"instance", io::instance_to_json(inst)},
                {"pair", io::pairs_to_json(*inst.matroid, p1, p2)},
                {"witness", std::move(witness)}};
  };
  Json j;
  if (n == "wheel") {
    const int size = param(in, 0, "n");
    if (size < 4 || size > 33) throw Error(ErrorCode::DomainError, "wheel size must lie in [4, 33]");
    j = io::instance_to_json(io::make_instance(wheel(size)));
  } else if (n == "free_spike" || n == "binary_spike") {
    const int r = param(in, 0, "r");
    if (r < 3 || r > 31) throw Error(ErrorCode::DomainError, "spike rank must lie in [3, 31]");
    j = io::instance_to_json(io::make_instance(n == "free_spike" ? free_spike(r) : binary_spike(r)));
  } else if (n == "k4_graph") {
    j = io::instance_to_json(io::make_instance(k4_graph()));
  } else if (n == "k4_as_split") {
    j = io::instance_to_json(io::make_instance(k4_as_split()));
  } else if (n == "uniform") {
    const int r = param(in, 0, "rank");
    const int size = param(in, 1, "size");
    if (r < 0 || r > size || size < 1 || size > kMaxGround) throw Error(ErrorCode::DomainError, "uniform parameters out of range");
    j = io::instance_to_json(io::make_instance(uniform(r, size)));
  } else if (n == "random_split") {
    std::mt19937_64 rng(in.seed);
    j = io::instance_to_json(io::make_instance(random_elementary_split(rng, 8, 4)));
  } else if (n == "random_partition") {
    std::mt19937_64 rng(in.seed);
    const PartitionInstance p = random_partition(rng, 4, 2);
    const BasisPair p1 = random_partition_coloring(p, rng);
    const BasisPair p2 = random_partition_coloring(p, rng);
    j = bundle(io::make_instance(p), p1, p2, Json::object());
  } else if (n == "gap_pair") {
    const WheelInstance w = wheel(param(in, 0, "n"));
    const auto wit = oracle::gap_search(w);
    j = bundle(io::make_instance(w), wit.p1, wit.p2, {{"lower_bound", wit.lower_bound}, {"distance", wit.distance}});
  } else if (n == "k4_pair") {
    const io::Instance inst = io::make_instance(k4_graph());
    const auto wit = oracle::two_weight_counterexample(*inst.matroid);
    j = bundle(inst, wit.p1, wit.p2,
               {{"reused", {inst.matroid->label(wit.first), inst.matroid->label(wit.second)}}});
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown generator " + n);
  }
  std::cerr << "gen: " << n << '\n';
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric exchange sequences between compatible basis pairs"};
  app.require_subcommand(1);
  Inputs in;

  auto* solve = app.add_subcommand("solve", "Construct a verified exchange sequence");
  solve->add_option("instance", in.instance, "Instance file")->required();
  solve->add_option("pair", in.pair, "Pair file (R1, B1, R2, B2)")->required();
  solve->add_option("-w,--weights", in.weights, "Weight file; unit weights when omitted");
  solve->add_option("-s,--solver", in.solver, "Solver")
      ->check(CLI::IsMember({"auto", "wheel", "spike", "split", "sbo"}));
  solve->add_option("-b,--bijections", in.bijections, "Bijection file for the sbo solver");
  solve->add_option("-o,--out", in.out, "Also write the sequence file here");

  auto* verify = app.add_subcommand("verify", "Replay a sequence file");
  verify->add_option("instance", in.instance, "Instance file")->required();
  verify->add_option("pair", in.pair, "Pair file")->required();
  verify->add_option("sequence", in.sequence, "Sequence file")->required();
  verify->add_option("-w,--weights", in.weights, "Weight file");

  auto* orc = app.add_subcommand("oracle", "Exact exchange distances by search");
  orc->add_option("instance", in.instance, "Instance file")->required();
  orc->add_option("pair", in.pair, "Pair file")->required();
  orc->add_option("-w,--weights", in.weights, "Weight file");

  auto* check = app.add_subcommand("check", "Sweep every compatible pair against the distance bounds");
  check->add_option("instance", in.instance, "Instance file")->required();
  check->add_option("--samples", in.samples, "Random weightings in addition to unit weights")->check(CLI::NonNegativeNumber);
  check->add_option("--seed", in.seed, "Seed for the random weightings");

  auto* gen = app.add_subcommand("gen", "Emit a builtin instance, or an instance with a witness pair");
  gen->add_option("name", in.name,
                  "wheel n | free_spike r | binary_spike r | uniform r n | k4_graph | k4_as_split | "
                  "random_split | random_partition | gap_pair n | k4_pair")
      ->required();
  gen->add_option("params", in.params, "Integer parameters");
  gen->add_option("--seed", in.seed, "Seed for random generators");

  std::string command = "mex";
  int code = kOk;
  Json out;
  try {
    app.parse(argc, argv);
    command = app.get_subcommands().front()->get_name();
    if (*solve) out = cmd_solve(in);
    if (*verify) out = cmd_verify(in, code);
    if (*orc) out = cmd_oracle(in);
    if (*check) out = cmd_check(in, code);
    if (*gen) out = cmd_gen(in);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    out = {{"command", command}, {"error", {{"code", "InvalidInput"}, {"message", e.what()}}}};
    std::cerr << "error: " << e.what() << '\n';
    code = kInvalid;
  } catch (const Error& e) {
    out = {{"command", command}, {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
    std::cerr << "error: " << e.what() << '\n';
    code = exit_code(e.code());
  }
  std::cout << out.dump(2) << '\n';
  return code;
}
