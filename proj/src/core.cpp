#include "mex/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace mex {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InfeasibleExchange: return "InfeasibleExchange";
    case ErrorCode::IncompatiblePairs: return "IncompatiblePairs";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotAColoring: return "NotAColoring";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::OrientationMismatch: return "OrientationMismatch";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::InternalBoundViolation: return "InternalBoundViolation";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::CompletionNotFound: return "CompletionNotFound";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotFound: return "NotFound";
  }
  return "Unknown";
}

std::string format_rational(const Rational& value) {
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t num = parse_int(text.substr(0, slash), text);
  std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Matroid::Matroid(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxGround)) {
    throw Error(ErrorCode::TooLarge, "ground set exceeds 64 elements");
  }
}

Element Matroid::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::InvalidInput, "unknown element label '" + std::string(label) + "'");
  return static_cast<Element>(it - labels_.begin());
}

std::string Matroid::format(ElementSet x) const {
  std::string out = "{";
  bool first = true;
  for (Element e : x.elements()) {
    if (!first) out += ",";
    out += label(e);
    first = false;
  }
  return out + "}";
}

WeightFn::WeightFn(std::vector<Rational> values) : values_(std::move(values)) {
  for (const Rational& v : values_) {
    if (v < 0) throw Error(ErrorCode::DomainError, "negative weight " + format_rational(v));
  }
}

WeightFn WeightFn::indicator(int ground_size, Element e) {
  std::vector<Rational> v(ground_size, Rational(0));
  v.at(e) = 1;
  return WeightFn(std::move(v));
}

Rational WeightFn::sum(ElementSet x) const {
  Rational total(0);
  for (Element e : x.elements()) total += values_.at(e);
  return total;
}

bool is_feasible_exchange(const Matroid& m, const BasisPair& p, Element e, Element f) {
  if (!p.red.contains(e) || !p.blue.contains(f)) return false;
  return m.is_basis(p.red.without(e).with(f)) && m.is_basis(p.blue.without(f).with(e));
}

BasisPair apply_exchange(const Matroid& m, const BasisPair& p, Exchange x) {
  if (!is_feasible_exchange(m, p, x.out, x.in)) {
    throw Error(ErrorCode::InfeasibleExchange,
                "(" + m.label(x.out) + "," + m.label(x.in) + ") from R=" + m.format(p.red));
  }
  return {p.red.without(x.out).with(x.in), p.blue.without(x.in).with(x.out)};
}

bool is_valid_pair(const Matroid& m, const BasisPair& p) {
  return (p.red & p.blue).empty() && p.united().subset_of(m.ground()) && m.is_basis(p.red) &&
         m.is_basis(p.blue);
}

bool compatible(const BasisPair& p1, const BasisPair& p2) { return p1.united() == p2.united(); }

SequenceReport verify_sequence(const Matroid& m, const BasisPair& p1, const BasisPair& p2,
                               const ExchangeSequence& seq, const WeightFn& w) {
  if (!compatible(p1, p2)) throw Error(ErrorCode::IncompatiblePairs, "R1 ∪ B1 differs from R2 ∪ B2");

  SequenceReport report;
  report.length = seq.size();
  report.usage.assign(m.ground_size(), 0);

  BasisPair cur = p1;
  bool feasible = true;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Exchange& x = seq.steps[i];
    if (x.out < 0 || x.out >= m.ground_size() || x.in < 0 || x.in >= m.ground_size() ||
        !is_feasible_exchange(m, cur, x.out, x.in)) {
      report.failure_step = i;
      feasible = false;
      break;
    }
    cur = {cur.red.without(x.out).with(x.in), cur.blue.without(x.in).with(x.out)};
  }
  if (feasible && !(cur == p2)) report.failure_step = seq.size();
  report.valid = !report.failure_step.has_value();

  const ElementSet movable = (p1.red & p2.blue) | (p2.red & p1.blue);
  bool inside = true;
  for (const Exchange& x : seq.steps) {
    for (Element e : {x.out, x.in}) {
      if (e < 0 || e >= m.ground_size()) continue;
      ++report.usage[e];
      report.weight += w(e);
      inside = inside && movable.contains(e);
    }
  }
  report.max_usage = report.usage.empty() ? 0 : *std::max_element(report.usage.begin(), report.usage.end());
  report.monotone = report.valid && report.max_usage <= 1 && inside;
  return report;
}

std::pair<int, Rational> lower_bounds(const BasisPair& p1, const BasisPair& p2, const WeightFn& w) {
  if (!compatible(p1, p2)) throw Error(ErrorCode::IncompatiblePairs, "R1 ∪ B1 differs from R2 ∪ B2");
  return {p1.red.size() - (p1.red & p2.red).size(), w.sum(p1.red ^ p2.red)};
}

ExchangeSequence reverse_sequence(const ExchangeSequence& seq) {
  ExchangeSequence out;
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) out.push_back({it->in, it->out});
  return out;
}

ExchangeSequence swap_colors_sequence(const ExchangeSequence& seq) {
  ExchangeSequence out;
  for (const Exchange& x : seq.steps) out.push_back({x.in, x.out});
  return out;
}

std::string format_sequence(const Matroid& m, const ExchangeSequence& seq) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) os << ", ";
    os << "(" << m.label(seq.steps[i].out) << "," << m.label(seq.steps[i].in) << ")";
  }
  os << "]";
  return os.str();
}

}  // namespace mex
