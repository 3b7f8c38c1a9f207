#include "lprg/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lprg {

namespace {

std::size_t parse_count(const std::string& text, const std::string& context) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidInput("expected a non-negative integer in " + context + ", got '" + text + "'");
  }
  return std::stoul(text);
}

template <typename Scalar>
std::string scalar_to_string(const Scalar& v) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return format_double(v);
  } else {
    return std::to_string(v);
  }
}

template <typename Scalar>
Scalar scalar_from_string(const std::string& s) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return parse_double(s);
  } else {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw InvalidInput("bad integer '" + s + "'");
    return static_cast<Scalar>(v);
  }
}

template <typename Scalar>
json matrix_to_json(const Matrix<Scalar>& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(scalar_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename Scalar>
Matrix<Scalar> matrix_from_json(const json& j, std::size_t cols) {
  Matrix<Scalar> m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    require(j[r].size() == cols, "weight row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          scalar_from_string<Scalar>(j[r][c].get<std::string>());
    }
  }
  return m;
}

template <typename Scalar>
json network_to_json(const ReluNetwork<Scalar>& net) {
  json layers = json::array();
  for (const auto& layer : net.layers()) {
    json bias = json::array();
    for (Eigen::Index i = 0; i < layer.bias.size(); ++i) bias.push_back(scalar_to_string(layer.bias(i)));
    layers.push_back({{"weights", matrix_to_json(layer.weights)},
                      {"bias", std::move(bias)},
                      {"relu", layer.relu}});
  }
  return {{"layers", std::move(layers)}};
}

template <typename Scalar>
ReluNetwork<Scalar> network_from_json(const json& payload, std::size_t dim) {
  std::vector<ReluLayer<Scalar>> layers;
  std::size_t width = dim;
  for (const auto& l : payload.at("layers")) {
    ReluLayer<Scalar> layer;
    layer.weights = matrix_from_json<Scalar>(l.at("weights"), width);
    const auto& bias = l.at("bias");
    layer.bias.resize(static_cast<Eigen::Index>(bias.size()));
    for (std::size_t i = 0; i < bias.size(); ++i) {
      layer.bias(static_cast<Eigen::Index>(i)) = scalar_from_string<Scalar>(bias[i].get<std::string>());
    }
    layer.relu = l.at("relu").get<bool>();
    width = static_cast<std::size_t>(layer.weights.rows());
    layers.push_back(std::move(layer));
  }
  return ReluNetwork<Scalar>(dim, std::move(layers));
}

json bits_to_int_array(const BitVector& bits) {
  json out = json::array();
  for (Eigen::Index i = 0; i < bits.size(); ++i) out.push_back(static_cast<int>(bits(i)));
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    throw InvalidInput("bad decimal '" + s + "'");
  }
  return v;
}

Predicate parse_predicate_spec(const std::string& spec) {
  if (spec.rfind("xormaj:", 0) == 0) {
    const std::string rest = spec.substr(7);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw InvalidInput("predicate spec needs xormaj:a,b");
    return make_xormaj(parse_count(rest.substr(0, comma), spec),
                       parse_count(rest.substr(comma + 1), spec));
  }
  if (spec.rfind("table:", 0) == 0) {
    const std::string rest = spec.substr(6);
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw InvalidInput("predicate spec needs table:<hex>:<arity>");
    const std::size_t arity = parse_count(rest.substr(colon + 1), spec);
    require(arity >= 1 && arity <= 30, "predicate arity must be in [1, 30]");
    return Predicate(arity, hex_to_bits(rest.substr(0, colon), std::size_t{1} << arity));
  }
  throw InvalidInput("unknown predicate spec '" + spec + "'");
}

std::string predicate_spec(const Predicate& p) {
  return "table:" + bits_to_hex(p.table()) + ":" + std::to_string(p.arity());
}

json predicate_to_json(const Predicate& p) {
  return {{"arity", p.arity()}, {"table_hex", bits_to_hex(p.table())}};
}

Predicate predicate_from_json(const json& j) {
  const auto arity = j.at("arity").get<std::size_t>();
  require(arity >= 1 && arity <= 30, "predicate arity must be in [1, 30]");
  return Predicate(arity, hex_to_bits(j.at("table_hex").get<std::string>(), std::size_t{1} << arity));
}

json hypergraph_to_json(const Hypergraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back(e.members);
  return {{"n", g.n}, {"k", g.k}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const json& j) {
  Hypergraph g;
  g.n = j.at("n").get<std::size_t>();
  g.k = j.at("k").get<std::size_t>();
  for (const auto& e : j.at("edges")) g.edges.push_back({e.get<std::vector<std::uint32_t>>()});
  g.validate();
  return g;
}

json challenge_to_json(const ChallengeSequence& c, const Predicate& p, const json& meta,
                       bool blind) {
  json out = hypergraph_to_json(c.graph);
  out["meta"] = meta;
  out["predicate"] = predicate_to_json(p);
  out["labels"] = bits_to_int_array(c.labels);
  if (blind) {
    out["truth"] = "hidden";
  } else if (c.mode == ChallengeMode::Pseudorandom) {
    out["truth"] = {{"mode", "pseudorandom"}, {"seed_hex", bits_to_hex(*c.seed)}};
  } else {
    out["truth"] = {{"mode", "random"}};
  }
  return out;
}

ChallengeSequence challenge_from_json(const json& j) {
  ChallengeSequence c;
  c.graph = hypergraph_from_json(j);
  const auto& labels = j.at("labels");
  require(labels.size() == c.graph.m(), "challenge labels and edges differ in length");
  c.labels.resize(static_cast<Eigen::Index>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int v = labels[i].get<int>();
    require(v == 0 || v == 1, "challenge labels must be bits");
    c.labels(static_cast<Eigen::Index>(i)) = static_cast<std::uint8_t>(v);
  }
  const auto& truth = j.at("truth");
  if (truth.is_string()) {
    c.mode = ChallengeMode::Random;  // unknown to the reader
  } else if (truth.at("mode") == "pseudorandom") {
    c.mode = ChallengeMode::Pseudorandom;
    c.seed = hex_to_bits(truth.at("seed_hex").get<std::string>(), c.graph.n);
  } else {
    c.mode = ChallengeMode::Random;
  }
  return c;
}

json hypothesis_to_json(const Hypothesis& h) {
  json payload;
  const auto& body = h.body();
  if (const auto* f = std::get_if<DnfFormula>(&body)) {
    json terms = json::array();
    for (const auto& term : f->terms()) {
      json lits = json::array();
      for (const auto& lit : term) lits.push_back({lit.coord, lit.positive ? 1 : 0});
      terms.push_back(std::move(lits));
    }
    payload = {{"terms", std::move(terms)}};
  } else if (const auto* c = std::get_if<BooleanCircuit>(&body)) {
    json gates = json::array();
    for (const auto& g : c->gates()) {
      json inputs = json::array();
      for (const auto& in : g.inputs) {
        if (in.is_gate) {
          inputs.push_back({{"gate", in.index}});
        } else {
          inputs.push_back({{"lit", in.index}, {"positive", in.positive}});
        }
      }
      gates.push_back({{"op", g.kind == GateKind::And ? "and" : "or"}, {"inputs", std::move(inputs)}});
    }
    payload = {{"gates", std::move(gates)}};
  } else if (const auto* g = std::get_if<HalfspaceIntersection>(&body)) {
    payload = {{"weights", matrix_to_json(g->weights())}};
  } else if (const auto* ni = std::get_if<ReluNetwork<std::int64_t>>(&body)) {
    payload = network_to_json(*ni);
  } else if (const auto* nr = std::get_if<ReluNetwork<double>>(&body)) {
    payload = network_to_json(*nr);
  } else if (const auto* a = std::get_if<Dfa>(&body)) {
    json accepting = json::array();
    for (std::size_t q = 0; q < a->size(); ++q) {
      if (a->accepting(static_cast<Dfa::State>(q))) accepting.push_back(q);
    }
    payload = {{"start", a->start()}, {"states", a->size()}, {"accepting", std::move(accepting)},
               {"delta", a->transitions()}};
  } else if (const auto* p = std::get_if<Gf2Polynomial>(&body)) {
    payload = {{"monomials", p->monomials()}};
  } else {
    throw InvalidInput("opaque hypotheses cannot be exported");
  }
  return {{"kind", h.kind()},
          {"dim", h.dim()},
          {"domain", h.domain() == Domain::Boolean ? "boolean" : "real"},
          {"range", h.range() == Range::Bit ? "bit" : "real"},
          {"payload", std::move(payload)}};
}

Hypothesis hypothesis_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const auto dim = j.at("dim").get<std::size_t>();
  const auto& payload = j.at("payload");
  if (kind == "dnf") {
    std::vector<DnfTerm> terms;
    for (const auto& t : payload.at("terms")) {
      DnfTerm term;
      for (const auto& lit : t) term.push_back({lit.at(0).get<std::uint32_t>(), lit.at(1).get<int>() != 0});
      terms.push_back(std::move(term));
    }
    return Hypothesis(DnfFormula(dim, std::move(terms)));
  }
  if (kind == "circuit") {
    std::vector<Gate> gates;
    for (const auto& g : payload.at("gates")) {
      Gate gate;
      const auto op = g.at("op").get<std::string>();
      require(op == "and" || op == "or", "circuit gate op must be and/or");
      gate.kind = op == "and" ? GateKind::And : GateKind::Or;
      for (const auto& in : g.at("inputs")) {
        gate.inputs.push_back(in.contains("gate")
                                  ? GateInput::gate(in.at("gate").get<std::uint32_t>())
                                  : GateInput::literal(in.at("lit").get<std::uint32_t>(),
                                                       in.at("positive").get<bool>()));
      }
      gates.push_back(std::move(gate));
    }
    return Hypothesis(BooleanCircuit(dim, std::move(gates)));
  }
  if (kind == "intersection") {
    return Hypothesis(HalfspaceIntersection(matrix_from_json<std::int64_t>(payload.at("weights"), dim)));
  }
  if (kind == "relu-int") return Hypothesis(network_from_json<std::int64_t>(payload, dim));
  if (kind == "relu-real") return Hypothesis(network_from_json<double>(payload, dim));
  if (kind == "dfa") {
    const auto states = payload.at("states").get<std::size_t>();
    auto delta = payload.at("delta").get<std::vector<std::array<Dfa::State, 2>>>();
    require(delta.size() == states, "DFA transition table size mismatch");
    std::vector<std::uint8_t> accepting(states, 0);
    for (const auto& q : payload.at("accepting")) {
      const auto s = q.get<std::size_t>();
      require(s < states, "DFA accepting state out of range");
      accepting[s] = 1;
    }
    return Hypothesis(Dfa(payload.at("start").get<Dfa::State>(), std::move(delta), std::move(accepting)),
                      dim);
  }
  if (kind == "gf2") {
    return Hypothesis(
        Gf2Polynomial(dim, payload.at("monomials").get<std::vector<Gf2Polynomial::Monomial>>()));
  }
  throw InvalidInput("unknown hypothesis kind '" + kind + "'");
}

json make_meta(const std::string& command, std::uint64_t seed, const json& params) {
  return {{"tool", "lprg"}, {"version", kToolVersion}, {"command", command},
          {"seed", seed},   {"params", params}};
}

json example_to_json(const Example& ex) {
  json out;
  if (const auto* bits = std::get_if<BitVector>(&ex.input)) {
    out["input"] = bits_to_hex(*bits);
  } else {
    const auto& reals = std::get<RealVector>(ex.input);
    json values = json::array();
    for (Eigen::Index i = 0; i < reals.size(); ++i) values.push_back(reals(i));
    out["input"] = std::move(values);
  }
  out["label"] = ex.label;
  return out;
}

Example example_from_json(const json& j, std::size_t dim) {
  Example ex;
  const auto& input = j.at("input");
  if (input.is_string()) {
    ex.input = hex_to_bits(input.get<std::string>(), dim);
  } else {
    RealVector v(static_cast<Eigen::Index>(input.size()));
    require(input.size() == dim, "example has the wrong dimension");
    for (std::size_t i = 0; i < input.size(); ++i) v(static_cast<Eigen::Index>(i)) = input[i].get<double>();
    ex.input = std::move(v);
  }
  ex.label = j.at("label").get<double>();
  return ex;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ConfigError("failed writing '" + path + "'");
}

}  // namespace lprg
