#include <algorithm>
#include <map>

#include "lprg/hypothesis.hpp"

namespace lprg {

DnfFormula::DnfFormula(std::size_t dim, std::vector<DnfTerm> terms)
    : dim_(dim), terms_(std::move(terms)) {
  for (const auto& term : terms_) {
    for (std::size_t a = 0; a < term.size(); ++a) {
      require(term[a].coord < dim_, "DNF literal coordinate out of range");
      for (std::size_t b = 0; b < a; ++b) {
        require(term[a].coord != term[b].coord, "DNF term repeats a coordinate");
      }
    }
  }
}

bool DnfFormula::positive_only() const {
  for (const auto& term : terms_) {
    for (const auto& lit : term) {
      if (!lit.positive) return false;
    }
  }
  return true;
}

bool DnfFormula::term_satisfied(const DnfTerm& term, const BitVector& z) {
  for (const auto& lit : term) {
    if ((z(lit.coord) != 0) != lit.positive) return false;
  }
  return true;
}

std::size_t DnfFormula::satisfied_count(const BitVector& z) const {
  require(static_cast<std::size_t>(z.size()) == dim_, "DNF input has the wrong dimension");
  return static_cast<std::size_t>(std::count_if(
      terms_.begin(), terms_.end(), [&z](const DnfTerm& t) { return term_satisfied(t, z); }));
}

std::uint8_t DnfFormula::operator()(const BitVector& z) const {
  require(static_cast<std::size_t>(z.size()) == dim_, "DNF input has the wrong dimension");
  for (const auto& term : terms_) {
    if (term_satisfied(term, z)) return 1;
  }
  return 0;
}

DnfFormula DnfFormula::operator|(const DnfFormula& other) const {
  require(dim_ == other.dim_, "DNF disjunction over different dimensions");
  std::vector<DnfTerm> terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return DnfFormula(dim_, std::move(terms));
}

BooleanCircuit::BooleanCircuit(std::size_t dim, std::vector<Gate> gates)
    : dim_(dim), gates_(std::move(gates)) {
  require(!gates_.empty(), "circuit needs an output gate");
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    for (const auto& in : gates_[g].inputs) {
      if (in.is_gate) {
        require(in.index < g, "circuit gate reads a later gate");
      } else {
        require(in.index < dim_, "circuit literal coordinate out of range");
      }
    }
  }
}

std::size_t BooleanCircuit::depth() const {
  std::vector<std::size_t> level(gates_.size(), 1);
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    for (const auto& in : gates_[g].inputs) {
      if (in.is_gate) level[g] = std::max(level[g], level[in.index] + 1);
    }
  }
  return level.back();
}

std::uint8_t BooleanCircuit::operator()(const BitVector& z) const {
  require(static_cast<std::size_t>(z.size()) == dim_, "circuit input has the wrong dimension");
  std::vector<std::uint8_t> value(gates_.size());
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const bool is_and = gates_[g].kind == GateKind::And;
    bool out = is_and;
    for (const auto& in : gates_[g].inputs) {
      const bool v = in.is_gate ? value[in.index] != 0 : (z(in.index) != 0) == in.positive;
      if (is_and && !v) {
        out = false;
        break;
      }
      if (!is_and && v) {
        out = true;
        break;
      }
    }
    value[g] = out ? 1 : 0;
  }
  return value.back();
}

Vector<std::int64_t> HalfspaceIntersection::activations(const BitVector& z) const {
  require(static_cast<std::size_t>(z.size()) == dim(), "halfspace input has the wrong dimension");
  return weights_ * z.cast<std::int64_t>();
}

std::uint8_t HalfspaceIntersection::operator()(const BitVector& z) const {
  const Vector<std::int64_t> a = activations(z);
  return (a.array() > 0).all() ? 1 : 0;
}

Dfa::Dfa(State start, std::vector<std::array<State, 2>> delta, std::vector<std::uint8_t> accepting)
    : start_(start), delta_(std::move(delta)), accepting_(std::move(accepting)) {
  require(!delta_.empty(), "DFA needs at least one state");
  require(accepting_.size() == delta_.size(), "DFA accepting flags must cover every state");
  require(start_ < delta_.size(), "DFA start state out of range");
  for (const auto& row : delta_) {
    require(row[0] < delta_.size() && row[1] < delta_.size(), "DFA transition out of range");
  }
}

Dfa::State Dfa::run(const BitVector& word) const {
  State q = start_;
  for (Eigen::Index i = 0; i < word.size(); ++i) q = step(q, word(i));
  return q;
}

Gf2Polynomial::Gf2Polynomial(std::size_t dim, std::vector<Monomial> monomials) : dim_(dim) {
  std::map<Monomial, bool> parity;
  for (auto& m : monomials) {
    std::sort(m.begin(), m.end());
    require(std::adjacent_find(m.begin(), m.end()) == m.end(),
            "GF(2) monomial repeats a coordinate");
    for (auto v : m) require(v < dim_, "GF(2) monomial coordinate out of range");
    parity[m] = !parity[m];
  }
  for (auto& [m, odd] : parity) {
    if (odd) monomials_.push_back(m);
  }
}

std::uint8_t Gf2Polynomial::operator()(const BitVector& z) const {
  require(static_cast<std::size_t>(z.size()) == dim_, "GF(2) input has the wrong dimension");
  std::uint8_t sum = 0;
  for (const auto& m : monomials_) {
    std::uint8_t prod = 1;
    for (auto v : m) prod &= z(v);
    sum ^= prod;
  }
  return sum;
}

Hypothesis::Hypothesis(std::shared_ptr<const Body> body, std::size_t dim, Domain domain, Range range)
    : body_(std::move(body)), dim_(dim), domain_(domain), range_(range) {}

Hypothesis::Hypothesis(DnfFormula f)
    : Hypothesis(std::make_shared<const Body>(f), f.dim(), Domain::Boolean, Range::Bit) {}

Hypothesis::Hypothesis(BooleanCircuit c)
    : Hypothesis(std::make_shared<const Body>(c), c.dim(), Domain::Boolean, Range::Bit) {}

Hypothesis::Hypothesis(HalfspaceIntersection h)
    : Hypothesis(std::make_shared<const Body>(h), h.dim(), Domain::Boolean, Range::Bit) {}

Hypothesis::Hypothesis(ReluNetwork<std::int64_t> net)
    : Hypothesis(std::make_shared<const Body>(net), net.input_dim(), Domain::Boolean, Range::Real) {}

Hypothesis::Hypothesis(ReluNetwork<double> net)
    : Hypothesis(std::make_shared<const Body>(net), net.input_dim(), Domain::Real, Range::Real) {}

Hypothesis::Hypothesis(Dfa a, std::size_t dim)
    : Hypothesis(std::make_shared<const Body>(std::move(a)), dim, Domain::Boolean, Range::Bit) {}

Hypothesis::Hypothesis(Gf2Polynomial p)
    : Hypothesis(std::make_shared<const Body>(p), p.dim(), Domain::Boolean, Range::Bit) {}

Hypothesis::Hypothesis(OpaqueHypothesis o, std::size_t dim, Domain domain, Range range)
    : Hypothesis(std::make_shared<const Body>(std::move(o)), dim, domain, range) {}

std::string Hypothesis::kind() const {
  static constexpr const char* kNames[] = {"dnf",       "circuit", "intersection", "relu-int",
                                           "relu-real", "dfa",     "gf2",          "opaque"};
  return kNames[body_->index()];
}

std::size_t input_dim(const Input& input) {
  return std::visit([](const auto& v) { return static_cast<std::size_t>(v.size()); }, input);
}

double Hypothesis::operator()(const Input& input) const {
  if (input_dim(input) != dim_) {
    throw InvalidInput("hypothesis expects dimension " + std::to_string(dim_) + ", got " +
                       std::to_string(input_dim(input)));
  }
  const bool boolean_input = std::holds_alternative<BitVector>(input);
  if (boolean_input != (domain_ == Domain::Boolean)) {
    throw InvalidInput("hypothesis domain does not match the input type");
  }
  if (const auto* opaque = std::get_if<OpaqueHypothesis>(body_.get())) return opaque->fn(input);
  if (const auto* net = std::get_if<ReluNetwork<double>>(body_.get())) {
    return (*net)(std::get<RealVector>(input));
  }
  const BitVector& z = std::get<BitVector>(input);
  return std::visit(
      [&z](const auto& body) -> double {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, ReluNetwork<std::int64_t>>) {
          return static_cast<double>(body(z.cast<std::int64_t>()));
        } else if constexpr (std::is_same_v<T, Dfa>) {
          return body.accepts(z) ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, ReluNetwork<double>> ||
                             std::is_same_v<T, OpaqueHypothesis>) {
          return 0.0;  // handled above
        } else {
          return static_cast<double>(body(z));
        }
      },
      *body_);
}

double eval_hypothesis(const Hypothesis& h, const Input& input) { return h(input); }

Hypothesis round_to_boolean(const Hypothesis& h) {
  OpaqueHypothesis rounded{"round(" + h.kind() + ")",
                           [h](const Input& input) { return h(input) > 0.5 ? 1.0 : 0.0; }};
  return Hypothesis(std::move(rounded), h.dim(), h.domain(), Range::Bit);
}

}  // namespace lprg
