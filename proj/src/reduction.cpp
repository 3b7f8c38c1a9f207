#include "lprg/reduction.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace lprg {

double empirical_loss(const Hypothesis& h, const std::vector<Example>& examples, LossKind kind) {
  require(!examples.empty(), "empirical_loss needs at least one example");
  double total = 0.0;
  for (const auto& ex : examples) {
    const double out = h(ex.input);
    if (kind == LossKind::ZeroOne) {
      total += (out != ex.label) ? 1.0 : 0.0;
    } else {
      total += (out - ex.label) * (out - ex.label);
    }
  }
  return total / static_cast<double>(examples.size());
}

namespace {

Domain domain_of(const OracleConfig& config) {
  return config.flavor == OracleFlavor::Gaussian ? Domain::Real : Domain::Boolean;
}

class ConstantLearner final : public Learner {
 public:
  explicit ConstantLearner(std::uint8_t bit) : bit_(bit) {}
  std::string name() const override { return bit_ ? "constant1" : "constant0"; }
  Hypothesis fit(const std::vector<Example>&, LearnerContext& ctx) override {
    const double value = bit_;
    return Hypothesis(OpaqueHypothesis{name(), [value](const Input&) { return value; }},
                      ctx.oracle.input_dim(), domain_of(ctx.oracle), Range::Bit);
  }

 private:
  std::uint8_t bit_;
};

std::string input_key(const Input& input) {
  if (const auto* bits = std::get_if<BitVector>(&input)) return bits_key(*bits);
  const auto& reals = std::get<RealVector>(input);
  return std::string(reinterpret_cast<const char*>(reals.data()),
                     static_cast<std::size_t>(reals.size()) * sizeof(double));
}

class MemorizeLearner final : public Learner {
 public:
  std::string name() const override { return "memorize"; }
  Hypothesis fit(const std::vector<Example>& train, LearnerContext& ctx) override {
    auto table = std::make_shared<std::map<std::string, double>>();
    double ones = 0.0;
    for (const auto& ex : train) {
      table->insert_or_assign(input_key(ex.input), ex.label);
      if (ex.label > 0.5) ones += 1.0;
    }
    const double fallback = 2.0 * ones > static_cast<double>(train.size()) ? 1.0 : 0.0;
    auto fn = [table, fallback](const Input& input) {
      const auto it = table->find(input_key(input));
      return it == table->end() ? fallback : it->second;
    };
    const Range range = ctx.oracle.loss() == LossKind::Square ? Range::Real : Range::Bit;
    return Hypothesis(OpaqueHypothesis{name(), fn}, ctx.oracle.input_dim(), domain_of(ctx.oracle),
                      range);
  }
};

class CheatLearner final : public Learner {
 public:
  std::string name() const override { return "cheat"; }
  Hypothesis fit(const std::vector<Example>&, LearnerContext& ctx) override {
    if (ctx.challenge == nullptr) {
      throw ConfigError("the cheat learner needs white-box access to the challenge");
    }
    if (ctx.challenge->seed) return realizer_for(ctx.oracle, ctx.predicate, *ctx.challenge->seed);
    return realizer_for(ctx.oracle, ctx.predicate, random_bits(ctx.oracle.n, ctx.rng));
  }
};

}  // namespace

std::unique_ptr<Learner> learner_constant(std::uint8_t bit) {
  return std::make_unique<ConstantLearner>(bit ? 1 : 0);
}
std::unique_ptr<Learner> learner_memorize() { return std::make_unique<MemorizeLearner>(); }
std::unique_ptr<Learner> learner_cheat() { return std::make_unique<CheatLearner>(); }

std::unique_ptr<Learner> make_learner(const std::string& name) {
  if (name == "constant0") return learner_constant(0);
  if (name == "constant1") return learner_constant(1);
  if (name == "memorize") return learner_memorize();
  if (name == "cheat") return learner_cheat();
  throw ConfigError("unknown learner '" + name + "'");
}

double threshold_preset(const std::string& spec, std::size_t n) {
  auto number = [&spec](const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw ConfigError("bad threshold '" + spec + "'");
    return value;
  };
  const auto nd = static_cast<double>(n);
  if (spec == "fifth") return 0.2;
  if (spec == "bernoulli") return 2.0 / nd;
  if (spec.rfind("weak:", 0) == 0) return 0.5 - number(spec.substr(5)) / 2.0;
  if (spec.rfind("dfa:", 0) == 0) return 0.5 - 3.0 / (4.0 * std::pow(nd, number(spec.substr(4))));
  return number(spec);
}

DistinguishOutcome distinguish(Learner& learner, const OracleConfig& oracle,
                               const ChallengeSequence& challenge, const Predicate& p,
                               const DistinguisherConfig& config, Rng rng, bool white_box) {
  require(config.test_size >= 1, "distinguisher needs a non-empty test set");
  auto stream = make_stream(oracle, challenge, rng.split(1));
  auto draw = [&](std::size_t count, const char* phase) {
    std::vector<Example> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      auto ex = stream->next();
      if (!ex) {
        throw ExperimentInfeasible(std::string("challenge exhausted during ") + phase + " after " +
                                   std::to_string(stream->emitted()) + " emissions (" +
                                   std::to_string(challenge.size()) + " pairs)");
      }
      out.push_back(std::move(*ex));
    }
    return out;
  };
  const std::vector<Example> train = draw(config.train_size, "training");
  LearnerContext ctx{oracle, p, white_box ? &challenge : nullptr, rng.split(2)};
  const Hypothesis h = learner.fit(train, ctx);
  const std::vector<Example> test = draw(config.test_size, "testing");
  DistinguishOutcome outcome;
  outcome.test_loss = empirical_loss(h, test, oracle.loss());
  outcome.accept = outcome.test_loss <= config.threshold;
  outcome.consumed = stream->consumed();
  outcome.train_seen = train.size();
  return outcome;
}

double hoeffding_radius(std::size_t trials, double delta) {
  require(trials >= 1, "hoeffding_radius needs at least one trial");
  return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(trials)));
}

AdvantageReport estimate_advantage(Learner& learner, const GeneratorSpec& generator,
                                   const OracleConfig& oracle, const DistinguisherConfig& config,
                                   std::size_t trials, std::uint64_t master_seed, bool white_box) {
  require(trials >= 1, "estimate_advantage needs at least one trial");
  if (generator.predicate.arity() != oracle.k || generator.n != oracle.n) {
    throw ConfigError("generator and oracle disagree on n or k");
  }
  const Rng master(master_seed);
  AdvantageReport report;
  report.trials = trials;
  std::size_t accepts[2] = {0, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    for (int arm = 0; arm < 2; ++arm) {
      const ChallengeMode mode = arm == 0 ? ChallengeMode::Pseudorandom : ChallengeMode::Random;
      Rng trial = master.split(2 * t + static_cast<std::size_t>(arm));
      Rng graph_rng = trial.split(0);
      Rng label_rng = trial.split(1);
      Hypergraph g = sample_hypergraph(generator.n, generator.m, oracle.k, graph_rng);
      const ChallengeSequence challenge =
          make_challenge(generator.predicate, std::move(g), mode, label_rng);
      TrialRecord rec;
      rec.trial = t;
      rec.arm = mode;
      try {
        const auto outcome = distinguish(learner, oracle, challenge, generator.predicate, config,
                                         trial.split(2), white_box);
        rec.accept = outcome.accept;
        rec.test_loss = outcome.test_loss;
        rec.substitutions = outcome.consumed;
        if (rec.accept) ++accepts[arm];
        ++(arm == 0 ? report.feasible_pseudo : report.feasible_random);
      } catch (const ExperimentInfeasible&) {
        rec.feasible = false;
      }
      report.records.push_back(rec);
    }
  }
  auto freq = [](std::size_t hits, std::size_t total) {
    return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
  };
  report.accept_pseudo = freq(accepts[0], report.feasible_pseudo);
  report.accept_random = freq(accepts[1], report.feasible_random);
  report.advantage = report.accept_pseudo - report.accept_random;
  const std::size_t effective = std::min(report.feasible_pseudo, report.feasible_random);
  report.radius = effective == 0 ? INFINITY : hoeffding_radius(effective);
  report.significant = std::abs(report.advantage) > 2.0 * report.radius;
  return report;
}

std::string to_csv(const AdvantageReport& report) {
  std::ostringstream out;
  out << "trial,arm,feasible,accept,test_loss,substitution_count\n";
  char loss[32];
  for (const auto& r : report.records) {
    std::snprintf(loss, sizeof loss, "%.17g", r.test_loss);
    out << r.trial << ',' << (r.arm == ChallengeMode::Pseudorandom ? "pseudo" : "random") << ','
        << (r.feasible ? 1 : 0) << ',' << (r.accept ? 1 : 0) << ',' << (r.feasible ? loss : "")
        << ',' << r.substitutions << '\n';
  }
  return out.str();
}

}  // namespace lprg
