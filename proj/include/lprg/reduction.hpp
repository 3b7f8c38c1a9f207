#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lprg/pipeline.hpp"

namespace lprg {

double empirical_loss(const Hypothesis& h, const std::vector<Example>& examples, LossKind kind);

/// What a learner may see besides its training sample. `challenge` is only
/// set in white-box runs, where the hidden seed is available.
struct LearnerContext {
  const OracleConfig& oracle;
  const Predicate& predicate;
  const ChallengeSequence* challenge = nullptr;
  Rng rng;
};

class Learner {
 public:
  virtual ~Learner() = default;
  virtual std::string name() const = 0;
  virtual Hypothesis fit(const std::vector<Example>& train, LearnerContext& ctx) = 0;
};

std::unique_ptr<Learner> learner_constant(std::uint8_t bit);

/// Lookup table of training inputs; unseen inputs get the majority label.
std::unique_ptr<Learner> learner_memorize();

/// Ignores the sample and returns realizer_for at the hidden seed. On a
/// random challenge there is no seed, so it uses one drawn from its own
/// stream. Throws ConfigError outside white-box mode.
std::unique_ptr<Learner> learner_cheat();

std::unique_ptr<Learner> make_learner(const std::string& name);

struct DistinguisherConfig {
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  double threshold = 0.2;
};

/// Named decision thresholds: fifth (2/10), bernoulli (2/n), weak:<gamma>
/// (1/2 - gamma/2), dfa:<c'> (1/2 - 3/(4 n^c')), or a plain number.
double threshold_preset(const std::string& spec, std::size_t n);

struct DistinguishOutcome {
  bool accept = false;
  double test_loss = 0.0;
  std::size_t consumed = 0;  // challenge pairs used by the oracle
  std::size_t train_seen = 0;
};

/// First train_size emissions train the learner, the next test_size score
/// it; accepts iff the test loss is at most the threshold. Throws
/// ExperimentInfeasible if the stream ends first.
DistinguishOutcome distinguish(Learner& learner, const OracleConfig& oracle,
                               const ChallengeSequence& challenge, const Predicate& p,
                               const DistinguisherConfig& config, Rng rng, bool white_box = true);

struct GeneratorSpec {
  std::size_t n = 0;
  std::size_t m = 0;
  Predicate predicate;
};

struct TrialRecord {
  std::size_t trial = 0;
  ChallengeMode arm = ChallengeMode::Pseudorandom;
  bool feasible = true;
  bool accept = false;
  double test_loss = 0.0;
  std::size_t substitutions = 0;
};

struct AdvantageReport {
  std::size_t trials = 0;  // per arm
  std::size_t feasible_pseudo = 0;
  std::size_t feasible_random = 0;
  double accept_pseudo = 0.0;
  double accept_random = 0.0;
  double advantage = 0.0;  // accept_pseudo - accept_random
  double radius = 0.0;     // Hoeffding radius per arm at delta = 0.05
  bool significant = false;
  std::vector<TrialRecord> records;
};

constexpr double kAdvantageDelta = 0.05;

double hoeffding_radius(std::size_t trials, double delta = kAdvantageDelta);

/// `trials` pseudorandom and `trials` random challenges, each over a fresh
/// hypergraph, every trial on its own substream of `master_seed`.
AdvantageReport estimate_advantage(Learner& learner, const GeneratorSpec& generator,
                                   const OracleConfig& oracle, const DistinguisherConfig& config,
                                   std::size_t trials, std::uint64_t master_seed,
                                   bool white_box = true);

std::string to_csv(const AdvantageReport& report);

}  // namespace lprg
