#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "lprg/circuit.hpp"
#include "lprg/dfa.hpp"
#include "lprg/dnf.hpp"
#include "lprg/gf2.hpp"
#include "lprg/halfspace.hpp"
#include "lprg/relu.hpp"

namespace lprg {

using Input = std::variant<BitVector, RealVector>;

enum class Domain { Boolean, Real };
enum class Range { Bit, Real };

struct OpaqueHypothesis {
  std::string description;
  std::function<double(const Input&)> fn;
};

/// Tagged evaluable function. Integer ReLU networks take Boolean inputs;
/// real ReLU networks take real inputs. Evaluation always returns a double,
/// which is 0 or 1 when the range is Bit.
class Hypothesis {
 public:
  using Body = std::variant<DnfFormula, BooleanCircuit, HalfspaceIntersection,
                            ReluNetwork<std::int64_t>, ReluNetwork<double>, Dfa, Gf2Polynomial,
                            OpaqueHypothesis>;

  explicit Hypothesis(DnfFormula f);
  explicit Hypothesis(BooleanCircuit c);
  explicit Hypothesis(HalfspaceIntersection h);
  explicit Hypothesis(ReluNetwork<std::int64_t> net);
  explicit Hypothesis(ReluNetwork<double> net);
  /// A DFA reads words of length `dim`.
  Hypothesis(Dfa a, std::size_t dim);
  explicit Hypothesis(Gf2Polynomial p);
  Hypothesis(OpaqueHypothesis o, std::size_t dim, Domain domain, Range range);

  const Body& body() const { return *body_; }
  std::size_t dim() const { return dim_; }
  Domain domain() const { return domain_; }
  Range range() const { return range_; }
  /// JSON kind tag: dnf, circuit, intersection, relu-int, relu-real, dfa, gf2, opaque.
  std::string kind() const;

  template <typename T>
  const T* get() const {
    return std::get_if<T>(body_.get());
  }

  double operator()(const Input& input) const;

 private:
  Hypothesis(std::shared_ptr<const Body> body, std::size_t dim, Domain domain, Range range);

  std::shared_ptr<const Body> body_;
  std::size_t dim_;
  Domain domain_;
  Range range_;
};

double eval_hypothesis(const Hypothesis& h, const Input& input);

/// h'(z) = 1 iff h(z) > 1/2.
Hypothesis round_to_boolean(const Hypothesis& h);

std::size_t input_dim(const Input& input);

}  // namespace lprg
