#pragma once

#include <array>
#include <vector>

#include "lprg/types.hpp"

namespace lprg {

/// Total DFA over {0, 1}; states are 0..size()-1.
class Dfa {
 public:
  using State = std::uint32_t;

  Dfa() = default;
  Dfa(State start, std::vector<std::array<State, 2>> delta, std::vector<std::uint8_t> accepting);

  std::size_t size() const { return delta_.size(); }
  State start() const { return start_; }
  State step(State q, std::uint8_t bit) const { return delta_[q][bit != 0 ? 1 : 0]; }
  bool accepting(State q) const { return accepting_[q] != 0; }
  const std::vector<std::array<State, 2>>& transitions() const { return delta_; }
  const std::vector<std::uint8_t>& accepting_flags() const { return accepting_; }

  State run(const BitVector& word) const;
  bool accepts(const BitVector& word) const { return accepting(run(word)); }

 private:
  State start_ = 0;
  std::vector<std::array<State, 2>> delta_;
  std::vector<std::uint8_t> accepting_;
};

}  // namespace lprg
