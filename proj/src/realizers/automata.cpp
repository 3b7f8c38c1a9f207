#include "lprg/realizers.hpp"

namespace lprg {

namespace {

using State = Dfa::State;

std::size_t pow3(std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= 3;
  return out;
}

/// Encoding checker states: 0 rejects; (i, seen, used) for position i in the
/// current slice, whether the slice already had a 1-bit, and the set of
/// member indices already placed.
struct EncodingLayout {
  std::size_t k;
  State id(std::size_t i, std::size_t seen, std::size_t used) const {
    return static_cast<State>(1 + ((i * 2 + seen) << k) + used);
  }
};

/// Predicate checker states: 0 is the start; (i, j, b) means bit j of slice
/// i was just read and b records x at each placed member (digit 2 = unset).
struct PredicateLayout {
  std::size_t n, k, digits;
  State id(std::size_t i, std::size_t j, std::size_t code) const {
    return static_cast<State>(1 + (i * k + j) * digits + code);
  }
};

std::size_t digit(std::size_t code, std::size_t j) {
  for (std::size_t t = 0; t < j; ++t) code /= 3;
  return code % 3;
}

std::size_t set_digit(std::size_t code, std::size_t j, std::size_t value) {
  std::size_t scale = 1;
  for (std::size_t t = 0; t < j; ++t) scale *= 3;
  return code - digit(code, j) * scale + value * scale;
}

}  // namespace

std::size_t dfa_encoding_state_count(std::size_t k) { return 2 * k * (std::size_t{1} << k) + 1; }

std::size_t dfa_predicate_state_count(std::size_t n, std::size_t k) { return n * k * pow3(k) + 1; }

std::size_t dfa_full_state_count(std::size_t n, std::size_t k, std::size_t slice_count) {
  const std::size_t width = exact_log2(n);
  return (2 * width - 1) * slice_count * dfa_encoding_state_count(k) *
             dfa_predicate_state_count(n, k) +
         2;
}

Dfa dfa_encoding_checker(std::size_t n, std::size_t k) {
  require(n >= 1 && k >= 1 && k <= 16, "encoding checker requires n >= 1 and 1 <= k <= 16");
  const EncodingLayout layout{k};
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<std::array<State, 2>> delta(dfa_encoding_state_count(k), {0, 0});
  std::vector<std::uint8_t> accept(delta.size(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    const bool last = i + 1 == k;
    for (std::size_t seen = 0; seen < 2; ++seen) {
      for (std::size_t used = 0; used <= full; ++used) {
        auto& row = delta[layout.id(i, seen, used)];
        row[0] = last ? layout.id(0, 0, used) : layout.id(i + 1, seen, used);
        const bool taken = ((used >> i) & 1u) != 0;
        if (seen == 1 || taken) {
          row[1] = 0;
        } else {
          const std::size_t next = used | (std::size_t{1} << i);
          row[1] = last ? layout.id(0, 0, next) : layout.id(i + 1, 1, next);
        }
      }
    }
  }
  accept[layout.id(0, 0, full)] = 1;
  return Dfa(layout.id(0, 0, 0), std::move(delta), std::move(accept));
}

Dfa dfa_predicate_checker(const Predicate& p, const BitVector& x, std::size_t n) {
  require(static_cast<std::size_t>(x.size()) == n, "seed length must equal n");
  const std::size_t k = p.arity();
  require(k <= n && k <= 12, "predicate checker requires k <= n and k <= 12");
  const PredicateLayout layout{n, k, pow3(k)};
  std::vector<std::array<State, 2>> delta(dfa_predicate_state_count(n, k), {0, 0});
  std::vector<std::uint8_t> accept(delta.size(), 0);
  const std::size_t unset = layout.digits - 1;  // every digit equal to 2
  auto xbit = [&x](std::size_t i) -> std::size_t { return x(static_cast<Eigen::Index>(i)); };

  delta[0] = {layout.id(0, 0, unset), layout.id(0, 0, set_digit(unset, 0, xbit(0)))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t code = 0; code < layout.digits; ++code) {
        auto& row = delta[layout.id(i, j, code)];
        if (j + 1 < k) {
          row[0] = layout.id(i, j + 1, code);
          row[1] = layout.id(i, j + 1, set_digit(code, j + 1, xbit(i)));
        } else {
          const std::size_t next = (i + 1) % n;
          row[0] = layout.id(next, 0, code);
          row[1] = layout.id(next, 0, set_digit(code, 0, xbit(next)));
        }
      }
    }
  }
  for (std::size_t code = 0; code < layout.digits; ++code) {
    std::size_t index = 0;
    bool complete = true;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t d = digit(code, j);
      if (d == 2) complete = false;
      index |= (d & 1u) << j;
    }
    if (complete && p.at(index) != 0) accept[layout.id(n - 1, k - 1, code)] = 1;
  }
  return Dfa(0, std::move(delta), std::move(accept));
}

Dfa dfa_full(const Predicate& p, const BitVector& x, std::size_t n, std::size_t slice_count) {
  require(n >= 2, "dfa_full requires n >= 2");
  const std::size_t width = exact_log2(n);
  require(slice_count >= 1, "dfa_full requires at least one slice");
  const std::size_t k = p.arity();
  const Dfa enc = dfa_encoding_checker(n, k);
  const Dfa pred = dfa_predicate_checker(p, x, n);
  const std::size_t qe = enc.size();
  const std::size_t qp = pred.size();
  const PredicateLayout playout{n, k, pow3(k)};
  const State slice_end_lo = playout.id(n - 1, k - 1, 0);

  // Product automaton over short words: 0 = accept sink, 1 = reject sink,
  // then (slice, encoding state, predicate state).
  constexpr State kAccept = 0;
  constexpr State kReject = 1;
  const std::size_t product_count = slice_count * qe * qp;
  auto product_id = [&](std::size_t d, State e, State q) {
    return static_cast<State>(2 + (d * qe + e) * qp + q);
  };
  std::vector<std::array<State, 2>> product(product_count + 2);
  product[kAccept] = {kAccept, kAccept};
  product[kReject] = {kReject, kReject};
  for (std::size_t d = 0; d < slice_count; ++d) {
    for (State e = 0; e < qe; ++e) {
      for (State q = 0; q < qp; ++q) {
        for (std::uint8_t bit = 0; bit < 2; ++bit) {
          const State e2 = enc.step(e, bit);
          const State q2 = pred.step(q, bit);
          State target;
          if (q2 < slice_end_lo) {
            target = product_id(d, e2, q2);
          } else if (enc.accepting(e2)) {
            target = pred.accepting(q2) ? kAccept : kReject;
          } else if (d + 1 < slice_count) {
            target = product_id(d + 1, enc.start(), pred.start());
          } else {
            target = kReject;
          }
          product[product_id(d, e, q)][bit] = target;
        }
      }
    }
  }

  // Expand every product state into a gadget reading one log2(n)-bit block:
  // the block counts as a 1 iff all of its bits are 1.
  const std::size_t gadget = 2 * width - 1;
  auto block_base = [&](State s) -> State {
    return s < 2 ? s : static_cast<State>(2 + (s - 2) * gadget);
  };
  std::vector<std::array<State, 2>> delta(2 + product_count * gadget);
  std::vector<std::uint8_t> accept(delta.size(), 0);
  delta[kAccept] = {kAccept, kAccept};
  delta[kReject] = {kReject, kReject};
  accept[kAccept] = 1;
  for (State s = 2; s < product.size(); ++s) {
    const State base = block_base(s);
    const State on_zero = block_base(product[s][0]);
    const State on_one = block_base(product[s][1]);
    // Local state 0 is s itself; (i, b) for i in [1, width) sits at 2i - 1 + b.
    auto local = [base](std::size_t i, std::size_t b) {
      return static_cast<State>(base + 2 * i - 1 + b);
    };
    if (width == 1) {
      delta[base] = {on_zero, on_one};
      continue;
    }
    delta[base] = {local(1, 0), local(1, 1)};
    for (std::size_t i = 1; i < width; ++i) {
      if (i + 1 < width) {
        delta[local(i, 0)] = {local(i + 1, 0), local(i + 1, 0)};
        delta[local(i, 1)] = {local(i + 1, 0), local(i + 1, 1)};
      } else {
        delta[local(i, 0)] = {on_zero, on_zero};
        delta[local(i, 1)] = {on_zero, on_one};
      }
    }
  }
  return Dfa(block_base(product_id(0, enc.start(), pred.start())), std::move(delta),
             std::move(accept));
}

}  // namespace lprg
