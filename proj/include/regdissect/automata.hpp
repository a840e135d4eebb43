#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "regdissect/upsets.hpp"

namespace regdissect {

using State = std::uint32_t;

/// A complete deterministic finite automaton over a single-character
/// alphabet. Transitions are stored row-major: next(s, i) is the successor
/// of state s on the i-th alphabet symbol.
class Dfa {
 public:
  Dfa(std::string alphabet, std::size_t num_states, State start,
      std::vector<bool> accepting, std::vector<State> transitions);

  const std::string& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return accepting_.size(); }
  State start() const { return start_; }
  const std::vector<bool>& accepting() const { return accepting_; }
  const std::vector<State>& transitions() const { return transitions_; }

  State next(State s, std::size_t symbol_index) const {
    return transitions_[s * alphabet_.size() + symbol_index];
  }

  /// Symbols outside the alphabet make the word rejected.
  bool accepts(std::string_view word) const;

  bool operator==(const Dfa&) const = default;

 private:
  std::string alphabet_;
  State start_;
  std::vector<bool> accepting_;
  std::vector<State> transitions_;
};

/// Strings whose length is r mod m (exactly m states).
Dfa length_modulus_dfa(Natural modulus, Natural residue,
                       std::string_view alphabet);

/// Nonempty strings starting with `symbol`.
Dfa prefix_dfa(char symbol, std::string_view alphabet);

/// Strings with #symbol = r mod m.
Dfa symbol_count_modulus_dfa(char symbol, Natural modulus, Natural residue,
                             std::string_view alphabet);

/// Strings whose length lies in `lengths` (at most t + q states).
Dfa upset_length_dfa(const UltimatelyPeriodicSet& lengths,
                     std::string_view alphabet);

enum class ProductKind { kIntersection, kUnion, kDifference };

Dfa product(const Dfa& a, const Dfa& b, ProductKind kind);
Dfa complement(const Dfa& a);

/// Exact emptiness by reachability from the start state.
bool is_empty(const Dfa& a);

/// Bit n set iff the automaton accepts some word of length n, n <= max.
LengthBits length_spectrum(const Dfa& a, Natural max_length);

std::string to_string(const Dfa& a);

}  // namespace regdissect
