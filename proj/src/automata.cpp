#include "regdissect/automata.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "regdissect/errors.hpp"

namespace regdissect {
namespace {

void check_alphabet(std::string_view alphabet) {
  if (alphabet.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "alphabet must be nonempty");
  }
  std::string sorted(alphabet);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "alphabet has a repeated symbol: " + std::string(alphabet));
  }
}

std::size_t symbol_index(char symbol, std::string_view alphabet) {
  const auto pos = alphabet.find(symbol);
  if (pos == std::string_view::npos) {
    throw Error(ErrorKind::kUnknownSymbol,
                std::string("symbol '") + symbol + "' is not in alphabet \"" +
                    std::string(alphabet) + "\"");
  }
  return pos;
}

void check_residue(Natural modulus, Natural residue) {
  if (modulus == 0 || residue >= modulus) {
    throw Error(ErrorKind::kBadResidue,
                "residue " + std::to_string(residue) + " is not in [0, " +
                    std::to_string(modulus) + ")");
  }
}

// Counter automaton on m states where `advances(symbol)` decides whether a
// symbol moves the counter forward.
template <typename Advances>
Dfa counter_dfa(Natural modulus, Natural residue, std::string_view alphabet,
                Advances advances) {
  const std::size_t k = alphabet.size();
  std::vector<State> transitions(modulus * k);
  std::vector<bool> accepting(modulus, false);
  accepting[residue] = true;
  for (Natural s = 0; s < modulus; ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      transitions[s * k + i] =
          static_cast<State>(advances(alphabet[i]) ? (s + 1) % modulus : s);
    }
  }
  return Dfa(std::string(alphabet), modulus, 0, std::move(accepting),
             std::move(transitions));
}

}  // namespace

Dfa::Dfa(std::string alphabet, std::size_t num_states, State start,
         std::vector<bool> accepting, std::vector<State> transitions)
    : alphabet_(std::move(alphabet)),
      start_(start),
      accepting_(std::move(accepting)),
      transitions_(std::move(transitions)) {
  check_alphabet(alphabet_);
  if (num_states == 0) {
    throw Error(ErrorKind::kInvalidArgument, "a DFA needs at least one state");
  }
  if (accepting_.size() != num_states) {
    throw Error(ErrorKind::kInvalidArgument,
                "accepting vector size does not match the state count");
  }
  if (start_ >= num_states) {
    throw Error(ErrorKind::kInvalidArgument, "start state out of range");
  }
  if (transitions_.size() != num_states * alphabet_.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "transition table must be total over the alphabet");
  }
  for (State s : transitions_) {
    if (s >= num_states) {
      throw Error(ErrorKind::kInvalidArgument,
                  "transition target out of range");
    }
  }
}

bool Dfa::accepts(std::string_view word) const {
  State s = start_;
  for (char c : word) {
    const auto pos = alphabet_.find(c);
    if (pos == std::string::npos) return false;
    s = next(s, pos);
  }
  return accepting_[s];
}

Dfa length_modulus_dfa(Natural modulus, Natural residue,
                       std::string_view alphabet) {
  check_residue(modulus, residue);
  check_alphabet(alphabet);
  return counter_dfa(modulus, residue, alphabet, [](char) { return true; });
}

Dfa prefix_dfa(char symbol, std::string_view alphabet) {
  check_alphabet(alphabet);
  const std::size_t target = symbol_index(symbol, alphabet);
  // 0: start, 1: accepting sink, 2: rejecting sink.
  const std::size_t k = alphabet.size();
  std::vector<State> transitions(3 * k);
  for (std::size_t i = 0; i < k; ++i) {
    transitions[i] = i == target ? 1 : 2;
    transitions[k + i] = 1;
    transitions[2 * k + i] = 2;
  }
  return Dfa(std::string(alphabet), 3, 0, {false, true, false},
             std::move(transitions));
}

Dfa symbol_count_modulus_dfa(char symbol, Natural modulus, Natural residue,
                             std::string_view alphabet) {
  check_residue(modulus, residue);
  check_alphabet(alphabet);
  symbol_index(symbol, alphabet);
  return counter_dfa(modulus, residue, alphabet,
                     [symbol](char c) { return c == symbol; });
}

Dfa upset_length_dfa(const UltimatelyPeriodicSet& lengths,
                     std::string_view alphabet) {
  check_alphabet(alphabet);
  // State i < t tracks length i exactly; state t + j tracks lengths
  // n >= t with n - t = j mod q.
  const Natural t = lengths.threshold();
  const Natural q = lengths.period();
  const std::size_t n = t + q;
  const std::size_t k = alphabet.size();
  std::vector<bool> accepting(n);
  std::vector<State> transitions(n * k);
  for (std::size_t s = 0; s < n; ++s) {
    accepting[s] = lengths.contains(s);
    const State succ = static_cast<State>(s + 1 < n ? s + 1 : t);
    for (std::size_t i = 0; i < k; ++i) transitions[s * k + i] = succ;
  }
  return Dfa(std::string(alphabet), n, 0, std::move(accepting),
             std::move(transitions));
}

Dfa product(const Dfa& a, const Dfa& b, ProductKind kind) {
  const std::string& alphabet = a.alphabet();
  std::string sa = alphabet;
  std::string sb = b.alphabet();
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) {
    throw Error(ErrorKind::kAlphabetMismatch,
                "product of automata over \"" + alphabet + "\" and \"" +
                    b.alphabet() + "\"");
  }
  const std::size_t k = alphabet.size();
  std::vector<std::size_t> b_index(k);
  for (std::size_t i = 0; i < k; ++i) {
    b_index[i] = b.alphabet().find(alphabet[i]);
  }

  // Only reachable pairs are materialized.
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State x, State y) {
    auto [it, inserted] = ids.try_emplace({x, y}, static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(x, y);
    return it->second;
  };
  intern(a.start(), b.start());
  std::vector<State> transitions;
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const auto [x, y] = pairs[s];
    for (std::size_t i = 0; i < k; ++i) {
      transitions.push_back(intern(a.next(x, i), b.next(y, b_index[i])));
    }
  }
  std::vector<bool> accepting(pairs.size());
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const bool in_a = a.accepting()[pairs[s].first];
    const bool in_b = b.accepting()[pairs[s].second];
    switch (kind) {
      case ProductKind::kIntersection: accepting[s] = in_a && in_b; break;
      case ProductKind::kUnion: accepting[s] = in_a || in_b; break;
      case ProductKind::kDifference: accepting[s] = in_a && !in_b; break;
    }
  }
  return Dfa(alphabet, pairs.size(), 0, std::move(accepting),
             std::move(transitions));
}

Dfa complement(const Dfa& a) {
  std::vector<bool> accepting = a.accepting();
  accepting.flip();
  return Dfa(a.alphabet(), a.num_states(), a.start(), std::move(accepting),
             a.transitions());
}

bool is_empty(const Dfa& a) {
  std::vector<bool> seen(a.num_states(), false);
  std::queue<State> todo;
  todo.push(a.start());
  seen[a.start()] = true;
  while (!todo.empty()) {
    const State s = todo.front();
    todo.pop();
    if (a.accepting()[s]) return false;
    for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
      const State t = a.next(s, i);
      if (!seen[t]) {
        seen[t] = true;
        todo.push(t);
      }
    }
  }
  return true;
}

LengthBits length_spectrum(const Dfa& a, Natural max_length) {
  LengthBits out(max_length + 1);
  std::vector<bool> layer(a.num_states(), false);
  layer[a.start()] = true;
  for (Natural n = 0; n <= max_length; ++n) {
    std::vector<bool> next(a.num_states(), false);
    for (State s = 0; s < a.num_states(); ++s) {
      if (!layer[s]) continue;
      if (a.accepting()[s]) out.set(n);
      for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
        next[a.next(s, i)] = true;
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::string to_string(const Dfa& a) {
  std::ostringstream os;
  os << "DFA over \"" << a.alphabet() << "\", " << a.num_states()
     << " states, start " << a.start() << ", accepting {";
  bool first = true;
  for (State s = 0; s < a.num_states(); ++s) {
    if (!a.accepting()[s]) continue;
    os << (first ? "" : ",") << s;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace regdissect
