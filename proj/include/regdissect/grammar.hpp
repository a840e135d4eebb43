#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "regdissect/upsets.hpp"

namespace regdissect {

/// A grammar symbol: a terminal character or an index into the grammar's
/// nonterminal table.
struct GrammarSymbol {
  bool terminal = false;
  char character = 0;
  std::size_t nonterminal = 0;

  bool operator==(const GrammarSymbol&) const = default;
};

struct Production {
  std::size_t lhs = 0;
  std::vector<GrammarSymbol> body;

  bool operator==(const Production&) const = default;
};

struct EnumerationLimits {
  /// Total number of strings an enumeration may return.
  std::size_t max_total = 1'000'000;
  /// Strings kept per length; keeps explosive languages (Dyck words,
  /// regular supersets) tractable while every length stays represented.
  std::size_t max_per_length = 64;
};

/// Members of a language up to some length, ordered by (length, lexicographic).
/// `truncated` is set when a cap dropped members.
struct Enumeration {
  std::vector<std::string> members;
  bool truncated = false;
};

namespace detail {
struct NormalForm;
}

/// A validated context-free grammar whose useless symbols have been removed.
///
/// Nonterminals are identifiers starting with an uppercase ASCII letter;
/// every other token of a rule body is a single-character terminal.
class ContextFreeGrammar {
 public:
  ContextFreeGrammar(std::vector<std::string> nonterminals,
                     std::vector<Production> productions, std::size_t start,
                     std::vector<std::string> removed = {});

  const std::vector<std::string>& nonterminals() const { return nonterminals_; }
  const std::vector<Production>& productions() const { return productions_; }
  std::size_t start() const { return start_; }
  /// Sorted terminal alphabet.
  const std::string& terminals() const { return terminals_; }
  /// Nonterminals dropped as non-productive or unreachable.
  const std::vector<std::string>& removed() const { return removed_; }

  std::string to_text() const;

 private:
  friend bool member(const ContextFreeGrammar&, std::string_view);
  friend Enumeration enumerate(const ContextFreeGrammar&, Natural,
                               const EnumerationLimits&);

  std::vector<std::string> nonterminals_;
  std::vector<Production> productions_;
  std::size_t start_;
  std::string terminals_;
  std::vector<std::string> removed_;
  std::shared_ptr<const detail::NormalForm> normal_form_;
};

/// Parses `Nonterminal -> body | body` lines; `ε` is the empty body and `#`
/// starts a comment. The first rule's left-hand side is the start symbol.
ContextFreeGrammar parse_grammar(std::string_view text);

/// Exact membership (Earley recognition over the internal normal form).
bool member(const ContextFreeGrammar& g, std::string_view w);

/// Bit n set iff L(g) has a string of length n, for n <= max_length.
LengthBits length_spectrum(const ContextFreeGrammar& g, Natural max_length);

/// Members of L(g) of length <= max_length, subject to `limits`.
Enumeration enumerate(const ContextFreeGrammar& g, Natural max_length,
                      const EnumerationLimits& limits = {});

struct InferredUpset {
  UltimatelyPeriodicSet lengths;
  Natural verified_to = 0;
  std::string confidence;
};

/// Smallest (period, threshold), period first, with period <= N/4 such that
/// the spectrum is periodic on [threshold, N] and threshold + 3 * period <= N.
/// Throws InferenceFailed when no such pair exists.
InferredUpset infer_upset(const LengthBits& spectrum, Natural max_length);

}  // namespace regdissect
