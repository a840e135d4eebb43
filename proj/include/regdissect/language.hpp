#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regdissect/automata.hpp"
#include "regdissect/grammar.hpp"

namespace regdissect {

enum class LanguageKind {
  kGrammar,
  kBuiltin,
  kDfa,
  kIntersection,  // handle restricted to a DFA
  kUnion,
  kDifference,
  kReversal,
};

std::string_view to_string(LanguageKind kind);

namespace detail {
class LanguageNode;
}

/// Uniform, immutable view of a language: exact membership plus enumeration
/// of members up to a length bound. Copies share the underlying node.
class LanguageHandle {
 public:
  static LanguageHandle from_grammar(std::string id, ContextFreeGrammar g);
  static LanguageHandle from_dfa(std::string id, Dfa dfa);
  /// factorial_unary, factorial_words, ab_power, semilin2_counterexample,
  /// l2_union. Throws InvalidArgument for other names.
  static LanguageHandle builtin(std::string_view name);
  static const std::vector<std::string>& builtin_names();

  const std::string& id() const;
  LanguageKind kind() const;
  /// Sorted set of symbols members may use.
  const std::string& alphabet() const;

  /// Exact membership. Strings with foreign symbols are not members.
  bool contains(std::string_view x) const;
  /// Members of length <= max_length in (length, lexicographic) order.
  Enumeration enumerate(Natural max_length,
                        const EnumerationLimits& limits = {}) const;
  /// Lengths 0..max_length that carry a member. Exact for grammars and
  /// builtins; composites use the census of their enumeration.
  LengthBits length_spectrum(Natural max_length,
                             const EnumerationLimits& limits = {}) const;

  /// Expression tree, e.g. "(grammar:l1 - grammar:l1_even)".
  std::string describe() const;
  std::vector<LanguageHandle> operands() const;
  /// The restricting or backing DFA for kDfa and kIntersection handles.
  const Dfa* dfa() const;
  const ContextFreeGrammar* grammar() const;

 private:
  explicit LanguageHandle(std::shared_ptr<const detail::LanguageNode> node)
      : node_(std::move(node)) {}

  friend LanguageHandle restrict_to(const LanguageHandle&, const Dfa&);
  friend LanguageHandle unite(const LanguageHandle&, const LanguageHandle&);
  friend LanguageHandle subtract(const LanguageHandle&, const LanguageHandle&);
  friend LanguageHandle reverse(const LanguageHandle&);

  std::shared_ptr<const detail::LanguageNode> node_;
};

/// h ∩ L(dfa). The DFA alphabet must cover the handle's alphabet.
LanguageHandle restrict_to(const LanguageHandle& h, const Dfa& dfa);
LanguageHandle unite(const LanguageHandle& a, const LanguageHandle& b);
LanguageHandle subtract(const LanguageHandle& a, const LanguageHandle& b);
LanguageHandle reverse(const LanguageHandle& h);

/// Cutoff p and constant set K of the constant-growth property: every
/// member length n >= p has n - c as a member length for some c in K.
struct ConstantGrowthWitness {
  Natural p = 1;
  std::vector<Natural> constants;
};

struct ConstantGrowthVerdict {
  bool holds = false;
  std::optional<Natural> first_violation;
};

ConstantGrowthVerdict check_constant_growth(const LanguageHandle& h,
                                            const ConstantGrowthWitness& w,
                                            Natural max_length);

}  // namespace regdissect
