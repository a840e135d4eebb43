#include "regdissect/corpus.hpp"

#include <algorithm>

#include "regdissect/errors.hpp"

namespace regdissect {

const std::vector<CorpusGrammar>& corpus_grammars() {
  static const std::vector<CorpusGrammar> grammars{
      {"l1", "S -> 0 S 1 | ε\n", "0^n 1^n"},
      {"l1_even", "S -> 0 0 S 1 1 | ε\n", "0^n 1^n with n even"},
      {"l1_or_mirror", "S -> A | B\nA -> 0 A 1 | ε\nB -> 1 B 0 | ε\n",
       "0^n 1^n or 1^n 0^n"},
      {"ss_aa", "S -> S S | a a\n", "a^{2k}, k >= 1, via S -> S S"},
      {"a_star", "S -> a S | ε\n", "a^*"},
      {"dyck", "S -> ( S ) S | ε\n", "balanced parentheses"},
      {"nested_parens", "S -> ( S ) | ε\n", "(^n )^n"},
      {"unary_4n3", "S -> 0 0 0 | 0 0 0 0 S\n", "0^{4n+3}"},
  };
  return grammars;
}

LanguageHandle corpus_language(const std::string& name) {
  for (const auto& g : corpus_grammars()) {
    if (g.name == name) return LanguageHandle::from_grammar(name, parse_grammar(g.text));
  }
  const auto& builtins = LanguageHandle::builtin_names();
  if (std::find(builtins.begin(), builtins.end(), name) != builtins.end()) {
    return LanguageHandle::builtin(name);
  }
  throw Error(ErrorKind::kInvalidArgument, "no corpus language named '" + name + "'");
}

const std::vector<std::pair<std::string, std::string>>& nested_corpus_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs{
      {"l1_even", "l1"},
      {"l1", "l1_or_mirror"},
      {"ss_aa", "a_star"},
      {"nested_parens", "dyck"},
  };
  return pairs;
}

}  // namespace regdissect
