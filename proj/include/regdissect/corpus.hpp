#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regdissect/language.hpp"

namespace regdissect {

struct CorpusGrammar {
  std::string name;
  std::string text;
  std::string summary;
};

/// Grammars shipped with the library (also under corpus/*.cfg).
const std::vector<CorpusGrammar>& corpus_grammars();

/// A corpus grammar or builtin by name. Throws InvalidArgument otherwise.
LanguageHandle corpus_language(const std::string& name);

/// (L, B) name pairs with L ⊆ B over the same alphabet.
const std::vector<std::pair<std::string, std::string>>& nested_corpus_pairs();

}  // namespace regdissect
