#pragma once

#include <optional>
#include <string>

#include "regdissect/dissector.hpp"
#include "regdissect/language.hpp"

namespace regdissect {

/// B is meant to sit inside A with an infinite margin.
struct CoveringPair {
  LanguageHandle cover;  // A
  LanguageHandle inner;  // B
};

struct CoverVerdict {
  bool holds = false;
  /// Member of B (length <= N) that A rejects, if any.
  std::optional<std::string> violation;
  std::size_t margin = 0;            // |A - B| up to N
  std::size_t margin_at_window = 0;  // same count at the window start
  bool truncated = false;
};

/// B ⊆ A on all enumerated strings and |A - B| >= θ with growth in the
/// final window.
CoverVerdict check_icover(const CoveringPair& pair,
                          const DissectionConfig& config = {});

/// E = B ∪ (A ∩ C), kept as a lazy composite handle.
LanguageHandle build_separator(const CoveringPair& pair, const Dfa& c);

struct SeparationVerdict {
  bool inner_in_separator = false;  // B ⊆ E
  bool separator_in_cover = false;  // E ⊆ A
  std::optional<std::string> violation;
  std::size_t cover_margin = 0;      // |A - E|
  std::size_t separator_margin = 0;  // |E - B|
  bool cover_margin_grows = false;
  bool separator_margin_grows = false;

  bool holds(std::size_t threshold) const {
    return inner_in_separator && separator_in_cover &&
           cover_margin >= threshold && separator_margin >= threshold &&
           cover_margin_grows && separator_margin_grows;
  }
};

SeparationVerdict verify_iseparation(const CoveringPair& pair,
                                     const LanguageHandle& separator,
                                     const DissectionConfig& config = {});

struct SeparationReport {
  LanguageHandle separator;
  DissectionCertificate margin_certificate;  // dissection of D = A - B
  CoverVerdict cover;
  SeparationVerdict separation;
};

/// D = A - B, dissect D, E from the witness, verify. Throws CoverCheckFailed
/// or StrategyFailedError.
SeparationReport iseparate(const CoveringPair& pair,
                           const DissectionConfig& config = {});

}  // namespace regdissect
