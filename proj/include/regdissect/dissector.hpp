#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regdissect/automata.hpp"
#include "regdissect/errors.hpp"
#include "regdissect/language.hpp"
#include "regdissect/semilinear.hpp"

namespace regdissect {

// Requires N >= 4 * threshold and 0 < window_fraction <= 1/2.
struct DissectionConfig {
  Natural max_length = 400;
  std::size_t threshold = 20;
  /// Both sides must grow inside the last `window_fraction * N` lengths.
  double window_fraction = 0.25;
  /// Largest modulus tried by the symbol-count strategy.
  Natural symbol_modulus_cap = 8;
  EnumerationLimits limits;
};

/// Throws InvalidArgument when the config breaks its invariants.
void validate_config(const DissectionConfig& config);

enum class Verdict { kVerifiedAtN, kFailed };
std::string_view to_string(Verdict v);

// Cumulative member counts up to `length`, split by the witness.
struct Checkpoint {
  Natural length = 0;
  std::size_t inside = 0;
  std::size_t outside = 0;

  bool operator==(const Checkpoint&) const = default;
};

/// Finite evidence that a DFA splits a language into two large parts.
/// Never a claim that either part is infinite.
struct DissectionCertificate {
  std::string language;
  std::string strategy;
  std::optional<Dfa> witness;
  Natural max_length = 0;
  std::size_t threshold = 0;
  double window_fraction = 0.25;
  Natural window_start = 0;
  /// Ascending lengths; always includes N/4, N/2, 3N/4, N and window_start.
  std::vector<Checkpoint> checkpoints;
  Verdict verdict = Verdict::kFailed;
  /// The enumeration hit a cap, so counts are lower bounds.
  bool truncated = false;
  std::vector<std::string> notes;
  /// Earlier strategies tried by dissect_auto that did not verify.
  std::vector<DissectionCertificate> attempts;

  bool verified() const { return verdict == Verdict::kVerifiedAtN; }
  const Checkpoint& final_counts() const { return checkpoints.back(); }
};

class StrategyFailedError : public Error {
 public:
  explicit StrategyFailedError(DissectionCertificate certificate)
      : Error(ErrorKind::kStrategyFailed,
              "strategy '" + certificate.strategy + "' did not verify on " +
                  certificate.language),
        certificate_(std::move(certificate)) {}
  const DissectionCertificate& certificate() const { return certificate_; }

 private:
  DissectionCertificate certificate_;
};

struct ResidueChoice {
  Natural modulus = 1;
  Natural first = 0;
  Natural second = 0;

  bool operator==(const ResidueChoice&) const = default;
};

/// Two residues whose classes in x are both infinite. Uses the canonical
/// period q when two classes qualify, otherwise splits the single class r
/// into r and r + q modulo 2q. Throws FiniteSet for finite x.
ResidueChoice choose_residues(const UltimatelyPeriodicSet& x);

/// Splits the members of length <= N by `c` and applies the verdict rule.
DissectionCertificate verify_dissection(const LanguageHandle& h, const Dfa& c,
                                        const DissectionConfig& config = {});

/// Length-modulus witness from a known length set.
DissectionCertificate dissect_by_length(const LanguageHandle& h,
                                        const UltimatelyPeriodicSet& lengths,
                                        const DissectionConfig& config = {});
/// Length-modulus witness from the inferred length spectrum.
DissectionCertificate dissect_by_length(const LanguageHandle& h,
                                        const DissectionConfig& config = {});

/// Disjoint length DFAs C_0, C_1 for a linear set with a nonzero period.
std::pair<Dfa, Dfa> dissect_semilinear_difference(
    const std::vector<Vector>& matrix, std::string_view alphabet);

/// Length modulus, then prefix, then symbol-count strategies. Always returns
/// a certificate; a failed one lists every attempt.
DissectionCertificate dissect_auto(const LanguageHandle& h,
                                   const DissectionConfig& config = {});

// Exact analysis of a regular C with LT(C) = union of A_{a,b,k} against the
// factorial lengths S = {m! : m >= 1}.
struct FactorialOutcome {
  /// Some triple has b = 0, so C ∩ S is cofinite in S.
  bool inside_cofinite = false;
  bool dissects = false;
  /// From this m on every m! lies on the infinite side.
  Natural cutoff = 0;
  /// The m >= 1 (below the cutoff) whose m! falls on the finite side.
  std::vector<Natural> finite_side;
  std::string summary;
};

FactorialOutcome factorial_dissection_decision(
    const std::vector<ArithmeticProgression>& triples);

}  // namespace regdissect
