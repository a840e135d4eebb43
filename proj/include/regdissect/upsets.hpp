#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace regdissect {

using Natural = std::uint64_t;

// Indicator vector over lengths 0..N (bit n set iff length n is present).
using LengthBits = boost::dynamic_bitset<>;

// {step * n + offset : n in N, n >= start}. step must be at least 1.
struct ArithmeticProgression {
  Natural step = 1;
  Natural offset = 0;
  Natural start = 0;

  bool operator==(const ArithmeticProgression&) const = default;
};

/// An ultimately periodic subset of the naturals.
///
/// n is a member iff (n < threshold and n is in the finite part) or
/// (n >= threshold and n mod period is one of the residues). Every value is
/// kept in canonical form: the period is minimal and, for that period, the
/// threshold is minimal. Structural equality is therefore set equality.
class UltimatelyPeriodicSet {
 public:
  /// The empty set, represented as (t=0, q=1, residues={}).
  UltimatelyPeriodicSet();

  /// Builds and canonicalizes a set from raw parts. Finite-part entries must
  /// be below the threshold and residues below the period.
  static UltimatelyPeriodicSet from_parts(Natural threshold, Natural period,
                                          std::vector<Natural> finite_part,
                                          std::vector<Natural> residues);

  /// Samples `member` on [0, threshold) and once per residue class at or
  /// above the threshold, then canonicalizes.
  static UltimatelyPeriodicSet from_predicate(
      Natural threshold, Natural period,
      const std::function<bool(Natural)>& member);

  static UltimatelyPeriodicSet naturals();
  static UltimatelyPeriodicSet finite(std::span<const Natural> values);

  bool contains(Natural n) const;

  Natural threshold() const { return threshold_; }
  Natural period() const { return period_; }
  const std::vector<Natural>& finite_part() const { return finite_part_; }
  const std::vector<Natural>& residues() const { return residues_; }

  bool operator==(const UltimatelyPeriodicSet& other) const {
    return threshold_ == other.threshold_ && period_ == other.period_ &&
           finite_part_ == other.finite_part_ && residues_ == other.residues_;
  }

  std::string to_string() const;

 private:
  Natural threshold_ = 0;
  Natural period_ = 1;
  std::vector<Natural> finite_part_;
  std::vector<Natural> residues_;
  std::vector<bool> residue_mask_;
};

UltimatelyPeriodicSet from_progressions(
    std::span<const ArithmeticProgression> progressions);
UltimatelyPeriodicSet from_progression(const ArithmeticProgression& p);

UltimatelyPeriodicSet set_union(const UltimatelyPeriodicSet& x,
                                const UltimatelyPeriodicSet& y);
UltimatelyPeriodicSet intersect(const UltimatelyPeriodicSet& x,
                                const UltimatelyPeriodicSet& y);
UltimatelyPeriodicSet complement(const UltimatelyPeriodicSet& x);
UltimatelyPeriodicSet difference(const UltimatelyPeriodicSet& x,
                                 const UltimatelyPeriodicSet& y);

/// {m + n : m in x, n in y}, exact.
UltimatelyPeriodicSet minkowski_sum(const UltimatelyPeriodicSet& x,
                                    const UltimatelyPeriodicSet& y);

bool is_infinite(const UltimatelyPeriodicSet& x);

/// Residues r < modulus whose class {n in x : n = r mod modulus} is infinite.
std::vector<Natural> infinite_residues(const UltimatelyPeriodicSet& x,
                                       Natural modulus);

/// Membership of x on 0..max_length as a bit vector.
LengthBits to_bits(const UltimatelyPeriodicSet& x, Natural max_length);

/// Minkowski sum of two length vectors, truncated to the shorter size.
LengthBits truncated_minkowski(const LengthBits& x, const LengthBits& y);

}  // namespace regdissect
