#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "regdissect/upsets.hpp"

namespace regdissect {

using Vector = std::vector<Natural>;
using ParikhVector = Vector;

/// A linear set over N^k given by a critical matrix: row 0 is the offset,
/// the remaining rows are period vectors. v is a member iff
/// (1, z_1, ..., z_m) * T = v for some z in N^m.
///
/// All-zero period rows never change a solution; they are dropped at
/// construction and `dropped_zero_rows()` records how many were seen.
class LinearSet {
 public:
  LinearSet(Vector offset, std::vector<Vector> periods);

  /// Builds from the full (m+1) x k matrix, row 0 being the offset.
  static LinearSet from_matrix(const std::vector<Vector>& matrix);

  std::size_t dimension() const { return offset_.size(); }
  const Vector& offset() const { return offset_; }
  const std::vector<Vector>& periods() const { return periods_; }
  std::size_t dropped_zero_rows() const { return dropped_zero_rows_; }

  /// Offset followed by the period rows.
  std::vector<Vector> matrix() const;

  bool contains(const Vector& v) const;

  bool operator==(const LinearSet&) const = default;

 private:
  Vector offset_;
  std::vector<Vector> periods_;
  std::size_t dropped_zero_rows_ = 0;
};

class SemiLinearSet {
 public:
  explicit SemiLinearSet(std::size_t dimension,
                         std::vector<LinearSet> components = {});

  std::size_t dimension() const { return dimension_; }
  const std::vector<LinearSet>& components() const { return components_; }

  void add(LinearSet component);

  bool operator==(const SemiLinearSet&) const = default;

 private:
  std::size_t dimension_;
  std::vector<LinearSet> components_;
};

/// Symbol-occurrence counts of x in the declared alphabet order.
ParikhVector parikh_of(std::string_view x, std::string_view alphabet);

bool member(const SemiLinearSet& s, const Vector& v);

/// True iff some component carries a period row.
bool is_infinite(const SemiLinearSet& s);

/// {v . weights : v in s} as a one-dimensional set.
SemiLinearSet image_under_weights(const SemiLinearSet& s,
                                  const Vector& weights);

/// Exact conversion of a one-dimensional set to its canonical
/// ultimately periodic form.
UltimatelyPeriodicSet to_upset(const SemiLinearSet& s);

/// Every exponent tuple (i_1..i_m) with w = w_1^{i_1} ... w_m^{i_m}.
std::set<std::vector<std::size_t>> tilde_psi_decompositions(
    std::string_view w, const std::vector<std::string>& words);

}  // namespace regdissect
