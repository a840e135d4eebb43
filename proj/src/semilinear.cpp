#include "regdissect/semilinear.hpp"

#include <algorithm>
#include <numeric>

#include "regdissect/errors.hpp"

namespace regdissect {
namespace {

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Natural x) { return x == 0; });
}

void require_dimension(std::size_t expected, std::size_t actual,
                       std::string_view what) {
  if (expected != actual) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::string(what) + " has dimension " +
                    std::to_string(actual) + ", expected " +
                    std::to_string(expected));
  }
}

// Depth-first search over period multiplicities. `zero_from[i][j]` is true
// when every period row at index >= i has a zero in coordinate j, so the
// remainder there must already be zero.
class Solver {
 public:
  explicit Solver(const std::vector<Vector>& periods) : periods_(periods) {
    const std::size_t m = periods.size();
    const std::size_t k = m == 0 ? 0 : periods.front().size();
    zero_from_.assign(m + 1, std::vector<bool>(k, true));
    for (std::size_t i = m; i-- > 0;) {
      for (std::size_t j = 0; j < k; ++j) {
        zero_from_[i][j] = zero_from_[i + 1][j] && periods[i][j] == 0;
      }
    }
  }

  bool solve(std::size_t i, Vector& rem) const {
    if (i == periods_.size()) return is_zero(rem);
    for (std::size_t j = 0; j < rem.size(); ++j) {
      if (rem[j] != 0 && zero_from_[i][j]) return false;
    }
    const Vector& p = periods_[i];
    Natural bound = ~Natural{0};
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] != 0) bound = std::min(bound, rem[j] / p[j]);
    }
    if (i + 1 == periods_.size()) {
      // Last row: the multiplicity is forced by any nonzero coordinate.
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (rem[j] != p[j] * bound) return false;
      }
      return true;
    }
    for (Natural z = 0;; ++z) {
      if (solve(i + 1, rem)) return true;
      if (z == bound) break;
      for (std::size_t j = 0; j < p.size(); ++j) rem[j] -= p[j];
    }
    // Restore the remainder for the caller.
    for (std::size_t j = 0; j < p.size(); ++j) rem[j] += p[j] * bound;
    return false;
  }

 private:
  const std::vector<Vector>& periods_;
  std::vector<std::vector<bool>> zero_from_;
};

}  // namespace

LinearSet::LinearSet(Vector offset, std::vector<Vector> periods)
    : offset_(std::move(offset)) {
  if (offset_.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "linear set dimension must be at least 1");
  }
  for (auto& row : periods) {
    require_dimension(offset_.size(), row.size(), "period row");
    if (is_zero(row)) {
      ++dropped_zero_rows_;
    } else {
      periods_.push_back(std::move(row));
    }
  }
}

LinearSet LinearSet::from_matrix(const std::vector<Vector>& matrix) {
  if (matrix.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "critical matrix needs an offset row");
  }
  return LinearSet(matrix.front(), {matrix.begin() + 1, matrix.end()});
}

std::vector<Vector> LinearSet::matrix() const {
  std::vector<Vector> rows{offset_};
  rows.insert(rows.end(), periods_.begin(), periods_.end());
  return rows;
}

bool LinearSet::contains(const Vector& v) const {
  require_dimension(dimension(), v.size(), "vector");
  Vector rem(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] < offset_[j]) return false;
    rem[j] = v[j] - offset_[j];
  }
  return Solver(periods_).solve(0, rem);
}

SemiLinearSet::SemiLinearSet(std::size_t dimension,
                             std::vector<LinearSet> components)
    : dimension_(dimension) {
  if (dimension_ == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "semi-linear set dimension must be at least 1");
  }
  for (auto& c : components) add(std::move(c));
}

void SemiLinearSet::add(LinearSet component) {
  require_dimension(dimension_, component.dimension(), "component");
  components_.push_back(std::move(component));
}

ParikhVector parikh_of(std::string_view x, std::string_view alphabet) {
  ParikhVector counts(alphabet.size(), 0);
  for (char c : x) {
    const auto pos = alphabet.find(c);
    if (pos == std::string_view::npos) {
      throw Error(ErrorKind::kUnknownSymbol,
                  std::string("symbol '") + c + "' is not in the alphabet");
    }
    ++counts[pos];
  }
  return counts;
}

bool member(const SemiLinearSet& s, const Vector& v) {
  require_dimension(s.dimension(), v.size(), "vector");
  return std::any_of(s.components().begin(), s.components().end(),
                     [&](const LinearSet& c) { return c.contains(v); });
}

bool is_infinite(const SemiLinearSet& s) {
  return std::any_of(s.components().begin(), s.components().end(),
                     [](const LinearSet& c) { return !c.periods().empty(); });
}

SemiLinearSet image_under_weights(const SemiLinearSet& s,
                                  const Vector& weights) {
  require_dimension(s.dimension(), weights.size(), "weight vector");
  if (std::any_of(weights.begin(), weights.end(),
                  [](Natural w) { return w == 0; })) {
    throw Error(ErrorKind::kInvalidArgument, "weights must be positive");
  }
  auto dot = [&](const Vector& row) {
    return std::inner_product(row.begin(), row.end(), weights.begin(),
                              Natural{0});
  };
  SemiLinearSet out(1);
  for (const auto& c : s.components()) {
    std::vector<Vector> periods;
    for (const auto& p : c.periods()) periods.push_back({dot(p)});
    out.add(LinearSet({dot(c.offset())}, std::move(periods)));
  }
  return out;
}

UltimatelyPeriodicSet to_upset(const SemiLinearSet& s) {
  require_dimension(1, s.dimension(), "set");
  UltimatelyPeriodicSet out;
  for (const auto& c : s.components()) {
    const Natural base = c.offset()[0];
    if (c.periods().empty()) {
      const Natural point[] = {base};
      out = set_union(out, UltimatelyPeriodicSet::finite(point));
      continue;
    }
    Natural g = 0;
    Natural largest = 0;
    for (const auto& p : c.periods()) {
      g = std::gcd(g, p[0]);
      largest = std::max(largest, p[0]);
    }
    // Generators p/g have gcd 1, so the numerical semigroup they span
    // contains every s >= (max p/g)^2; enumerate below that exhaustively.
    const Natural top = largest / g;
    const Natural bound = top * top;
    std::vector<bool> reach(bound + 1, false);
    reach[0] = true;
    for (Natural v = 1; v <= bound; ++v) {
      for (const auto& p : c.periods()) {
        const Natural gen = p[0] / g;
        if (gen <= v && reach[v - gen]) {
          reach[v] = true;
          break;
        }
      }
    }
    std::vector<Natural> finite;
    for (Natural v = 0; v < bound; ++v) {
      if (reach[v]) finite.push_back(base + g * v);
    }
    const Natural threshold = base + g * bound;
    out = set_union(out, UltimatelyPeriodicSet::from_parts(
                             threshold, g, std::move(finite),
                             {threshold % g}));
  }
  return out;
}

std::set<std::vector<std::size_t>> tilde_psi_decompositions(
    std::string_view w, const std::vector<std::string>& words) {
  if (words.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "need at least one word");
  }
  for (const auto& word : words) {
    if (word.empty()) {
      throw Error(ErrorKind::kEmptyWord, "decomposition words must be nonempty");
    }
  }
  const std::size_t m = words.size();
  const std::size_t n = w.size();
  // can_finish[j][pos]: w[pos..] factors as words[j]^* ... words[m-1]^*.
  std::vector<std::vector<bool>> can_finish(m + 1,
                                            std::vector<bool>(n + 1, false));
  can_finish[m][n] = true;
  for (std::size_t j = m; j-- > 0;) {
    const auto& word = words[j];
    for (std::size_t pos = n + 1; pos-- > 0;) {
      bool ok = can_finish[j + 1][pos];
      if (!ok && pos + word.size() <= n &&
          w.compare(pos, word.size(), word) == 0) {
        ok = can_finish[j][pos + word.size()];
      }
      can_finish[j][pos] = ok;
    }
  }

  std::set<std::vector<std::size_t>> out;
  std::vector<std::size_t> exponents(m, 0);
  auto walk = [&](auto&& self, std::size_t j, std::size_t pos) -> void {
    if (j == m) {
      if (pos == n) out.insert(exponents);
      return;
    }
    const auto& word = words[j];
    std::size_t count = 0;
    std::size_t at = pos;
    while (true) {
      if (can_finish[j + 1][at]) {
        exponents[j] = count;
        self(self, j + 1, at);
      }
      if (at + word.size() > n || w.compare(at, word.size(), word) != 0) break;
      at += word.size();
      ++count;
      if (!can_finish[j][at]) break;
    }
    exponents[j] = 0;
  };
  if (can_finish[0][0]) walk(walk, 0, 0);
  return out;
}

}  // namespace regdissect
