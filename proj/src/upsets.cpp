#include "regdissect/upsets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "regdissect/errors.hpp"

namespace regdissect {
namespace {

std::vector<Natural> divisors(Natural n) {
  std::vector<Natural> out;
  for (Natural d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Range>
std::string join_naturals(const Range& values) {
  std::ostringstream os;
  bool first = true;
  for (Natural v : values) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  return os.str();
}

}  // namespace

UltimatelyPeriodicSet::UltimatelyPeriodicSet() : residue_mask_(1, false) {}

UltimatelyPeriodicSet UltimatelyPeriodicSet::from_predicate(
    Natural threshold, Natural period,
    const std::function<bool(Natural)>& member) {
  if (period == 0) {
    throw Error(ErrorKind::kInvalidArgument, "period must be at least 1");
  }
  std::vector<bool> below(threshold);
  for (Natural n = 0; n < threshold; ++n) below[n] = member(n);

  std::vector<bool> mask(period);
  for (Natural r = 0; r < period; ++r) {
    const Natural n = threshold + (r + period - threshold % period) % period;
    mask[r] = member(n);
  }

  // Minimal period: smallest divisor d of q with mask[i] == mask[i mod d].
  Natural minimal = period;
  for (Natural d : divisors(period)) {
    bool ok = true;
    for (Natural i = d; i < period && ok; ++i) ok = mask[i] == mask[i % d];
    if (ok) {
      minimal = d;
      break;
    }
  }
  mask.resize(minimal);

  // Minimal threshold for that period.
  Natural t = threshold;
  while (t > 0 && below[t - 1] == mask[(t - 1) % minimal]) --t;

  UltimatelyPeriodicSet out;
  out.threshold_ = t;
  out.period_ = minimal;
  for (Natural n = 0; n < t; ++n) {
    if (below[n]) out.finite_part_.push_back(n);
  }
  for (Natural r = 0; r < minimal; ++r) {
    if (mask[r]) out.residues_.push_back(r);
  }
  out.residue_mask_ = std::move(mask);
  return out;
}

UltimatelyPeriodicSet UltimatelyPeriodicSet::from_parts(
    Natural threshold, Natural period, std::vector<Natural> finite_part,
    std::vector<Natural> residues) {
  if (period == 0) {
    throw Error(ErrorKind::kInvalidArgument, "period must be at least 1");
  }
  std::vector<bool> below(threshold, false);
  for (Natural n : finite_part) {
    if (n >= threshold) {
      throw Error(ErrorKind::kInvalidArgument,
                  "finite-part element " + std::to_string(n) +
                      " is not below the threshold");
    }
    below[n] = true;
  }
  std::vector<bool> mask(period, false);
  for (Natural r : residues) {
    if (r >= period) {
      throw Error(ErrorKind::kInvalidArgument,
                  "residue " + std::to_string(r) + " is not below the period");
    }
    mask[r] = true;
  }
  return from_predicate(threshold, period, [&](Natural n) {
    return n < threshold ? static_cast<bool>(below[n])
                         : static_cast<bool>(mask[n % period]);
  });
}

UltimatelyPeriodicSet UltimatelyPeriodicSet::naturals() {
  return from_parts(0, 1, {}, {0});
}

UltimatelyPeriodicSet UltimatelyPeriodicSet::finite(
    std::span<const Natural> values) {
  Natural t = 0;
  for (Natural v : values) t = std::max(t, v + 1);
  return from_parts(t, 1, {values.begin(), values.end()}, {});
}

bool UltimatelyPeriodicSet::contains(Natural n) const {
  if (n < threshold_) {
    return std::binary_search(finite_part_.begin(), finite_part_.end(), n);
  }
  return residue_mask_[n % period_];
}

std::string UltimatelyPeriodicSet::to_string() const {
  std::ostringstream os;
  os << "{t=" << threshold_ << ", q=" << period_ << ", finite_part={"
     << join_naturals(finite_part_) << "}, residues={"
     << join_naturals(residues_) << "}}";
  return os.str();
}

UltimatelyPeriodicSet from_progression(const ArithmeticProgression& p) {
  if (p.step == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "arithmetic progression step must be at least 1");
  }
  const Natural first = p.step * p.start + p.offset;
  return UltimatelyPeriodicSet::from_parts(first, p.step, {},
                                           {first % p.step});
}

UltimatelyPeriodicSet from_progressions(
    std::span<const ArithmeticProgression> progressions) {
  UltimatelyPeriodicSet out;
  for (const auto& p : progressions) out = set_union(out, from_progression(p));
  return out;
}

namespace {

template <typename Op>
UltimatelyPeriodicSet combine(const UltimatelyPeriodicSet& x,
                              const UltimatelyPeriodicSet& y, Op op) {
  const Natural t = std::max(x.threshold(), y.threshold());
  const Natural q = std::lcm(x.period(), y.period());
  return UltimatelyPeriodicSet::from_predicate(t, q, [&](Natural n) {
    return op(x.contains(n), y.contains(n));
  });
}

}  // namespace

UltimatelyPeriodicSet set_union(const UltimatelyPeriodicSet& x,
                                const UltimatelyPeriodicSet& y) {
  return combine(x, y, [](bool a, bool b) { return a || b; });
}

UltimatelyPeriodicSet intersect(const UltimatelyPeriodicSet& x,
                                const UltimatelyPeriodicSet& y) {
  return combine(x, y, [](bool a, bool b) { return a && b; });
}

UltimatelyPeriodicSet difference(const UltimatelyPeriodicSet& x,
                                 const UltimatelyPeriodicSet& y) {
  return combine(x, y, [](bool a, bool b) { return a && !b; });
}

UltimatelyPeriodicSet complement(const UltimatelyPeriodicSet& x) {
  return UltimatelyPeriodicSet::from_predicate(
      x.threshold(), x.period(), [&](Natural n) { return !x.contains(n); });
}

UltimatelyPeriodicSet minkowski_sum(const UltimatelyPeriodicSet& x,
                                    const UltimatelyPeriodicSet& y) {
  if (!is_infinite(x) && x.finite_part().empty()) return {};
  if (!is_infinite(y) && y.finite_part().empty()) return {};

  // The sum is L-periodic from t1 + t2 + 2L: the periodic parts generate
  // every multiple of gcd(q1, q2) past the two-generator Frobenius bound.
  const Natural period = std::lcm(x.period(), y.period());
  const Natural threshold = x.threshold() + y.threshold() + 2 * period;
  const Natural window = threshold + period;

  const LengthBits sum =
      truncated_minkowski(to_bits(x, window), to_bits(y, window));
  return UltimatelyPeriodicSet::from_predicate(
      threshold, period, [&](Natural n) {
        if (n < window) return static_cast<bool>(sum[n]);
        return static_cast<bool>(sum[threshold + (n - threshold) % period]);
      });
}

bool is_infinite(const UltimatelyPeriodicSet& x) {
  return !x.residues().empty();
}

std::vector<Natural> infinite_residues(const UltimatelyPeriodicSet& x,
                                       Natural modulus) {
  if (modulus == 0) {
    throw Error(ErrorKind::kInvalidArgument, "modulus must be at least 1");
  }
  std::vector<Natural> out;
  for (Natural r = 0; r < modulus; ++r) {
    if (is_infinite(intersect(x, from_progression({modulus, r, 0})))) {
      out.push_back(r);
    }
  }
  return out;
}

LengthBits to_bits(const UltimatelyPeriodicSet& x, Natural max_length) {
  LengthBits bits(max_length + 1);
  for (Natural n = 0; n <= max_length; ++n) {
    if (x.contains(n)) bits.set(n);
  }
  return bits;
}

LengthBits truncated_minkowski(const LengthBits& x, const LengthBits& y) {
  const std::size_t size = std::min(x.size(), y.size());
  LengthBits left = x;
  LengthBits right = y;
  left.resize(size);
  right.resize(size);
  LengthBits out(size);
  for (auto i = left.find_first(); i != LengthBits::npos;
       i = left.find_next(i)) {
    out |= right << i;
  }
  return out;
}

}  // namespace regdissect
