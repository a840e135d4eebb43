#pragma once

#include <random>
#include <string>
#include <vector>

#include "regdissect/upsets.hpp"

namespace regdissect::testing {

// Every string over `alphabet` of length <= max_length, shortlex order.
inline std::vector<std::string> all_strings(const std::string& alphabet,
                                            std::size_t max_length) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : alphabet) out.push_back(out[i] + c);
    }
    begin = end;
  }
  return out;
}

// Random set with threshold <= 20 and period <= 12, plus its raw bitmap
// of the parts it was built from.
inline UltimatelyPeriodicSet random_upset(std::mt19937_64& rng) {
  std::uniform_int_distribution<Natural> t_dist(0, 20);
  std::uniform_int_distribution<Natural> q_dist(1, 12);
  std::bernoulli_distribution coin(0.4);
  const Natural t = t_dist(rng);
  const Natural q = q_dist(rng);
  std::vector<Natural> finite;
  for (Natural n = 0; n < t; ++n) {
    if (coin(rng)) finite.push_back(n);
  }
  std::vector<Natural> residues;
  for (Natural r = 0; r < q; ++r) {
    if (coin(rng)) residues.push_back(r);
  }
  return UltimatelyPeriodicSet::from_parts(t, q, finite, residues);
}

inline std::vector<bool> bitmap(const UltimatelyPeriodicSet& x, Natural limit) {
  std::vector<bool> out(limit + 1);
  for (Natural n = 0; n <= limit; ++n) out[n] = x.contains(n);
  return out;
}

}  // namespace regdissect::testing
