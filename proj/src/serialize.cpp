#include "regdissect/serialize.hpp"

#include "regdissect/errors.hpp"

using nlohmann::json;

namespace regdissect {
namespace {

// Wraps schema violations from the JSON library in the library's error type.
template <typename F>
auto guarded(const char* what, F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

void to_json(json& j, const UltimatelyPeriodicSet& x) {
  j = {{"t", x.threshold()},
       {"q", x.period()},
       {"finite_part", x.finite_part()},
       {"residues", x.residues()}};
}

void from_json(const json& j, UltimatelyPeriodicSet& x) {
  x = guarded("ultimately periodic set", [&] {
    return UltimatelyPeriodicSet::from_parts(
        j.at("t").get<Natural>(), j.at("q").get<Natural>(),
        j.at("finite_part").get<std::vector<Natural>>(),
        j.at("residues").get<std::vector<Natural>>());
  });
}

void to_json(json& j, const Checkpoint& c) {
  j = {{"length", c.length}, {"inside", c.inside}, {"outside", c.outside}};
}

void from_json(const json& j, Checkpoint& c) {
  j.at("length").get_to(c.length);
  j.at("inside").get_to(c.inside);
  j.at("outside").get_to(c.outside);
}

void to_json(json& j, const DissectionCertificate& c) {
  j = {{"language", c.language},
       {"strategy", c.strategy},
       {"witness", c.witness ? json(*c.witness) : json(nullptr)},
       {"max_length", c.max_length},
       {"threshold", c.threshold},
       {"window_fraction", c.window_fraction},
       {"window_start", c.window_start},
       {"checkpoints", c.checkpoints},
       {"verdict", std::string(to_string(c.verdict))},
       {"truncated", c.truncated},
       {"notes", c.notes},
       {"attempts", c.attempts}};
}

void from_json(const json& j, DissectionCertificate& c) {
  guarded("certificate", [&] {
    j.at("language").get_to(c.language);
    j.at("strategy").get_to(c.strategy);
    c.witness.reset();
    if (!j.at("witness").is_null()) c.witness = j.at("witness").get<Dfa>();
    j.at("max_length").get_to(c.max_length);
    j.at("threshold").get_to(c.threshold);
    j.at("window_fraction").get_to(c.window_fraction);
    j.at("window_start").get_to(c.window_start);
    j.at("checkpoints").get_to(c.checkpoints);
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "verified-at-N" && verdict != "failed") {
      throw Error(ErrorKind::kInvalidArgument, "unknown verdict '" + verdict + "'");
    }
    c.verdict = verdict == "verified-at-N" ? Verdict::kVerifiedAtN : Verdict::kFailed;
    j.at("truncated").get_to(c.truncated);
    j.at("notes").get_to(c.notes);
    c.attempts.clear();
    for (const auto& a : j.value("attempts", json::array())) {
      c.attempts.push_back(a.get<DissectionCertificate>());
    }
    if (c.checkpoints.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "certificate has no checkpoints");
    }
    return 0;
  });
}

void to_json(json& j, const CoverVerdict& v) {
  j = {{"holds", v.holds},
       {"violation", v.violation ? json(*v.violation) : json(nullptr)},
       {"margin", v.margin},
       {"margin_at_window_start", v.margin_at_window},
       {"truncated", v.truncated}};
}

void to_json(json& j, const SeparationVerdict& v) {
  j = {{"inner_in_separator", v.inner_in_separator},
       {"separator_in_cover", v.separator_in_cover},
       {"violation", v.violation ? json(*v.violation) : json(nullptr)},
       {"cover_minus_separator", v.cover_margin},
       {"separator_minus_inner", v.separator_margin},
       {"cover_margin_grows", v.cover_margin_grows},
       {"separator_margin_grows", v.separator_margin_grows}};
}

void to_json(json& j, const SeparationReport& r) {
  j = {{"separator", r.separator.describe()},
       {"witness", r.margin_certificate.witness ? json(*r.margin_certificate.witness)
                                                : json(nullptr)},
       {"cover_check", r.cover},
       {"margin_certificate", r.margin_certificate},
       {"separation", r.separation},
       {"holds", r.separation.holds(r.margin_certificate.threshold)}};
}

void to_json(json& j, const FactorialOutcome& o) {
  j = {{"inside_cofinite", o.inside_cofinite},
       {"inside_infinite", o.inside_cofinite},
       {"outside_infinite", !o.inside_cofinite},
       {"dissects", o.dissects},
       {"cutoff", o.cutoff},
       {"finite_side_m", o.finite_side},
       {"summary", o.summary}};
}

void to_json(json& j, const LevelReport& r) {
  j = {{"level", r.level ? json(*r.level) : json(nullptr)},
       {"co_level", r.co_level ? json(*r.co_level) : json(nullptr)},
       {"grounded", r.grounded},
       {"trace", r.trace}};
}

}  // namespace regdissect

namespace nlohmann {

void adl_serializer<regdissect::Dfa>::to_json(json& j, const regdissect::Dfa& d) {
  std::vector<std::size_t> accepting;
  for (std::size_t s = 0; s < d.num_states(); ++s) {
    if (d.accepting()[s]) accepting.push_back(s);
  }
  json rows = json::array();
  const std::size_t k = d.alphabet().size();
  for (std::size_t s = 0; s < d.num_states(); ++s) {
    rows.push_back(std::vector<regdissect::State>(
        d.transitions().begin() + static_cast<std::ptrdiff_t>(s * k),
        d.transitions().begin() + static_cast<std::ptrdiff_t>((s + 1) * k)));
  }
  j = {{"alphabet", d.alphabet()},
       {"states", d.num_states()},
       {"start", d.start()},
       {"accepting", accepting},
       {"transitions", rows}};
}

regdissect::Dfa adl_serializer<regdissect::Dfa>::from_json(const json& j) {
  return regdissect::guarded("automaton", [&] {
    const auto states = j.at("states").get<std::size_t>();
    std::vector<bool> accepting(states, false);
    for (auto s : j.at("accepting").get<std::vector<std::size_t>>()) {
      if (s >= states) {
        throw regdissect::Error(regdissect::ErrorKind::kInvalidArgument,
                                "accepting state out of range");
      }
      accepting[s] = true;
    }
    std::vector<regdissect::State> transitions;
    for (const auto& row : j.at("transitions")) {
      for (const auto& t : row) transitions.push_back(t.get<regdissect::State>());
    }
    return regdissect::Dfa(j.at("alphabet").get<std::string>(), states,
                           j.at("start").get<regdissect::State>(),
                           std::move(accepting), std::move(transitions));
  });
}

void adl_serializer<regdissect::LinearSet>::to_json(json& j,
                                                    const regdissect::LinearSet& s) {
  j = {{"offset", s.offset()}, {"periods", s.periods()}};
}

regdissect::LinearSet adl_serializer<regdissect::LinearSet>::from_json(const json& j) {
  return regdissect::guarded("linear set", [&] {
    return regdissect::LinearSet(
        j.at("offset").get<regdissect::Vector>(),
        j.at("periods").get<std::vector<regdissect::Vector>>());
  });
}

void adl_serializer<regdissect::SemiLinearSet>::to_json(
    json& j, const regdissect::SemiLinearSet& s) {
  j = {{"dimension", s.dimension()}, {"components", s.components()}};
}

regdissect::SemiLinearSet adl_serializer<regdissect::SemiLinearSet>::from_json(
    const json& j) {
  return regdissect::guarded("semi-linear set", [&] {
    regdissect::SemiLinearSet out(j.at("dimension").get<std::size_t>());
    for (const auto& c : j.at("components")) out.add(c.get<regdissect::LinearSet>());
    return out;
  });
}

}  // namespace nlohmann
