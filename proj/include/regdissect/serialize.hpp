#pragma once

// JSON schema shared by certificates, reports and the CLI.

#include <nlohmann/json.hpp>

#include "regdissect/automata.hpp"
#include "regdissect/dissector.hpp"
#include "regdissect/hierarchy.hpp"
#include "regdissect/semilinear.hpp"
#include "regdissect/separation.hpp"
#include "regdissect/upsets.hpp"

namespace regdissect {

void to_json(nlohmann::json& j, const UltimatelyPeriodicSet& x);
void from_json(const nlohmann::json& j, UltimatelyPeriodicSet& x);

void to_json(nlohmann::json& j, const Checkpoint& c);
void from_json(const nlohmann::json& j, Checkpoint& c);

void to_json(nlohmann::json& j, const DissectionCertificate& c);
void from_json(const nlohmann::json& j, DissectionCertificate& c);

void to_json(nlohmann::json& j, const CoverVerdict& v);
void to_json(nlohmann::json& j, const SeparationVerdict& v);
void to_json(nlohmann::json& j, const SeparationReport& r);
void to_json(nlohmann::json& j, const FactorialOutcome& o);
void to_json(nlohmann::json& j, const LevelReport& r);

}  // namespace regdissect

namespace nlohmann {

template <>
struct adl_serializer<regdissect::Dfa> {
  static void to_json(json& j, const regdissect::Dfa& d);
  static regdissect::Dfa from_json(const json& j);
};

template <>
struct adl_serializer<regdissect::LinearSet> {
  static void to_json(json& j, const regdissect::LinearSet& s);
  static regdissect::LinearSet from_json(const json& j);
};

template <>
struct adl_serializer<regdissect::SemiLinearSet> {
  static void to_json(json& j, const regdissect::SemiLinearSet& s);
  static regdissect::SemiLinearSet from_json(const json& j);
};

}  // namespace nlohmann
