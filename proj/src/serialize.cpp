#include "pathfusion/serialize.hpp"

#include <algorithm>
#include <fstream>

namespace pathfusion {

namespace {

template <typename Words>
nlohmann::json word_array(const Words& words) {
  auto arr = nlohmann::json::array();
  for (const auto& w : words) arr.push_back(w.str());
  return arr;
}

}  // namespace

nlohmann::json to_json(const FusionTerms& terms) {
  auto arr = nlohmann::json::array();
  for (const auto& [word, mult] : terms)
    arr.push_back({{"word", word.str()}, {"mult", mult}});
  return arr;
}

nlohmann::json to_json(const IrrSet& set) {
  return {{"radius", set.radius()}, {"words", word_array(set.words())}};
}

nlohmann::json to_json(const ValidationResult& result) {
  return {{"contains_gamma", result.contains_gamma},
          {"invariant", result.invariant},
          {"connected", result.connected},
          {"valid", result.valid()}};
}

nlohmann::json to_json(const VerificationReport& report) {
  return {{"cutoff", report.cutoff},
          {"radius", report.radius},
          {"agreement_radius", report.agreement_radius},
          {"closure_size", report.closure_size},
          {"closure_saturated", report.closure_saturated},
          {"realized_size", report.realized_size},
          {"witnesses", word_array(report.witnesses)},
          {"relation1", {{"checked", report.steps.relation1_checked},
                         {"failed", report.steps.relation1_failed}}},
          {"relation2", {{"checked", report.steps.relation2_checked},
                         {"failed", report.steps.relation2_failed}}},
          {"final_chain", {{"checked", report.steps.chain_checked},
                           {"failed", report.steps.chain_failed}}},
          {"pair_stable", report.pair_stable},
          {"passed", report.passed()}};
}

nlohmann::json to_json(const PropertyReport& report) {
  auto checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json entry = {{"name", c.name},
                            {"cases", c.cases},
                            {"failures", c.failures},
                            {"passed", c.passed()}};
    if (!c.passed()) entry["first_counterexample"] = c.first_counterexample;
    checks.push_back(std::move(entry));
  }
  return {{"seed", report.seed}, {"checks", checks}, {"passed", report.passed()}};
}

nlohmann::json pair_to_json(const PairSpec& pair) {
  return {{"rank", pair.sig().rank()},
          {"gamma", word_array(pair.gamma_generators())},
          {"transversal", word_array(pair.transversal())}};
}

PairSpec pair_from_json(const nlohmann::json& j, bool augment_unit) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("gamma") || !j.contains("transversal"))
    throw ParseError("pair file must be {\"rank\", \"gamma\", \"transversal\"}");
  if (!j["rank"].is_number_integer() || j["rank"].get<int>() < 1)
    throw ParseError("pair file: rank must be a positive integer");
  const Signature sig(j["rank"].get<int>());

  const auto read_words = [&](const nlohmann::json& arr, const char* field) {
    if (!arr.is_array()) throw ParseError(std::string("pair file: ") + field + " must be an array");
    std::vector<GroupWord> out;
    out.reserve(arr.size());
    for (const auto& entry : arr) {
      if (!entry.is_string())
        throw ParseError(std::string("pair file: ") + field + " entries must be word strings");
      out.push_back(GroupWord::parse(sig, entry.get<std::string>()));
    }
    return out;
  };

  auto gamma = read_words(j["gamma"], "gamma");
  auto transversal = read_words(j["transversal"], "transversal");
  if (augment_unit) {
    const GroupWord unit(sig);
    if (std::find(transversal.begin(), transversal.end(), unit) == transversal.end())
      transversal.push_back(unit);
  }
  if (transversal.empty())
    throw ParseError("pair file: transversal is empty (pass --augment-unit to add the identity)");
  return PairSpec(sig, std::move(gamma), std::move(transversal));
}

PairSpec load_pair_file(const std::string& path, bool augment_unit) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open pair file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("pair file " + path + ": " + e.what());
  }
  return pair_from_json(j, augment_unit);
}

}  // namespace pathfusion
