#include "bsplus/json.hpp"

#include "bsplus/text.hpp"

namespace bsplus {

using nlohmann::json;

json to_json(const Integer& v) {
  if (auto small = as_int64(v)) return *small;
  return to_string(v);
}

json to_json(const ApDescription& ap) {
  return {{"start", to_json(ap.start)},
          {"difference", to_json(ap.difference)},
          {"count", to_json(ap.count)}};
}

json to_json(const BSSubset& s) {
  json cosets = json::array();
  for (const auto& [m, a] : s.cosets()) {
    json xs = json::array();
    for (const auto& x : a) xs.push_back(to_json(x));
    cosets.push_back({{"m", m}, {"a_exponents", std::move(xs)}});
  }
  return {{"n", s.context().n()}, {"cosets", std::move(cosets)}};
}

json to_json(const VerificationReport& rep) {
  json computed = json::object();
  for (const auto& [name, value] : rep.computed) computed[name] = to_json(value);

  json witness = json::object();
  if (rep.witness.ap) witness["ap"] = to_json(*rep.witness.ap);
  if (rep.witness.family) witness["family"] = rep.witness.family->name();
  if (rep.witness.failing_instance) witness["failing_instance"] = *rep.witness.failing_instance;
  if (!rep.witness.notes.empty()) witness["notes"] = rep.witness.notes;

  return {{"theorem_id", to_string(rep.theorem)},
          {"instance", rep.instance},
          {"computed", std::move(computed)},
          {"verdict", to_string(rep.verdict)},
          {"witness", witness.empty() ? json(nullptr) : std::move(witness)}};
}

json to_json(const SearchConfig& cfg) {
  return {{"k_min", cfg.k_min},       {"k_max", cfg.k_max}, {"max_length", cfg.max_length},
          {"r", cfg.r},               {"n", cfg.n},         {"m_max", cfg.m_max},
          {"x_max", cfg.x_max},       {"nonabelian_only", cfg.nonabelian_only},
          {"jobs", cfg.jobs}};
}

json to_json(const SearchOutcome& out, std::size_t witness_limit) {
  json violations = json::array();
  for (const auto& v : out.violations) violations.push_back(to_json(v));

  json witnesses = json::array();
  for (std::size_t i = 0; i < out.extremal_witnesses.size() && i < witness_limit; ++i) {
    const auto& w = out.extremal_witnesses[i];
    json entry = {{"k", w.k}, {"value", to_json(w.value)}};
    if (w.set) entry["set"] = format_set(*w.set);
    if (w.subset) entry["subset"] = format_subset(*w.subset);
    witnesses.push_back(std::move(entry));
  }

  json result = {{"check", out.check},
                 {"config", to_json(out.config)},
                 {"instances_checked", out.instances_checked},
                 {"violations", std::move(violations)},
                 {"extremal_witness_count", out.extremal_witnesses.size()},
                 {"extremal_witnesses", std::move(witnesses)},
                 {"verdict_counts", out.verdict_counts},
                 {"elapsed_ms", out.elapsed.count()}};
  if (!out.structure_reports.empty()) {
    json structure = json::array();
    for (std::size_t i = 0; i < out.structure_reports.size() && i < witness_limit; ++i) {
      structure.push_back(to_json(out.structure_reports[i]));
    }
    result["structure_reports"] = std::move(structure);
  }
  return result;
}

}  // namespace bsplus
