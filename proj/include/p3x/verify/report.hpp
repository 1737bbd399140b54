#ifndef P3X_VERIFY_REPORT_HPP
#define P3X_VERIFY_REPORT_HPP

#include <p3x/mukai/mukai.hpp>
#include <p3x/verify/registry.hpp>

#include <json.hpp>

#include <string>

namespace p3x::verify {

using json = nlohmann::ordered_json;

inline json to_json(const ConfigEcho& c) {
  return json{{"quartic", c.quartic}, {"seed", c.seed},   {"n_random", c.n_random}, {"primes", c.primes},
              {"exact", c.exact},     {"cost", c.cost},   {"partner", c.partner},   {"quartics", c.quartics}};
}

inline json to_json(const CheckResult& r) {
  json expected = json::object();
  for (const auto& [k, v] : r.expected) expected[k] = v;
  json computed = json::object();
  for (const auto& [k, v] : r.computed) computed[k] = v;
  return json{{"id", r.id},
              {"paper_anchor", r.paper_anchor},
              {"status", to_string(r.status)},
              {"expected", expected},
              {"computed", computed},
              {"evidence", r.evidence},
              {"runtime_ms", r.runtime_ms},
              {"quartic", r.quartic},
              {"seed", r.seed}};
}

inline json to_json(const Report& rep) {
  json results = json::array();
  for (const auto& r : rep.results) results.push_back(to_json(r));
  return json{{"version", rep.version}, {"config", to_json(rep.config)}, {"results", results},
              {"overall", to_string(rep.overall)}};
}

inline std::string serialize(const Report& rep) { return to_json(rep).dump(2) + "\n"; }

inline ConfigEcho config_from_json(const json& j) {
  ConfigEcho c;
  c.quartic = j.at("quartic").get<std::string>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.n_random = j.at("n_random").get<std::size_t>();
  c.primes = j.at("primes").get<std::size_t>();
  c.exact = j.at("exact").get<bool>();
  c.cost = j.at("cost").get<std::string>();
  c.partner = j.at("partner").get<std::string>();
  c.quartics = j.at("quartics").get<std::vector<std::string>>();
  return c;
}

inline CheckResult result_from_json(const json& j) {
  CheckResult r;
  r.id = j.at("id").get<std::string>();
  r.paper_anchor = j.at("paper_anchor").get<std::string>();
  r.status = parse_status(j.at("status").get<std::string>());
  r.expected = j.at("expected").get<Values>();
  r.computed = j.at("computed").get<Values>();
  r.evidence = j.at("evidence").get<std::vector<std::string>>();
  r.runtime_ms = j.at("runtime_ms").get<double>();
  r.quartic = j.at("quartic").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

/// Inverse of serialize; throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
inline Report parse_report(const std::string& text) {
  const json j = json::parse(text);
  Report rep;
  rep.version = j.at("version").get<int>();
  if (rep.version != 1) throw std::invalid_argument("unsupported report version " + std::to_string(rep.version));
  rep.config = config_from_json(j.at("config"));
  for (const auto& r : j.at("results")) rep.results.push_back(result_from_json(r));
  rep.overall = parse_status(j.at("overall").get<std::string>());
  return rep;
}

inline json to_json(const std::vector<mukai::ScanRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json entries = json::array();
    for (const auto& e : row.entries) entries.push_back(json{{"r", e.r}, {"s", e.s}, {"status", mukai::to_string(e.status)}});
    out.push_back(json{{"d", row.d}, {"n", row.n}, {"divisors", entries}});
  }
  return json{{"version", 1}, {"scan", out}};
}

/// One line per check, then the overall status.
inline std::string format_text(const CheckResult& r, bool verbose) {
  std::string s = std::string(to_string(r.status)) + "  " + r.id;
  if (verbose) {
    s += "\n  anchor: " + r.paper_anchor + "\n  quartics: " + r.quartic + ", seed " + std::to_string(r.seed);
    auto fmt = [](const std::vector<long long>& v) {
      std::string o;
      for (auto x : v) o += (o.empty() ? "" : " ") + std::to_string(x);
      return o;
    };
    for (const auto& [k, v] : r.expected) s += "\n  expected " + k + " = " + fmt(v);
    for (const auto& [k, v] : r.computed) s += "\n  computed " + k + " = " + fmt(v);
    for (const auto& e : r.evidence) s += "\n  " + e;
  }
  return s;
}

}  // namespace p3x::verify

#endif  // P3X_VERIFY_REPORT_HPP
