#ifndef P3X_VERIFY_CONFIG_HPP
#define P3X_VERIFY_CONFIG_HPP

#include <p3x/spaces/quartic.hpp>
#include <p3x/verify/data.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace p3x::verify {

enum class CostClass { Fast, Medium, Heavy };

inline const char* to_string(CostClass c) {
  switch (c) {
    case CostClass::Fast:
      return "fast";
    case CostClass::Medium:
      return "medium";
    default:
      return "heavy";
  }
}

/// "fast" | "medium" | "heavy"; "all" gives nullopt (no filter).
inline std::optional<CostClass> parse_cost(const std::string& s) {
  if (s == "fast") return CostClass::Fast;
  if (s == "medium") return CostClass::Medium;
  if (s == "heavy") return CostClass::Heavy;
  if (s == "all") return std::nullopt;
  throw std::invalid_argument("unknown cost class '" + s + "'");
}

struct QuarticChoice {
  enum class Kind { Fermat, Random, File } kind = Kind::Fermat;
  std::string path;

  /// "fermat" | "random" | "file:<path>" | "file(<path>)"
  static QuarticChoice parse(const std::string& s) {
    if (s == "fermat") return {Kind::Fermat, ""};
    if (s == "random") return {Kind::Random, ""};
    if (s.rfind("file:", 0) == 0 && s.size() > 5) return {Kind::File, s.substr(5)};
    if (s.rfind("file(", 0) == 0 && s.size() > 6 && s.back() == ')') return {Kind::File, s.substr(5, s.size() - 6)};
    throw std::invalid_argument("bad quartic choice '" + s + "' (fermat | random | file:<path>)");
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Fermat:
        return "fermat";
      case Kind::Random:
        return "random";
      default:
        return "file:" + path;
    }
  }
};

struct Config {
  QuarticChoice quartic;
  std::uint64_t seed = 1;
  std::size_t n_random = 3;
  std::size_t primes = 3;
  bool exact = false;
  std::optional<CostClass> cost;
  /// Second form of the (4,4) curve; defaults to the first seeded random
  /// quartic different from the primary one.
  std::optional<spaces::QuarticForm> partner;
  std::string partner_spec;  // as given, for the report
  std::string data_dir = default_data_dir();
  std::string expected_path;  // empty: <data_dir>/expected.txt

  std::string expected_file() const { return expected_path.empty() ? data_dir + "/expected.txt" : expected_path; }
  std::string anchors_file() const { return data_dir + "/anchors.txt"; }
};

/// The quartics a configuration evaluates on:
///   fermat: Fermat, then n_random seeded randoms;
///   random: n_random seeded randoms;
///   file:   the file quartic, then n_random seeded randoms.
/// Random quartic i uses seed + i.
inline std::vector<spaces::QuarticForm> quartic_set(const Config& c) {
  std::vector<spaces::QuarticForm> out;
  if (c.quartic.kind == QuarticChoice::Kind::Fermat) out.push_back(spaces::QuarticForm::fermat());
  if (c.quartic.kind == QuarticChoice::Kind::File) out.push_back(spaces::QuarticForm::load(c.quartic.path));
  for (std::size_t i = 0; i < c.n_random; ++i) out.push_back(spaces::QuarticForm::random(c.seed + i));
  return out;
}

/// (f1, f2) for the base curve.
inline std::pair<spaces::QuarticForm, spaces::QuarticForm> curve_pair(const Config& c) {
  const auto qs = quartic_set(c);
  const spaces::QuarticForm f1 = qs.empty() ? spaces::QuarticForm::random(c.seed) : qs.front();
  if (c.partner) return {f1, *c.partner};
  for (std::uint64_t i = 0;; ++i) {
    auto f2 = spaces::QuarticForm::random(c.seed + i);
    if (!(f2 == f1)) return {f1, f2};
  }
}

}  // namespace p3x::verify

#endif  // P3X_VERIFY_CONFIG_HPP
