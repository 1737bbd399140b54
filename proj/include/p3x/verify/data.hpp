#ifndef P3X_VERIFY_DATA_HPP
#define P3X_VERIFY_DATA_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace p3x::verify {

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string default_data_dir() {
#ifdef P3X_DATA_DIR
  return P3X_DATA_DIR;
#else
  return "data";
#endif
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

/// `key = value` lines; `#` comments and blank lines skipped.
inline std::vector<std::pair<std::string, std::string>> read_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw DataError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    out.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return out;
}

}  // namespace detail

/// Versioned table `<check-id>.<quantity> -> integers`.
class ExpectedTable {
 public:
  static ExpectedTable load(const std::string& path) {
    ExpectedTable t;
    for (const auto& [k, v] : detail::read_pairs(path)) {
      if (k == "version") {
        t.version_ = std::stoi(v);
        continue;
      }
      std::istringstream in(v);
      std::vector<long long> xs;
      std::string w;
      while (in >> w) {
        try {
          std::size_t pos = 0;
          xs.push_back(std::stoll(w, &pos));
          if (pos != w.size()) throw std::invalid_argument(w);
        } catch (const std::exception&) {
          throw DataError(path + ": '" + k + "' has a non-integer value '" + w + "'");
        }
      }
      if (!t.values_.emplace(k, std::move(xs)).second) throw DataError(path + ": duplicate key '" + k + "'");
    }
    if (t.version_ != 1) throw DataError(path + ": unsupported version " + std::to_string(t.version_));
    return t;
  }

  int version() const { return version_; }

  const std::vector<long long>& at(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw DataError("expected value '" + key + "' missing");
    return it->second;
  }

  long long scalar(const std::string& key) const {
    const auto& v = at(key);
    if (v.size() != 1) throw DataError("expected value '" + key + "' is not a single integer");
    return v.front();
  }

  const std::map<std::string, std::vector<long long>>& values() const { return values_; }

 private:
  int version_ = 0;
  std::map<std::string, std::vector<long long>> values_;
};

/// `<check-id> = <anchor text>` lines.
inline std::map<std::string, std::string> load_anchors(const std::string& path) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : detail::read_pairs(path)) {
    if (v.empty()) throw DataError(path + ": empty anchor for '" + k + "'");
    if (!out.emplace(k, v).second) throw DataError(path + ": duplicate anchor '" + k + "'");
  }
  return out;
}

}  // namespace p3x::verify

#endif  // P3X_VERIFY_DATA_HPP
