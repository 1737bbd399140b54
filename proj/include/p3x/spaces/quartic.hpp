#ifndef P3X_SPACES_QUARTIC_HPP
#define P3X_SPACES_QUARTIC_HPP

#include <p3x/exactla/scalar.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p3x::spaces {

using exactla::Scalar;

/// Exponents of x0..x3.
using Exponent = std::array<int, 4>;

inline int degree(const Exponent& e) { return e[0] + e[1] + e[2] + e[3]; }

inline Exponent operator+(const Exponent& a, const Exponent& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

/// "x0^2*x1", or "1" for the constant monomial.
inline std::string monomial_string(const Exponent& e) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

struct Term {
  Scalar coeff;
  Exponent exp;
};

class QuarticError : public std::invalid_argument {
 public:
  explicit QuarticError(const std::string& what) : std::invalid_argument(what) {}
};

/// Line-located parse failure in a quartic file.
class QuarticParseError : public QuarticError {
 public:
  QuarticParseError(const std::string& source, int line, const std::string& msg)
      : QuarticError(source + ":" + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

/// Homogeneous quartic in x0..x3. Terms are sorted by descending exponent
/// tuple, have nonzero coefficients and distinct exponents.
class QuarticForm {
 public:
  static QuarticForm from_terms(std::vector<Term> terms, std::string name = "custom") {
    std::map<Exponent, Scalar, std::greater<>> acc;
    for (auto& t : terms) {
      if (t.exp[0] < 0 || t.exp[1] < 0 || t.exp[2] < 0 || t.exp[3] < 0 || degree(t.exp) != 4) {
        throw QuarticError("exponent " + monomial_string(t.exp) + " is not of degree 4");
      }
      if (acc.count(t.exp) != 0) throw QuarticError("duplicate monomial " + monomial_string(t.exp));
      acc[t.exp] = t.coeff;
    }
    QuarticForm q;
    q.name_ = std::move(name);
    for (auto& [e, c] : acc) {
      if (c != 0) q.terms_.push_back({c, e});
    }
    if (q.terms_.empty()) throw QuarticError("quartic form is zero");
    return q;
  }

  static QuarticForm fermat() {
    std::vector<Term> t;
    for (int i = 0; i < 4; ++i) {
      Exponent e{0, 0, 0, 0};
      e[i] = 4;
      t.push_back({Scalar(1), e});
    }
    return from_terms(std::move(t), "fermat");
  }

  /// Dense quartic with integer coefficients in [-9, 9] drawn as
  /// (mt19937_64() mod 19) - 9; redrawn if every coefficient is zero.
  static QuarticForm random(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
      std::vector<Term> t;
      bool nonzero = false;
      for (int a = 4; a >= 0; --a) {
        for (int b = 4 - a; b >= 0; --b) {
          for (int c = 4 - a - b; c >= 0; --c) {
            const long v = static_cast<long>(rng() % 19) - 9;
            nonzero = nonzero || v != 0;
            t.push_back({Scalar(v), {a, b, c, 4 - a - b - c}});
          }
        }
      }
      if (nonzero) return from_terms(std::move(t), "random(seed=" + std::to_string(seed) + ")");
    }
  }

  /// `<coeff> <e0> <e1> <e2> <e3>` per line, integers; `#` starts a comment.
  static QuarticForm parse(const std::string& text, const std::string& source = "<input>") {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<Term> terms;
    std::map<Exponent, int> seen;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::vector<std::string> tok;
      for (std::string w; ls >> w;) tok.push_back(w);
      if (tok.empty()) continue;
      if (tok.size() != 5) {
        throw QuarticParseError(source, lineno, "expected 5 integers, got " + std::to_string(tok.size()) + " fields");
      }
      auto as_int = [&](const std::string& w) -> long {
        std::size_t pos = 0;
        long v = 0;
        try {
          v = std::stol(w, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != w.size() || w.empty()) throw QuarticParseError(source, lineno, "not an integer: '" + w + "'");
        return v;
      };
      Scalar coeff;
      if (coeff.set_str(tok[0], 10) != 0 || tok[0].find('/') != std::string::npos) {
        throw QuarticParseError(source, lineno, "not an integer: '" + tok[0] + "'");
      }
      Exponent e{};
      for (int i = 0; i < 4; ++i) {
        const long v = as_int(tok[i + 1]);
        if (v < 0 || v > 4) throw QuarticParseError(source, lineno, "exponent out of range: " + tok[i + 1]);
        e[i] = static_cast<int>(v);
      }
      if (degree(e) != 4) {
        throw QuarticParseError(source, lineno, "exponents sum to " + std::to_string(degree(e)) + ", expected 4");
      }
      if (auto [it, fresh] = seen.emplace(e, lineno); !fresh) {
        throw QuarticParseError(source, lineno,
                                "duplicate monomial " + monomial_string(e) + " (first on line " + std::to_string(it->second) + ")");
      }
      terms.push_back({coeff, e});
    }
    if (terms.empty()) throw QuarticParseError(source, lineno, "no terms");
    try {
      return from_terms(std::move(terms), "file(" + source + ")");
    } catch (const QuarticParseError&) {
      throw;
    } catch (const QuarticError& err) {
      throw QuarticParseError(source, lineno, err.what());
    }
  }

  static QuarticForm load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw QuarticError("cannot open quartic file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
  }

  const std::vector<Term>& terms() const { return terms_; }
  const std::string& name() const { return name_; }

  /// Canonical coefficient listing; equal forms give equal strings.
  std::string canonical() const {
    std::string s;
    for (const auto& t : terms_) {
      s += t.coeff.get_str() + "*" + monomial_string(t.exp) + ";";
    }
    return s;
  }

  /// Short stable hex id derived from canonical().
  std::string id() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical()) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << (h >> 32U);
    return os.str();
  }

  std::string to_string() const {
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " + ";
      s += t.coeff.get_str() + "*" + monomial_string(t.exp);
    }
    return s;
  }

  friend bool operator==(const QuarticForm& a, const QuarticForm& b) {
    return a.canonical() == b.canonical();
  }

 private:
  QuarticForm() = default;
  std::vector<Term> terms_;
  std::string name_;
};

}  // namespace p3x::spaces

#endif  // P3X_SPACES_QUARTIC_HPP
