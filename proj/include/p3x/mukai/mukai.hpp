#ifndef P3X_MUKAI_MUKAI_HPP
#define P3X_MUKAI_MUKAI_HPP

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace p3x::mukai {

/// (rank, c1 = d H, s) on a quartic K3, H^2 = 4.
struct MukaiVector {
  long long r = 0;
  long long d = 0;
  long long s = 0;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;

  std::string to_string() const {
    return "(" + std::to_string(r) + ", " + std::to_string(d) + "H, " + std::to_string(s) + ")";
  }
};

inline constexpr long long kH2 = 4;

/// <v, w> = H^2 d_v d_w - r_v s_w - r_w s_v
inline long long pairing(const MukaiVector& v, const MukaiVector& w) {
  return kH2 * v.d * w.d - v.r * w.s - w.r * v.s;
}

/// Riemann-Roch: chi(v, w) = -<v, w>.
inline long long chi(const MukaiVector& v, const MukaiVector& w) { return -pairing(v, w); }

inline bool is_spherical(const MukaiVector& v) { return pairing(v, v) == -2; }

class NonIntegral : public std::domain_error {
 public:
  NonIntegral(long long r, long long d)
      : std::domain_error(std::to_string(r) + " does not divide 2*" + std::to_string(d) + "^2+1"), r(r), d(d) {}
  long long r;
  long long d;
};

/// s with <(r, d, s), (r, d, s)> = -2, i.e. s = (2 d^2 + 1) / r; nullopt if not integral.
inline std::optional<long long> try_solve_s(long long r, long long d) {
  if (r < 1) throw std::invalid_argument("solve_s: rank must be positive");
  const long long n = 2 * d * d + 1;
  if (n % r != 0) return std::nullopt;
  return n / r;
}

inline long long solve_s(long long r, long long d) {
  auto s = try_solve_s(r, d);
  if (!s) throw NonIntegral(r, d);
  return *s;
}

enum class DivStatus { ExcludedThmMain, ExcludedRank27, Open };

inline const char* to_string(DivStatus s) {
  switch (s) {
    case DivStatus::ExcludedThmMain:
      return "EXCLUDED_THM_MAIN";
    case DivStatus::ExcludedRank27:
      return "EXCLUDED_RANK27";
    default:
      return "OPEN";
  }
}

inline DivStatus classify(long long r, long long d) {
  const long long n = 2 * d * d + 1;
  if (r == n && std::llabs(d) >= 4) return DivStatus::ExcludedThmMain;
  if (r == 27 && std::llabs(d) == 11) return DivStatus::ExcludedRank27;
  return DivStatus::Open;
}

struct ScanEntry {
  long long r;
  long long s;
  DivStatus status;
};

struct ScanRow {
  long long d;
  long long n;  // 2 d^2 + 1
  std::vector<ScanEntry> entries;
};

inline std::vector<long long> divisors(long long n) {
  std::vector<long long> small;
  std::vector<long long> large;
  for (long long k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    small.push_back(k);
    if (k != n / k) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::vector<ScanRow> divisibility_scan(long long d_lo, long long d_hi) {
  if (d_lo > d_hi) throw std::invalid_argument("divisibility_scan: d_lo > d_hi");
  std::vector<ScanRow> out;
  for (long long d = d_lo; d <= d_hi; ++d) {
    ScanRow row{d, 2 * d * d + 1, {}};
    for (long long r : divisors(row.n)) row.entries.push_back({r, row.n / r, classify(r, d)});
    out.push_back(std::move(row));
  }
  return out;
}

/// v(O_X(nH)).
inline MukaiVector line_bundle(long long n) { return {1, n, 1 + 2 * n * n}; }
/// M|_X for M = T(-1): 0 -> O(-1) -> O^4 -> M -> 0.
inline MukaiVector restricted_M() {
  const MukaiVector o = line_bundle(0);
  const MukaiVector om1 = line_bundle(-1);
  return {4 * o.r - om1.r, 4 * o.d - om1.d, 4 * o.s - om1.s};
}

struct ConstructionId {
  enum class Kind { EXd, FBundle, EX, FCd } kind;
  long long d = 0;

  static ConstructionId e_xd(long long d) { return {Kind::EXd, d}; }
  static ConstructionId f_bundle() { return {Kind::FBundle, 0}; }
  static ConstructionId e_x() { return {Kind::EX, 0}; }
  static ConstructionId f_cd(long long d) { return {Kind::FCd, d}; }
};

struct ChernData {
  long long rank;
  long long degree;
  std::optional<MukaiVector> v;
  std::string where;  // "X", "P3" or "C"
};

/// w_d = S_d - 2 S_{d-4} + S_{d-8}, dim of the degree-d piece of a (4,4) curve.
inline long long w_closed(long long d) {
  auto s = [](long long k) { return k < 0 ? 0LL : (k + 3) * (k + 2) * (k + 1) / 6; };
  return s(d) - 2 * s(d - 4) + s(d - 8);
}

inline MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) { return {a.r + b.r, a.d + b.d, a.s + b.s}; }
inline MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) { return {a.r - b.r, a.d - b.d, a.s - b.s}; }
inline MukaiVector operator*(long long k, const MukaiVector& a) { return {k * a.r, k * a.d, k * a.s}; }

/// Rank and degree from the defining sequences (Mukai vectors are additive):
///   E_{X,d} = ker(V_{X,d} (x) O_X -> O_X(dH)), dim V_{X,d} = 2d^2 + 2
///   F       = coker(O^4 -> V2 (x) M), on P3
///   E_X     = extension of F|_X by O_X(H)
///   F_{C,d} = ker(W_d (x) O_C -> O_C(dH)), deg O_C(H) = 16
inline ChernData chern_of(const ConstructionId& c) {
  switch (c.kind) {
    case ConstructionId::Kind::EXd: {
      if (c.d < 1) throw std::invalid_argument("E_Xd needs d >= 1");
      const MukaiVector v = (2 * c.d * c.d + 2) * line_bundle(0) - line_bundle(c.d);
      return {v.r, v.d, v, "X"};
    }
    case ConstructionId::Kind::FBundle: {
      const MukaiVector f = 10 * restricted_M() - 4 * line_bundle(0);
      return {f.r, f.d, std::nullopt, "P3"};
    }
    case ConstructionId::Kind::EX: {
      const MukaiVector v = 10 * restricted_M() - 4 * line_bundle(0) + line_bundle(1);
      return {v.r, v.d, v, "X"};
    }
    default: {
      if (c.d < 1) throw std::invalid_argument("F_Cd needs d >= 1");
      return {w_closed(c.d) - 1, -16 * c.d, std::nullopt, "C"};
    }
  }
}

}  // namespace p3x::mukai

#endif  // P3X_MUKAI_MUKAI_HPP
