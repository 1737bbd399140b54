#ifndef P3X_CONSTRUCTIONS_TABLES_HPP
#define P3X_CONSTRUCTIONS_TABLES_HPP

#include <p3x/spaces.hpp>

#include <cstdlib>
#include <string>
#include <vector>

namespace p3x::constructions {

/// w_d = dim W_d for the (4,4) curve, p(d) = dim V_{X,d-4}, d = 4k + e.
struct WRow {
  int d;
  std::size_t w;
  std::size_t p;
  int k;
  int e;
};

struct WTable {
  std::vector<WRow> rows;
  std::size_t genus = 0;        // h^0(K_C) = w_4
  long long deg_canonical = 0;  // deg O_C(4H) = 4 * 16
  long long base_points = 0;    // (4H)^2 on X

  std::size_t w(int d) const { return d < 0 ? 0 : rows.at(static_cast<std::size_t>(d)).w; }
};

/// Throws spaces::NotRegularPair at the first degree where the ideal piece
/// is smaller than the Koszul count, InvalidRing if f1, f2 are proportional.
inline WTable w_table(const spaces::QuarticForm& f1, const spaces::QuarticForm& f2, int d_max) {
  const auto curve = spaces::RingSpec::curve(f1, f2);
  const auto surface = spaces::RingSpec::surface(f1);
  WTable t;
  for (int d = 0; d <= d_max; ++d) {
    t.rows.push_back({d, spaces::graded_piece(curve, d).dim(), spaces::graded_piece(surface, d - 4).dim(), d / 4, d % 4});
  }
  t.genus = t.w(4);
  constexpr long long kCurveDegree = 16;  // deg O_C(H) = 4 * H^2
  t.deg_canonical = 4 * kCurveDegree;
  t.base_points = 4 * 4 * 4;
  return t;
}

struct IdentityCheck {
  bool pass = false;
  std::string detail;
};

/// sum_{j=0}^{k} w_{d-4j} = dim V_{X,d} = 2d^2 + 2, and 32 + 1 = g.
inline IdentityCheck pushforward_identity(const WTable& t, const spaces::RingSpec& surface, int d) {
  std::size_t sum = 0;
  std::string terms;
  for (int j = 0; 4 * j <= d; ++j) {
    sum += t.w(d - 4 * j);
    terms += (terms.empty() ? "" : "+") + std::to_string(t.w(d - 4 * j));
  }
  const std::size_t vxd = spaces::graded_piece(surface, d).dim();
  const std::size_t closed = static_cast<std::size_t>(2 * d * d + 2);
  const bool fiber = 32 + 1 == t.genus;
  IdentityCheck c;
  c.pass = sum == vxd && vxd == closed && fiber;
  c.detail = "d=" + std::to_string(d) + ": " + terms + " = " + std::to_string(sum) + ", dim V_X,d = " +
             std::to_string(vxd) + ", 2d^2+2 = " + std::to_string(closed) + "; 32+1 = " + std::to_string(t.genus);
  return c;
}

struct Obstruction {
  enum class Status { Obstructed, NotApplicable, Failed } status = Status::NotApplicable;
  int k = 0;
  std::size_t witness_w = 0;  // w_{|d|-4}
  long long rank = 0;         // 2d^2 + 1
  long long rank_sum = 0;     // sum_{j>=1} w_{|d|-4j} + w_{|d|} - 1
  std::string detail;
};

inline const char* to_string(Obstruction::Status s) {
  switch (s) {
    case Obstruction::Status::Obstructed:
      return "OBSTRUCTED";
    case Obstruction::Status::NotApplicable:
      return "NOT_APPLICABLE";
    default:
      return "FAILED";
  }
}

inline Obstruction thm_main_obstruction(const WTable& t, int d) {
  const int a = std::abs(d);
  Obstruction o;
  o.k = a / 4;
  o.rank = 2LL * a * a + 1;
  if (a < 4) {
    o.detail = "|d| = " + std::to_string(a) + " < 4";
    return o;
  }
  o.witness_w = t.w(a - 4);
  for (int j = 1; 4 * j <= a; ++j) o.rank_sum += static_cast<long long>(t.w(a - 4 * j));
  o.rank_sum += static_cast<long long>(t.w(a)) - 1;
  const bool ok = o.k >= 1 && o.witness_w > 0 && o.rank_sum == o.rank;
  o.status = ok ? Obstruction::Status::Obstructed : Obstruction::Status::Failed;
  o.detail = "d=" + std::to_string(d) + ": k=" + std::to_string(o.k) + ", w_" + std::to_string(a - 4) + " = " +
             std::to_string(o.witness_w) + ", rank " + std::to_string(o.rank) + " vs " + std::to_string(o.rank_sum);
  return o;
}

}  // namespace p3x::constructions

#endif  // P3X_CONSTRUCTIONS_TABLES_HPP
