#ifndef P3X_VERIFY_REGISTRY_HPP
#define P3X_VERIFY_REGISTRY_HPP

#include <p3x/constructions.hpp>
#include <p3x/exactla/certify.hpp>
#include <p3x/mukai.hpp>
#include <p3x/spaces.hpp>
#include <p3x/verify/config.hpp>
#include <p3x/verify/data.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace p3x::verify {

enum class Status { Pass, Fail, Skip, Degenerate };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skip:
      return "SKIP";
    default:
      return "DEGENERATE";
  }
}

inline Status parse_status(const std::string& s) {
  if (s == "PASS") return Status::Pass;
  if (s == "FAIL") return Status::Fail;
  if (s == "SKIP") return Status::Skip;
  if (s == "DEGENERATE") return Status::Degenerate;
  throw std::invalid_argument("unknown status '" + s + "'");
}

using Values = std::map<std::string, std::vector<long long>>;

struct CheckResult {
  std::string id;
  std::string paper_anchor;
  Status status = Status::Skip;
  Values expected;
  Values computed;
  std::vector<std::string> evidence;
  double runtime_ms = 0;
  std::string quartic;
  std::uint64_t seed = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

class UnknownCheck : public std::invalid_argument {
 public:
  explicit UnknownCheck(const std::string& id) : std::invalid_argument("unknown check '" + id + "'") {}
};

/// Shared state of one check run.
class Context {
 public:
  Context(const Config& cfg, const ExpectedTable& table, CheckResult& res) : cfg_(cfg), table_(table), res_(res) {}

  const Config& config() const { return cfg_; }

  /// Expected integers for `<id>.<key>`, also recorded in the result.
  const std::vector<long long>& expect(const std::string& key) {
    const auto& v = table_.at(res_.id + "." + key);
    res_.expected[key] = v;
    return v;
  }
  long long expect1(const std::string& key) { return expect(key).at(0); }

  void computed(const std::string& key, std::vector<long long> v) { res_.computed[key] = std::move(v); }
  void note(std::string s) { res_.evidence.push_back(std::move(s)); }

  /// computed[key] == expect(key).
  bool computed_eq(const std::string& key) {
    const auto& want = expect(key);
    auto it = res_.computed.find(key);
    return it != res_.computed.end() && it->second == want;
  }

  /// Records a comparison; any false makes the check FAIL.
  bool require(bool ok, const std::string& what) {
    if (!ok) {
      failed_ = true;
      note("MISMATCH: " + what);
    }
    return ok;
  }

  bool failed() const { return failed_; }

  const std::vector<spaces::QuarticForm>& quartics() {
    if (!quartics_) quartics_ = quartic_set(cfg_);
    return *quartics_;
  }

  exactla::CertifyOptions certify_options() const {
    exactla::CertifyOptions o;
    o.n_primes = cfg_.primes;
    o.seed = cfg_.seed;
    o.exact = cfg_.exact;
    return o;
  }

  /// Certify and record the certificate as evidence.
  exactla::Certificate certify(const std::string& what, const exactla::SparseMatrix& m, const exactla::Claim& claim) {
    auto c = exactla::certify(m, claim, certify_options());
    std::string primes;
    for (auto p : c.primes) primes += (primes.empty() ? "" : ",") + std::to_string(p);
    note(what + ": " + exactla::to_string(c.status) + " via " + c.method + "; " + c.evidence +
         (primes.empty() ? "" : "; primes [" + primes + "]"));
    return c;
  }

  CheckResult& result() { return res_; }

 private:
  const Config& cfg_;
  const ExpectedTable& table_;
  CheckResult& res_;
  bool failed_ = false;
  std::optional<std::vector<spaces::QuarticForm>> quartics_;
};

/// Thrown inside a check to report DEGENERATE (a precondition failed).
class Degenerate : public std::runtime_error {
 public:
  explicit Degenerate(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown inside a check to report SKIP.
class Skipped : public std::runtime_error {
 public:
  explicit Skipped(const std::string& what) : std::runtime_error(what) {}
};

struct CheckSpec {
  std::string id;
  std::string paper_anchor;
  CostClass cost;
  std::string claim;  // what is verified, one line
  std::function<void(Context&)> run;
};

namespace checks {

using constructions::RVariant;
using exactla::Injective;
using exactla::KernelSpan;
using exactla::Surjective;
using spaces::QuarticForm;
using spaces::RingSpec;

inline std::vector<long long> ints(std::initializer_list<long long> xs) { return xs; }

inline std::string qkey(const std::string& key, const QuarticForm& f) { return key + "[" + f.name() + "]"; }

inline const std::vector<QuarticForm>& need_quartics(Context& c) {
  const auto& qs = c.quartics();
  if (qs.empty()) throw Skipped("no quartics selected (n_random = 0)");
  return qs;
}

inline void kul90_divisibility(Context& c) {
  long long mismatches = 0;
  long long pairs = 0;
  long long integral = 0;
  for (long long d = -50; d <= 50; ++d) {
    const long long n = 2 * d * d + 1;
    for (long long r = 1; r <= n; ++r) {
      ++pairs;
      const auto s = mukai::try_solve_s(r, d);
      const bool divides = n % r == 0;
      if (s.has_value() != divides) ++mismatches;
      if (s) {
        ++integral;
        if (mukai::pairing({r, d, *s}, {r, d, *s}) != -2) ++mismatches;
      }
    }
  }
  c.computed("mismatches", {mismatches});
  c.computed("pairs_tested", {pairs, integral});
  c.note("solve_s integral <=> r | 2d^2+1 over " + std::to_string(pairs) + " pairs (r, d), |d| <= 50");
  c.require(mismatches == c.expect1("mismatches"), "solve_s disagrees with divisibility");

  std::vector<long long> thm;
  std::vector<long long> r27;
  for (const auto& row : mukai::divisibility_scan(-50, 50)) {
    for (const auto& e : row.entries) {
      if (e.status == mukai::DivStatus::ExcludedThmMain && (e.r == 33 || e.r == 243)) {
        thm.push_back(e.r);
        thm.push_back(row.d);
      }
      if (e.status == mukai::DivStatus::ExcludedRank27) {
        r27.push_back(e.r);
        r27.push_back(row.d);
      }
    }
  }
  auto as_set = [](const std::vector<long long>& v) {
    std::vector<std::pair<long long, long long>> p;
    for (std::size_t i = 0; i + 1 < v.size(); i += 2) p.emplace_back(v[i], v[i + 1]);
    std::sort(p.begin(), p.end());
    return p;
  };
  c.computed("excluded_thm_main", thm);
  c.computed("excluded_rank27", r27);
  c.require(as_set(thm) == as_set(c.expect("excluded_thm_main")), "EXCLUDED_THM_MAIN marks for ranks 33, 243");
  c.require(as_set(r27) == as_set(c.expect("excluded_rank27")), "EXCLUDED_RANK27 marks");
}

inline void spherical_a1(Context& c) {
  const auto range = c.expect("d_range");
  const long long want = c.expect1("s");
  std::vector<long long> bad;
  for (long long d = range.at(0); d <= range.at(1); ++d) {
    const long long r = 2 * d * d + 1;
    const long long s = mukai::solve_s(r, d);
    if (s != want || !mukai::is_spherical({r, -d, s})) bad.push_back(d);
  }
  c.computed("s", {bad.empty() ? want : mukai::solve_s(2 * bad[0] * bad[0] + 1, bad[0])});
  c.computed("failing_d", bad);
  c.note("solve_s(2d^2+1, d) and <v_d, v_d> = -2 for d in [" + std::to_string(range.at(0)) + ", " +
         std::to_string(range.at(1)) + "]");
  c.require(bad.empty(), "s != 1 for some d");
}

inline void mukai_27_11_9(Context& c) {
  const auto want = c.expect("v");
  const auto ch = mukai::chern_of(mukai::ConstructionId::e_x());
  const mukai::MukaiVector v = *ch.v;
  const long long s = mukai::solve_s(27, 11);
  c.computed("v", {v.r, v.d, v.s});
  c.computed("solve_s_27_11", {s});
  c.computed("pairing", {mukai::pairing(v, v)});
  c.computed("chi", {mukai::chi(v, v)});
  c.note("additive: 10 v(M|_X) - 4 v(O_X) + v(O_X(H)) = " + v.to_string());
  c.require(std::vector<long long>{v.r, v.d, v.s} == want, "Mukai vector of E_X");
  c.require(s == want.at(2), "solve_s(27, 11)");
  c.require(mukai::pairing(v, v) == c.expect1("pairing"), "pairing");
  c.require(mukai::chi(v, v) == c.expect1("chi"), "chi");
}

inline void dims_vxd(Context& c) {
  const auto want = c.expect("dims");
  for (const auto& f : need_quartics(c)) {
    const auto x = RingSpec::surface(f);
    std::vector<long long> dims;
    for (int d = 1; d <= 10; ++d) {
      const auto n = static_cast<long long>(spaces::graded_piece(x, d).dim());
      dims.push_back(n);
      c.require(n == 2LL * d * d + 2, f.name() + ": dim V_X," + std::to_string(d) + " != 2d^2+2");
    }
    c.computed(qkey("dims", f), dims);
    c.require(dims == want, f.name() + ": dims differ from expected");
  }
  c.note("dim V_{X,d} by elimination of the ideal piece f*S_{d-4}, d = 1..10");
}

inline constructions::WTable curve_table(Context& c, int d_max) {
  const auto [f1, f2] = curve_pair(c.config());
  c.note("curve pair: " + f1.name() + ", " + f2.name());
  try {
    return constructions::w_table(f1, f2, d_max);
  } catch (const spaces::InvalidRing& e) {
    throw Degenerate(e.what());
  } catch (const spaces::NotRegularPair& e) {
    throw Degenerate(e.what());
  }
}

inline void dims_wd(Context& c) {
  const auto want = c.expect("w");
  const auto t = curve_table(c, 12);
  std::vector<long long> w;
  for (int d = 0; d < static_cast<int>(want.size()); ++d) w.push_back(static_cast<long long>(t.w(d)));
  c.computed("w", w);
  for (int d = 0; d <= 12; ++d) {
    c.require(t.w(d) == spaces::RingSpec::koszul_dim(d), "w_" + std::to_string(d) + " != Koszul count");
  }
  c.note("regular pair certified degreewise d = 0..12 against S_d - 2S_{d-4} + S_{d-8}");
  c.require(w == want, "w-table");
}

inline void pushforward_rank(Context& c) {
  const auto range = c.expect("d_range");
  const auto t = curve_table(c, static_cast<int>(range.at(1)));
  const auto [f1, f2] = curve_pair(c.config());
  const auto x = RingSpec::surface(f1);
  std::vector<long long> sums;
  for (long long d = range.at(0); d <= range.at(1); ++d) {
    const auto r = constructions::pushforward_identity(t, x, static_cast<int>(d));
    long long sum = 0;
    for (int j = 0; 4 * j <= d; ++j) sum += static_cast<long long>(t.w(static_cast<int>(d) - 4 * j));
    sums.push_back(sum);
    c.note(r.detail);
    c.require(r.pass, "pushforward identity at d = " + std::to_string(d));
  }
  c.computed("sums", sums);
  c.computed("fiber_rank", {32 + 1});
  c.require(static_cast<long long>(t.genus) == c.expect1("fiber_rank"), "fiber rank 32 + 1 vs genus");
}

inline void genus_basepoints(Context& c) {
  const auto t = curve_table(c, 8);
  c.computed("genus", {static_cast<long long>(t.genus)});
  c.computed("deg_canonical", {t.deg_canonical});
  c.computed("base_points", {t.base_points});
  c.computed("fiber_rank", {32 + 1});
  c.require(static_cast<long long>(t.genus) == c.expect1("genus"), "g(C) = w_4");
  c.require(t.deg_canonical == c.expect1("deg_canonical"), "deg K_C");
  c.require(t.deg_canonical == 2 * static_cast<long long>(t.genus) - 2, "2g - 2 = deg K_C");
  c.require(t.base_points == c.expect1("base_points"), "base points");
  c.require(32 + 1 == c.expect1("fiber_rank") && 32 + 1 == static_cast<long long>(t.genus), "fiber rank");
  c.note("g = h^0(O_C(4H)) = w_4 = " + std::to_string(t.genus) + "; deg K_C = 4 * 16; (4H)^2 = 16 * 4");
}

inline void thm_main_obstruction(Context& c) {
  const auto range = c.expect("d_range");
  const auto t = curve_table(c, static_cast<int>(range.at(1)));
  std::vector<long long> obstructed;
  for (long long a = range.at(0); a <= range.at(1); ++a) {
    for (long long d : {a, -a}) {
      const auto o = constructions::thm_main_obstruction(t, static_cast<int>(d));
      c.note(std::string(constructions::to_string(o.status)) + " " + o.detail);
      if (c.require(o.status == constructions::Obstruction::Status::Obstructed, "d = " + std::to_string(d))) {
        obstructed.push_back(d);
      }
    }
  }
  std::vector<long long> na;
  for (long long d : c.expect("not_applicable")) {
    const auto o = constructions::thm_main_obstruction(t, static_cast<int>(d));
    if (c.require(o.status == constructions::Obstruction::Status::NotApplicable, "d = " + std::to_string(d) + " in scope")) {
      na.push_back(d);
    }
  }
  c.computed("obstructed", obstructed);
  c.computed("not_applicable", na);
}

inline void ker_g(Context& c) {
  const auto g = constructions::build_g();
  const auto shape = c.expect("shape");
  c.computed("shape", {static_cast<long long>(g.matrix().rows()), static_cast<long long>(g.matrix().cols())});
  c.require(shape == std::vector<long long>{static_cast<long long>(g.matrix().rows()), static_cast<long long>(g.matrix().cols())}, "shape");
  const auto v1 = spaces::graded_piece(RingSpec::p3(), 1);
  const auto cert = c.certify("ker(g) = span(delta1)", g.matrix(), KernelSpan{{constructions::delta1(v1)}});
  const auto rk = exactla::rank_kernel(g.matrix());
  c.computed("kernel_dim", {static_cast<long long>(rk.kernel.size())});
  c.computed("rank", {static_cast<long long>(rk.rank)});
  c.require(cert.certified, "certificate");
  c.require(static_cast<long long>(rk.kernel.size()) == c.expect1("kernel_dim"), "kernel dim");
  c.require(static_cast<long long>(rk.rank) == c.expect1("rank"), "rank");
  const bool same = constructions::build_g(RingSpec::surface(QuarticForm::fermat())).matrix() == g.matrix();
  c.note(std::string("g built on the Fermat surface ring has the identical matrix: ") + (same ? "yes" : "no"));
  c.require(same, "g independent of the ring");
}

inline void ker_r(Context& c) {
  const auto v1 = spaces::graded_piece(RingSpec::p3(), 1);
  const auto want_dim = c.expect1("kernel_dim");
  const auto want_rank = c.expect1("rank");
  const auto shape = c.expect("shape");
  std::vector<std::string> certified;
  for (auto variant : {RVariant::Literal, RVariant::Antisymmetrized}) {
    const std::string name = constructions::to_string(variant);
    const auto r = constructions::build_r(variant);
    const auto rk = exactla::rank_kernel(r.matrix());
    c.computed("kernel_dim[" + name + "]", {static_cast<long long>(rk.kernel.size())});
    c.computed("rank[" + name + "]", {static_cast<long long>(rk.rank)});
    c.require(std::vector<long long>{static_cast<long long>(r.matrix().rows()), static_cast<long long>(r.matrix().cols())} == shape,
              name + " shape");
    const bool contains = r(constructions::delta1(v1)).is_zero();
    c.note(name + ": rank " + std::to_string(rk.rank) + ", kernel dim " + std::to_string(rk.kernel.size()) +
           ", r(delta1) " + (contains ? "= 0" : "!= 0"));
    if (!contains) continue;
    const auto cert = c.certify(name + ": ker(r) = span(delta1)", r.matrix(), KernelSpan{{constructions::delta1(v1)}});
    if (cert.certified && static_cast<long long>(rk.kernel.size()) == want_dim && static_cast<long long>(rk.rank) == want_rank) {
      certified.push_back(name);
    }
  }
  c.note("certifying variant(s): " + (certified.empty() ? std::string("none") : certified.front() +
                                                               (certified.size() > 1 ? ", " + certified[1] : "")));
  c.computed("certifying_variants", {static_cast<long long>(certified.size())});
  c.require(!certified.empty(), "no variant certifies ker(r) = span(delta1)");
}

inline void h1_coker_36(Context& c) {
  const auto h1 = constructions::build_h1();
  const auto q = spaces::cokernel_sq(h1, "coker(h1)");
  const auto cert = c.certify("h1 injective", h1.matrix(), Injective{});
  const auto ex = mukai::chern_of(mukai::ConstructionId::e_x());
  c.computed("shape", {static_cast<long long>(h1.matrix().rows()), static_cast<long long>(h1.matrix().cols())});
  c.computed("rank", {static_cast<long long>(cert.rank)});
  c.computed("coker_dim", {static_cast<long long>(q.dim())});
  c.computed("r_plus_s", {ex.v->r + ex.v->s});
  c.require(std::vector<long long>{static_cast<long long>(h1.matrix().rows()), static_cast<long long>(h1.matrix().cols())} == c.expect("shape"), "shape");
  c.require(cert.certified && static_cast<long long>(cert.rank) == c.expect1("rank"), "rank(h1)");
  c.require(static_cast<long long>(q.dim()) == c.expect1("coker_dim"), "dim coker(h1)");
  c.require(static_cast<long long>(q.dim()) == ex.v->r + ex.v->s, "dim coker(h1) = r + s of (27, 11H, 9)");
  c.note("dim coker(h1) = 40 - 4 = " + std::to_string(q.dim()) + " = 27 + 9");
}

inline void ker_h_identity(Context& c) {
  const auto hm = constructions::build_h();
  const auto v2 = spaces::graded_piece(RingSpec::p3(), 2);
  const auto& m = hm.h.matrix();
  c.computed("shape", {static_cast<long long>(m.rows()), static_cast<long long>(m.cols())});
  c.require(std::vector<long long>{static_cast<long long>(m.rows()), static_cast<long long>(m.cols())} == c.expect("shape"), "shape");
  const auto cert = c.certify("ker(h) = span(identity of V2)", m, KernelSpan{{constructions::identity_tensor(v2)}});
  const auto rk = exactla::rank_kernel(m);
  c.computed("kernel_dim", {static_cast<long long>(rk.kernel.size())});
  c.computed("rank", {static_cast<long long>(rk.rank)});
  c.require(cert.certified, "certificate");
  c.require(static_cast<long long>(rk.kernel.size()) == c.expect1("kernel_dim"), "kernel dim");
  c.require(static_cast<long long>(rk.rank) == c.expect1("rank"), "rank");
  c.note("codomain V1* (x) coker(h1), dim 4 * " + std::to_string(hm.coker_h1.dim()));
}

template <class F>
auto per_quartic(const QuarticForm& f, F&& build) {
  try {
    return build();
  } catch (const constructions::PresentationDegenerate& e) {
    throw Degenerate(f.name() + ": " + e.what());
  }
}

inline void k1_dim(Context& c) {
  const auto amb = c.expect1("ambient_dim");
  const auto mult_rank = c.expect1("mult_rank");
  const auto want = c.expect1("dim");
  for (const auto& f : need_quartics(c)) {
    const auto x = RingSpec::surface(f);
    const auto mult = spaces::mult_map(x, 1, 4);
    const auto cert = c.certify(f.name() + ": V1 (x) V_X,4 -> V_X,5 surjective", mult.matrix(), Surjective{});
    c.require(cert.certified && static_cast<long long>(cert.rank) == mult_rank, f.name() + ": multiplication rank");
    const auto k1 = per_quartic(f, [&] { return constructions::build_K1(x); });
    c.computed(qkey("dim", f), {static_cast<long long>(k1.dim())});
    c.computed(qkey("ambient_dim", f), {static_cast<long long>(k1.ambient().dim())});
    c.require(static_cast<long long>(k1.ambient().dim()) == amb, f.name() + ": ambient dim");
    c.require(static_cast<long long>(k1.dim()) == want, f.name() + ": dim K1");
  }
}

inline void h2_injective(Context& c) {
  const auto shape = c.expect("shape");
  const auto want = c.expect1("rank");
  for (const auto& f : need_quartics(c)) {
    const auto h = per_quartic(f, [&] { return constructions::build_h2(f); });
    const auto& m = h.h2.matrix();
    c.require(std::vector<long long>{static_cast<long long>(m.rows()), static_cast<long long>(m.cols())} == shape, f.name() + ": shape");
    const auto cert = c.certify(f.name() + ": h2 injective", m, Injective{});
    c.computed(qkey("rank", f), {static_cast<long long>(cert.rank)});
    c.require(cert.certified && static_cast<long long>(cert.rank) == want, f.name() + ": h2 injective");
  }
}

inline void euler_dims(Context& c) {
  const auto want = c.expect("dims");
  for (const auto& f : need_quartics(c)) {
    std::vector<long long> dims;
    for (int k : {0, 4, 5}) {
      const auto e = per_quartic(f, [&] { return constructions::euler_sections(f, k); });
      dims.push_back(static_cast<long long>(e.dim()));
    }
    c.computed(qkey("dims", f), dims);
    c.require(dims == want, f.name() + ": H^0(M(k)|_X) for k = 0, 4, 5");
  }
  c.note("cokernel of V_{X,k-1} -> V1* (x) V_{X,k}, g -> sum_i x_i* (x) x_i g; k = 0 gives V1*");
}

inline void hom_m_m4_dim(Context& c) {
  const auto lower = c.expect1("lower_bound");
  const auto want = c.expect1("dim");
  for (const auto& f : need_quartics(c)) {
    const auto h = per_quartic(f, [&] { return constructions::hom_M_M4(f); });
    const long long bound = static_cast<long long>(4 * h.e4.dim()) - static_cast<long long>(h.e5.dim());
    c.computed(qkey("dim", f), {static_cast<long long>(h.hom.dim())});
    c.computed(qkey("lower_bound", f), {bound});
    c.require(bound == lower && static_cast<long long>(h.hom.dim()) >= bound, f.name() + ": rank-nullity bound");
    c.require(static_cast<long long>(h.hom.dim()) == want, f.name() + ": dim Hom(M(-4H), M)");
    c.note(f.name() + ": induced map " + std::to_string(h.mult.matrix().rows()) + "x" +
           std::to_string(h.mult.matrix().cols()) + ", kernel dim " + std::to_string(h.hom.dim()));
  }
}

inline void v_surjective(Context& c) {
  const auto shape = c.expect("shape");
  const auto want = c.expect1("rank");
  c.note("domain Hom(M(-4H), M) (x) V2*, built through e2*");
  for (const auto& f : need_quartics(c)) {
    const auto v = per_quartic(f, [&] { return constructions::build_v(f); });
    const auto& m = v.v.matrix();
    c.require(std::vector<long long>{static_cast<long long>(m.rows()), static_cast<long long>(m.cols())} == shape, f.name() + ": shape");
    const auto cert = c.certify(f.name() + ": v surjective", m, Surjective{});
    c.computed(qkey("rank", f), {static_cast<long long>(cert.rank)});
    c.require(cert.certified && static_cast<long long>(cert.rank) == want, f.name() + ": v surjective");
  }
}

inline void homf_const_dim(Context& c) {
  const auto sections = c.expect1("sections_dim");
  const auto shape = c.expect("shape");
  const auto want = c.expect1("dim");
  std::vector<long long> all;
  for (const auto& f : need_quartics(c)) {
    const auto h = constructions::hom_F_O5(f, c.certify_options());
    c.note(f.name() + ": " + h.certificate.evidence);
    c.computed(qkey("dim", f), {static_cast<long long>(h.dim)});
    c.computed(qkey("sections_dim", f), {static_cast<long long>(h.sections_dim)});
    c.require(static_cast<long long>(h.sections_dim) == sections, f.name() + ": dim H^0(M*(5)|_X)");
    c.require(std::vector<long long>{static_cast<long long>(h.codomain_dim), static_cast<long long>(h.domain_dim)} == shape,
              f.name() + ": shape");
    c.require(static_cast<long long>(h.dim) == want, f.name() + ": dim Hom");
    all.push_back(static_cast<long long>(h.dim));
  }
  c.require(std::adjacent_find(all.begin(), all.end(), std::not_equal_to<>()) == all.end(), "dimension not constant");
  const auto p5 = constructions::hom_F_O(RingSpec::p3(), 5, c.certify_options());
  const auto p1 = constructions::hom_F_O(RingSpec::p3(), 1, c.certify_options());
  c.computed("p3_cross_check", {static_cast<long long>(p5.dim), static_cast<long long>(p1.dim)});
  c.require(std::vector<long long>{static_cast<long long>(p5.dim), static_cast<long long>(p1.dim)} == c.expect("p3_cross_check"),
            "P3 cross-check");
  c.note("P3 cross-check: Hom_P3(F, O(5)) = " + std::to_string(p5.dim) + ", Hom_P3(F, O(1)) = " + std::to_string(p1.dim) +
         "; " + std::to_string(p5.dim) + " - " + std::to_string(p1.dim) + " + 1 = " + std::to_string(p5.dim - p1.dim + 1) +
         " (the +1 is Ext^1_P3(F, O(1)) = C, which is nonzero)");
}

inline void chern_constructions(Context& c) {
  using mukai::ConstructionId;
  const auto e4 = mukai::chern_of(ConstructionId::e_xd(4));
  const auto fb = mukai::chern_of(ConstructionId::f_bundle());
  const auto ex = mukai::chern_of(ConstructionId::e_x());
  c.computed("e_xd_4", {e4.v->r, e4.v->d, e4.v->s});
  c.computed("f_bundle", {fb.rank, fb.degree});
  c.computed("e_x", {ex.v->r, ex.v->d, ex.v->s});
  c.require(c.computed_eq("e_xd_4"), "E_X,4");
  c.require(c.computed_eq("f_bundle"), "F");
  c.require(c.computed_eq("e_x"), "E_X");
  std::vector<long long> fcd;
  for (long long d = 1; d <= 8; ++d) {
    const auto e = mukai::chern_of(ConstructionId::e_xd(d));
    c.require(e.rank == 2 * d * d + 1 && e.v->s == mukai::solve_s(e.rank, d), "E_X,d rank and s for d = " + std::to_string(d));
    const auto f = mukai::chern_of(ConstructionId::f_cd(d));
    fcd.push_back(f.rank);
    c.require(f.rank == mukai::w_closed(d) - 1 && f.degree == -16 * d, "F_C,d for d = " + std::to_string(d));
  }
  c.computed("f_cd_rank", fcd);
  c.note("additive Mukai vectors along the defining sequences; deg O_C(H) = 16");
}

inline void restriction_fixed_quotients(Context& c) {
  const auto want = c.expect("ranks");
  const auto deg4 = c.expect("degree4");
  const auto p3 = RingSpec::p3();
  for (const auto& f : need_quartics(c)) {
    const auto x = RingSpec::surface(f);
    std::vector<long long> ranks;
    for (int d = 0; d <= 3; ++d) {
      const auto r = spaces::restriction_map(p3, x, d);
      const auto cert = c.certify(f.name() + ": V_" + std::to_string(d) + " -> V_X," + std::to_string(d) + " bijective",
                                  r.matrix(), exactla::RankIs{r.matrix().rows()});
      c.require(cert.certified && r.matrix().rows() == r.matrix().cols(), f.name() + ": restriction bijective in degree " + std::to_string(d));
      ranks.push_back(static_cast<long long>(cert.rank));
    }
    c.computed(qkey("ranks", f), ranks);
    c.require(ranks == want, f.name() + ": restriction ranks");
    const auto r4 = spaces::restriction_map(p3, x, 4);
    const auto rk4 = exactla::rank_kernel(r4.matrix());
    const auto [f1, f2] = curve_pair(c.config());
    long long curve_rank = -1;
    if (f == f1) {
      try {
        const auto rc = spaces::restriction_map(x, RingSpec::curve(f1, f2), 4);
        curve_rank = static_cast<long long>(exactla::rank_kernel(rc.matrix()).rank);
      } catch (const spaces::InvalidRing& e) {
        throw Degenerate(e.what());
      }
    }
    const std::vector<long long> got{static_cast<long long>(rk4.rank), static_cast<long long>(rk4.kernel.size()),
                                     curve_rank < 0 ? deg4.at(2) : curve_rank};
    c.computed(qkey("degree4", f), got);
    c.require(got == deg4, f.name() + ": degree 4 restriction ranks");
  }
  c.note("P3 -> X bijective for d <= 3; degree 4: rank 34 with kernel span{f}; X -> C rank 33 (first quartic only)");
}

}  // namespace checks

/// Anchors as stored in data/anchors.txt.
inline const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = [] {
    using C = CostClass;
    std::vector<CheckSpec> s{
        {"kul90-divisibility", "rank divisibility | r divides 2d^2+1", C::Fast,
         "solve_s integral iff r | 2d^2+1 (|d| <= 50); scan marks", checks::kul90_divisibility},
        {"spherical-a1", "spherical Mukai vector | v_d^2 = -2 forces a = 1", C::Fast,
         "solve_s(2d^2+1, d) = 1 for |d| <= 50", checks::spherical_a1},
        {"mukai-27-11-9", "rank 27 bundle | v = (27, 11H, 9), v^2 = -2", C::Fast,
         "v(E_X) = (27, 11, 9) is spherical", checks::mukai_27_11_9},
        {"dims-vxd", "sections on the quartic | dim V_{X,d} = 2d^2+2", C::Fast,
         "dim V_{X,d} = 2d^2+2 for d = 1..10", checks::dims_vxd},
        {"dims-wd", "sections on the base curve | W_n = H^0(O_C(n))", C::Fast,
         "w-table (1,4,10,20,33,48,64,80)", checks::dims_wd},
        {"pushforward-rank", "restriction lemma | sum_{j=0}^{k} w_{d-4j} = 2d^2+2", C::Fast,
         "sum_j w_{d-4j} = 2d^2+2 for d = 4..8; 32 + 1 = 33", checks::pushforward_rank},
        {"genus-basepoints", "base curve of the pencil | g(C) = 33, (4H)^2 = 64 base points", C::Fast,
         "g(C) = 33, deg K_C = 64, 64 base points", checks::genus_basepoints},
        {"thm-main-obstruction", "main theorem | no exceptional bundle of rank 2d^2+1 for |d| >= 4", C::Fast,
         "obstruction witness and rank identity for 4 <= |d| <= 8", checks::thm_main_obstruction},
        {"ker-g", "extension uniqueness | ker(g) = C*delta1", C::Fast, "ker(g) = span(delta1)", checks::ker_g},
        {"ker-r", "extension on P3 | ker(r) = C*(sum x_i* (x) x_i)", C::Fast,
         "some variant of r has kernel span(delta1)", checks::ker_r},
        {"h1-coker-36", "unique inclusion | H^0(X, E_X) = coker(h1)", C::Fast,
         "rank(h1) = 4, dim coker = 36 = 27 + 9", checks::h1_coker_36},
        {"ker-h-identity", "unique inclusion | ker(h) = C*(identity of V2)", C::Fast,
         "ker(h) = span(identity tensor)", checks::ker_h_identity},
        {"k1-dim", "unique inclusion | K1 = coker(V_{X,5}* -> V_{X,4}* (x) V1*)", C::Medium,
         "dim K1 = 84 on every quartic", checks::k1_dim},
        {"h2-injective", "unique inclusion | h2 is injective", C::Medium, "rank(h2) = 136 on every quartic",
         checks::h2_injective},
        {"euler-dims", "Euler sequence on X | H^0(M|_X) = V1*", C::Medium,
         "dim H^0(M(k)|_X) = 4, 116, 174 for k = 0, 4, 5", checks::euler_dims},
        {"hom-m-m4-dim", "construction of F_C | Hom(M(-4H), M) = ker(V1 (x) H^0(M(4)) -> H^0(M(5)))", C::Medium,
         "dim Hom(M(-4H), M) = 290 on every quartic", checks::hom_m_m4_dim},
        {"v-surjective", "construction of F_C | v is surjective", C::Heavy, "rank(v) = 464 on every quartic",
         checks::v_surjective},
        {"homF-const-dim", "nonconstancy argument | dim Hom_X(F|_X(-4H), O_X(H)) is constant", C::Heavy,
         "dim Hom_X(F|_X, O_X(5H)) = 1132 on every quartic", checks::homf_const_dim},
        {"chern-constructions", "Chern bookkeeping | E_{X,d}: (2d^2+1, -dH, 1); F: rank 26, c1 = 10H", C::Fast,
         "rank/degree of E_Xd, F, E_X, F_Cd", checks::chern_constructions},
        {"restriction-fixed-quotients", "fixed quotients | V_{X,d} = V_d for d <= 3", C::Fast,
         "restriction P3 -> X bijective for d <= 3", checks::restriction_fixed_quotients},
    };
    std::sort(s.begin(), s.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
    return s;
  }();
  return specs;
}

inline const CheckSpec& find_check(const std::string& id) {
  for (const auto& s : registry()) {
    if (s.id == id) return s;
  }
  throw UnknownCheck(id);
}

inline std::string describe_quartics(const Config& cfg) {
  return cfg.quartic.to_string() + "+" + std::to_string(cfg.n_random) + " random";
}

inline CheckResult run_check(const CheckSpec& spec, const Config& cfg, const ExpectedTable& table) {
  CheckResult res;
  res.id = spec.id;
  res.paper_anchor = spec.paper_anchor;
  res.quartic = describe_quartics(cfg);
  res.seed = cfg.seed;
  const auto t0 = std::chrono::steady_clock::now();
  Context ctx(cfg, table, res);
  try {
    spec.run(ctx);
    res.status = ctx.failed() ? Status::Fail : Status::Pass;
  } catch (const Degenerate& e) {
    res.status = Status::Degenerate;
    res.evidence.push_back(std::string("DEGENERATE: ") + e.what());
  } catch (const Skipped& e) {
    res.status = Status::Skip;
    res.evidence.push_back(std::string("SKIP: ") + e.what());
  } catch (const DataError&) {
    throw;
  } catch (const spaces::QuarticError&) {
    throw;
  } catch (const std::exception& e) {
    res.status = Status::Fail;
    res.evidence.push_back(std::string("ERROR: ") + e.what());
  }
  res.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

inline CheckResult run_check(const std::string& id, const Config& cfg) {
  const auto& spec = find_check(id);
  return run_check(spec, cfg, ExpectedTable::load(cfg.expected_file()));
}

/// What a report records about its configuration.
struct ConfigEcho {
  std::string quartic;
  std::uint64_t seed = 0;
  std::size_t n_random = 0;
  std::size_t primes = 0;
  bool exact = false;
  std::string cost = "all";
  std::string partner;  // empty: default partner
  std::vector<std::string> quartics;

  friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

inline ConfigEcho echo(const Config& cfg) {
  ConfigEcho e;
  e.quartic = cfg.quartic.to_string();
  e.seed = cfg.seed;
  e.n_random = cfg.n_random;
  e.primes = cfg.primes;
  e.exact = cfg.exact;
  e.cost = cfg.cost ? to_string(*cfg.cost) : "all";
  e.partner = cfg.partner_spec;
  for (const auto& f : quartic_set(cfg)) e.quartics.push_back(f.name());
  return e;
}

struct Report {
  int version = 1;
  ConfigEcho config;
  std::vector<CheckResult> results;
  Status overall = Status::Pass;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Runs the catalog (filtered by cfg.cost) in the given id order, or
/// registry order if empty; results are sorted by id.
inline Report run_all(const Config& cfg, const std::vector<std::string>& order = {}) {
  const ExpectedTable table = ExpectedTable::load(cfg.expected_file());
  Report rep;
  rep.config = echo(cfg);
  std::vector<const CheckSpec*> todo;
  if (order.empty()) {
    for (const auto& s : registry()) todo.push_back(&s);
  } else {
    for (const auto& id : order) todo.push_back(&find_check(id));
  }
  for (const auto* s : todo) {
    if (cfg.cost && s->cost != *cfg.cost) continue;
    rep.results.push_back(run_check(*s, cfg, table));
  }
  std::sort(rep.results.begin(), rep.results.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  for (const auto& r : rep.results) {
    if (r.status == Status::Fail) rep.overall = Status::Fail;
  }
  return rep;
}

}  // namespace p3x::verify

#endif  // P3X_VERIFY_REGISTRY_HPP
