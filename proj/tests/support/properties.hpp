#ifndef P3X_TESTS_PROPERTIES_HPP
#define P3X_TESTS_PROPERTIES_HPP

// Property suites shared by the unit tests and the acceptance binary.

#include "dense_oracle.hpp"

#include <p3x/constructions.hpp>
#include <p3x/exactla.hpp>
#include <p3x/spaces.hpp>
#include <p3x/verify.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace props {

using namespace p3x;
using exactla::SparseMatrix;
using spaces::LinearMap;
using spaces::QuarticForm;
using spaces::RingSpec;

struct Outcome {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond) failures.push_back(what);
  }
  std::string summary() const {
    std::string s = std::to_string(cases) + " cases, " + std::to_string(failures.size()) + " failures";
    if (!failures.empty()) s += "; first: " + failures.front();
    return s;
  }
};

inline std::vector<std::pair<std::string, RingSpec>> sample_rings() {
  const auto f = QuarticForm::fermat();
  const auto g = QuarticForm::random(1);
  return {{"P3", RingSpec::p3()},
          {"X(fermat)", RingSpec::surface(f)},
          {"X(random 1)", RingSpec::surface(g)},
          {"C(fermat, random 1)", RingSpec::curve(f, g)}};
}

/// m(a+b, c) o (m(a, b) (x) id) = m(a, b+c) o (id (x) m(b, c)).
inline Outcome associativity_grid(int max_total = 6) {
  Outcome out;
  for (const auto& [name, ring] : sample_rings()) {
    for (int a = 0; a <= max_total; ++a) {
      for (int b = 0; a + b <= max_total; ++b) {
        for (int c = 0; a + b + c <= max_total; ++c) {
          const auto va = spaces::graded_piece(ring, a);
          const auto vc = spaces::graded_piece(ring, c);
          const auto left = spaces::compose(spaces::mult_map(ring, a + b, c),
                                            spaces::tensor_map(spaces::mult_map(ring, a, b), spaces::identity(vc)));
          const auto right = spaces::compose(spaces::mult_map(ring, a, b + c),
                                             spaces::tensor_map(spaces::identity(va), spaces::mult_map(ring, b, c)));
          out.expect(left.matrix() == right.matrix(), name + " (a,b,c) = (" + std::to_string(a) + "," +
                                                          std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return out;
}

/// Restriction commutes with multiplication and composes transitively.
inline Outcome restriction_grid(int max_total = 6) {
  Outcome out;
  const auto f = QuarticForm::fermat();
  const auto p3 = RingSpec::p3();
  for (const auto& g : {QuarticForm::random(1), QuarticForm::random(2)}) {
    const auto x = RingSpec::surface(f);
    const auto c = RingSpec::curve(f, g);
    const std::vector<std::pair<RingSpec, RingSpec>> pairs{{p3, x}, {x, c}, {p3, c}};
    for (const auto& [from, to] : pairs) {
      for (int a = 0; a <= max_total; ++a) {
        for (int b = 0; a + b <= max_total; ++b) {
          const auto lhs = spaces::compose(spaces::restriction_map(from, to, a + b), spaces::mult_map(from, a, b));
          const auto rhs = spaces::compose(
              spaces::mult_map(to, a, b),
              spaces::tensor_map(spaces::restriction_map(from, to, a), spaces::restriction_map(from, to, b)));
          out.expect(lhs.matrix() == rhs.matrix(),
                     from.tag() + " -> " + to.tag() + " at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
      }
    }
    for (int d = 0; d <= 8; ++d) {
      const auto direct = spaces::restriction_map(p3, c, d);
      const auto via = spaces::compose(spaces::restriction_map(x, c, d), spaces::restriction_map(p3, x, d));
      out.expect(direct.matrix() == via.matrix(), "P3 -> X -> C transitivity at d = " + std::to_string(d));
    }
  }
  return out;
}

/// Every builder output: rank + dim ker = cols, kernel vectors are killed
/// and carry the RREF unit pattern on free columns.
inline Outcome rank_nullity_builders(const QuarticForm& f = QuarticForm::fermat()) {
  Outcome out;
  const auto x = RingSpec::surface(f);
  std::vector<std::pair<std::string, LinearMap>> maps{
      {"g", constructions::build_g()},
      {"r literal", constructions::build_r(constructions::RVariant::Literal)},
      {"r antisymmetrized", constructions::build_r(constructions::RVariant::Antisymmetrized)},
      {"h1", constructions::build_h1()},
      {"comult", constructions::build_comult()},
      {"e2*", constructions::build_e2_dual()},
      {"h", constructions::build_h().h},
      {"K1 presentation", constructions::build_K1(x).presentation()},
      {"h2", constructions::build_h2(x).h2},
      {"euler(4)", constructions::euler_embedding(x, 4)},
      {"euler(5)", constructions::euler_embedding(x, 5)},
  };
  const auto hom = constructions::hom_M_M4(x);
  maps.emplace_back("Hom(M,M4) map", hom.mult);
  maps.emplace_back("v", constructions::build_v(x).v);
  for (const auto& [name, f_map] : maps) {
    const auto& m = f_map.matrix();
    const auto rk = exactla::rank_kernel(m);
    out.expect(rk.rank + rk.kernel.size() == m.cols(), name + ": rank + nullity != cols");
    const auto ech = exactla::rref(m);
    const auto free = ech.free_columns();
    out.expect(free.size() == rk.kernel.size(), name + ": free columns vs kernel size");
    bool killed = true;
    bool pattern = true;
    for (std::size_t i = 0; i < rk.kernel.size(); ++i) {
      killed = killed && m.apply(rk.kernel[i]).is_zero();
      for (std::size_t j = 0; j < free.size(); ++j) {
        pattern = pattern && rk.kernel[i].get(free[j]) == (i == j ? 1 : 0);
      }
    }
    out.expect(killed, name + ": kernel vector not killed");
    out.expect(pattern, name + ": kernel basis not in RREF form");
    const auto q = spaces::cokernel_sq(f_map, name);
    out.expect(q.dim() + rk.rank == m.rows(), name + ": dim coker + rank != rows");
  }
  const auto hf = constructions::hom_F_O5(f);
  out.expect(hf.rank + hf.dim == hf.domain_dim, "Hom(F, O(5)): rank + dim != domain");
  return out;
}

/// Modular rank never exceeds rational rank; exactla agrees with the dense
/// oracle on rank, pivots and reduced rows.
inline Outcome modular_vs_rational_fuzz(std::size_t n, std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t rows = 1 + rng() % 10;
    const std::size_t cols = 1 + rng() % 10;
    const auto m = t % 3 == 0 ? oracle::planted_rank(rng, rows, cols, 1 + rng() % 4, 3)
                              : oracle::random_matrix(rng, rows, cols, 0.4, 3);
    const auto dense = oracle::rref(oracle::to_dense(m), cols);
    const std::size_t truth = dense.pivots.size();
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 1000000007ULL}) {
      out.expect(exactla::modular_rank(m, p) <= truth, "modular rank > rational rank, trial " + std::to_string(t));
    }
    for (auto method : {exactla::Method::FractionFree, exactla::Method::Multimodular}) {
      const auto e = exactla::rref(m, method);
      bool same = e.pivots() == dense.pivots && e.rows().size() == dense.rows.size();
      for (std::size_t i = 0; same && i < dense.rows.size(); ++i) {
        same = e.rows()[i].to_dense() == std::vector<exactla::Scalar>(dense.rows[i].begin(), dense.rows[i].end());
      }
      out.expect(same, "RREF differs from dense oracle, trial " + std::to_string(t));
    }
  }
  return out;
}

/// certify never validates a false claim, including with unlucky primes.
inline Outcome certify_soundness_fuzz(std::size_t n, std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t rows = 2 + rng() % 9;
    const std::size_t cols = 2 + rng() % 9;
    const std::size_t k = 1 + rng() % std::min(rows, cols);
    const auto m = oracle::planted_rank(rng, rows, cols, k, 4);
    const std::size_t truth = oracle::rank(m);
    exactla::CertifyOptions seeded;
    seeded.seed = rng();
    exactla::CertifyOptions unlucky;
    unlucky.primes = {2, 3};
    for (const auto& opt : {seeded, unlucky}) {
      const std::string tag = " (trial " + std::to_string(t) + (opt.primes.empty() ? ", seeded)" : ", primes 2,3)");
      for (std::size_t claim : {truth, truth + 1, truth == 0 ? 0 : truth - 1}) {
        const auto c = exactla::certify(m, exactla::RankIs{claim}, opt);
        out.expect(c.certified == (claim == truth), "RankIs " + std::to_string(claim) + tag);
      }
      out.expect(exactla::certify(m, exactla::Injective{}, opt).certified == (truth == cols), "Injective" + tag);
      out.expect(exactla::certify(m, exactla::Surjective{}, opt).certified == (truth == rows), "Surjective" + tag);
      auto kernel = exactla::rank_kernel(m).kernel;
      out.expect(exactla::certify(m, exactla::KernelSpan{kernel}, opt).certified, "true kernel rejected" + tag);
      if (!kernel.empty()) {
        auto partial = kernel;
        partial.pop_back();
        out.expect(!exactla::certify(m, exactla::KernelSpan{partial}, opt).certified, "partial kernel accepted" + tag);
        auto doubled = kernel;
        doubled.push_back(kernel.front());
        out.expect(!exactla::certify(m, exactla::KernelSpan{doubled}, opt).certified, "dependent kernel accepted" + tag);
      }
      if (truth > 0) {
        // A vector outside the kernel: a unit vector at a pivot column.
        const auto e = exactla::rref(m);
        auto bogus = kernel;
        bogus.push_back(exactla::SparseVector::unit(cols, e.pivots().front()));
        out.expect(!exactla::certify(m, exactla::KernelSpan{bogus}, opt).certified, "non-kernel vector accepted" + tag);
      }
    }
  }
  return out;
}

inline verify::Report zero_runtimes(verify::Report r) {
  for (auto& x : r.results) x.runtime_ms = 0;
  return r;
}

/// Byte-identical reruns, and shuffled order gives the sorted report.
inline Outcome determinism(const verify::Config& cfg) {
  Outcome out;
  const auto a = zero_runtimes(verify::run_all(cfg));
  const auto b = zero_runtimes(verify::run_all(cfg));
  out.expect(verify::serialize(a) == verify::serialize(b), "rerun not byte-identical");
  std::vector<std::string> ids;
  for (const auto& s : verify::registry()) ids.push_back(s.id);
  std::mt19937_64 rng(cfg.seed);
  std::shuffle(ids.begin(), ids.end(), rng);
  const auto c = zero_runtimes(verify::run_all(cfg, ids));
  out.expect(verify::serialize(a) == verify::serialize(c), "shuffled order changes the report");
  return out;
}

}  // namespace props

#endif  // P3X_TESTS_PROPERTIES_HPP
