#ifndef P3X_EXACTLA_CERTIFY_HPP
#define P3X_EXACTLA_CERTIFY_HPP

#include <p3x/exactla/elimination.hpp>
#include <p3x/exactla/modular.hpp>
#include <p3x/exactla/sparse_matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace p3x::exactla {

struct RankIs {
  std::size_t k;
};
struct Injective {};
struct Surjective {};
/// ker(A) = span(vectors), with the vectors linearly independent.
struct KernelSpan {
  std::vector<SparseVector> vectors;
};

using Claim = std::variant<RankIs, Injective, Surjective, KernelSpan>;

struct CertifyOptions {
  std::size_t n_primes = 3;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes;  // used instead of random primes when nonempty
  bool exact = false;                 // skip the modular shortcut
};

enum class CertStatus { Valid, Invalid };

inline const char* to_string(CertStatus s) { return s == CertStatus::Valid ? "VALID" : "INVALID"; }

struct Certificate {
  CertStatus status = CertStatus::Invalid;
  bool certified = false;
  std::string method;  // "modular", "exact" or "exact-vector"
  std::size_t rank = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> modular_ranks;
  std::string evidence;
};

namespace detail {

struct ModularProbe {
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> ranks;
  std::size_t best = 0;

  /// All primes agree on `target`.
  bool agree_on(std::size_t target) const {
    return !ranks.empty() && std::all_of(ranks.begin(), ranks.end(), [&](std::size_t r) { return r == target; });
  }
};

inline ModularProbe probe(const SparseMatrix& m, const CertifyOptions& opt) {
  ModularProbe out;
  auto try_prime = [&](std::uint64_t p) {
    try {
      const std::size_t r = modular_rank(m, p);
      out.primes.push_back(p);
      out.ranks.push_back(r);
      out.best = std::max(out.best, r);
    } catch (const BadPrime&) {
    }
  };
  if (!opt.primes.empty()) {
    for (std::uint64_t p : opt.primes) try_prime(p);
    return out;
  }
  PrimeSource src(opt.seed);
  for (std::size_t tries = 0; out.primes.size() < opt.n_primes && tries < 64 * opt.n_primes; ++tries) {
    try_prime(src.next());
  }
  return out;
}

inline std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

inline std::string dims(const SparseMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace detail

/// Exact rank, via the reduced echelon form.
inline std::size_t exact_rank(const SparseMatrix& m) { return rref(m).rank(); }

/// Decides a claim about A. Modular ranks only ever bound the rational rank
/// from below, so they certify; when they do not, the claim is decided
/// exactly and `certified` is the true answer either way.
inline Certificate certify(const SparseMatrix& a, const Claim& claim, const CertifyOptions& opt = {}) {
  Certificate c;
  const std::size_t full = std::min(a.rows(), a.cols());

  auto rank_claim = [&](std::size_t target, bool target_is_bound) {
    if (!opt.exact && target_is_bound) {
      auto pr = detail::probe(a, opt);
      c.primes = pr.primes;
      c.modular_ranks = pr.ranks;
      if (pr.agree_on(target)) {
        c.certified = true;
        c.method = "modular";
        c.rank = target;
        c.evidence = detail::dims(a) + " modular ranks [" + detail::join(pr.ranks) + "] reach " +
                     std::to_string(target);
        return;
      }
    }
    c.rank = exact_rank(a);
    c.method = "exact";
    c.certified = c.rank == target;
    c.evidence = detail::dims(a) + " exact rank " + std::to_string(c.rank) + ", claimed " +
                 std::to_string(target);
  };

  if (const auto* r = std::get_if<RankIs>(&claim)) {
    rank_claim(r->k, r->k == full);
  } else if (std::holds_alternative<Injective>(claim)) {
    rank_claim(a.cols(), a.cols() <= a.rows());
  } else if (std::holds_alternative<Surjective>(claim)) {
    rank_claim(a.rows(), a.rows() <= a.cols());
  } else {
    const auto& vs = std::get<KernelSpan>(claim).vectors;
    c.method = "exact-vector";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].dim() != a.cols() || !a.apply(vs[i]).is_zero()) {
        c.evidence = detail::dims(a) + " vector " + std::to_string(i) + " is not in the kernel";
        return c;
      }
    }
    if (vs.size() > a.cols()) {
      c.evidence = "more vectors than columns";
      return c;
    }
    const SparseMatrix span = SparseMatrix::from_columns(a.cols(), vs);
    const std::size_t target = a.cols() - vs.size();
    bool independent = false;
    bool rank_ok = false;
    if (!opt.exact) {
      auto ps = detail::probe(span, opt);
      independent = ps.agree_on(vs.size());
      auto pa = detail::probe(a, opt);
      c.primes = pa.primes;
      c.modular_ranks = pa.ranks;
      rank_ok = pa.agree_on(target);
    }
    if (!independent) independent = exact_rank(span) == vs.size();
    if (!independent) {
      c.evidence = detail::dims(a) + " kernel vectors are linearly dependent";
      return c;
    }
    if (rank_ok) {
      c.rank = target;
      c.method = "exact-vector+modular";
    } else {
      c.rank = exact_rank(a);
      rank_ok = c.rank == target;
      c.method = "exact-vector+exact";
    }
    c.certified = rank_ok;
    c.evidence = detail::dims(a) + " A*v = 0 for " + std::to_string(vs.size()) +
                 " independent vectors, rank " + std::to_string(c.rank) +
                 (rank_ok ? " = " : " != ") + std::to_string(a.cols()) + " - " +
                 std::to_string(vs.size());
  }
  c.status = c.certified ? CertStatus::Valid : CertStatus::Invalid;
  return c;
}

}  // namespace p3x::exactla

#endif  // P3X_EXACTLA_CERTIFY_HPP
