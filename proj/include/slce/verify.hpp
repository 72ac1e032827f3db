#ifndef SLCE_VERIFY_HPP
#define SLCE_VERIFY_HPP

// The reproduction suite: one check per headline claim, shared by the
// `verify-paper` CLI command and the acceptance test binary. Every check
// is exact; doubles appear only where a bound itself is irrational.
//
// Checks 3, 4, 9 and 10 carve out q = 5: direct computation shows the
// SLCE set over GF(5) has multiplier group {1,3} (so -1 IS a multiplier
// there and the phi(p-1) decimation family collapses), an anomaly the
// small-q threshold arguments cannot reach. The anomaly is asserted
// exactly rather than suppressed.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slce/ads.hpp"
#include "slce/corr.hpp"
#include "slce/cyclo.hpp"
#include "slce/errors.hpp"
#include "slce/gf.hpp"
#include "slce/mult.hpp"
#include "slce/ntutil.hpp"
#include "slce/seq.hpp"

namespace slce::verify {

using std::int64_t;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int64_t max_q = 121;       // prime-power sweeps
  int64_t max_p = 500;       // main-theorem prime sweep
  int64_t family_max_q = 49; // family L / M sweeps
  int64_t f1_max_p = 100;    // F1 shift-inequivalence sweep
  int jobs = 1;              // worker count; never affects output bytes
  bool mutate = false;       // self-test hook: corrupt one SLCE bit
};

namespace detail {

inline std::string join(const std::vector<int64_t>& xs) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

// All nontrivial characters with chi(0)=0 on GF(q), grouped as (k, u).
inline std::vector<std::pair<int64_t, int64_t>> character_index(int64_t q) {
  std::vector<std::pair<int64_t, int64_t>> out;
  for (int64_t k : divisors(q - 1)) {
    if (k < 2) continue;
    for (int64_t u : units_mod(k)) out.emplace_back(k, u);
  }
  return out;
}

// Lemma (LCE lem): with Y = {x(1-x) : x nonzero} \ {0} and Z = Y^c in
// F_q*, the dlog image of -4*Z equals the SLCE set S.
inline bool lce_lemma_holds(const gf::FieldPtr& field) {
  int64_t v = field->q() - 1;
  std::vector<bool> in_y(v, false);
  for (int64_t e = 0; e < v; ++e) {
    auto x = field->alpha_pow(e);
    auto y = field->mul(x, field->sub(field->one(), x));
    if (!y.is_zero()) in_y[field->dlog(y).exponent] = true;
  }
  auto minus4 = field->neg(field->from_int(4));
  std::vector<int64_t> minus4z;
  for (int64_t e = 0; e < v; ++e) {
    if (in_y[e]) continue;
    auto w = field->mul(minus4, field->alpha_pow(e));
    minus4z.push_back(field->dlog(w).exponent);
  }
  std::sort(minus4z.begin(), minus4z.end());
  return minus4z == ads::slce_set(field).members;
}

// Deterministic map of a linear pair index to (i, j), i < j < n.
inline std::pair<int64_t, int64_t> decode_pair(int64_t idx, int64_t n) {
  int64_t i = 0, row = n - 1;
  while (idx >= row) {
    idx -= row;
    ++i;
    --row;
  }
  return {i, i + 1 + idx};
}

}  // namespace detail

// 1. Off-phase SLCE autocorrelation values lie in the predicted set for
// every odd prime power q <= max_q.
inline CriterionResult check_autocorr_values(const VerifyOptions& opts) {
  CriterionResult r{1, "autocorr-values", true, ""};
  int64_t count = 0;
  for (auto pp : odd_prime_powers_upto(opts.max_q)) {
    auto field = gf::make_field(pp.p, pp.d);
    auto s = seq::gen_slce(field);
    if (opts.mutate && pp.q == 9) s.terms[1] ^= 1;
    auto spec = corr::correlation(s, s);
    int64_t half = (pp.q - 1) / 2;
    std::set<int64_t> allowed = (half % 2 == 1) ? std::set<int64_t>{2, -2}
                                                : std::set<int64_t>{0, -4};
    for (int64_t tau = 1; tau < spec.period(); ++tau)
      if (!allowed.count(spec.int_values[tau])) {
        r.pass = false;
        r.detail = "q=" + std::to_string(pp.q) + " tau=" + std::to_string(tau) +
                   " value=" + std::to_string(spec.int_values[tau]);
        return r;
      }
    ++count;
  }
  r.detail = std::to_string(count) + " prime powers checked";
  return r;
}

// 2. Brute-force multiplier group of the SLCE set over GF(9) = {1,3,5,7}.
inline CriterionResult check_gf9_group(const VerifyOptions&) {
  CriterionResult r{2, "gf9-multiplier-group", false, ""};
  auto rep = ads::multiplier_group_brute(ads::slce_set(gf::make_field(3, 2)));
  r.pass = (rep.group_elements == std::vector<int64_t>{1, 3, 5, 7});
  r.detail = "group={" + detail::join(rep.group_elements) + "}";
  return r;
}

// 3. -1 is a multiplier exactly for q in {3,5,9}, by brute force
// everywhere; q=5 is degenerate (-1 = (q-1)/2 + 1 there) and is only
// reachable by direct search, not by the threshold argument.
inline CriterionResult check_minus_one(const VerifyOptions& opts) {
  CriterionResult r{3, "minus-one", true, ""};
  std::vector<int64_t> found;
  for (auto pp : odd_prime_powers_upto(opts.max_q)) {
    auto a = ads::slce_set(gf::make_field(pp.p, pp.d));
    bool brute = pp.q == 3 ? true  // v=2: -1 = 1
                           : ads::multiplier_witness(a, pp.q - 2).has_value();
    if (brute) found.push_back(pp.q);
    bool handler = mult::exceptional_minus_one(pp.q);
    if (handler != brute) {
      r.pass = false;
      r.detail = "handler disagrees with brute force at q=" + std::to_string(pp.q);
      return r;
    }
  }
  r.pass = (found == std::vector<int64_t>{3, 5, 9});
  r.detail = "q with -1 multiplier: {" + detail::join(found) +
             "} (q=5 settled by direct search)";
  return r;
}

// 4. (q-1)/2 +- 1 are multipliers exactly for q in {5,9} among q = 1 mod 4;
// at q=5 the + candidate coincides with -1, a multiplier there.
inline CriterionResult check_exceptional_half(const VerifyOptions& opts) {
  CriterionResult r{4, "exceptional-half", true, ""};
  std::vector<int64_t> found;
  for (auto pp : odd_prime_powers_upto(opts.max_q)) {
    if (pp.q % 4 != 1) continue;
    auto a = ads::slce_set(gf::make_field(pp.p, pp.d));
    int64_t half = (pp.q - 1) / 2;
    bool brute = ads::multiplier_witness(a, half - 1).has_value() ||
                 ads::multiplier_witness(a, half + 1).has_value();
    if (brute) found.push_back(pp.q);
    if (mult::exceptional_half(pp.q) != brute) {
      r.pass = false;
      r.detail = "handler disagrees with brute force at q=" + std::to_string(pp.q);
      return r;
    }
  }
  r.pass = (found == std::vector<int64_t>{5, 9});
  r.detail = "q with (q-1)/2+-1 multiplier: {" + detail::join(found) +
             "} (q=5 settled by direct search)";
  return r;
}

// 5. chi(S^c) = (1/2) chi(-1) (K(chi)+1) exactly, all nontrivial chi, all q.
inline CriterionResult check_char_identity(const VerifyOptions& opts) {
  CriterionResult r{5, "char-identity", true, ""};
  int64_t count = 0;
  for (auto pp : odd_prime_powers_upto(opts.max_q)) {
    auto field = gf::make_field(pp.p, pp.d);
    auto slce = ads::slce_set(field).members;
    for (auto [k, u] : detail::character_index(pp.q)) {
      auto chi = cyclo::make_character(field, k, u, 0);
      if (!cyclo::slce_character_identity(field, chi, slce)) {
        r.pass = false;
        r.detail = "q=" + std::to_string(pp.q) + " k=" + std::to_string(k) +
                   " u=" + std::to_string(u);
        return r;
      }
      ++count;
    }
  }
  r.detail = std::to_string(count) + " characters checked";
  return r;
}

// 6. K(chi) = -q (mod 2(1 - zeta_k)) for every such chi.
inline CriterionResult check_congruence(const VerifyOptions& opts) {
  CriterionResult r{6, "congruence", true, ""};
  int64_t count = 0;
  for (auto pp : odd_prime_powers_upto(opts.max_q)) {
    auto field = gf::make_field(pp.p, pp.d);
    for (auto [k, u] : detail::character_index(pp.q)) {
      auto chi = cyclo::make_character(field, k, u, 0);
      if (!cyclo::congruence_check(chi)) {
        r.pass = false;
        r.detail = "q=" + std::to_string(pp.q) + " k=" + std::to_string(k) +
                   " u=" + std::to_string(u);
        return r;
      }
      ++count;
    }
  }
  r.detail = std::to_string(count) + " characters checked";
  return r;
}

// 7. N(K(chi)) = p^{d * sum e_j} with the Stickelberger exponents, for
// every (p, d, k) with p^d <= max_q, k | p^d - 1, k > 2, d = ord_k(p)
// (the exponent formula's hypothesis). Also sum e_j = phi(k)/2.
inline CriterionResult check_stickelberger(const VerifyOptions& opts) {
  CriterionResult r{7, "stickelberger", true, ""};
  int64_t count = 0;
  for (auto pp : odd_prime_powers_upto(opts.max_q)) {
    gf::FieldPtr field;  // built lazily, many k share it
    for (int64_t k : divisors(pp.q - 1)) {
      if (k <= 2) continue;
      if (mult_order(mod_floor(pp.p, k), k) != pp.d) continue;
      auto st = cyclo::stickelberger_exponents(pp.p, pp.d, k);
      int64_t esum = 0;
      for (int64_t j : st.reps) esum += st.e.at(j);
      if (2 * esum != euler_phi(k)) {
        r.pass = false;
        r.detail = "exponent sum " + std::to_string(esum) +
                   " != phi(k)/2 at q=" + std::to_string(pp.q) +
                   " k=" + std::to_string(k);
        return r;
      }
      if (!field) field = gf::make_field(pp.p, pp.d);
      auto K = cyclo::jacobi_K(cyclo::make_character(field, k, 1, 0));
      cyclo::BigInt expect = 1;
      for (int64_t i = 0; i < pp.d * esum; ++i) expect *= pp.p;
      if (cyclo::norm(K) != expect) {
        r.pass = false;
        r.detail = "norm mismatch at q=" + std::to_string(pp.q) +
                   " k=" + std::to_string(k);
        return r;
      }
      ++count;
    }
  }
  r.detail = std::to_string(count) + " (p,d,k) triples checked";
  return r;
}

// 8. p is a strong multiplier: S^{(p)} = S for all odd prime powers.
inline CriterionResult check_strong_multiplier(const VerifyOptions& opts) {
  CriterionResult r{8, "strong-multiplier", true, ""};
  int64_t count = 0;
  for (auto pp : odd_prime_powers_upto(opts.max_q)) {
    auto a = ads::slce_set(gf::make_field(pp.p, pp.d));
    if (!(ads::decimate_set(a, pp.p % (pp.q - 1)) == a)) {
      r.pass = false;
      r.detail = "q=" + std::to_string(pp.q);
      return r;
    }
    ++count;
  }
  r.detail = std::to_string(count) + " prime powers checked";
  return r;
}

// 9. prove_trivial is trivial for every odd prime p <= max_p except the
// q=5 anomaly (group {1,3}); agrees with brute force everywhere; the
// p=61 survivors are exactly {11,19,41,49}, resolved by brute force.
inline CriterionResult check_main_theorem(const VerifyOptions& opts) {
  CriterionResult r{9, "main-theorem", true, ""};
  auto primes = odd_primes_upto(opts.max_p);

  auto one = [&](int64_t p) -> std::string {
    auto v = mult::prove_trivial(p);
    bool expect_trivial = (p != 5);
    if (v.trivial != expect_trivial)
      return "p=" + std::to_string(p) + " verdict " +
             (v.trivial ? "trivial" : "nontrivial") + " unexpected";
    if (p == 5 && v.group != std::vector<int64_t>{1, 3})
      return "p=5 group != {1,3}";
    auto rep = ads::multiplier_group_brute(ads::slce_set(gf::make_field(p, 1)));
    if (rep.group_elements != v.group)
      return "p=" + std::to_string(p) + " pipeline group != brute group";
    if (p == 61) {
      std::vector<int64_t> survivors;
      for (const auto& c : v.per_candidate)
        if (c.method == "brute_force_ruled_out") survivors.push_back(c.t);
      if (survivors != std::vector<int64_t>{11, 19, 41, 49})
        return "p=61 survivors {" + detail::join(survivors) + "} != {11,19,41,49}";
    }
    return "";
  };

  std::vector<std::string> fails(primes.size());
  int jobs = std::max(1, opts.jobs);
  std::vector<std::future<void>> workers;
  std::atomic<size_t> next{0};
  for (int w = 0; w < jobs; ++w)
    workers.push_back(std::async(std::launch::async, [&]() {
      for (size_t i = next.fetch_add(1); i < primes.size(); i = next.fetch_add(1))
        fails[i] = one(primes[i]);
    }));
  for (auto& w : workers) w.get();
  for (size_t i = 0; i < primes.size(); ++i)
    if (!fails[i].empty()) {
      r.pass = false;
      r.detail = fails[i];
      return r;
    }
  r.detail = std::to_string(primes.size()) +
             " primes checked; trivial everywhere except the q=5 anomaly "
             "(group {1,3}); p=61 survivors {11,19,41,49} brute-forced";
  return r;
}

// 10. Family sizes match the closed forms; pairwise cross-correlations
// respect 3 sqrt(q)+5 (family L) and 4 sqrt(q)+5 (family M) under a
// deterministic pair budget; F1 is pairwise shift-inequivalent for
// p <= f1_max_p, p != 5, and collapses at p=5 exactly as computed.
inline CriterionResult check_families(const VerifyOptions& opts) {
  CriterionResult r{10, "families", true, ""};
  constexpr int64_t kPairBudget = 4000;
  int64_t combos = 0, pairs_checked = 0;
  bool sampled = false;

  auto check_family = [&](const std::vector<seq::PeriodicSequence>& fam,
                          corr::BoundKind kind, int64_t q) -> std::string {
    int64_t n = static_cast<int64_t>(fam.size());
    int64_t total = n * (n - 1) / 2;
    double bound = corr::bound_value(kind, q);
    auto check_pair = [&](int64_t i, int64_t j) -> bool {
      auto spec = corr::correlation(fam[i], fam[j]);
      ++pairs_checked;
      return spec.max_offphase <= bound + 1e-9 &&
             std::abs(spec.values[0]) <= bound + 1e-9;
    };
    if (total <= kPairBudget) {
      for (int64_t i = 0; i < n; ++i)
        for (int64_t j = i + 1; j < n; ++j)
          if (!check_pair(i, j))
            return "bound violated q=" + std::to_string(q) + " pair (" +
                   std::to_string(i) + "," + std::to_string(j) + ")";
    } else {
      sampled = true;
      int64_t stride = total / kPairBudget + 1;
      for (int64_t idx = 0; idx < total; idx += stride) {
        auto [i, j] = detail::decode_pair(idx, n);
        if (!check_pair(i, j))
          return "bound violated q=" + std::to_string(q) + " pair (" +
                 std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
    return "";
  };

  for (auto pp : odd_prime_powers_upto(opts.family_max_q)) {
    auto field = gf::make_field(pp.p, pp.d);
    for (int64_t M : divisors(pp.q - 1)) {
      if (M < 2) continue;
      auto L = seq::build_family_L(field, M);
      if (static_cast<int64_t>(L.size()) != seq::family_L_size(pp.q, M)) {
        r.pass = false;
        r.detail = "family L size mismatch q=" + std::to_string(pp.q) +
                   " M=" + std::to_string(M);
        return r;
      }
      auto fm = seq::build_family_M(field, M);
      if (static_cast<int64_t>(fm.size()) != seq::family_M_size(pp.q, M)) {
        r.pass = false;
        r.detail = "family M size mismatch q=" + std::to_string(pp.q) +
                   " M=" + std::to_string(M);
        return r;
      }
      auto err = check_family(L, corr::BoundKind::FamilyL, pp.q);
      if (err.empty()) err = check_family(fm, corr::BoundKind::FamilyM, pp.q);
      if (!err.empty()) {
        r.pass = false;
        r.detail = err;
        return r;
      }
      ++combos;
    }
  }

  // F1 decimation family
  int64_t f1_primes = 0;
  for (int64_t p : odd_primes_upto(opts.f1_max_p)) {
    auto field = gf::make_field(p, 1);
    auto fam = seq::build_family_F1(field);
    if (static_cast<int64_t>(fam.size()) != euler_phi(p - 1)) {
      r.pass = false;
      r.detail = "F1 size != phi(p-1) at p=" + std::to_string(p);
      return r;
    }
    bool collision = false;
    for (size_t i = 0; i < fam.size() && !collision; ++i)
      for (size_t j = i + 1; j < fam.size() && !collision; ++j)
        if (seq::shift_equivalent(fam[i], fam[j])) collision = true;
    bool expect_collision = (p == 5);  // s[3] is a shift of s over GF(5)
    if (collision != expect_collision) {
      r.pass = false;
      r.detail = "F1 shift-equivalence at p=" + std::to_string(p) +
                 (collision ? " (unexpected collision)" : " (expected collapse missing)");
      return r;
    }
    ++f1_primes;
  }

  std::ostringstream os;
  os << combos << " (q,M) combos, " << pairs_checked << " pairs checked"
     << (sampled ? " (large families sampled deterministically)" : "") << "; "
     << f1_primes << " F1 primes (p=5 collapse asserted)";
  r.detail = os.str();
  return r;
}

// 11. Property suites: exact Fourier inversion on random sets; the LCE
// shift lemma; Galois equivariance of K; brute multiplier group vs the
// sequence-level shift-equivalence scan.
inline CriterionResult check_property_suites(const VerifyOptions& opts) {
  CriterionResult r{11, "property-suites", true, ""};

  std::mt19937 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    int64_t v = 2 + static_cast<int64_t>(rng() % 63);
    std::vector<int64_t> members;
    for (int64_t x = 0; x < v; ++x)
      if (rng() % 2) members.push_back(x);
    auto a = ads::ResidueSet::of(v, members);
    if (!ads::inversion_check(a)) {
      r.pass = false;
      r.detail = "inversion failed, trial " + std::to_string(trial) +
                 " v=" + std::to_string(v);
      return r;
    }
  }

  for (auto pp : odd_prime_powers_upto(opts.max_q)) {
    if (!detail::lce_lemma_holds(gf::make_field(pp.p, pp.d))) {
      r.pass = false;
      r.detail = "LCE shift lemma failed at q=" + std::to_string(pp.q);
      return r;
    }
  }

  for (auto pp : odd_prime_powers_upto(49)) {
    auto field = gf::make_field(pp.p, pp.d);
    for (int64_t k : divisors(pp.q - 1)) {
      if (k < 2) continue;
      auto chi = cyclo::make_character(field, k, 1, 0);
      auto K = cyclo::jacobi_K(chi);
      for (int64_t t : units_mod(k)) {
        if (!(K.galois(t) == cyclo::jacobi_K(chi.power(t)))) {
          r.pass = false;
          r.detail = "galois equivariance failed q=" + std::to_string(pp.q) +
                     " k=" + std::to_string(k) + " t=" + std::to_string(t);
          return r;
        }
      }
    }
  }

  for (auto pp : odd_prime_powers_upto(201)) {
    if (pp.q - 1 > 200) continue;
    auto field = gf::make_field(pp.p, pp.d);
    auto a = ads::slce_set(field);
    auto rep = ads::multiplier_group_brute(a);
    auto s = seq::gen_slce(field);
    std::vector<int64_t> by_seq;
    for (int64_t t : units_mod(pp.q - 1))
      if (seq::shift_equivalent(seq::decimate(s, t), s)) by_seq.push_back(t);
    if (by_seq != rep.group_elements) {
      r.pass = false;
      r.detail = "set/sequence multiplier mismatch at q=" + std::to_string(pp.q);
      return r;
    }
  }

  r.detail = "inversion (500 sets), LCE lemma, Galois equivariance, "
             "set/sequence agreement all exact";
  return r;
}

inline std::vector<CriterionResult> run_all(const VerifyOptions& opts,
                                            const std::vector<std::string>& sections = {}) {
  using Check = CriterionResult (*)(const VerifyOptions&);
  static const std::vector<std::pair<std::string, Check>> table = {
      {"autocorr-values", check_autocorr_values},
      {"gf9-multiplier-group", check_gf9_group},
      {"minus-one", check_minus_one},
      {"exceptional-half", check_exceptional_half},
      {"char-identity", check_char_identity},
      {"congruence", check_congruence},
      {"stickelberger", check_stickelberger},
      {"strong-multiplier", check_strong_multiplier},
      {"main-theorem", check_main_theorem},
      {"families", check_families},
      {"property-suites", check_property_suites},
  };
  std::vector<CriterionResult> out;
  for (const auto& [name, fn] : table) {
    if (!sections.empty() &&
        std::find(sections.begin(), sections.end(), name) == sections.end())
      continue;
    out.push_back(fn(opts));
  }
  return out;
}

}  // namespace slce::verify

#endif  // SLCE_VERIFY_HPP
