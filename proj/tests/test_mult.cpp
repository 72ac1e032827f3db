// The multiplier-theory pipeline: S0/S1, the necessary condition, the
// stabilizer test, the exceptional handlers, the pure-Jacobi diagnostic,
// and prove_trivial.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <complex>

#include "slce/mult.hpp"

using namespace slce;

TEST_CASE("S0 for small primes and the d=1 closed form") {
  auto s13 = mult::compute_S0(13, 1);
  REQUIRE(s13.members == std::vector<int64_t>{1, 5});

  auto s5 = mult::compute_S0(5, 1);
  REQUIRE(s5.members == std::vector<int64_t>{1});

  // compute_S0 asserts the closed form internally for d = 1; exercising
  // it over a range makes the identity an explicit test
  for (int64_t p : odd_primes_upto(200)) REQUIRE_NOTHROW(mult::compute_S0(p, 1));
}

TEST_CASE("necessary condition: identical, disjoint, violated") {
  REQUIRE(mult::nec_condition(13, 1, 5) == mult::NecStatus::Identical);
  REQUIRE(mult::nec_condition(13, 1, 7) == mult::NecStatus::Disjoint);
  REQUIRE(mult::nec_condition(29, 1, 3) == mult::NecStatus::Violated);
  REQUIRE_THROWS_AS(mult::nec_condition(13, 1, 4), NotUnit);
}

TEST_CASE("the identical/disjoint verdict does not depend on the choice of T") {
  // recompute nec_condition with the largest-member representative set
  // instead of the canonical smallest-member one
  for (int64_t p : {13, 29, 37, 61}) {
    int64_t k = p - 1;
    auto largest_rep = [&](int64_t x) {
      int64_t best = mod_floor(x, k), cur = best;
      for (;;) {
        cur = (cur * (p % k)) % k;
        if (cur == mod_floor(x, k)) break;
        best = std::max(best, cur);
      }
      return best;
    };
    auto s0 = mult::compute_S0(p, 1);
    for (int64_t t : units_mod(k)) {
      auto status = mult::nec_condition(p, 1, t);
      // rebuild members and t-image under the alternative representatives
      std::vector<int64_t> alt, alt_t;
      for (int64_t j : s0.members) {
        alt.push_back(largest_rep(j));
        alt_t.push_back(largest_rep(t * j % k));
      }
      std::sort(alt.begin(), alt.end());
      std::sort(alt_t.begin(), alt_t.end());
      alt_t.erase(std::unique(alt_t.begin(), alt_t.end()), alt_t.end());
      mult::NecStatus alt_status;
      if (alt_t == alt) {
        alt_status = mult::NecStatus::Identical;
      } else {
        bool disjoint = true;
        for (int64_t j : alt_t)
          if (std::binary_search(alt.begin(), alt.end(), j)) disjoint = false;
        alt_status = disjoint ? mult::NecStatus::Disjoint : mult::NecStatus::Violated;
      }
      REQUIRE(status == alt_status);
    }
  }
}

TEST_CASE("S1 for small primes") {
  REQUIRE(mult::compute_S1(13).members == std::vector<int64_t>{1, 5});
  REQUIRE(mult::compute_S1(5).members == std::vector<int64_t>{1});
  REQUIRE(mult::compute_S1(7).members == std::vector<int64_t>{1});
  REQUIRE_THROWS_AS(mult::compute_S1(9), NotPrime);
}

TEST_CASE("stabilizer test: survivors at p=61, a ruled-out candidate, exclusions") {
  REQUIRE_FALSE(mult::akiyama_test(61, 11).ruled_out);
  REQUIRE_FALSE(mult::akiyama_test(61, 19).ruled_out);
  REQUIRE(mult::akiyama_test(37, 5).ruled_out);

  // reserved candidates go to the exceptional handlers
  REQUIRE_THROWS_AS(mult::akiyama_test(13, 1), ExcludedCandidate);
  REQUIRE_THROWS_AS(mult::akiyama_test(13, 11), ExcludedCandidate);  // -1
  REQUIRE_THROWS_AS(mult::akiyama_test(13, 5), ExcludedCandidate);   // (p-1)/2 - 1
  REQUIRE_THROWS_AS(mult::akiyama_test(13, 7), ExcludedCandidate);   // -((p-1)/2 - 1)
  REQUIRE_THROWS_AS(mult::akiyama_test(13, 4), NotUnit);
}

TEST_CASE("stabilizer and necessary condition are sound against brute force") {
  for (int64_t p : odd_primes_upto(200)) {
    auto A = ads::slce_set(gf::make_field(p, 1));
    auto rep = ads::multiplier_group_brute(A);
    int64_t v = p - 1;
    int64_t half_minus = mod_floor(v / 2 - 1, v);
    for (int64_t t : units_mod(v)) {
      if (mult::nec_condition(p, 1, t) == mult::NecStatus::Violated)
        REQUIRE_FALSE(std::binary_search(rep.group_elements.begin(),
                                         rep.group_elements.end(), t));
      if (t == 1 || t == v - 1 || t == half_minus || t == mod_floor(-half_minus, v))
        continue;
      if (mult::akiyama_test(p, t).ruled_out)
        REQUIRE_FALSE(std::binary_search(rep.group_elements.begin(),
                                         rep.group_elements.end(), t));
    }
  }
}

TEST_CASE("blind spots of the condition, p = 1 mod 4") {
  for (int64_t p : odd_primes_upto(200)) {
    if (p % 4 != 1) continue;
    REQUIRE(mult::nec_condition(p, 1, -1) != mult::NecStatus::Violated);
    auto s1 = mult::compute_S1(p);
    REQUIRE(ads::decimate_set(s1, (p - 1) / 2 - 1) == s1);
  }
}

TEST_CASE("minus one is a multiplier exactly for q in {3, 5, 9}") {
  REQUIRE(mult::exceptional_minus_one(3));
  REQUIRE(mult::exceptional_minus_one(5));  // degenerate case: v = 4, -1 = 3 works
  REQUIRE(mult::exceptional_minus_one(9));
  REQUIRE_FALSE(mult::exceptional_minus_one(13));
  REQUIRE_FALSE(mult::exceptional_minus_one(27));
  for (auto pp : odd_prime_powers_upto(121))
    REQUIRE(mult::exceptional_minus_one(pp.q) == (pp.q == 3 || pp.q == 5 || pp.q == 9));
  REQUIRE_THROWS_AS(mult::exceptional_minus_one(4), HypothesisViolated);
}

TEST_CASE("(q-1)/2 +- 1 are multipliers exactly for q in {5, 9}") {
  REQUIRE(mult::exceptional_half(5));
  REQUIRE(mult::exceptional_half(9));
  REQUIRE_FALSE(mult::exceptional_half(13));
  REQUIRE_FALSE(mult::exceptional_half(25));
  for (auto pp : odd_prime_powers_upto(121)) {
    if (pp.q % 4 != 1) continue;
    REQUIRE(mult::exceptional_half(pp.q) == (pp.q == 5 || pp.q == 9));
  }
  REQUIRE_THROWS_AS(mult::exceptional_half(7), HypothesisViolated);
}

TEST_CASE("pure-Jacobi condition") {
  // k = 2: R1 = {1}, condition is p = -1 mod 2, true for every odd p
  for (int64_t p : {3, 5, 7, 11, 13}) REQUIRE(mult::pure_jacobi_condition(p, 2));

  // p=3, k=8: R1 = {1,3}; a=1 needs 3 = -1 (mod 8), a=3 needs 3 = -3 = 5;
  // both fail, so the condition is false
  REQUIRE_FALSE(mult::pure_jacobi_condition(3, 8));
  REQUIRE_THROWS_AS(mult::pure_jacobi_condition(3, 7), NotDivisor);

  // when the condition holds, K(chi) is pure: some power m <= 2k of the
  // normalized K is real
  for (auto [p, k] : std::vector<std::pair<int64_t, int64_t>>{{3, 4}, {5, 4}, {7, 4}}) {
    if (!mult::pure_jacobi_condition(p, k)) continue;
    auto f = gf::make_field(p, 2);
    auto K = cyclo::jacobi_K(cyclo::make_character(f, k, 1, 0)).embed();
    bool some_real = false;
    std::complex<double> acc = 1;
    for (int64_t m = 1; m <= 2 * k; ++m) {
      acc *= K;
      if (std::abs(acc.imag()) < 1e-6 * std::abs(acc)) some_real = true;
    }
    REQUIRE(some_real);
  }
}

TEST_CASE("prove_trivial verdicts") {
  auto v61 = mult::prove_trivial(61);
  REQUIRE(v61.trivial);
  std::vector<int64_t> brute_survivors;
  for (const auto& c : v61.per_candidate) {
    if (c.method == "brute_force_ruled_out") brute_survivors.push_back(c.t);
    REQUIRE((c.method == "is_multiplier" || !c.witness.has_value()));
  }
  REQUIRE(brute_survivors == std::vector<int64_t>{11, 19, 41, 49});  // +-11, +-19 mod 60

  REQUIRE(mult::prove_trivial(13).trivial);
  auto v3 = mult::prove_trivial(3);
  REQUIRE(v3.trivial);
  REQUIRE(v3.group == std::vector<int64_t>{1});

  // p = 5 is the lone nontrivial case: -1 = 3 is a multiplier of {0,1} mod 4
  auto v5 = mult::prove_trivial(5);
  REQUIRE_FALSE(v5.trivial);
  REQUIRE(v5.group == std::vector<int64_t>{1, 3});

  REQUIRE_THROWS_AS(mult::prove_trivial(9), NotPrime);
  REQUIRE_THROWS_AS(mult::prove_trivial(10007), TooLarge);
}

TEST_CASE("prove_trivial covers every unit exactly once and matches brute force") {
  for (int64_t p : odd_primes_upto(100)) {
    auto verdict = mult::prove_trivial(p);
    auto units = units_mod(p - 1);
    REQUIRE(verdict.per_candidate.size() == units.size());
    std::vector<int64_t> seen;
    for (const auto& c : verdict.per_candidate) seen.push_back(c.t);
    std::sort(seen.begin(), seen.end());
    REQUIRE(seen == units);

    auto rep = ads::multiplier_group_brute(ads::slce_set(gf::make_field(p, 1)));
    REQUIRE(verdict.group == rep.group_elements);
    REQUIRE(verdict.trivial == (rep.group_elements == std::vector<int64_t>{1}));
  }
}
