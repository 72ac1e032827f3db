// Correlation spectra, SLCE autocorrelation value sets, the
// cross-correlation bound checks, and the Weil character-sum bound.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "slce/corr.hpp"

using namespace slce;
using cyclo::CycInt;

TEST_CASE("SLCE autocorrelation over GF(5) is [4, 0, -4, 0]") {
  auto f = gf::make_field(5, 1);
  auto s = seq::gen_slce(f);
  auto spec = corr::correlation(s, s);
  REQUIRE(spec.int_values == std::vector<int64_t>{4, 0, -4, 0});
  REQUIRE(spec.is_auto);
  REQUIRE(spec.max_offphase == 4.0);
}

TEST_CASE("in-phase autocorrelation is the period") {
  for (auto pp : odd_prime_powers_upto(27)) {
    auto f = gf::make_field(pp.p, pp.d);
    auto s = seq::gen_slce(f);
    auto spec = corr::correlation(s, s);
    REQUIRE(spec.int_values[0] == pp.q - 1);
  }
}

TEST_CASE("m-sequence over GF(8) has all off-phase values -1") {
  auto f = gf::make_field(2, 3);
  auto m = seq::gen_mseq(f, f->one());
  auto spec = corr::correlation(m, m);
  for (int64_t tau = 1; tau < spec.period(); ++tau)
    REQUIRE(spec.int_values[tau] == -1);
}

TEST_CASE("SLCE off-phase value sets follow the parity of (q-1)/2") {
  auto f5 = gf::make_field(5, 1);
  REQUIRE(corr::slce_autocorrelation_value_set(f5) == std::set<int64_t>{0, -4});

  auto f7 = gf::make_field(7, 1);
  auto v7 = corr::slce_autocorrelation_value_set(f7);
  for (int64_t x : v7) REQUIRE((x == 2 || x == -2));

  auto f9 = gf::make_field(3, 2);
  auto v9 = corr::slce_autocorrelation_value_set(f9);
  for (int64_t x : v9) REQUIRE((x == 0 || x == -4));
}

TEST_CASE("for M=2 every correlation value has the parity of v") {
  std::mt19937 rng(3);
  for (int64_t v = 2; v <= 40; ++v) {
    seq::PeriodicSequence a, b;
    a.alphabet = b.alphabet = 2;
    a.terms.resize(v);
    b.terms.resize(v);
    for (auto& t : a.terms) t = static_cast<int>(rng() % 2);
    for (auto& t : b.terms) t = static_cast<int>(rng() % 2);
    auto spec = corr::correlation(a, b);
    for (int64_t c : spec.int_values) REQUIRE(mod_floor(c, 2) == mod_floor(v, 2));
  }
}

TEST_CASE("constant-multiple bound sqrt(q)+3 at q = 25") {
  auto f = gf::make_field(5, 2);
  auto chk = corr::check_bound_constant_multiple(f, 4, 1, 3, /*shift_b=*/2);
  REQUIRE(chk.bound_value == Catch::Approx(8.0));
  REQUIRE(chk.holds);

  // same-sequence shifted pair: the aligning tau is excluded
  auto chk2 = corr::check_bound_constant_multiple(f, 2, 1, 1, /*shift_b=*/3);
  REQUIRE(chk2.holds);
  REQUIRE_THROWS_AS(corr::check_bound_constant_multiple(f, 2, 2, 1, 0),
                    HypothesisViolated);
}

TEST_CASE("family-M bound 4 sqrt(q)+5 for s against its reversal, q = 13") {
  auto f = gf::make_field(13, 1);
  auto s = seq::gen_slce(f);
  auto b = seq::decimate(s, -1);
  auto chk = corr::check_bound_pair(s, b, corr::BoundKind::FamilyM, 13);
  REQUIRE(chk.bound_value == Catch::Approx(4 * std::sqrt(13.0) + 5));
  REQUIRE(chk.max_observed == 8.0);
  REQUIRE(chk.holds);
}

TEST_CASE("decimated-pair bound (d+d'-1) sqrt(q)+3") {
  auto f = gf::make_field(13, 1);
  auto chk = corr::check_bound_decimated(f, 2, 1, 1, 1, 5);
  REQUIRE(chk.holds);
  // p | d is rejected (GF(27): decimation 3 is a unit mod 26 but p = 3 divides it)
  REQUIRE_THROWS_AS(corr::check_bound_decimated(gf::make_field(3, 3), 2, 1, 1, 1, 3),
                    HypothesisViolated);
}

TEST_CASE("weak bound for s against s[(q-1)/2 -+ 1], q = 13") {
  auto f = gf::make_field(13, 1);
  auto lo = corr::check_bound_weak_half(f, -1);  // t = 5
  auto hi = corr::check_bound_weak_half(f, +1);  // t = 7
  double wb = std::max(3 * std::sqrt(13.0) + 6, 0.5 * (13 + 3 * std::sqrt(13.0) + 7));
  REQUIRE(lo.bound_value == Catch::Approx(wb));
  REQUIRE(lo.holds);
  REQUIRE(hi.holds);
  REQUIRE_THROWS_AS(corr::check_bound_weak_half(gf::make_field(7, 1), 1),
                    HypothesisViolated);
}

TEST_CASE("Parseval: autocorrelation equals inverse DFT of |DFT|^2, exactly") {
  std::mt19937 rng(21);
  for (int64_t v : {3, 8, 15, 24, 40, 64}) {
    seq::PeriodicSequence a;
    a.alphabet = 2;
    a.terms.resize(v);
    for (auto& t : a.terms) t = static_cast<int>(rng() % 2);
    auto spec = corr::correlation(a, a);

    // F(u) = sum_t (-1)^{a_t} zeta_v^{-ut}, as exact CycInts of order v
    std::vector<CycInt> F;
    for (int64_t u = 0; u < v; ++u) {
      CycInt acc(v);
      for (int64_t t = 0; t < v; ++t)
        acc.coeff(mod_floor(-u * t, v)) += (a.terms[t] == 0 ? 1 : -1);
      F.push_back(std::move(acc));
    }
    for (int64_t tau = 0; tau < v; ++tau) {
      CycInt rhs(v);
      for (int64_t u = 0; u < v; ++u)
        rhs += F[u] * F[u].conjugate() * CycInt::root(v, u * tau);
      REQUIRE(rhs == CycInt::integer(cyclo::BigInt(v) * spec.int_values[tau], v));
    }
  }
}

TEST_CASE("shift covariance: C_{a, shift(b,l)}(tau) = C_{a,b}(tau + l)") {
  std::mt19937 rng(31);
  for (int64_t v : {2, 7, 12, 25, 40}) {
    seq::PeriodicSequence a, b;
    a.alphabet = b.alphabet = 4;
    a.terms.resize(v);
    b.terms.resize(v);
    for (auto& t : a.terms) t = static_cast<int>(rng() % 4);
    for (auto& t : b.terms) t = static_cast<int>(rng() % 4);
    auto base = corr::correlation(a, b);
    for (int64_t ell = 0; ell < v; ++ell) {
      auto shifted = corr::correlation(a, seq::shift(b, ell));
      for (int64_t tau = 0; tau < v; ++tau)
        REQUIRE(shifted.exact_values[tau] == base.exact_values[(tau + ell) % v]);
    }
  }
}

TEST_CASE("Weil bound: single linear polynomial, quadratic character, q = 9") {
  auto f = gf::make_field(3, 2);
  auto psi = cyclo::make_character(f, 2, 1, 1);  // psi(0) = 1
  auto x = corr::Poly::make(f, {0, 1});
  auto chk = corr::weil_bound_check(f, {x}, {psi});
  REQUIRE(chk.lhs == Catch::Approx(1.0));
  REQUIRE(chk.rhs == Catch::Approx(1.0));
  REQUIRE(chk.holds);
}

TEST_CASE("Weil bound: f = x(x-1) over GF(13)") {
  auto f = gf::make_field(13, 1);
  auto psi = cyclo::make_character(f, 2, 1, 1);
  auto poly = corr::Poly::make(f, {0, 12, 1});  // x^2 - x
  auto chk = corr::weil_bound_check(f, {poly}, {psi});
  REQUIRE(chk.rhs == Catch::Approx(std::sqrt(13.0) + 2));
  REQUIRE(chk.holds);
}

TEST_CASE("Weil bound rejects a perfect-square input for a quadratic character") {
  auto f = gf::make_field(13, 1);
  auto psi = cyclo::make_character(f, 2, 1, 1);
  auto sq = corr::Poly::make(f, {0, 0, 1});  // x^2 = (x)^2
  REQUIRE_THROWS_AS(corr::weil_bound_check(f, {sq}, {psi}), HypothesisViolated);
  // zero_value 0 is also rejected: the theorem needs psi(0) = 1
  auto psi0 = cyclo::make_character(f, 2, 1, 0);
  auto x = corr::Poly::make(f, {0, 1});
  REQUIRE_THROWS_AS(corr::weil_bound_check(f, {x}, {psi0}), HypothesisViolated);
}

TEST_CASE("correlation error cases") {
  auto f5 = gf::make_field(5, 1);
  auto f13 = gf::make_field(13, 1);
  auto a = seq::gen_slce(f5);
  auto b = seq::gen_slce(f13);
  REQUIRE_THROWS_AS(corr::correlation(a, b), PeriodMismatch);
  auto c = seq::gen_sidelnikov(f5, 4);
  REQUIRE_THROWS_AS(corr::correlation(a, c), AlphabetMismatch);
}
