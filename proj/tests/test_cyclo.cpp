// Exact cyclotomic-integer arithmetic, Galois action, norms, characters,
// Jacobi sums, the congruence and character identities, and the
// Stickelberger exponents.

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "slce/ads.hpp"
#include "slce/cyclo.hpp"

using namespace slce;
using cyclo::BigInt;
using cyclo::CycInt;

TEST_CASE("CycInt ring basics") {
  // zeta_4^2 = -1
  auto z4sq = CycInt::root(4, 1) * CycInt::root(4, 1);
  REQUIRE(z4sq == CycInt::integer(-1, 4));
  REQUIRE(z4sq.canonical() == std::vector<BigInt>{-1, 0});

  // (1 - zeta_6)(1 - zeta_6^5) = 1
  auto one6 = CycInt::integer(1, 6);
  auto prod = (one6 - CycInt::root(6, 1)) * (one6 - CycInt::root(6, 5));
  REQUIRE(prod == CycInt::integer(1, 6));

  // mixed orders lift to the lcm
  auto mixed = CycInt::root(2, 1) * CycInt::root(3, 1);
  REQUIRE(mixed.order() == 6);
  REQUIRE(mixed == CycInt::root(6, 5));  // -zeta_3 = zeta_6^5
}

TEST_CASE("Galois action: identity, conjugation, group law") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    CycInt a(16);
    for (int64_t i = 0; i < 16; ++i) a.coeff(i) = int64_t(rng() % 11) - 5;
    REQUIRE(a.galois(1) == a);
    REQUIRE(a.galois(3).galois(5) == a.galois(15));
    // sigma_{n-1} is complex conjugation under the principal embedding
    auto c = a.galois(15).embed();
    auto e = std::conj(a.embed());
    REQUIRE(std::abs(c - e) < 1e-6);
  }
  CycInt b(8);
  b.coeff(1) = 1;
  REQUIRE_THROWS_AS(b.galois(2), NotUnit);
}

TEST_CASE("norms of 1 - zeta") {
  auto one4 = CycInt::integer(1, 4);
  REQUIRE(cyclo::norm(one4 - CycInt::root(4, 1)) == 2);

  auto one6 = CycInt::integer(1, 6);
  REQUIRE(cyclo::norm(one6 - CycInt::root(6, 1)) == 1);

  // inside Q(zeta_12) the same element has norm 2^{phi(12)/phi(4)} = 4
  auto lifted = (one4 - CycInt::root(4, 1)).lifted(12);
  REQUIRE(cyclo::norm(lifted) == 4);
}

TEST_CASE("norm is multiplicative") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int64_t n = 2 + rng() % 23;  // n in [2, 24]
    CycInt a(n), b(n);
    for (int64_t i = 0; i < n; ++i) {
      a.coeff(i) = int64_t(rng() % 7) - 3;
      b.coeff(i) = int64_t(rng() % 7) - 3;
    }
    REQUIRE(cyclo::norm(a * b) == cyclo::norm(a) * cyclo::norm(b));
  }
}

TEST_CASE("relative norm to a subfield") {
  // N_{Q(zeta_12)/Q(zeta_4)}(1 - zeta_12) lies in Z[zeta_4]; its absolute
  // norm over the subfield equals the absolute norm from the top field.
  auto x = CycInt::integer(1, 12) - CycInt::root(12, 1);
  auto rel = cyclo::norm_to_subfield(x, 4);
  REQUIRE(rel.order() == 4);
  REQUIRE(cyclo::norm(rel) == cyclo::norm(x));
  REQUIRE_THROWS_AS(cyclo::norm_to_subfield(x, 5), NotDivisor);
}

TEST_CASE("exact division") {
  auto a = CycInt::integer(6, 4) + CycInt::integer(2, 4) * CycInt::root(4, 1);
  auto b = CycInt::integer(2, 4) * (CycInt::integer(1, 4) - CycInt::root(4, 1));
  auto q = cyclo::exact_divide(a, b);  // (6+2i)/(2(1-i)) = 1+2i
  REQUIRE(q.has_value());
  REQUIRE(*q == CycInt::integer(1, 4) + CycInt::integer(2, 4) * CycInt::root(4, 1));

  auto bad = cyclo::exact_divide(CycInt::integer(1, 4), CycInt::integer(2, 4));
  REQUIRE_FALSE(bad.has_value());
  REQUIRE_THROWS_AS(cyclo::exact_divide(a, CycInt(4)), DivisionByZero);
}

TEST_CASE("characters on GF(5)") {
  auto f = gf::make_field(5, 1);
  auto quad = cyclo::make_character(f, 2, 1, 0);
  REQUIRE(quad.eval(f->from_int(4)) == CycInt::integer(1, 2));  // dlog(4)=2, even
  REQUIRE(quad.eval(f->one()) == CycInt::integer(1, 2));
  REQUIRE(quad.eval(f->zero()) == CycInt::integer(0, 2));

  auto chi4 = cyclo::make_character(f, 4, 1, 0);
  REQUIRE(chi4.eval(f->from_int(2)) == CycInt::root(4, 1));
  REQUIRE(chi4.eval(f->from_int(3)) == CycInt::root(4, 3));  // dlog(3)=3

  REQUIRE_THROWS_AS(cyclo::make_character(f, 3, 1, 0), NotDivisor);
  REQUIRE_THROWS_AS(cyclo::make_character(f, 4, 2, 0), NotUnit);
}

TEST_CASE("Jacobi sums K(chi) on GF(5)") {
  auto f = gf::make_field(5, 1);
  auto quad = cyclo::make_character(f, 2, 1, 0);
  REQUIRE(cyclo::jacobi_K(quad) == CycInt::integer(-1, 2));

  auto chi4 = cyclo::make_character(f, 4, 1, 0);
  auto K = cyclo::jacobi_K(chi4);
  auto expect = CycInt::integer(1, 4) + CycInt::integer(2, 4) * CycInt::root(4, 1);
  REQUIRE(K == expect);
  REQUIRE(cyclo::norm(K) == 5);

  auto triv = cyclo::make_character(f, 1, 1, 0);
  REQUIRE_THROWS_AS(cyclo::jacobi_K(triv), TrivialCharacter);
  auto z1 = cyclo::make_character(f, 2, 1, 1);
  REQUIRE_THROWS_AS(cyclo::jacobi_K(z1), HypothesisViolated);
}

TEST_CASE("|K(chi)|^2 = q when chi and chi^2 are nontrivial") {
  for (auto pp : odd_prime_powers_upto(49)) {
    auto f = gf::make_field(pp.p, pp.d);
    for (int64_t k : divisors(pp.q - 1)) {
      if (k <= 2) continue;  // need chi^2 nontrivial
      auto chi = cyclo::make_character(f, k, 1, 0);
      auto K = cyclo::jacobi_K(chi);
      double mag2 = std::norm(K.embed());
      REQUIRE(std::abs(mag2 - double(pp.q)) < 1e-6 * pp.q);
    }
  }
}

TEST_CASE("congruence K(chi) = -q mod 2(1 - zeta_k)") {
  auto f5 = gf::make_field(5, 1);
  REQUIRE(cyclo::congruence_check(cyclo::make_character(f5, 2, 1, 0)));
  REQUIRE(cyclo::congruence_check(cyclo::make_character(f5, 4, 1, 0)));
  for (auto pp : odd_prime_powers_upto(25)) {
    auto f = gf::make_field(pp.p, pp.d);
    for (int64_t k : divisors(pp.q - 1)) {
      if (k < 2) continue;
      for (int64_t u : units_mod(k))
        REQUIRE(cyclo::congruence_check(cyclo::make_character(f, k, u, 0)));
    }
  }
}

TEST_CASE("Stickelberger exponents") {
  auto st = cyclo::stickelberger_exponents(5, 1, 4);
  REQUIRE(st.reps == std::vector<int64_t>{1, 3});
  REQUIRE(st.e.at(1) == 1);
  REQUIRE(st.e.at(3) == 0);

  auto st38 = cyclo::stickelberger_exponents(3, 2, 8);
  REQUIRE(st38.reps == std::vector<int64_t>{1, 5});
  for (int64_t j : st38.reps) {
    REQUIRE(st38.e.at(j) >= 0);
    REQUIRE(st38.e.at(j) <= 2);
  }

  REQUIRE_THROWS_AS(cyclo::stickelberger_exponents(3, 1, 8), WrongOrder);
  REQUIRE_THROWS_AS(cyclo::stickelberger_exponents(3, 1, 9), NotDivisor);
}

TEST_CASE("exponent sums match the norm of K(chi)") {
  // sum_j e_j * d = log_p N(K(chi)) for chi of order k on GF(p^d)
  for (auto pp : odd_prime_powers_upto(49)) {
    for (int64_t k : divisors(pp.q - 1)) {
      if (k <= 2) continue;
      if (mult_order(mod_floor(pp.p, k), k) != pp.d) continue;
      auto st = cyclo::stickelberger_exponents(pp.p, pp.d, k);
      int64_t esum = 0;
      for (const auto& [j, e] : st.e) esum += e;
      auto f = gf::make_field(pp.p, pp.d);
      auto K = cyclo::jacobi_K(cyclo::make_character(f, k, 1, 0));
      BigInt expect = 1;
      for (int64_t i = 0; i < esum * pp.d; ++i) expect *= pp.p;
      REQUIRE(cyclo::norm(K) == expect);
    }
  }
}

TEST_CASE("SLCE character identity chi(S^c) = chi(-1)(K+1)/2") {
  auto f5 = gf::make_field(5, 1);
  auto s5 = ads::slce_set(f5);
  auto quad = cyclo::make_character(f5, 2, 1, 0);
  REQUIRE(cyclo::slce_character_identity(f5, quad, s5.members));

  auto f9 = gf::make_field(3, 2);
  auto s9 = ads::slce_set(f9);
  for (int64_t k : divisors(int64_t(8))) {
    if (k < 2) continue;
    for (int64_t u : units_mod(k))
      REQUIRE(cyclo::slce_character_identity(f9, cyclo::make_character(f9, k, u, 0),
                                             s9.members));
  }
  auto triv = cyclo::make_character(f5, 1, 1, 0);
  REQUIRE_THROWS_AS(cyclo::slce_character_identity(f5, triv, s5.members),
                    TrivialCharacter);
}

TEST_CASE("x(1-x) represents each nonzero value 0 or 2 times, except 1/4 once") {
  for (auto pp : odd_prime_powers_upto(49)) {
    auto f = gf::make_field(pp.p, pp.d);
    std::map<int64_t, int> counts;
    for (int64_t code = 1; code < pp.q; ++code) {
      gf::FieldElement x{f.get(), code};
      auto y = f->mul(x, f->sub(f->one(), x));
      if (!y.is_zero()) ++counts[y.code];
    }
    auto quarter = f->inv(f->from_int(4));
    for (int64_t code = 1; code < pp.q; ++code) {
      int c = counts.count(code) ? counts.at(code) : 0;
      if (code == quarter.code)
        REQUIRE(c == 1);
      else
        REQUIRE((c == 0 || c == 2));
    }
  }
}
