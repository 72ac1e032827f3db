// JSON/CSV serialization round trips for every artifact the toolkit emits.

#include <catch2/catch_amalgamated.hpp>

#include "slce/slce.hpp"

using namespace slce;
using json = nlohmann::json;

TEST_CASE("field descriptor round trip") {
  auto f = gf::make_field(3, 2);
  auto j = io::field_to_json(f);
  REQUIRE(j["p"] == 3);
  REQUIRE(j["d"] == 2);
  REQUIRE(j["modulus"] == json::array({1, 0, 1}));
  REQUIRE(j["alpha"] == json::array({1, 1}));
  auto g = io::field_from_json(j);
  REQUIRE(g->same_field(*f));

  // corrupted descriptors are rejected on load
  auto bad = j;
  bad["modulus"] = json::array({4, 0, 1});  // reducible over GF(5)? here GF(3): x^2+1+3
  bad["p"] = 5;
  bad["alpha"] = json::array({0, 1});
  REQUIRE_THROWS_AS(io::field_from_json(bad), Error);
}

TEST_CASE("sequence JSON and CSV round trips") {
  auto f = gf::make_field(5, 1);
  auto s = seq::gen_slce(f);
  auto j = io::sequence_to_json(s, f);
  REQUIRE(j["M"] == 2);
  REQUIRE(j["terms"] == json::array({1, 1, 0, 0}));
  REQUIRE(j["provenance"]["kind"] == "slce");
  auto back = io::sequence_from_json(j);
  REQUIRE(back.terms == s.terms);
  REQUIRE(back.alphabet == s.alphabet);

  REQUIRE(io::sequence_to_csv(s) == "2,1,1,0,0\n");
  auto row = io::sequence_from_csv_row("2,1,1,0,0");
  REQUIRE(row.terms == s.terms);

  auto d = seq::decimate(s, 3);
  auto jd = io::sequence_to_json(d, f);
  REQUIRE(jd["provenance"]["kind"] == "decimate");
  REQUIRE(jd["provenance"]["parents"][0]["kind"] == "slce");

  json badj = j;
  badj["terms"] = json::array({0, 1, 2, 0});
  REQUIRE_THROWS_AS(io::sequence_from_json(badj), AlphabetMismatch);
  REQUIRE_THROWS_AS(io::sequence_from_csv_row("2,0,2"), AlphabetMismatch);
}

TEST_CASE("cyclotomic integer and character round trips") {
  auto K = cyclo::jacobi_K(cyclo::make_character(gf::make_field(5, 1), 4, 1, 0));
  auto j = io::cycint_to_json(K);
  REQUIRE(j["order"] == 4);
  REQUIRE(io::cycint_from_json(j) == K);

  // large coefficients survive via decimal strings
  cyclo::CycInt big(3);
  big.coeff(0) = cyclo::BigInt("123456789012345678901234567890");
  auto jb = io::cycint_to_json(big);
  REQUIRE(jb["coeffs"][0].is_string());
  REQUIRE(io::cycint_from_json(jb) == big);

  auto chi = cyclo::make_character(gf::make_field(13, 1), 4, 3, 0);
  auto jc = io::character_to_json(chi);
  auto back = io::character_from_json(jc);
  REQUIRE(back.order_k == 4);
  REQUIRE(back.scale_u == 3);
  REQUIRE(back.zero_value == 0);
  REQUIRE(back.field->same_field(*chi.field));
}

TEST_CASE("spectrum JSON carries values and bound checks") {
  auto f = gf::make_field(13, 1);
  auto s = seq::gen_slce(f);
  auto b = seq::decimate(s, -1);
  auto spec = corr::correlation(s, b);
  auto chk = corr::check_bound_pair(s, b, corr::BoundKind::FamilyM, 13);
  auto j = io::spectrum_to_json(spec, {chk});
  REQUIRE(j["values"].size() == 12);
  REQUIRE(j["values"][0].is_number_integer());
  REQUIRE(j["bound_checks"][0]["kind"] == "family_M");
  REQUIRE(j["bound_checks"][0]["holds"] == true);
  REQUIRE(j["max_offphase"].is_number());
  REQUIRE(j["pair"].contains("a"));
}

TEST_CASE("multiplier report and triviality verdict JSON") {
  auto rep = ads::multiplier_group_brute(ads::slce_set(gf::make_field(3, 2)));
  auto j = io::multiplier_report_to_json(rep);
  REQUIRE(j["v"] == 8);
  REQUIRE(j["group"] == json::array({1, 3, 5, 7}));
  REQUIRE(j["strong"] == json::array({1, 3}));
  for (const auto& e : j["evidence"]) {
    REQUIRE(e.contains("t"));
    REQUIRE((e["verdict"] == "multiplier" || e["verdict"] == "not_multiplier"));
    if (e["verdict"] == "multiplier") REQUIRE(e.contains("witness"));
  }

  auto v13 = mult::prove_trivial(13);
  auto jv = io::verdict_to_json(v13);
  REQUIRE(jv["p"] == 13);
  REQUIRE(jv["verdict"] == "trivial");
  REQUIRE(jv["candidates"].size() == units_mod(12).size());
  REQUIRE_FALSE(jv.contains("group"));

  auto v5 = mult::prove_trivial(5);
  auto jv5 = io::verdict_to_json(v5);
  REQUIRE(jv5["verdict"] == "nontrivial");
  REQUIRE(jv5["group"] == json::array({1, 3}));
}
