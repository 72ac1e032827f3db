#ifndef SLCE_JSON_IO_HPP
#define SLCE_JSON_IO_HPP

// JSON and CSV serialization for every artifact the toolkit emits:
// field descriptors, sequences (with provenance), correlation spectra
// with bound checks, multiplier reports, triviality verdicts, cyclotomic
// integers, and character descriptors.

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "slce/ads.hpp"
#include "slce/corr.hpp"
#include "slce/cyclo.hpp"
#include "slce/errors.hpp"
#include "slce/gf.hpp"
#include "slce/mult.hpp"
#include "slce/seq.hpp"

namespace slce::io {

using json = nlohmann::json;
using std::int64_t;

// --- field descriptor --------------------------------------------------------

inline json field_to_json(const gf::FieldPtr& f) {
  return json{{"p", f->p()},
              {"d", f->d()},
              {"modulus", f->modulus()},
              {"alpha", f->alpha_coeffs()}};
}

inline gf::FieldPtr field_from_json(const json& j) {
  return gf::FiniteField::from_descriptor(
      j.at("p").get<int64_t>(), j.at("d").get<int>(),
      j.at("modulus").get<std::vector<int64_t>>(),
      j.at("alpha").get<std::vector<int64_t>>());
}

// --- sequences ---------------------------------------------------------------

inline json provenance_to_json(const seq::ProvPtr& p) {
  if (!p) return nullptr;
  json out{{"kind", p->kind}, {"params", p->params}};
  if (!p->parents.empty()) {
    json parents = json::array();
    for (const auto& par : p->parents) parents.push_back(provenance_to_json(par));
    out["parents"] = std::move(parents);
  }
  return out;
}

inline json sequence_to_json(const seq::PeriodicSequence& s, const gf::FieldPtr& f) {
  return json{{"p", f->p()},
              {"d", f->d()},
              {"M", s.alphabet},
              {"modulus", f->modulus()},
              {"alpha", f->alpha_coeffs()},
              {"terms", s.terms},
              {"provenance", provenance_to_json(s.provenance)}};
}

inline seq::PeriodicSequence sequence_from_json(const json& j) {
  seq::PeriodicSequence s;
  s.alphabet = j.at("M").get<int64_t>();
  s.terms = j.at("terms").get<std::vector<int>>();
  for (int t : s.terms)
    if (t < 0 || t >= s.alphabet) throw AlphabetMismatch("term outside alphabet");
  return s;
}

// One row per sequence: M first, then the terms, comma-joined.
inline std::string sequence_to_csv(const seq::PeriodicSequence& s) {
  std::ostringstream os;
  os << s.alphabet;
  for (int t : s.terms) os << ',' << t;
  os << '\n';
  return os.str();
}

inline seq::PeriodicSequence sequence_from_csv_row(const std::string& row) {
  std::istringstream is(row);
  std::string tok;
  seq::PeriodicSequence s;
  if (!std::getline(is, tok, ',')) throw Error("empty CSV row");
  s.alphabet = std::stoll(tok);
  while (std::getline(is, tok, ',')) s.terms.push_back(std::stoi(tok));
  for (int t : s.terms)
    if (t < 0 || t >= s.alphabet) throw AlphabetMismatch("term outside alphabet");
  return s;
}

// --- cyclotomic integers and characters --------------------------------------

inline json bigint_to_json(const cyclo::BigInt& v) {
  if (v >= std::numeric_limits<int64_t>::min() &&
      v <= std::numeric_limits<int64_t>::max())
    return v.convert_to<int64_t>();
  return v.str();
}

inline cyclo::BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return cyclo::BigInt(j.get<std::string>());
  return cyclo::BigInt(j.get<int64_t>());
}

inline json cycint_to_json(const cyclo::CycInt& c) {
  json coeffs = json::array();
  for (const auto& x : c.canonical()) coeffs.push_back(bigint_to_json(x));
  return json{{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

inline cyclo::CycInt cycint_from_json(const json& j) {
  int64_t order = j.at("order").get<int64_t>();
  std::vector<cyclo::BigInt> coeffs;
  for (const auto& x : j.at("coeffs")) coeffs.push_back(bigint_from_json(x));
  return cyclo::CycInt(order, std::move(coeffs));
}

inline json character_to_json(const cyclo::Character& chi) {
  return json{{"p", chi.field->p()},
              {"d", chi.field->d()},
              {"k", chi.order_k},
              {"u", chi.scale_u},
              {"zero_value", chi.zero_value}};
}

inline cyclo::Character character_from_json(const json& j) {
  auto f = gf::make_field(j.at("p").get<int64_t>(), j.at("d").get<int>());
  return cyclo::make_character(f, j.at("k").get<int64_t>(), j.at("u").get<int64_t>(),
                               j.at("zero_value").get<int>());
}

// --- correlation spectra -----------------------------------------------------

inline const char* bound_kind_name(corr::BoundKind k) {
  switch (k) {
    case corr::BoundKind::ConstantMultiple: return "constant_multiple";
    case corr::BoundKind::DecimatedPair: return "decimated_pair";
    case corr::BoundKind::FamilyL: return "family_L";
    case corr::BoundKind::FamilyM: return "family_M";
    case corr::BoundKind::WeakHalf: return "weak_half";
  }
  return "unknown";
}

inline json bound_check_to_json(const corr::BoundCheck& b) {
  return json{{"kind", bound_kind_name(b.kind)},
              {"bound", b.bound_value},
              {"max", b.max_observed},
              {"holds", b.holds}};
}

inline json spectrum_to_json(const corr::CorrelationSpectrum& s,
                             const std::vector<corr::BoundCheck>& checks = {}) {
  json values;
  if (!s.int_values.empty()) {
    values = s.int_values;
  } else {
    values = json::array();
    for (const auto& v : s.values)
      values.push_back(json{{"re", v.real()}, {"im", v.imag()}});
  }
  json bc = json::array();
  for (const auto& b : checks) bc.push_back(bound_check_to_json(b));
  return json{{"pair", json{{"a", s.pair_a}, {"b", s.pair_b}}},
              {"values", std::move(values)},
              {"max_offphase", s.max_offphase},
              {"bound_checks", std::move(bc)}};
}

// --- multiplier reports and verdicts -----------------------------------------

inline json multiplier_report_to_json(const ads::MultiplierReport& r) {
  json ev = json::array();
  for (const auto& e : r.evidence) {
    json rec{{"t", e.t},
             {"verdict", e.is_multiplier ? "multiplier" : "not_multiplier"},
             {"method", e.method}};
    if (e.witness_shift) rec["witness"] = *e.witness_shift;
    ev.push_back(std::move(rec));
  }
  return json{{"v", r.v},
              {"group", r.group_elements},
              {"strong", r.strong_group_elements},
              {"evidence", std::move(ev)}};
}

inline json verdict_to_json(const mult::TrivialityVerdict& v) {
  json cands = json::array();
  for (const auto& c : v.per_candidate) {
    json rec{{"t", c.t}, {"method", c.method}};
    if (c.witness) rec["witness"] = *c.witness;
    cands.push_back(std::move(rec));
  }
  json out{{"p", v.p},
           {"verdict", v.trivial ? "trivial" : "nontrivial"},
           {"candidates", std::move(cands)}};
  if (!v.trivial) out["group"] = v.group;
  return out;
}

}  // namespace slce::io

#endif  // SLCE_JSON_IO_HPP
