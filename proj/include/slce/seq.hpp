#ifndef SLCE_SEQ_HPP
#define SLCE_SEQ_HPP

// Sequence generation (m-sequences, M-ary Sidelnikov / SLCE sequences)
// and the transform operators: decimation, shift, constant multiple,
// termwise sum, plus balance and shift-equivalence checks.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slce/errors.hpp"
#include "slce/gf.hpp"
#include "slce/ntutil.hpp"

namespace slce::seq {

using std::int64_t;
using gf::FieldPtr;

struct Provenance;
using ProvPtr = std::shared_ptr<const Provenance>;

struct Provenance {
  std::string kind;  // mseq | sidelnikov | slce | decimate | shift | const_mul | termwise_sum
  std::map<std::string, int64_t> params;
  std::vector<ProvPtr> parents;

  static ProvPtr leaf(std::string kind, std::map<std::string, int64_t> params) {
    auto p = std::make_shared<Provenance>();
    p->kind = std::move(kind);
    p->params = std::move(params);
    return p;
  }
  static ProvPtr derived(std::string kind, std::map<std::string, int64_t> params,
                         std::vector<ProvPtr> parents) {
    auto p = std::make_shared<Provenance>();
    p->kind = std::move(kind);
    p->params = std::move(params);
    p->parents = std::move(parents);
    return p;
  }
  std::string describe() const {
    std::string s = kind;
    for (const auto& [k, v] : params) s += " " + k + "=" + std::to_string(v);
    if (!parents.empty()) {
      s += " (";
      for (size_t i = 0; i < parents.size(); ++i)
        s += (i ? "; " : "") + (parents[i] ? parents[i]->describe() : "unknown");
      s += ")";
    }
    return s;
  }
};

struct PeriodicSequence {
  std::vector<int> terms;  // values in [0, alphabet-1]
  int64_t alphabet = 2;
  ProvPtr provenance;

  int64_t period() const { return static_cast<int64_t>(terms.size()); }
  int at(int64_t i) const { return terms[mod_floor(i, period())]; }
  friend bool operator==(const PeriodicSequence& a, const PeriodicSequence& b) {
    return a.alphabet == b.alphabet && a.terms == b.terms;
  }
};

// m_n = Tr(A * alpha^{-n}), period q-1, alphabet p.
inline PeriodicSequence gen_mseq(const FieldPtr& field, const gf::FieldElement& A) {
  if (A.is_zero()) throw ZeroMultiplier("m-sequence multiplier A must be nonzero");
  int64_t v = field->q() - 1;
  PeriodicSequence s;
  s.alphabet = field->p();
  s.terms.resize(v);
  for (int64_t n = 0; n < v; ++n)
    s.terms[n] = static_cast<int>(field->trace(field->mul(A, field->alpha_pow(-n))));
  s.provenance = Provenance::leaf(
      "mseq", {{"p", field->p()}, {"d", field->d()}, {"A", A.code}});
  return s;
}

// M-ary Sidelnikov sequence: s_i = log_alpha(alpha^i + 1) mod M, with
// s_i = 0 when alpha^i = -1. The D_k partition definition is asserted
// against the log formula term by term.
inline PeriodicSequence gen_sidelnikov(const FieldPtr& field, int64_t M) {
  if (field->p() == 2) throw EvenCharacteristic("Sidelnikov sequences need odd q");
  int64_t v = field->q() - 1;
  if (M < 2) throw NotDivisor("alphabet M must be at least 2");
  if (v % M != 0) throw NotDivisor("M must divide q-1");

  PeriodicSequence s;
  s.alphabet = M;
  s.terms.resize(v);
  for (int64_t i = 0; i < v; ++i) {
    auto x = field->add(field->alpha_pow(i), field->one());
    auto lg = field->dlog(x);
    s.terms[i] = static_cast<int>(lg.is_zero ? 0 : lg.exponent % M);
  }

  // cross-check against the coset-partition definition
  for (int64_t i = 0; i < v; ++i) {
    auto x = field->add(field->alpha_pow(i), field->one());
    int expect;
    if (x.is_zero()) {
      expect = 0;  // alpha^i = -1
    } else {
      expect = static_cast<int>(field->dlog(x).exponent % M);  // alpha^i in D_k
    }
    if (s.terms[i] != expect)
      throw Error("Sidelnikov definitions disagree (internal bug)");
  }

  s.provenance = Provenance::leaf(
      "sidelnikov", {{"p", field->p()}, {"d", field->d()}, {"M", M}});
  return s;
}

inline PeriodicSequence gen_slce(const FieldPtr& field) {
  auto s = gen_sidelnikov(field, 2);
  s.provenance = Provenance::leaf("slce", {{"p", field->p()}, {"d", field->d()}});
  return s;
}

// t-fold decimation; the stored period stays v even when the minimal
// period of the result divides v. Negative t is reduced mod v.
inline PeriodicSequence decimate(const PeriodicSequence& s, int64_t t) {
  int64_t v = s.period();
  int64_t tn = mod_floor(t, v);
  PeriodicSequence out;
  out.alphabet = s.alphabet;
  out.terms.resize(v);
  for (int64_t i = 0; i < v; ++i) out.terms[i] = s.terms[(tn * i) % v];
  out.provenance = Provenance::derived("decimate", {{"t", tn}}, {s.provenance});
  return out;
}

inline PeriodicSequence shift(const PeriodicSequence& s, int64_t ell) {
  int64_t v = s.period();
  PeriodicSequence out;
  out.alphabet = s.alphabet;
  out.terms.resize(v);
  for (int64_t i = 0; i < v; ++i) out.terms[i] = s.at(i + ell);
  out.provenance = Provenance::derived("shift", {{"ell", mod_floor(ell, v)}},
                                       {s.provenance});
  return out;
}

inline PeriodicSequence const_mul(int64_t c, const PeriodicSequence& s) {
  PeriodicSequence out;
  out.alphabet = s.alphabet;
  out.terms.resize(s.terms.size());
  int64_t cn = mod_floor(c, s.alphabet);
  for (size_t i = 0; i < s.terms.size(); ++i)
    out.terms[i] = static_cast<int>((cn * s.terms[i]) % s.alphabet);
  out.provenance = Provenance::derived("const_mul", {{"c", cn}}, {s.provenance});
  return out;
}

inline PeriodicSequence termwise_sum(const PeriodicSequence& a,
                                     const PeriodicSequence& b) {
  if (a.period() != b.period()) throw PeriodMismatch("termwise sum needs equal periods");
  if (a.alphabet != b.alphabet)
    throw AlphabetMismatch("termwise sum needs equal alphabets");
  PeriodicSequence out;
  out.alphabet = a.alphabet;
  out.terms.resize(a.terms.size());
  for (size_t i = 0; i < a.terms.size(); ++i)
    out.terms[i] = static_cast<int>((a.terms[i] + b.terms[i]) % a.alphabet);
  out.provenance =
      Provenance::derived("termwise_sum", {}, {a.provenance, b.provenance});
  return out;
}

// Each symbol appears floor(v/M) or ceil(v/M) times.
inline bool is_balanced(const PeriodicSequence& s) {
  std::vector<int64_t> counts(s.alphabet, 0);
  for (int t : s.terms) ++counts[t];
  int64_t v = s.period(), M = s.alphabet;
  int64_t lo = v / M, hi = (v + M - 1) / M;
  for (int64_t c : counts)
    if (c != lo && c != hi) return false;
  return true;
}

// Least ell in [0, v-1] with a_i = b_{i+ell} for all i, if any.
inline std::optional<int64_t> shift_equivalent(const PeriodicSequence& a,
                                               const PeriodicSequence& b) {
  if (a.period() != b.period()) throw PeriodMismatch("shift comparison needs equal periods");
  if (a.alphabet != b.alphabet)
    throw AlphabetMismatch("shift comparison needs equal alphabets");
  int64_t v = a.period();
  for (int64_t ell = 0; ell < v; ++ell) {
    bool ok = true;
    for (int64_t i = 0; i < v; ++i) {
      if (a.terms[i] != b.terms[(i + ell) % v]) {
        ok = false;
        break;
      }
    }
    if (ok) return ell;
  }
  return std::nullopt;
}

// Family L: constant multiples of s and termwise sums c1*s + c2*shift(s,r).
// The index set is exactly the displayed union; members are emitted in
// block order, then lexicographically by (c1, c2, r).
inline std::vector<PeriodicSequence> build_family_L(const FieldPtr& field, int64_t M) {
  auto s = gen_sidelnikov(field, M);
  int64_t v = field->q() - 1;
  int64_t T = (v + 1) / 2;  // ceil((q-1)/2)
  std::vector<PeriodicSequence> fam;
  for (int64_t c1 = 1; c1 <= M - 1; ++c1) fam.push_back(const_mul(c1, s));
  for (int64_t c1 = 1; c1 <= M - 1; ++c1)
    for (int64_t c2 = 1; c2 <= M - 1; ++c2)
      for (int64_t r = 1; r <= T - 1; ++r)
        fam.push_back(termwise_sum(const_mul(c1, s), const_mul(c2, shift(s, r))));
  for (int64_t c1 = 1; c1 <= M - 1; ++c1)
    for (int64_t c2 = c1 + 1; c2 <= M - 1; ++c2)
      fam.push_back(termwise_sum(const_mul(c1, s), const_mul(c2, shift(s, T))));
  return fam;
}

inline int64_t family_L_size(int64_t q, int64_t M) {
  int64_t T = q / 2;  // ceil((q-1)/2) for odd q
  return (M - 1) * (M - 1) * (T - 1) + M * (M - 1) / 2;
}

// Family K: sums of c1*s with c2 * (reversal of s shifted by r),
// where the reversal is the decimation by -1.
inline std::vector<PeriodicSequence> build_family_K(const FieldPtr& field, int64_t M) {
  auto s = gen_sidelnikov(field, M);
  int64_t v = field->q() - 1;
  int64_t T = (v + 1) / 2;
  auto rev_at = [&](int64_t c2, int64_t r) {
    // v_{c1,c2;r}(i) has second summand c2 * s_{-i+r}
    PeriodicSequence out;
    out.alphabet = M;
    out.terms.resize(v);
    for (int64_t i = 0; i < v; ++i)
      out.terms[i] = static_cast<int>((c2 * s.at(-i + r)) % M);
    out.provenance = Provenance::derived("const_mul", {{"c", c2}},
                                         {Provenance::derived("reverse_shift", {{"r", r}},
                                                              {s.provenance})});
    return out;
  };
  std::vector<PeriodicSequence> fam;
  for (int64_t c1 = 1; c1 <= M - 1; ++c1) fam.push_back(rev_at(c1, 0));
  for (int64_t c1 = 1; c1 <= M - 1; ++c1)
    for (int64_t c2 = 1; c2 <= M - 1; ++c2)
      for (int64_t r = 1; r <= T - 1; ++r)
        fam.push_back(termwise_sum(const_mul(c1, s), rev_at(c2, r)));
  for (int64_t c1 = 1; c1 <= M - 1; ++c1)
    for (int64_t c2 = 1; c2 <= M - 1; ++c2)
      if (c1 != c2) fam.push_back(termwise_sum(const_mul(c1, s), rev_at(c2, T)));
  return fam;
}

// Family M = K union L.
inline std::vector<PeriodicSequence> build_family_M(const FieldPtr& field, int64_t M) {
  auto fam = build_family_L(field, M);
  auto k = build_family_K(field, M);
  fam.insert(fam.end(), k.begin(), k.end());
  return fam;
}

inline int64_t family_M_size(int64_t q, int64_t M) {
  int64_t T = q / 2;
  return 2 * (M - 1) * (M - 1) * (T - 1) + 2 * (M - 1) + 3 * (M - 1) * (M - 2) / 2;
}

// Family F1: all decimations s[t'] of the SLCE sequence by units mod q-1.
inline std::vector<PeriodicSequence> build_family_F1(const FieldPtr& field) {
  auto s = gen_slce(field);
  std::vector<PeriodicSequence> fam;
  for (int64_t t : units_mod(field->q() - 1)) fam.push_back(decimate(s, t));
  return fam;
}

}  // namespace slce::seq

#endif  // SLCE_SEQ_HPP
