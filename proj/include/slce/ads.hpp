#ifndef SLCE_ADS_HPP
#define SLCE_ADS_HPP

// Residue-set combinatorics: characteristic sequences, difference
// functions, (almost) difference set classification, group-ring
// decimation, brute-force multiplier groups, and Fourier inversion.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slce/cyclo.hpp"
#include "slce/errors.hpp"
#include "slce/ntutil.hpp"
#include "slce/seq.hpp"

namespace slce::ads {

using std::int64_t;

struct ResidueSet {
  int64_t modulus = 1;
  std::vector<int64_t> members;  // strictly increasing, all in [0, modulus)

  static ResidueSet of(int64_t modulus, std::vector<int64_t> members) {
    ResidueSet s;
    s.modulus = modulus;
    for (auto& m : members) m = mod_floor(m, modulus);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    s.members = std::move(members);
    return s;
  }

  int64_t size() const { return static_cast<int64_t>(members.size()); }
  bool contains(int64_t x) const {
    return std::binary_search(members.begin(), members.end(), mod_floor(x, modulus));
  }
  ResidueSet complement() const {
    ResidueSet c;
    c.modulus = modulus;
    for (int64_t x = 0; x < modulus; ++x)
      if (!contains(x)) c.members.push_back(x);
    return c;
  }
  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
};

inline ResidueSet characteristic_set(const seq::PeriodicSequence& s) {
  if (s.alphabet != 2) throw AlphabetMismatch("characteristic set needs a binary sequence");
  ResidueSet out;
  out.modulus = s.period();
  for (int64_t i = 0; i < s.period(); ++i)
    if (s.terms[i] == 1) out.members.push_back(i);
  return out;
}

inline seq::PeriodicSequence characteristic_sequence(const ResidueSet& a) {
  seq::PeriodicSequence s;
  s.alphabet = 2;
  s.terms.assign(a.modulus, 0);
  for (int64_t m : a.members) s.terms[m] = 1;
  s.provenance = seq::Provenance::leaf("characteristic", {{"v", a.modulus}});
  return s;
}

// The SLCE almost difference set over GF(q): support of the SLCE sequence.
inline ResidueSet slce_set(const gf::FieldPtr& field) {
  return characteristic_set(seq::gen_slce(field));
}

// count[x] = #{(y1,y2) in A^2 : y1 - y2 = x}, indexed by x = 1..v-1.
inline std::vector<int64_t> difference_function(const ResidueSet& a) {
  std::vector<int64_t> counts(a.modulus, 0);
  for (int64_t y1 : a.members)
    for (int64_t y2 : a.members)
      ++counts[mod_floor(y1 - y2, a.modulus)];
  counts[0] = 0;  // only nonzero residues are reported
  std::vector<int64_t> out(counts.begin() + 1, counts.end());
  return out;
}

struct AdsParams {
  int64_t v = 0, k = 0, lambda = 0, r = 0;
  ResidueSet special_set;  // R: residues hit exactly lambda times
};

enum class SetKind { DifferenceSet, AlmostDifferenceSet, Neither };

struct Classification {
  SetKind kind = SetKind::Neither;
  int64_t v = 0, k = 0, lambda = 0;
  std::optional<AdsParams> ads;
};

inline Classification classify(const ResidueSet& a) {
  Classification out;
  out.v = a.modulus;
  out.k = a.size();
  if (a.modulus < 2) return out;
  auto diffs = difference_function(a);
  int64_t lo = *std::min_element(diffs.begin(), diffs.end());
  int64_t hi = *std::max_element(diffs.begin(), diffs.end());
  if (lo == hi) {
    out.kind = SetKind::DifferenceSet;
    out.lambda = lo;
    return out;
  }
  if (hi != lo + 1) return out;

  AdsParams p;
  p.v = a.modulus;
  p.k = a.size();
  p.lambda = lo;
  p.special_set.modulus = a.modulus;
  for (int64_t x = 1; x < a.modulus; ++x)
    if (diffs[x - 1] == lo) p.special_set.members.push_back(x);
  p.r = p.special_set.size();

  // cross-check the three-valued autocorrelation of the characteristic
  // sequence: v at 0, v-4(k-lambda) on R, v-4(k-lambda-1) elsewhere
  auto s = characteristic_sequence(a);
  int64_t v = a.modulus;
  for (int64_t tau = 0; tau < v; ++tau) {
    int64_t c = 0;
    for (int64_t t = 0; t < v; ++t)
      c += (s.terms[t] == s.terms[(t + tau) % v]) ? 1 : -1;
    int64_t expect = tau == 0                  ? v
                     : p.special_set.contains(tau) ? v - 4 * (p.k - p.lambda)
                                                   : v - 4 * (p.k - p.lambda - 1);
    if (c != expect)
      throw Error("ADS autocorrelation cross-check failed (internal bug)");
  }

  out.kind = SetKind::AlmostDifferenceSet;
  out.lambda = lo;
  out.ads = std::move(p);
  return out;
}

// A^{(t)} = { t*a mod v }, t a unit mod v.
inline ResidueSet decimate_set(const ResidueSet& a, int64_t t) {
  int64_t v = a.modulus;
  int64_t tn = mod_floor(t, v);
  if (std::gcd(tn, v) != 1) throw NotUnit("decimation index must be a unit mod v");
  std::vector<int64_t> out;
  out.reserve(a.members.size());
  for (int64_t m : a.members) out.push_back((tn * m) % v);
  std::sort(out.begin(), out.end());
  ResidueSet r;
  r.modulus = v;
  r.members = std::move(out);
  return r;
}

// Is there g with tA = g + A? Returns the least such shift g if any.
inline std::optional<int64_t> multiplier_witness(const ResidueSet& a, int64_t t) {
  int64_t v = a.modulus;
  ResidueSet b = decimate_set(a, t);
  if (a.members.empty()) return 0;
  std::vector<bool> in_a(v, false);
  for (int64_t m : a.members) in_a[m] = true;
  std::optional<int64_t> best;
  for (int64_t bm : b.members) {
    int64_t g = mod_floor(bm - a.members[0], v);
    bool ok = true;
    for (int64_t m : b.members) {
      if (!in_a[mod_floor(m - g, v)]) {
        ok = false;
        break;
      }
    }
    if (ok && (!best || g < *best)) best = g;
  }
  return best;
}

struct MultiplierEvidence {
  int64_t t = 1;
  bool is_multiplier = false;
  std::optional<int64_t> witness_shift;  // g with A^{(t)} = g + A
  std::string method = "brute";
};

struct MultiplierReport {
  int64_t v = 1;
  std::vector<int64_t> group_elements;
  std::vector<int64_t> strong_group_elements;
  std::vector<MultiplierEvidence> evidence;
};

inline MultiplierReport multiplier_group_brute(const ResidueSet& a) {
  if (a.modulus > (int64_t(1) << 14)) throw TooLarge("brute multiplier search capped at v <= 2^14");
  MultiplierReport rep;
  rep.v = a.modulus;
  for (int64_t t : units_mod(a.modulus)) {
    MultiplierEvidence e;
    e.t = t;
    e.witness_shift = multiplier_witness(a, t);
    e.is_multiplier = e.witness_shift.has_value();
    rep.evidence.push_back(e);
    if (e.is_multiplier) rep.group_elements.push_back(t);
    if (decimate_set(a, t) == a) rep.strong_group_elements.push_back(t);
  }
  return rep;
}

inline std::vector<int64_t> strong_multiplier_group_brute(const ResidueSet& a) {
  if (a.modulus > (int64_t(1) << 14)) throw TooLarge("brute multiplier search capped at v <= 2^14");
  std::vector<int64_t> out;
  for (int64_t t : units_mod(a.modulus))
    if (decimate_set(a, t) == a) out.push_back(t);
  return out;
}

// Fourier inversion (exact): reconstruct the indicator vector of A from
// its character values over Z/vZ using v-th root-of-unity arithmetic.
inline bool inversion_check(const ResidueSet& a) {
  int64_t v = a.modulus;
  if (v > 256) throw TooLarge("inversion check capped at v <= 256");
  for (int64_t h = 0; h < v; ++h) {
    // sum over characters u of chi_u(A) chi_u(-h) = sum_{u,m in A} zeta^{u(m-h)}
    cyclo::CycInt acc(v);
    for (int64_t u = 0; u < v; ++u)
      for (int64_t m : a.members) acc.coeff(mod_floor(u * (m - h), v)) += 1;
    auto val = acc.as_integer();
    if (!val) return false;
    cyclo::BigInt expect = a.contains(h) ? v : 0;
    if (*val != expect) return false;
  }
  return true;
}

}  // namespace slce::ads

#endif  // SLCE_ADS_HPP
