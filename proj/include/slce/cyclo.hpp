#ifndef SLCE_CYCLO_HPP
#define SLCE_CYCLO_HPP

// Exact arithmetic in Z[zeta_n]: redundant length-n representation with
// authoritative reduction modulo the n-th cyclotomic polynomial, Galois
// action, norms, multiplicative characters on GF(q), Jacobi sums K(chi),
// and the Stickelberger exponent formula.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

#include "slce/errors.hpp"
#include "slce/gf.hpp"
#include "slce/ntutil.hpp"

namespace slce::cyclo {

using std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// --- cyclotomic polynomials, memoized ------------------------------------

namespace detail {

// Exact division of integer polynomials (num must be divisible by den).
inline std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num,
                                             const std::vector<BigInt>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<BigInt> quot(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    if (num[i] == 0) continue;
    BigInt c = num[i] / den[dd];  // den is monic in our uses
    quot[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const BigInt& c : num)
    if (c != 0) throw Error("inexact polynomial division (internal bug)");
  return quot;
}

inline const std::vector<BigInt>& cyclotomic_poly(int64_t n) {
  static std::map<int64_t, std::vector<BigInt>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::function<const std::vector<BigInt>&(int64_t)> phi =
      [&](int64_t m) -> const std::vector<BigInt>& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    // (x^m - 1) / prod_{d | m, d < m} Phi_d(x)
    std::vector<BigInt> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int64_t d : divisors(m)) {
      if (d == m) continue;
      num = poly_divide_exact(std::move(num), phi(d));
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return phi(n);
}

}  // namespace detail

// --- CycInt ----------------------------------------------------------------

class CycInt {
 public:
  CycInt() : order_(1), coeffs_(1, 0) {}
  explicit CycInt(int64_t order) : order_(order), coeffs_(order, 0) {}
  CycInt(int64_t order, std::vector<BigInt> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {
    coeffs_.resize(order_, 0);
  }

  static CycInt integer(BigInt v, int64_t order = 1) {
    CycInt c(order);
    c.coeffs_[0] = std::move(v);
    return c;
  }
  // zeta_order^e
  static CycInt root(int64_t order, int64_t e) {
    CycInt c(order);
    c.coeffs_[mod_floor(e, order)] = 1;
    return c;
  }

  int64_t order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt& coeff(int64_t i) { return coeffs_[mod_floor(i, order_)]; }

  CycInt lifted(int64_t target) const {
    if (target == order_) return *this;
    if (target % order_ != 0) throw Error("cannot lift to non-multiple order");
    CycInt out(target);
    int64_t step = target / order_;
    for (int64_t i = 0; i < order_; ++i) out.coeffs_[i * step] = coeffs_[i];
    return out;
  }

  friend CycInt operator+(const CycInt& a, const CycInt& b) {
    auto [x, y] = aligned(a, b);
    for (int64_t i = 0; i < x.order_; ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
  }
  friend CycInt operator-(const CycInt& a, const CycInt& b) {
    auto [x, y] = aligned(a, b);
    for (int64_t i = 0; i < x.order_; ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
  }
  CycInt operator-() const {
    CycInt out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    auto [x, y] = aligned(a, b);
    CycInt out(x.order_);
    for (int64_t i = 0; i < x.order_; ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (int64_t j = 0; j < y.order_; ++j) {
        if (y.coeffs_[j] == 0) continue;
        out.coeffs_[(i + j) % x.order_] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    return out;
  }
  CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
  CycInt& operator-=(const CycInt& o) { return *this = *this - o; }
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

  // Galois automorphism sigma_j : zeta |-> zeta^j, gcd(j, n) = 1.
  CycInt galois(int64_t j) const {
    int64_t jn = mod_floor(j, order_);
    if (std::gcd(jn, order_) != 1) throw NotUnit("galois index not a unit mod order");
    CycInt out(order_);
    for (int64_t i = 0; i < order_; ++i) out.coeffs_[(i * jn) % order_] += coeffs_[i];
    return out;
  }

  CycInt conjugate() const { return order_ == 1 ? *this : galois(order_ - 1); }

  // Canonical coordinates in the power basis 1, zeta, ..., zeta^{phi(n)-1}
  // (reduction modulo Phi_n). This is the authoritative equality test.
  std::vector<BigInt> canonical() const {
    const auto& phi_n = detail::cyclotomic_poly(order_);
    std::vector<BigInt> r = coeffs_;
    int deg_phi = static_cast<int>(phi_n.size()) - 1;
    for (int i = static_cast<int>(r.size()) - 1; i >= deg_phi; --i) {
      if (r[i] == 0) continue;
      BigInt c = r[i];  // Phi_n is monic
      for (int j = 0; j <= deg_phi; ++j) r[i - deg_phi + j] -= c * phi_n[j];
    }
    r.resize(deg_phi);
    return r;
  }

  bool is_zero() const {
    for (const BigInt& c : canonical())
      if (c != 0) return false;
    return true;
  }

  // The rational integer this element equals, if it is one.
  std::optional<BigInt> as_integer() const {
    auto c = canonical();
    for (size_t i = 1; i < c.size(); ++i)
      if (c[i] != 0) return std::nullopt;
    return c.empty() ? BigInt(0) : c[0];
  }

  friend bool operator==(const CycInt& a, const CycInt& b) {
    return (a - b).is_zero();
  }

  // Complex embedding zeta_n -> exp(2*pi*i*j/n).
  std::complex<double> embed(int64_t j = 1) const {
    std::complex<double> acc = 0;
    for (int64_t i = 0; i < order_; ++i) {
      if (coeffs_[i] == 0) continue;
      double angle = 2.0 * std::numbers::pi * double(mod_floor(i * j, order_)) /
                     double(order_);
      acc += coeffs_[i].convert_to<double>() *
             std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
  }

 private:
  static std::pair<CycInt, CycInt> aligned(const CycInt& a, const CycInt& b) {
    int64_t L = std::lcm(a.order_, b.order_);
    return {a.lifted(L), b.lifted(L)};
  }

  int64_t order_;
  std::vector<BigInt> coeffs_;
};

// Absolute norm: product of all Galois conjugates; always a rational integer.
inline BigInt norm(const CycInt& a) {
  if (a.order() == 1) return a.canonical()[0];
  CycInt acc = CycInt::integer(1, a.order());
  for (int64_t j : units_mod(a.order())) acc *= a.galois(j);
  auto n = acc.as_integer();
  if (!n) throw NonIntegerNorm("norm is not a rational integer (internal bug)");
  return *n;
}

// Relative norm from Q(zeta_n) to Q(zeta_m), m | n: product over the
// automorphisms fixing zeta_m. The result lies in Z[zeta_m]; its
// coordinates are recovered by solving an integer linear system over the
// power basis of zeta_m inside Q(zeta_n).
inline CycInt norm_to_subfield(const CycInt& a, int64_t m) {
  int64_t n = a.order();
  if (n % m != 0) throw NotDivisor("subfield order must divide order");
  if (m == n) return a;
  CycInt acc = CycInt::integer(1, n);
  for (int64_t j : units_mod(n))
    if (j % m == 1 % m) acc *= a.galois(j);

  int64_t step = n / m;
  int64_t phim = euler_phi(m), phin = euler_phi(n);
  std::vector<std::vector<BigInt>> cols;
  for (int64_t i = 0; i < phim; ++i)
    cols.push_back(CycInt::root(n, i * step).canonical());
  std::vector<BigInt> target = acc.canonical();

  // fraction-free Gaussian elimination on the phin x (phim+1) system
  std::vector<std::vector<BigInt>> Mx(phin, std::vector<BigInt>(phim + 1, 0));
  for (int64_t r = 0; r < phin; ++r) {
    for (int64_t c = 0; c < phim; ++c) Mx[r][c] = cols[c][r];
    Mx[r][phim] = target[r];
  }
  int64_t row = 0;
  std::vector<int64_t> pivot_col;
  for (int64_t col = 0; col < phim && row < phin; ++col) {
    int64_t sel = -1;
    for (int64_t r = row; r < phin; ++r)
      if (Mx[r][col] != 0) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(Mx[row], Mx[sel]);
    for (int64_t r = 0; r < phin; ++r) {
      if (r == row || Mx[r][col] == 0) continue;
      BigInt f1 = Mx[row][col], f2 = Mx[r][col];
      BigInt g = boost::multiprecision::gcd(f1, f2);
      f1 /= g;
      f2 /= g;
      for (int64_t c2 = 0; c2 <= phim; ++c2)
        Mx[r][c2] = Mx[r][c2] * f1 - Mx[row][c2] * f2;
    }
    pivot_col.push_back(col);
    ++row;
  }
  CycInt out(m);
  for (size_t k = 0; k < pivot_col.size(); ++k) {
    int64_t col = pivot_col[k];
    if (Mx[k][phim] % Mx[k][col] != 0)
      throw NonIntegerNorm("relative norm has non-integer coordinates");
    out.coeff(col) = Mx[k][phim] / Mx[k][col];
  }
  for (int64_t r = row; r < phin; ++r)
    if (Mx[r][phim] != 0) throw NonIntegerNorm("relative norm not in subfield");
  if (!(out.lifted(n) == acc))
    throw NonIntegerNorm("relative norm verification failed (internal bug)");
  return out;
}

// Precomputed division context for a fixed divisor: adj(b) is the
// product of the other conjugates, so a/b = a*adj(b)/N(b).
struct Divider {
  int64_t order = 1;
  CycInt adj;
  BigInt nrm;
};

inline Divider make_divider(const CycInt& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero cyclotomic integer");
  Divider d;
  d.order = b.order();
  d.adj = CycInt::integer(1, d.order);
  if (d.order > 1)
    for (int64_t j : units_mod(d.order))
      if (j != 1) d.adj *= b.galois(j);
  auto nrm = (b * d.adj).as_integer();
  if (!nrm) throw NonIntegerNorm("norm not integral (internal bug)");
  d.nrm = *nrm;
  if (d.nrm == 0) throw DivisionByZero("division by zero cyclotomic integer");
  return d;
}

inline std::optional<CycInt> exact_divide(const CycInt& a, const Divider& d) {
  int64_t L = std::lcm(a.order(), d.order);
  auto num = (a.lifted(L) * d.adj.lifted(L)).canonical();
  CycInt q(L);
  for (size_t i = 0; i < num.size(); ++i) {
    if (num[i] % d.nrm != 0) return std::nullopt;
    q.coeff(static_cast<int64_t>(i)) = num[i] / d.nrm;
  }
  return q;
}

// Exact division in Z[zeta_n]: returns a/b when the quotient is an
// algebraic integer, nullopt otherwise.
inline std::optional<CycInt> exact_divide(const CycInt& a, const CycInt& b) {
  int64_t L = std::lcm(a.order(), b.order());
  CycInt bn = b.lifted(L);
  if (bn.is_zero()) throw DivisionByZero("division by zero cyclotomic integer");
  if (auto bi = bn.as_integer()) {
    // rational-integer divisor: divide canonical coordinates directly
    CycInt q(L);
    auto num = a.lifted(L).canonical();
    for (size_t i = 0; i < num.size(); ++i) {
      if (num[i] % *bi != 0) return std::nullopt;
      q.coeff(static_cast<int64_t>(i)) = num[i] / *bi;
    }
    return q;
  }
  return exact_divide(a.lifted(L), make_divider(bn));
}

// --- multiplicative characters on GF(q) ------------------------------------

struct Character {
  gf::FieldPtr field;
  int64_t order_k = 1;   // divisor of q-1
  int64_t scale_u = 1;   // chi(alpha^j) = zeta_k^{u j}, gcd(u, k) = 1
  int zero_value = 0;    // chi(0): 0 or 1

  bool is_trivial() const { return order_k == 1; }

  CycInt eval(const gf::FieldElement& x) const {
    if (x.is_zero()) return CycInt::integer(zero_value, order_k);
    auto lg = field->dlog(x);
    return CycInt::root(order_k, mod_floor(scale_u * lg.exponent, order_k));
  }

  // exponent e with chi(x) = zeta_k^e for nonzero x
  int64_t exponent_at(const gf::FieldElement& x) const {
    auto lg = field->dlog(x);
    return mod_floor(scale_u * lg.exponent, order_k);
  }

  Character power(int64_t t) const {
    Character c = *this;
    c.scale_u = mod_floor(scale_u * t, order_k);
    if (std::gcd(c.scale_u, order_k) != 1)
      throw NotUnit("character power does not preserve the order");
    return c;
  }
};

inline Character make_character(const gf::FieldPtr& field, int64_t k, int64_t u,
                                int zero_value) {
  if (k < 1 || (field->q() - 1) % k != 0) throw NotDivisor("character order must divide q-1");
  if (std::gcd(mod_floor(u, k), k) != 1 && k > 1)
    throw NotUnit("character exponent scale must be a unit mod k");
  if (zero_value != 0 && zero_value != 1) throw Error("zero_value must be 0 or 1");
  return Character{field, k, k == 1 ? 0 : mod_floor(u, k), zero_value};
}

// K(chi) = chi(4) * sum_x chi(x) chi(1-x), with chi(0) = 0.
inline CycInt jacobi_K(const Character& chi) {
  if (chi.is_trivial()) throw TrivialCharacter("K(chi) needs a nontrivial character");
  if (chi.zero_value != 0) throw HypothesisViolated("K(chi) requires chi(0) = 0");
  const auto& field = chi.field;
  int64_t k = chi.order_k;
  std::vector<BigInt> counts(k, 0);
  for (int64_t code = 0; code < field->q(); ++code) {
    gf::FieldElement x{field.get(), code};
    if (x.is_zero()) continue;
    auto one_minus = field->sub(field->one(), x);
    if (one_minus.is_zero()) continue;
    counts[mod_floor(chi.exponent_at(x) + chi.exponent_at(one_minus), k)] += 1;
  }
  CycInt sum(k);
  for (int64_t e = 0; e < k; ++e) sum.coeff(e) = counts[e];
  auto four = field->from_int(4);
  return CycInt::root(k, chi.exponent_at(four)) * sum;
}

// K(chi) + q divisible by 2(1 - zeta_k) in Z[zeta_k]. The division
// context for 2(1 - zeta_k) is cached per k.
inline bool congruence_check(const Character& chi) {
  static std::map<int64_t, Divider> cache;
  static std::mutex mu;
  int64_t k = chi.order_k;
  const Divider* div;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) {
      CycInt modulus =
          CycInt::integer(2, k) * (CycInt::integer(1, k) - CycInt::root(k, 1));
      it = cache.emplace(k, make_divider(modulus)).first;
    }
    div = &it->second;
  }
  CycInt K = jacobi_K(chi);
  CycInt lhs = K + CycInt::integer(chi.field->q(), k);
  return exact_divide(lhs, *div).has_value();
}

// --- Stickelberger exponents ------------------------------------------------

struct StickelbergerData {
  std::vector<int64_t> reps;          // canonical coset reps T of <p> in (Z/kZ)*
  std::map<int64_t, int64_t> e;       // j in T -> exponent e_j
};

// Smallest member of the coset x<p> in (Z/kZ)*.
inline int64_t coset_rep(int64_t x, int64_t p, int64_t k) {
  int64_t best = mod_floor(x, k), cur = best;
  int64_t pm = mod_floor(p, k);
  for (;;) {
    cur = (cur * pm) % k;
    if (cur == mod_floor(x, k)) break;
    best = std::min(best, cur);
  }
  return best;
}

inline std::vector<int64_t> canonical_coset_reps(int64_t p, int64_t k) {
  std::vector<int64_t> reps;
  for (int64_t j : units_mod(k))
    if (coset_rep(j, p, k) == j) reps.push_back(j);
  return reps;
}

// d - sum_{i<d} (floor(2 x p^i / k) - 2 floor(x p^i / k)), evaluated for the
// least positive residue of x. The bracketed term is cross-checked against
// the remainder rule: it is 1 exactly when (x p^i mod k) > k/2.
inline int64_t stickelberger_exponent_at(int64_t p, int d, int64_t k, int64_t x) {
  int64_t xr = mod_floor(x, k);
  int64_t total = 0;
  int64_t pi_mod = 1 % k;
  for (int i = 0; i < d; ++i) {
    int64_t y = (xr * pi_mod) % k;              // x p^i mod k
    int64_t brace = (2 * y) / k - 2 * (y / k);  // floor expression on the residue
    // cross-check against the remainder rule; at the boundary y = k/2
    // (reachable only for k = 2) the rules differ and the floor
    // expression is authoritative
    int64_t by_rule = (2 * y > k) ? 1 : 0;
    if (2 * y != k && brace != by_rule)
      throw Error("Stickelberger digit rules disagree (internal bug)");
    total += brace;
    pi_mod = (pi_mod * (p % k)) % k;
  }
  return d - total;
}

inline StickelbergerData stickelberger_exponents(int64_t p, int d, int64_t k) {
  if (k % p == 0) throw NotDivisor("p must not divide k");
  if (mult_order(p % k == 0 ? 1 : mod_floor(p, k), k) != d)
    throw WrongOrder("d must be the multiplicative order of p mod k");
  StickelbergerData out;
  out.reps = canonical_coset_reps(p, k);
  for (int64_t j : out.reps) out.e[j] = stickelberger_exponent_at(p, d, k, j);
  return out;
}

// chi(S^c) = (1/2) chi(-1) (K(chi) + 1), with S the SLCE set over GF(q)
// and chi(S^c) = sum over j in the complement of chi(alpha^j).
inline bool slce_character_identity(const gf::FieldPtr& field, const Character& chi,
                                    const std::vector<int64_t>& slce_set) {
  if (chi.is_trivial()) throw TrivialCharacter("identity needs a nontrivial character");
  if (chi.zero_value != 0) throw HypothesisViolated("identity requires chi(0) = 0");
  int64_t v = field->q() - 1;
  int64_t k = chi.order_k;
  std::vector<bool> in_s(v, false);
  for (int64_t j : slce_set) in_s[j] = true;
  CycInt lhs(k);
  for (int64_t j = 0; j < v; ++j)
    if (!in_s[j]) lhs.coeff(mod_floor(chi.scale_u * j, k)) += 1;
  CycInt K = jacobi_K(chi);
  CycInt chi_minus_one = chi.eval(field->neg(field->one()));
  CycInt rhs_twice = chi_minus_one * (K + CycInt::integer(1, k));
  auto half = exact_divide(rhs_twice, CycInt::integer(2, k));
  if (!half) return false;
  return lhs == *half;
}

}  // namespace slce::cyclo

#endif  // SLCE_CYCLO_HPP
