#ifndef SLCE_GF_HPP
#define SLCE_GF_HPP

// Exact arithmetic in GF(p^d) with a deterministically chosen modulus,
// a designated primitive element, and an eagerly built discrete-log table.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "slce/errors.hpp"
#include "slce/ntutil.hpp"

namespace slce::gf {

using std::int64_t;

class FiniteField;

// Element of a finite field, stored as an integer code
// sum(c_i * p^i) for the coefficient vector (c_0,...,c_{d-1}).
struct FieldElement {
  const FiniteField* field = nullptr;
  int64_t code = 0;

  bool is_zero() const { return code == 0; }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

struct DlogResult {
  int64_t exponent = 0;
  bool is_zero = false;
};

class FiniteField {
 public:
  static constexpr int64_t kMaxQ = int64_t(1) << 20;

  // Deterministic construction: first monic irreducible modulus in
  // lexicographic coefficient order, smallest primitive element.
  // `seed` is recorded but does not influence the construction.
  static std::shared_ptr<const FiniteField> make(int64_t p, int d,
                                                 std::optional<int64_t> seed = {}) {
    return make_nth_alpha(p, d, 0, seed);
  }

  // Like make(), but uses the (which+1)-th primitive element in element
  // order. Used by tests that verify claims are independent of alpha.
  static std::shared_ptr<const FiniteField> make_nth_alpha(
      int64_t p, int d, int which, std::optional<int64_t> seed = {}) {
    return std::shared_ptr<const FiniteField>(new FiniteField(p, d, which, seed, {}));
  }

  // Construction from a serialized descriptor; validates modulus
  // irreducibility and the order of alpha.
  static std::shared_ptr<const FiniteField> from_descriptor(
      int64_t p, int d, const std::vector<int64_t>& modulus,
      const std::vector<int64_t>& alpha_coeffs) {
    return std::shared_ptr<const FiniteField>(
        new FiniteField(p, d, 0, {}, Descriptor{modulus, alpha_coeffs}));
  }

  int64_t p() const { return p_; }
  int d() const { return d_; }
  int64_t q() const { return q_; }
  const std::vector<int64_t>& modulus() const { return modulus_; }
  std::optional<int64_t> seed() const { return seed_; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  FieldElement alpha() const { return {this, alpha_code_}; }

  // Element whose polynomial coefficients (constant term first) are given.
  FieldElement element(const std::vector<int64_t>& coeffs) const {
    int64_t code = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
      code = code * p_ + mod_floor(coeffs[i], p_);
    return {this, code};
  }

  // The image of the integer n under Z -> GF(q) (n * 1).
  FieldElement from_int(int64_t n) const {
    return {this, mod_floor(n, p_)};
  }

  std::vector<int64_t> coeffs(const FieldElement& x) const {
    check_same(x);
    std::vector<int64_t> c(d_, 0);
    int64_t v = x.code;
    for (int i = 0; i < d_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  }

  FieldElement add(const FieldElement& a, const FieldElement& b) const {
    check_same(a);
    check_same(b);
    return {this, add_codes(a.code, b.code)};
  }

  FieldElement neg(const FieldElement& a) const {
    check_same(a);
    int64_t code = 0, mul = 1, v = a.code;
    for (int i = 0; i < d_; ++i) {
      int64_t c = v % p_;
      v /= p_;
      code += ((p_ - c) % p_) * mul;
      mul *= p_;
    }
    return {this, code};
  }

  FieldElement sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
  }

  FieldElement mul(const FieldElement& a, const FieldElement& b) const {
    check_same(a);
    check_same(b);
    if (a.code == 0 || b.code == 0) return zero();
    int64_t e = (log_table_[a.code] + log_table_[b.code]) % (q_ - 1);
    return {this, exp_table_[e]};
  }

  FieldElement inv(const FieldElement& a) const {
    check_same(a);
    if (a.code == 0) throw DivisionByZero("inverse of zero field element");
    int64_t e = (q_ - 1 - log_table_[a.code]) % (q_ - 1);
    return {this, exp_table_[e]};
  }

  FieldElement pow(const FieldElement& a, int64_t e) const {
    check_same(a);
    if (a.code == 0) {
      if (e == 0) return one();
      if (e < 0) throw DivisionByZero("negative power of zero");
      return zero();
    }
    int64_t le = mod_floor(log_table_[a.code] * (e % (q_ - 1)), q_ - 1);
    return {this, exp_table_[le]};
  }

  // alpha^e for any integer e (reduced mod q-1).
  FieldElement alpha_pow(int64_t e) const {
    return {this, exp_table_[mod_floor(e, q_ - 1)]};
  }

  DlogResult dlog(const FieldElement& x) const {
    check_same(x);
    if (x.code == 0) return {0, true};  // log(0) = 0 by convention
    return {log_table_[x.code], false};
  }

  // Field trace to the prime field, returned as an integer in [0, p-1].
  int64_t trace(const FieldElement& x) const {
    check_same(x);
    FieldElement acc = x, t = x;
    for (int i = 1; i < d_; ++i) {
      t = pow(t, p_);
      acc = add(acc, t);
    }
    return acc.code;  // element of the prime subfield: code < p
  }

  bool same_field(const FiniteField& other) const {
    return p_ == other.p_ && d_ == other.d_ && modulus_ == other.modulus_ &&
           alpha_code_ == other.alpha_code_;
  }

  std::vector<int64_t> alpha_coeffs() const { return coeffs(alpha()); }

 private:
  struct Descriptor {
    std::vector<int64_t> modulus;
    std::vector<int64_t> alpha;
  };

  FiniteField(int64_t p, int d, int which_alpha, std::optional<int64_t> seed,
              std::optional<Descriptor> desc)
      : p_(p), d_(d), seed_(seed) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (d < 1) throw DegreeTooLarge("degree must be positive");
    q_ = 1;
    for (int i = 0; i < d; ++i) {
      if (q_ > kMaxQ / p) throw DegreeTooLarge("q = p^d exceeds 2^20 cap");
      q_ *= p;
    }
    if (q_ > kMaxQ) throw DegreeTooLarge("q = p^d exceeds 2^20 cap");

    if (desc) {
      modulus_ = desc->modulus;
      if (static_cast<int64_t>(modulus_.size()) != d + 1 || modulus_[d] != 1)
        throw Error("modulus must be monic of degree d");
      for (auto& c : modulus_) c = mod_floor(c, p);
      modulus_[d] = 1;
      if (!poly_irreducible(modulus_)) throw Error("descriptor modulus is reducible");
    } else {
      modulus_ = find_modulus();
    }

    build_tables(which_alpha, desc ? std::optional<std::vector<int64_t>>(desc->alpha)
                                   : std::nullopt);
  }

  void check_same(const FieldElement& x) const {
    if (x.field == nullptr || !same_field(*x.field))
      throw FieldMismatch("elements belong to different fields");
  }

  int64_t add_codes(int64_t a, int64_t b) const {
    int64_t code = 0, mul = 1;
    for (int i = 0; i < d_; ++i) {
      int64_t s = (a % p_ + b % p_) % p_;
      a /= p_;
      b /= p_;
      code += s * mul;
      mul *= p_;
    }
    return code;
  }

  // --- polynomial arithmetic over GF(p), used only during construction ---

  // Multiply codes as polynomials modulo the field modulus.
  int64_t poly_mul_mod(int64_t a, int64_t b) const {
    std::vector<int64_t> ac(d_), bc(d_);
    int64_t v = a;
    for (int i = 0; i < d_; ++i) { ac[i] = v % p_; v /= p_; }
    v = b;
    for (int i = 0; i < d_; ++i) { bc[i] = v % p_; v /= p_; }
    std::vector<int64_t> prod(2 * d_ - 1, 0);
    for (int i = 0; i < d_; ++i) {
      if (ac[i] == 0) continue;
      for (int j = 0; j < d_; ++j)
        prod[i + j] = (prod[i + j] + ac[i] * bc[j]) % p_;
    }
    // reduce by the monic modulus
    for (int i = 2 * d_ - 2; i >= d_; --i) {
      int64_t c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (int j = 0; j < d_; ++j)
        prod[i - d_ + j] = mod_floor(prod[i - d_ + j] - c * modulus_[j], p_);
    }
    int64_t code = 0;
    for (int i = d_ - 1; i >= 0; --i) code = code * p_ + prod[i];
    return code;
  }

  int64_t poly_pow_mod(int64_t a, int64_t e) const {
    int64_t result = 1, base = a;
    while (e > 0) {
      if (e & 1) result = poly_mul_mod(result, base);
      base = poly_mul_mod(base, base);
      e >>= 1;
    }
    return result;
  }

  // Plain polynomial remainder: a mod b over GF(p), coefficient vectors.
  static std::vector<int64_t> poly_rem(std::vector<int64_t> a,
                                       const std::vector<int64_t>& b, int64_t p) {
    auto deg = [](const std::vector<int64_t>& f) {
      for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
      return -1;
    };
    int db = deg(b);
    int64_t lead_inv = mod_inverse(b[db], p);
    while (deg(a) >= db) {
      int da = deg(a);
      int64_t c = (a[da] * lead_inv) % p;
      for (int j = 0; j <= db; ++j)
        a[da - db + j] = mod_floor(a[da - db + j] - c * b[j], p);
    }
    return a;
  }

  bool poly_irreducible(const std::vector<int64_t>& f) const {
    // trial division by every monic polynomial of degree 1..d/2
    int deg_f = d_;
    auto is_zero = [](const std::vector<int64_t>& v) {
      for (auto c : v)
        if (c != 0) return false;
      return true;
    };
    for (int dg = 1; dg <= deg_f / 2; ++dg) {
      int64_t count = 1;
      for (int i = 0; i < dg; ++i) count *= p_;
      for (int64_t code = 0; code < count; ++code) {
        std::vector<int64_t> g(dg + 1, 0);
        int64_t v = code;
        for (int i = 0; i < dg; ++i) { g[i] = v % p_; v /= p_; }
        g[dg] = 1;
        if (is_zero(poly_rem(f, g, p_))) return false;
      }
    }
    return true;
  }

  std::vector<int64_t> find_modulus() const {
    int64_t count = 1;
    for (int i = 0; i < d_; ++i) count *= p_;
    for (int64_t code = 0; code < count; ++code) {
      std::vector<int64_t> f(d_ + 1, 0);
      int64_t v = code;
      for (int i = 0; i < d_; ++i) { f[i] = v % p_; v /= p_; }
      f[d_] = 1;
      if (poly_irreducible(f)) return f;
    }
    throw NoIrreducibleFound("no irreducible polynomial found (internal bug)");
  }

  void build_tables(int which_alpha, std::optional<std::vector<int64_t>> alpha_hint) {
    auto factors = prime_factors(q_ - 1);
    auto is_primitive = [&](int64_t code) {
      if (code == 0) return false;
      if (q_ == 2) return code == 1;
      if (poly_pow_mod(code, q_ - 1) != 1) return false;
      for (int64_t f : factors)
        if (poly_pow_mod(code, (q_ - 1) / f) == 1) return false;
      return true;
    };

    if (alpha_hint) {
      int64_t code = 0;
      for (int i = static_cast<int>(alpha_hint->size()) - 1; i >= 0; --i)
        code = code * p_ + mod_floor((*alpha_hint)[i], p_);
      if (!is_primitive(code)) throw Error("descriptor alpha is not primitive");
      alpha_code_ = code;
    } else {
      alpha_code_ = -1;
      int remaining = which_alpha;
      for (int64_t code = 1; code < q_; ++code) {
        if (is_primitive(code)) {
          if (remaining == 0) {
            alpha_code_ = code;
            break;
          }
          --remaining;
        }
      }
      if (alpha_code_ < 0) throw Error("no primitive element found (internal bug)");
    }

    exp_table_.assign(q_ - 1, 0);
    log_table_.assign(q_, 0);
    int64_t acc = 1;
    for (int64_t e = 0; e < q_ - 1; ++e) {
      exp_table_[e] = acc;
      log_table_[acc] = e;
      acc = poly_mul_mod(acc, alpha_code_);
    }
    if (acc != 1) throw Error("alpha order mismatch (internal bug)");
  }

  int64_t p_;
  int d_;
  int64_t q_;
  std::optional<int64_t> seed_;
  std::vector<int64_t> modulus_;   // constant term first, monic
  int64_t alpha_code_ = 0;
  std::vector<int64_t> exp_table_;  // exponent -> code
  std::vector<int64_t> log_table_;  // code -> exponent (code 0 unused)
};

using FieldPtr = std::shared_ptr<const FiniteField>;

inline FieldPtr make_field(int64_t p, int d, std::optional<int64_t> seed = {}) {
  return FiniteField::make(p, d, seed);
}

}  // namespace slce::gf

#endif  // SLCE_GF_HPP
