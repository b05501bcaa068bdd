#pragma once

// Exact multivariate polynomial arithmetic over Q (or a prime field F_p)
// in several alphabets of variables x^{(a)}_m.  Every variable has internal
// degree 2.  Monomials are kept in a canonical sorted form so that equality,
// hashing and rendering are deterministic.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace brokensym::poly {

// ---------------------------------------------------------------------------
// Coefficient field

struct Field {
  // p == 0 means the rationals, otherwise the prime field F_p.
  unsigned long p = 0;
  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
};

inline Field rationals() { return Field{0}; }

// Validates primality (trial division; fields of desk-scale size).
Field prime_field(unsigned long p);

class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n, Field f) : v_(n), f_(f) { reduce_(); }
  Scalar(mpq_class v, Field f) : v_(std::move(v)), f_(f) { reduce_(); }

  static Scalar zero(Field f) { return Scalar(0, f); }
  static Scalar one(Field f) { return Scalar(1, f); }

  const Field& field() const { return f_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Scalar operator-() const;
  Scalar operator+(const Scalar&) const;
  Scalar operator-(const Scalar&) const;
  Scalar operator*(const Scalar&) const;
  Scalar operator/(const Scalar&) const;  // throws on division by zero
  Scalar inverse() const;
  bool operator==(const Scalar& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void reduce_();  // canonical residue for F_p
  mpq_class v_;
  Field f_;
};

// ---------------------------------------------------------------------------
// Variables and monomials

// Variable x^{(a)}_m encoded as (a << 8) | m with 1-based position m.
using VarId = std::uint16_t;

inline VarId var_id(int alphabet, int position) {
  return static_cast<VarId>((alphabet << 8) | position);
}
inline int var_alphabet(VarId v) { return v >> 8; }
inline int var_position(VarId v) { return v & 0xff; }

std::string var_name(VarId v);  // "x<a>_<m>"

struct Monomial {
  // Factors sorted by VarId, exponents strictly positive.
  std::vector<std::pair<VarId, std::uint16_t>> factors;

  static Monomial unit() { return Monomial{}; }
  static Monomial variable(VarId v, int e = 1);

  bool is_unit() const { return factors.empty(); }
  int total_exponent() const;
  int degree() const { return 2 * total_exponent(); }
  int exponent_of(VarId v) const;

  Monomial times(const Monomial&) const;
  // Divides out v^e; caller must ensure exponent_of(v) >= e.
  Monomial without(VarId v, int e) const;
  Monomial rename(VarId from, VarId to) const;  // "to" must not collide

  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial&) const;

  std::string to_string() const;
};

// ---------------------------------------------------------------------------
// Polynomials

class Poly {
 public:
  explicit Poly(Field f = rationals()) : f_(f) {}

  static Poly zero(Field f) { return Poly(f); }
  static Poly one(Field f) { return constant(Scalar::one(f)); }
  static Poly constant(const Scalar& c);
  static Poly variable(VarId v, Field f);
  static Poly term(const Monomial& m, const Scalar& c);

  const Field& field() const { return f_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // Total degree of the highest term, -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int d) const;

  void add_term(const Monomial& m, const Scalar& c);

  Poly operator-() const;
  Poly operator+(const Poly&) const;
  Poly operator-(const Poly&) const;
  Poly operator*(const Poly&) const;
  Poly scaled(const Scalar& c) const;
  bool operator==(const Poly&) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Wholesale substitution of one variable by a polynomial.
  Poly substitute(VarId v, const Poly& replacement) const;
  Poly rename_var(VarId from, VarId to) const;

  std::string to_string() const;

 private:
  Field f_;
  std::map<Monomial, Scalar> terms_;
};

// ---------------------------------------------------------------------------
// Operators

// Transposition of x^{(a)}_m and x^{(a)}_{m+1}.
Poly swap_action(const Poly& p, int alphabet, int m);

// Divided difference on alphabet a at index i:
//   (p - s_i p) / (x^{(a)}_i - x^{(a)}_{i+1}),
// computed term by term via the telescoping identity, so the division is
// exact by construction.
Poly demazure(const Poly& p, int alphabet, int i);

// All monomials in the given variables of internal degree d (d even), in the
// canonical order: earlier variables take the largest exponents first.
std::vector<Monomial> graded_basis(const std::vector<VarId>& vars, int d);

// dim of the degree-d piece of a polynomial ring in n variables (degree-2
// generators); 0 for negative or odd d.
long graded_dim_free(int n_vars, int d);

}  // namespace brokensym::poly
