#include "brokensym/polyalg.hpp"

#include <algorithm>
#include <sstream>

namespace brokensym::poly {

// ---------------------------------------------------------------------------
// Field / Scalar

Field prime_field(unsigned long p) {
  if (p < 2) throw std::invalid_argument("prime_field: p must be >= 2");
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("prime_field: p is not prime");
  return Field{p};
}

namespace {

unsigned long mod_inverse(unsigned long a, unsigned long p) {
  // extended euclid on (a, p), p prime, a != 0 mod p
  long long t = 0, newt = 1, r = static_cast<long long>(p),
            newr = static_cast<long long>(a % p);
  while (newr != 0) {
    long long q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw std::domain_error("mod_inverse: not invertible");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<unsigned long>(t);
}

void check_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw std::invalid_argument("mixed scalar fields");
}

}  // namespace

void Scalar::reduce_() {
  v_.canonicalize();
  if (f_.is_rational()) return;
  const unsigned long p = f_.p;
  mpz_class num = v_.get_num(), den = v_.get_den();
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class n = num % pz;
  if (n < 0) n += pz;
  mpz_class d = den % pz;
  if (d == 0) throw std::domain_error("denominator divisible by p");
  unsigned long dinv = mod_inverse(d.get_ui(), p);
  mpz_class res = (n * mpz_class(dinv)) % pz;
  v_ = mpq_class(res);
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_), f_); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(f_, o.f_);
  return Scalar(mpq_class(v_ + o.v_), f_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(f_, o.f_);
  return Scalar(mpq_class(v_ - o.v_), f_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(f_, o.f_);
  return Scalar(mpq_class(v_ * o.v_), f_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(f_, o.f_);
  if (o.is_zero()) throw std::domain_error("scalar division by zero");
  if (f_.is_rational()) return Scalar(mpq_class(v_ / o.v_), f_);
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (f_.is_rational()) return Scalar(mpq_class(1 / v_), f_);
  unsigned long a = mpz_class(v_.get_num()).get_ui();
  return Scalar(mpq_class(mod_inverse(a, f_.p)), f_);
}

std::string Scalar::to_string() const { return v_.get_str(); }

// ---------------------------------------------------------------------------
// Monomial

std::string var_name(VarId v) {
  std::ostringstream os;
  os << 'x' << var_alphabet(v) << '_' << var_position(v);
  return os.str();
}

Monomial Monomial::variable(VarId v, int e) {
  Monomial m;
  if (e > 0) m.factors.emplace_back(v, static_cast<std::uint16_t>(e));
  return m;
}

int Monomial::total_exponent() const {
  int s = 0;
  for (auto& [v, e] : factors) s += e;
  return s;
}

int Monomial::exponent_of(VarId v) const {
  for (auto& [w, e] : factors)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  auto a = factors.begin(), b = o.factors.begin();
  while (a != factors.end() || b != o.factors.end()) {
    if (b == o.factors.end() || (a != factors.end() && a->first < b->first))
      r.factors.push_back(*a++);
    else if (a == factors.end() || b->first < a->first)
      r.factors.push_back(*b++);
    else {
      r.factors.emplace_back(a->first,
                             static_cast<std::uint16_t>(a->second + b->second));
      ++a, ++b;
    }
  }
  return r;
}

Monomial Monomial::without(VarId v, int e) const {
  Monomial r;
  for (auto& [w, k] : factors) {
    if (w == v) {
      if (k < e) throw std::logic_error("Monomial::without: exponent too small");
      if (k > e) r.factors.emplace_back(w, static_cast<std::uint16_t>(k - e));
    } else {
      r.factors.emplace_back(w, k);
    }
  }
  return r;
}

Monomial Monomial::rename(VarId from, VarId to) const {
  int e = exponent_of(from);
  if (e == 0) return *this;
  return without(from, e).times(variable(to, e));
}

bool Monomial::operator<(const Monomial& o) const {
  return factors < o.factors;
}

std::string Monomial::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [v, e] : factors) {
    if (!first) os << '*';
    first = false;
    os << var_name(v);
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(const Scalar& c) {
  Poly p(c.field());
  p.add_term(Monomial::unit(), c);
  return p;
}

Poly Poly::variable(VarId v, Field f) {
  Poly p(f);
  p.add_term(Monomial::variable(v), Scalar::one(f));
  return p;
}

Poly Poly::term(const Monomial& m, const Scalar& c) {
  Poly p(c.field());
  p.add_term(m, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Poly::is_homogeneous(int d) const {
  for (auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  check_same_field(f_, c.field());
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(f_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_same_field(f_, o.f_);
  Poly r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_same_field(f_, o.f_);
  Poly r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same_field(f_, o.f_);
  Poly r(f_);
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1 * c2);
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(f_);
  if (c.is_zero()) return r;
  for (auto& [m, k] : terms_) r.add_term(m, k * c);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return f_ == o.f_ && terms_ == o.terms_;
}

Poly Poly::substitute(VarId v, const Poly& replacement) const {
  Poly r(f_);
  for (auto& [m, c] : terms_) {
    int e = m.exponent_of(v);
    if (e == 0) {
      r.add_term(m, c);
      continue;
    }
    Poly piece = Poly::term(m.without(v, e), c);
    for (int k = 0; k < e; ++k) piece = piece * replacement;
    r = r + piece;
  }
  return r;
}

Poly Poly::rename_var(VarId from, VarId to) const {
  Poly r(f_);
  for (auto& [m, c] : terms_) r.add_term(m.rename(from, to), c);
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    std::string cs = c.to_string();
    if (!first) {
      if (!cs.empty() && cs[0] == '-') {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (m.is_unit()) {
      os << cs;
    } else if (cs == "1") {
      os << m.to_string();
    } else if (cs == "-1") {
      os << '-' << m.to_string();
    } else {
      os << cs << '*' << m.to_string();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Operators

Poly swap_action(const Poly& p, int alphabet, int m) {
  if (m < 1) throw std::invalid_argument("swap_action: bad position");
  VarId u = var_id(alphabet, m), v = var_id(alphabet, m + 1);
  VarId tmp = var_id(0xfe, 1);  // scratch id outside normal alphabets
  return p.rename_var(u, tmp).rename_var(v, u).rename_var(tmp, v);
}

Poly demazure(const Poly& p, int alphabet, int i) {
  VarId u = var_id(alphabet, i), v = var_id(alphabet, i + 1);
  Poly r(p.field());
  for (auto& [m, c] : p.terms()) {
    int a = m.exponent_of(u), b = m.exponent_of(v);
    if (a == b) continue;
    Monomial rest = m.without(u, a).without(v, b);
    // (u^a v^b - u^b v^a)/(u - v) = sign * sum_{c=min}^{max-1} u^c v^{a+b-1-c}
    int lo = std::min(a, b), hi = std::max(a, b);
    Scalar coeff = (a > b) ? c : -c;
    for (int e = lo; e < hi; ++e) {
      Monomial t = rest.times(Monomial::variable(u, e))
                       .times(Monomial::variable(v, a + b - 1 - e));
      r.add_term(t, coeff);
    }
  }
  return r;
}

namespace {
void enumerate_monomials(const std::vector<VarId>& vars, size_t idx, int left,
                         Monomial acc, std::vector<Monomial>& out) {
  if (idx + 1 == vars.size()) {
    out.push_back(acc.times(Monomial::variable(vars[idx], left)));
    return;
  }
  for (int e = left; e >= 0; --e)
    enumerate_monomials(vars, idx + 1, left - e,
                        acc.times(Monomial::variable(vars[idx], e)), out);
}
}  // namespace

std::vector<Monomial> graded_basis(const std::vector<VarId>& vars, int d) {
  if (d < 0) throw std::invalid_argument("graded_basis: negative degree");
  if (d % 2 != 0) throw std::invalid_argument("graded_basis: odd degree");
  std::vector<Monomial> out;
  if (vars.empty()) {
    if (d == 0) out.push_back(Monomial::unit());
    return out;
  }
  enumerate_monomials(vars, 0, d / 2, Monomial::unit(), out);
  return out;
}

long graded_dim_free(int n_vars, int d) {
  if (d < 0 || d % 2 != 0) return 0;
  if (n_vars == 0) return d == 0 ? 1 : 0;
  // C(d/2 + n - 1, n - 1)
  long n = d / 2, k = n_vars - 1;
  long num = 1, den = 1;
  for (long t = 1; t <= k; ++t) {
    num *= n + t;
    den *= t;
  }
  return num / den;
}

}  // namespace brokensym::poly
