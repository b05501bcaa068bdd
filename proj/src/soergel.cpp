#include "brokensym/soergel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace brokensym::soergel {

using poly::Field;
using poly::Monomial;
using poly::Poly;
using poly::Scalar;
using poly::VarId;
using poly::var_alphabet;
using poly::var_id;
using poly::var_position;

poly::VarId BSShape::wall_var(int t) const {
  if (t < 1 || t > wall_count()) throw std::invalid_argument("wall_var: bad wall");
  return var_id(t, walls[t - 1]);
}

std::vector<VarId> BSShape::base_vars() const {
  std::vector<VarId> v;
  for (int m = 1; m <= strands; ++m) v.push_back(var_id(0, m));
  return v;
}

bool BSShape::operator<(const BSShape& o) const {
  if (strands != o.strands) return strands < o.strands;
  if (walls != o.walls) return walls < o.walls;
  return internal_shift < o.internal_shift;
}

namespace {

struct Rewrite {
  VarId var;
  int rule;  // 0: rename down, 1: linear elimination, 2: quadratic reduction
};

// Finds the highest-priority reducible variable occurrence of a monomial:
// scan from the highest alphabet down; within a wall alphabet the partner
// position x^{(t)}_{i+1} reduces before the wall variable itself.
std::optional<Rewrite> find_rewrite(const Monomial& m, const BSShape& shape) {
  std::optional<Rewrite> best;
  auto better = [&](const Rewrite& r, int rank) {
    static_cast<void>(rank);
    best = r;
  };
  int best_rank = -1;
  for (auto& [v, e] : m.factors) {
    int a = var_alphabet(v);
    if (a == 0) continue;
    if (a > shape.wall_count())
      throw std::invalid_argument("normal_form: variable outside shape alphabets");
    int pos = var_position(v);
    if (pos < 1 || pos > shape.strands)
      throw std::invalid_argument("normal_form: variable position out of range");
    int i = shape.walls[a - 1];
    int rule;
    int sub;  // priority within alphabet
    if (pos == i) {
      if (e < 2) continue;
      rule = 2, sub = 0;
    } else if (pos == i + 1) {
      rule = 1, sub = 1;
    } else {
      rule = 0, sub = 2;
    }
    int rank = a * 4 + sub;
    if (rank > best_rank) {
      best_rank = rank;
      better(Rewrite{v, rule}, rank);
    }
  }
  return best;
}

// Rewrites one monomial term by one step; result may need further reduction.
Poly rewrite_term(const Monomial& m, const Scalar& c, const Rewrite& rw,
                  const BSShape& shape) {
  Field f = c.field();
  int a = var_alphabet(rw.var);
  int i = shape.walls[a - 1];
  int e = m.exponent_of(rw.var);
  switch (rw.rule) {
    case 0: {
      // x^{(a)}_m -> x^{(a-1)}_m wholesale
      return Poly::term(m.rename(rw.var, var_id(a - 1, var_position(rw.var))), c);
    }
    case 1: {
      // x^{(a)}_{i+1} -> x^{(a-1)}_i + x^{(a-1)}_{i+1} - x^{(a)}_i
      Poly lin = Poly::variable(var_id(a - 1, i), f) +
                 Poly::variable(var_id(a - 1, i + 1), f) -
                 Poly::variable(var_id(a, i), f);
      Poly rest = Poly::term(m.without(rw.var, e), c);
      for (int k = 0; k < e; ++k) rest = rest * lin;
      return rest;
    }
    case 2: {
      // (x^{(a)}_i)^2 -> (x^{(a-1)}_i + x^{(a-1)}_{i+1}) x^{(a)}_i
      //                  - x^{(a-1)}_i x^{(a-1)}_{i+1}
      Poly e1 = Poly::variable(var_id(a - 1, i), f) +
                Poly::variable(var_id(a - 1, i + 1), f);
      Poly e2 = Poly::variable(var_id(a - 1, i), f) *
                Poly::variable(var_id(a - 1, i + 1), f);
      Poly y = Poly::variable(rw.var, f);
      Poly repl = e1 * y - e2;  // = y^2
      Poly rest = Poly::term(m.without(rw.var, 2), c);
      return rest * repl;
    }
  }
  throw std::logic_error("rewrite_term: bad rule");
}

}  // namespace

poly::Poly normal_form_poly(const Poly& raw, const BSShape& shape) {
  Poly work = raw;
  Poly done(raw.field());
  while (!work.is_zero()) {
    auto it = work.terms().begin();
    Monomial m = it->first;
    Scalar c = it->second;
    auto rw = find_rewrite(m, shape);
    if (!rw) {
      done.add_term(m, c);
      work = work - Poly::term(m, c);
    } else {
      work = work - Poly::term(m, c) + rewrite_term(m, c, *rw, shape);
    }
  }
  return done;
}

BSElement normal_form(const Poly& raw, const BSShape& shape) {
  return BSElement{shape, normal_form_poly(raw, shape)};
}

BSElement bs_one(const BSShape& shape, Field f) {
  return BSElement{shape, Poly::one(f)};
}

BSElement left_mult(const BSElement& e, int m) {
  if (m < 1 || m > e.shape.strands)
    throw std::invalid_argument("left_mult: position out of range");
  return BSElement{e.shape,
                   e.value * Poly::variable(var_id(0, m), e.value.field())};
}

BSElement right_mult(const BSElement& e, int m) {
  if (m < 1 || m > e.shape.strands)
    throw std::invalid_argument("right_mult: position out of range");
  Poly raw = e.value * Poly::variable(var_id(e.shape.wall_count(), m),
                                      e.value.field());
  return normal_form(raw, e.shape);
}

Monomial basis_monomial(const BSShape& shape, std::uint32_t mask) {
  Monomial m;
  for (int t = 1; t <= shape.wall_count(); ++t)
    if (mask & (1u << (t - 1))) m = m.times(Monomial::variable(shape.wall_var(t)));
  return m;
}

std::vector<Poly> left_coordinates(const BSElement& e) {
  int q = e.shape.wall_count();
  std::vector<Poly> coords(size_t{1} << q, Poly(e.value.field()));
  for (auto& [m, c] : e.value.terms()) {
    std::uint32_t mask = 0;
    Monomial rest;
    for (auto& [v, ex] : m.factors) {
      int a = var_alphabet(v);
      if (a == 0) {
        rest = rest.times(Monomial::variable(v, ex));
      } else {
        if (ex != 1 || v != e.shape.wall_var(a))
          throw std::logic_error("left_coordinates: element not in normal form");
        mask |= 1u << (a - 1);
      }
    }
    coords[mask].add_term(rest, c);
  }
  return coords;
}

long graded_dim(const BSShape& shape, int d) {
  long total = 0;
  int q = shape.wall_count();
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask)
    total += poly::graded_dim_free(shape.strands, d - 2 * std::popcount(mask));
  return total;
}

ModuleBasis module_basis(const BSShape& shape, int d) {
  ModuleBasis b;
  int q = shape.wall_count();
  auto base = shape.base_vars();
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
    int rem = d - 2 * std::popcount(mask);
    if (rem < 0 || rem % 2 != 0) continue;
    for (auto& m : poly::graded_basis(base, rem)) b.elems.emplace_back(mask, m);
  }
  return b;
}

int ModuleBasis::find(std::uint32_t mask, const Monomial& m) const {
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i].first == mask && elems[i].second == m) return static_cast<int>(i);
  return -1;
}

linalg::Col coordinates(const Poly& value, const ModuleBasis& basis) {
  // index lookup by (mask, monomial)
  std::map<std::pair<std::uint32_t, Monomial>, int> index;
  for (size_t i = 0; i < basis.elems.size(); ++i)
    index[{basis.elems[i].first, basis.elems[i].second}] = static_cast<int>(i);
  std::map<int, Scalar> acc;
  for (auto& [m, c] : value.terms()) {
    std::uint32_t mask = 0;
    Monomial rest;
    for (auto& [v, ex] : m.factors) {
      if (var_alphabet(v) == 0)
        rest = rest.times(Monomial::variable(v, ex));
      else
        mask |= 1u << (var_alphabet(v) - 1);
    }
    auto it = index.find({mask, rest});
    if (it == index.end())
      throw std::logic_error("coordinates: term outside basis (degree mismatch?)");
    acc.emplace(it->second, c);
  }
  linalg::Col col;
  for (auto& [row, val] : acc)
    if (!val.is_zero()) col.push_back({row, val});
  return col;
}

Poly BimoduleMap::apply_poly(const Poly& normal_value) const {
  BSElement e{source, normal_value};
  auto coords = left_coordinates(e);
  Poly out(field);
  for (std::uint32_t mask = 0; mask < coords.size(); ++mask) {
    if (coords[mask].is_zero()) continue;
    out = out + coords[mask] * images[mask];
  }
  return out;
}

BSElement BimoduleMap::apply(const BSElement& e) const {
  if (!(e.shape == source)) throw std::invalid_argument("apply: shape mismatch");
  return BSElement{target, apply_poly(e.value)};
}

namespace {
// Renames alphabets of a monomial: a -> a + delta for all a >= from.
Monomial shift_alphabets(const Monomial& m, int from, int delta) {
  Monomial out;
  for (auto& [v, e] : m.factors) {
    int a = var_alphabet(v);
    VarId w = (a >= from) ? var_id(a + delta, var_position(v)) : v;
    out = out.times(Monomial::variable(w, e));
  }
  return out;
}

Poly shift_alphabets(const Poly& p, int from, int delta) {
  Poly out(p.field());
  for (auto& [m, c] : p.terms()) out.add_term(shift_alphabets(m, from, delta), c);
  return out;
}
}  // namespace

BimoduleMap merge_wall(const BSShape& shape, int t, Field f) {
  if (t < 1 || t > shape.wall_count())
    throw std::invalid_argument("merge_wall: wall out of range");
  BSShape target = shape;
  target.walls.erase(target.walls.begin() + (t - 1));
  BimoduleMap map{shape, target, 0, {}, f};
  int q = shape.wall_count();
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
    Monomial img = shift_alphabets(basis_monomial(shape, mask), t, -1);
    map.images.push_back(normal_form_poly(Poly::term(img, Scalar::one(f)), target));
  }
  return map;
}

BimoduleMap insert_wall(const BSShape& source, int t, int index, Field f) {
  if (t < 1 || t > source.wall_count() + 1)
    throw std::invalid_argument("insert_wall: slot out of range");
  if (index < 1 || index >= source.strands)
    throw std::invalid_argument("insert_wall: generator index out of range");
  BSShape target = source;
  target.walls.insert(target.walls.begin() + (t - 1), index);
  target.internal_shift = source.internal_shift - 2;
  // wall element x^{(t-1)}_i - x^{(t)}_{i+1}
  Poly beta = Poly::variable(var_id(t - 1, index), f) -
              Poly::variable(var_id(t, index + 1), f);
  BimoduleMap map{source, target, 2, {}, f};
  int q = source.wall_count();
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
    Monomial img = shift_alphabets(basis_monomial(source, mask), t, +1);
    Poly raw = Poly::term(img, Scalar::one(f)) * beta;
    map.images.push_back(normal_form_poly(raw, target));
  }
  return map;
}

BimoduleMap identity_map(const BSShape& shape, Field f) {
  BimoduleMap map{shape, shape, 0, {}, f};
  int q = shape.wall_count();
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask)
    map.images.push_back(
        Poly::term(basis_monomial(shape, mask), Scalar::one(f)));
  return map;
}

BimoduleMap compose(const BimoduleMap& second, const BimoduleMap& first) {
  if (!(first.target == second.source))
    throw std::invalid_argument("compose: shape mismatch");
  BimoduleMap map{first.source, second.target, first.degree + second.degree,
                  {}, first.field};
  for (auto& img : first.images) map.images.push_back(second.apply_poly(img));
  return map;
}

bool maps_equal(const BimoduleMap& a, const BimoduleMap& b) {
  return a.source == b.source && a.target == b.target && a.images == b.images;
}

BimoduleMap scaled(const BimoduleMap& m, const Scalar& c) {
  BimoduleMap out = m;
  for (auto& img : out.images) img = img.scaled(c);
  return out;
}

linalg::SparseMat matrix_of(const BimoduleMap& map, int d) {
  ModuleBasis src = module_basis(map.source, d);
  ModuleBasis tgt = module_basis(map.target, d + map.degree);
  std::map<std::pair<std::uint32_t, Monomial>, int> index;
  for (size_t i = 0; i < tgt.elems.size(); ++i)
    index[{tgt.elems[i].first, tgt.elems[i].second}] = static_cast<int>(i);

  linalg::SparseMat out;
  out.rows = static_cast<int>(tgt.elems.size());
  out.cols.resize(src.elems.size());
  for (size_t c = 0; c < src.elems.size(); ++c) {
    auto& [mask, mono] = src.elems[c];
    // left coefficients pass through: image = mono * images[mask]
    Poly img = map.images[mask] * Poly::term(mono, Scalar::one(map.field));
    for (auto& [m, coef] : img.terms()) {
      std::uint32_t tmask = 0;
      Monomial rest;
      for (auto& [v, ex] : m.factors) {
        if (var_alphabet(v) == 0)
          rest = rest.times(Monomial::variable(v, ex));
        else
          tmask |= 1u << (var_alphabet(v) - 1);
      }
      auto it = index.find({tmask, rest});
      if (it == index.end())
        throw std::logic_error("matrix_of: image term outside target basis");
      out.add_entry(it->second, static_cast<int>(c), coef);
    }
  }
  return out;
}

}  // namespace brokensym::soergel
