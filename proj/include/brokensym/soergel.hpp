#pragma once

// Bott-Samelson bimodules presented by wall relations between adjacent
// alphabets.  A shape with walls (j_1..j_q) uses alphabets 0..q; wall t with
// index i identifies the alphabets t-1 and t away from positions {i, i+1}
// and preserves the two elementary symmetric functions on that pair.  The
// normal form eliminates, for wall t:
//   x^{(t)}_m          (m outside {i, i+1})      -> x^{(t-1)}_m
//   x^{(t)}_{i+1}                                -> x^{(t-1)}_i + x^{(t-1)}_{i+1} - x^{(t)}_i
//   (x^{(t)}_i)^2      -> (x^{(t-1)}_i + x^{(t-1)}_{i+1}) x^{(t)}_i - x^{(t-1)}_i x^{(t-1)}_{i+1}
// so the bimodule is a free left module over R = alphabet 0 with basis the
// 2^q square-free monomials in the wall variables x^{(t)}_{i_t}.

#include <cstdint>
#include <vector>

#include "brokensym/linalg.hpp"
#include "brokensym/polyalg.hpp"

namespace brokensym::soergel {

struct BSShape {
  int strands = 1;
  std::vector<int> walls;   // generator indices, wall t is walls[t-1]
  int internal_shift = 0;   // even; -2 per negative letter in the cube vertex

  int wall_count() const { return static_cast<int>(walls.size()); }
  poly::VarId wall_var(int t) const;          // x^{(t)}_{walls[t-1]}
  std::vector<poly::VarId> base_vars() const;  // alphabet 0

  bool operator==(const BSShape&) const = default;
  bool operator<(const BSShape& o) const;
};

struct BSElement {
  BSShape shape;
  poly::Poly value;  // in normal form
};

// Rewrites to normal form; idempotent.  Throws if the polynomial mentions
// variables outside the shape's alphabets.
BSElement normal_form(const poly::Poly& raw, const BSShape& shape);
poly::Poly normal_form_poly(const poly::Poly& raw, const BSShape& shape);

BSElement bs_one(const BSShape& shape, poly::Field f);
BSElement left_mult(const BSElement& e, int m);
BSElement right_mult(const BSElement& e, int m);

// Free-basis monomial for a subset of walls (bit t-1 of mask <-> wall t).
poly::Monomial basis_monomial(const BSShape& shape, std::uint32_t mask);

// Left coordinates over R: value = sum_mask coord[mask] * basis_monomial(mask).
std::vector<poly::Poly> left_coordinates(const BSElement& e);

// dim of the degree-d piece (raw grading, ignoring internal_shift).
long graded_dim(const BSShape& shape, int d);

// Basis of the degree-d piece: (wall mask, alphabet-0 monomial) pairs in
// canonical order.
struct ModuleBasis {
  std::vector<std::pair<std::uint32_t, poly::Monomial>> elems;
  int find(std::uint32_t mask, const poly::Monomial& m) const;  // -1 if absent
};
ModuleBasis module_basis(const BSShape& shape, int d);

// Coordinates of a normal-form polynomial of homogeneous degree d.
linalg::Col coordinates(const poly::Poly& value, const ModuleBasis& basis);

struct BimoduleMap {
  BSShape source, target;
  int degree = 0;  // raw polynomial degree: 0 for merge, +2 for insert
  std::vector<poly::Poly> images;  // image of each source basis monomial
  poly::Field field;

  poly::Poly apply_poly(const poly::Poly& normal_value) const;
  BSElement apply(const BSElement& e) const;
};

// Cohomology image of dropping a positive letter: alphabet merge at wall t.
// Degree 0, target keeps the source internal_shift.
BimoduleMap merge_wall(const BSShape& shape, int t, poly::Field f);

// Cohomology image of dropping a negative letter: wall insertion at slot t
// with generator index i.  Multiplication by the wall element
// x^{(t-1)}_i - x^{(t)}_{i+1}; raw degree +2, target internal_shift is the
// source shift minus 2.
BimoduleMap insert_wall(const BSShape& source, int t, int index, poly::Field f);

BimoduleMap identity_map(const BSShape& shape, poly::Field f);
BimoduleMap compose(const BimoduleMap& second, const BimoduleMap& first);
bool maps_equal(const BimoduleMap& a, const BimoduleMap& b);
BimoduleMap scaled(const BimoduleMap& m, const poly::Scalar& c);

// Matrix between the degree-d piece of the source and the degree
// (d + map.degree) piece of the target, in the canonical bases.
linalg::SparseMat matrix_of(const BimoduleMap& map, int d);

}  // namespace brokensym::soergel
