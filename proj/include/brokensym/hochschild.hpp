#pragma once

// Hochschild homology of Bott-Samelson bimodules via the Koszul complex on
// the commuting operators  mu_s = left_mult(x_s) - right_mult(x_s),
// s = 1..strands.  Exterior generators theta_s carry internal degree +2, so
// the differential preserves the total internal degree
//   T = (module degree) + 2 * |theta set|.
// The engine caches, per shape and total degree, homology dimensions,
// representative cycles and a solver that expresses cycles in terms of
// (boundaries | representatives); bimodule maps act slotwise on theta.

#include <map>
#include <memory>
#include <vector>

#include "brokensym/linalg.hpp"
#include "brokensym/soergel.hpp"

namespace brokensym::hochschild {

// Slot basis at exterior degree j and total degree T: pairs of a theta
// subset (ordered combinations of {1..r}, lexicographic) and a module basis
// element of degree T - 2j.
struct SlotBasis {
  std::vector<std::vector<int>> theta_sets;
  soergel::ModuleBasis module;
  int module_dim = 0;
  int dim() const { return static_cast<int>(theta_sets.size()) * module_dim; }
  int index(int theta_idx, int module_idx) const {
    return theta_idx * module_dim + module_idx;
  }
};
SlotBasis slot_basis(const soergel::BSShape& shape, int j, int T);

// Matrix of the Koszul differential from exterior degree |S| into the
// |S|-1 components; d is the module degree of the source slot.
linalg::SparseMat koszul_matrix(const soergel::BSShape& shape,
                                const std::vector<int>& S, int d,
                                poly::Field f);

class HHEngine {
 public:
  explicit HHEngine(poly::Field f) : field_(f) {}

  struct Homology {
    int dim = 0;
    std::vector<linalg::Col> reps;  // cycles in slot coordinates
  };

  // T = total internal degree (raw, before any internal_shift).
  const Homology& homology(const soergel::BSShape& shape, int j, int T);

  // Matrix H_j(source)_T -> H_j(target)_{T + map.degree} induced by a
  // bimodule map (theta slots untouched).
  linalg::SparseMat induced(const soergel::BimoduleMap& map, int j, int T);

  // Expresses a cycle in homology coordinates (mod boundaries); the column
  // must lie in ker of the outgoing differential.
  std::vector<poly::Scalar> homology_class(const soergel::BSShape& shape,
                                           int j, int T,
                                           const linalg::Col& cycle);

  poly::Field field() const { return field_; }

 private:
  struct DegreeData {
    Homology hom;
    std::unique_ptr<linalg::SpanSolver> solver;  // over [boundaries | reps]
    int boundary_count = 0;
  };
  using Key = std::tuple<int, std::vector<int>, int, int>;  // strands, walls, j, T
  DegreeData& data(const soergel::BSShape& shape, int j, int T);

  poly::Field field_;
  std::map<Key, DegreeData> cache_;
  // right-multiplication images of free basis elements, per shape
  std::map<std::pair<int, std::vector<int>>, std::vector<std::vector<poly::Poly>>>
      right_images_;
  const std::vector<std::vector<poly::Poly>>& right_images(
      const soergel::BSShape& shape);
};

// (j, d) -> dim HH_j(shape)_d for 0 <= d <= cutoff (d = total degree),
// computed with exact rank arithmetic.
std::map<std::pair<int, int>, int> hh_dims(const soergel::BSShape& shape,
                                           int cutoff, poly::Field f);

}  // namespace brokensym::hochschild
