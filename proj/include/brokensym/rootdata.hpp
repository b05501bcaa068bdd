#pragma once

// Cartan data (type A and general finite-type matrices), roots, Weyl action,
// and permutations extracted from braid words.

#include <string>
#include <vector>

namespace brokensym::rootdata {

// Returned by braid_exponent when a_ij * a_ji >= 4.
inline constexpr int kInfiniteBraidExponent = 0;

struct CartanDatum {
  int rank = 0;      // rank of the torus T
  int ss_rank = 0;   // semisimple rank, number of simple roots
  std::vector<std::vector<int>> cartan;  // ss_rank x ss_rank
  bool type_a = false;

  bool operator==(const CartanDatum&) const = default;
};

// SU(r): rank r, semisimple rank r-1, a_ij = -1 iff |i-j| = 1.
CartanDatum type_a(int r);

// General symmetrizable Cartan matrix; roots live in the root lattice, so
// rank == ss_rank here.  Validates a_ii = 2, a_ij <= 0, a_ij = 0 iff a_ji = 0.
CartanDatum from_matrix(std::vector<std::vector<int>> a);

// m_ij in {2,3,4,6} or kInfiniteBraidExponent; symmetric; i != j required.
int braid_exponent(const CartanDatum& cd, int i, int j);

struct RootVector {
  std::vector<int> coords;

  RootVector operator+(const RootVector&) const;
  RootVector operator-() const;
  bool operator==(const RootVector&) const = default;
  std::string to_string() const;
};

// alpha_i; type A convention: e_i - e_{i+1} in Z^r, otherwise the i-th root
// lattice basis vector.
RootVector simple_root(const CartanDatum& cd, int i);

// Applies the simple reflections of `word` left to right (first letter acts
// first).
RootVector weyl_apply(const CartanDatum& cd, const std::vector<int>& word,
                      RootVector v);

struct Permutation {
  std::vector<int> images;  // 1-based: images[i-1] = w(i)

  static Permutation identity(int n);
  int size() const { return static_cast<int>(images.size()); }
  int apply(int i) const { return images[i - 1]; }
  Permutation after(const Permutation& first) const;  // this o first
  int cycle_count() const;
  bool operator==(const Permutation&) const = default;
};

// (sign_j, w_{I_{j-1}}(alpha_{i_j})) for the letters (index, sign), plus the
// virtual dimension 2 * sum of signs.
struct VRepresentation {
  std::vector<std::pair<int, RootVector>> signed_roots;
  int virtual_dim = 0;
};
VRepresentation v_representation(const CartanDatum& cd,
                                 const std::vector<std::pair<int, int>>& letters);

// Weyl image (product of transpositions, signs ignored) and its cycle count.
// Type A only.
struct PermutationComponents {
  Permutation permutation;
  int component_count = 0;
};
PermutationComponents permutation_and_components(
    const CartanDatum& cd, const std::vector<std::pair<int, int>>& letters);

}  // namespace brokensym::rootdata
