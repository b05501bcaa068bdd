#include "brokensym/rootdata.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace brokensym::rootdata {

CartanDatum type_a(int r) {
  if (r < 1) throw std::invalid_argument("type_a: rank must be >= 1");
  CartanDatum cd;
  cd.rank = r;
  cd.ss_rank = r - 1;
  cd.type_a = true;
  cd.cartan.assign(r - 1, std::vector<int>(r - 1, 0));
  for (int i = 0; i < r - 1; ++i) {
    cd.cartan[i][i] = 2;
    if (i + 1 < r - 1) {
      cd.cartan[i][i + 1] = -1;
      cd.cartan[i + 1][i] = -1;
    }
  }
  return cd;
}

CartanDatum from_matrix(std::vector<std::vector<int>> a) {
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw std::invalid_argument("from_matrix: not square");
    if (a[i][i] != 2) throw std::invalid_argument("from_matrix: a_ii must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw std::invalid_argument("from_matrix: a_ij must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw std::invalid_argument("from_matrix: a_ij = 0 iff a_ji = 0 violated");
    }
  }
  CartanDatum cd;
  cd.rank = n;
  cd.ss_rank = n;
  cd.cartan = std::move(a);
  cd.type_a = false;
  return cd;
}

int braid_exponent(const CartanDatum& cd, int i, int j) {
  if (i == j) throw std::invalid_argument("braid_exponent: i == j has no relation");
  if (i < 1 || j < 1 || i > cd.ss_rank || j > cd.ss_rank)
    throw std::invalid_argument("braid_exponent: index out of range");
  int prod = cd.cartan[i - 1][j - 1] * cd.cartan[j - 1][i - 1];
  switch (prod) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return kInfiniteBraidExponent;
  }
}

RootVector RootVector::operator+(const RootVector& o) const {
  if (coords.size() != o.coords.size())
    throw std::invalid_argument("RootVector: size mismatch");
  RootVector r = *this;
  for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

RootVector RootVector::operator-() const {
  RootVector r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

std::string RootVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << coords[i];
  }
  os << ')';
  return os.str();
}

RootVector simple_root(const CartanDatum& cd, int i) {
  if (i < 1 || i > cd.ss_rank)
    throw std::invalid_argument("simple_root: index out of range");
  RootVector v;
  v.coords.assign(cd.rank, 0);
  if (cd.type_a) {
    v.coords[i - 1] = 1;
    v.coords[i] = -1;
  } else {
    v.coords[i - 1] = 1;
  }
  return v;
}

namespace {
void reflect_in_place(const CartanDatum& cd, int i, RootVector& v) {
  if (i < 1 || i > cd.ss_rank)
    throw std::invalid_argument("weyl_apply: index out of range");
  if (cd.type_a) {
    std::swap(v.coords[i - 1], v.coords[i]);
  } else {
    // s_i(e_j) = e_j - a_ij e_i in root lattice coordinates
    int pairing = 0;
    for (int j = 0; j < cd.ss_rank; ++j) pairing += cd.cartan[i - 1][j] * v.coords[j];
    v.coords[i - 1] -= pairing;
  }
}
}  // namespace

RootVector weyl_apply(const CartanDatum& cd, const std::vector<int>& word,
                      RootVector v) {
  if (static_cast<int>(v.coords.size()) != cd.rank)
    throw std::invalid_argument("weyl_apply: vector has wrong rank");
  for (int i : word) reflect_in_place(cd, i, v);
  return v;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Permutation Permutation::after(const Permutation& first) const {
  Permutation r;
  r.images.resize(images.size());
  for (size_t i = 0; i < images.size(); ++i) r.images[i] = apply(first.images[i]);
  return r;
}

int Permutation::cycle_count() const {
  int n = size(), count = 0;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++count;
    for (int j = i; !seen[j]; j = images[j] - 1) seen[j] = true;
  }
  return count;
}

VRepresentation v_representation(
    const CartanDatum& cd, const std::vector<std::pair<int, int>>& letters) {
  VRepresentation out;
  std::vector<int> prefix;
  for (auto& [index, sign] : letters) {
    RootVector root = weyl_apply(cd, prefix, simple_root(cd, index));
    out.signed_roots.emplace_back(sign, root);
    out.virtual_dim += 2 * sign;
    prefix.push_back(index);
  }
  return out;
}

PermutationComponents permutation_and_components(
    const CartanDatum& cd, const std::vector<std::pair<int, int>>& letters) {
  if (!cd.type_a)
    throw std::invalid_argument(
        "permutation_and_components: component semantics require type A");
  Permutation p = Permutation::identity(cd.rank);
  for (auto& [index, sign] : letters) {
    std::swap(p.images[index - 1], p.images[index]);
  }
  return PermutationComponents{p, p.cycle_count()};
}

}  // namespace brokensym::rootdata
