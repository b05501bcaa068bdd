#include "brokensym/cubeposet.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace brokensym::cube {

int CubePoset::distance(Mask v) const {
  if (v >= static_cast<Mask>(1u << k))
    throw std::invalid_argument("distance: vertex out of range");
  return std::popcount(v ^ terminal);
}

std::vector<Mask> CubePoset::layer(int t) const {
  if (t < 0 || t > k) throw std::invalid_argument("layer: t out of range");
  std::vector<Mask> out;
  for (Mask v = 0; v < static_cast<Mask>(1u << k); ++v)
    if (distance(v) == t) out.push_back(v);
  return out;
}

int edge_sign(Mask vertex, Mask terminal, int letter) {
  Mask below = (letter > 1) ? ((vertex ^ terminal) & ((1u << (letter - 1)) - 1)) : 0;
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

CubePoset build(const braid::BraidWord& w) {
  CubePoset p;
  p.word = w;
  p.k = w.length();
  if (p.k > 30) throw std::invalid_argument("build: word too long for cube poset");
  p.terminal = 0;
  for (int j = 0; j < p.k; ++j)
    if (w.letters[j].sign > 0) p.terminal |= (1u << j);
  for (Mask v = 0; v < static_cast<Mask>(1u << p.k); ++v) {
    for (int j = 1; j <= p.k; ++j) {
      Mask bit = 1u << (j - 1);
      if (((v ^ p.terminal) & bit) == 0) continue;  // bit already agrees
      Mask towards = v ^ bit;
      p.edges.push_back(CubeEdge{v, towards, j, edge_sign(v, p.terminal, j)});
    }
  }
  return p;
}

namespace {
std::string mask_string(Mask v, int k) {
  std::string s(k, '0');
  for (int j = 0; j < k; ++j)
    if (v & (1u << j)) s[j] = '1';
  return s.empty() ? "-" : s;
}
}  // namespace

std::string CubePoset::dump() const {
  std::ostringstream os;
  os << "poset k=" << k << " terminal=" << mask_string(terminal, k) << "\n";
  for (Mask v = 0; v < static_cast<Mask>(1u << k); ++v)
    os << "vertex " << mask_string(v, k) << " dist=" << distance(v) << "\n";
  for (auto& e : edges)
    os << "edge " << mask_string(e.source, k) << " -> " << mask_string(e.target, k)
       << " letter " << e.letter << " sign " << (e.sign > 0 ? "+1" : "-1") << "\n";
  return os.str();
}

ReducedSequencePoset reduced_sequence_poset(int i, int j, int m, int m_ij) {
  if (m_ij < 1 || m_ij == rootdata::kInfiniteBraidExponent)
    throw std::invalid_argument("reduced_sequence_poset: bad m_ij");
  if (m < 1 || m > m_ij)
    throw std::invalid_argument("reduced_sequence_poset: m out of range");
  if (i == j) throw std::invalid_argument("reduced_sequence_poset: i == j");
  ReducedSequencePoset p;
  p.i = i;
  p.j = j;
  p.m = m;
  p.m_ij = m_ij;
  // The alternation i,j,i,... has m_ij letters; its last m letters start with
  // i when m_ij - m is even, j otherwise.
  int tail_start = ((m_ij - m) % 2 == 0) ? i : j;
  p.elements.push_back({0, 0});
  for (int len = 1; len < m; ++len) {
    int a = std::min(i, j), b = std::max(i, j);
    p.elements.push_back({a, len});
    p.elements.push_back({b, len});
  }
  p.elements.push_back({tail_start, m});
  return p;
}

}  // namespace brokensym::cube
