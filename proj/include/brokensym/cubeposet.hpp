#pragma once

// The signed cube poset 2^I of a braid word.  Vertices are bitmasks (bit j
// set iff letter j is present in the subset), the terminal vertex keeps
// exactly the positive letters, and every edge toggles one bit towards the
// terminal vertex.  Edge signs are the Koszul cube signs relative to the
// terminal vertex, so the two edge paths around any 2-face anticommute.

#include <cstdint>
#include <string>
#include <vector>

#include "brokensym/braidword.hpp"

namespace brokensym::cube {

using Mask = std::uint32_t;

struct CubeEdge {
  Mask source;  // larger distance to terminal
  Mask target;  // distance smaller by one
  int letter;   // 1-based letter position toggled
  int sign;     // +1 / -1
};

struct CubePoset {
  braid::BraidWord word;
  int k = 0;
  Mask terminal = 0;
  std::vector<CubeEdge> edges;  // ordered by (source, letter)

  int vertex_count() const { return 1 << k; }
  int distance(Mask v) const;
  std::vector<Mask> layer(int t) const;
  std::string dump() const;  // line-oriented adjacency listing
};

CubePoset build(const braid::BraidWord& w);

// Sign of the edge at `vertex` toggling bit `letter`:
// (-1)^{# positions < letter where vertex differs from terminal}.
int edge_sign(Mask vertex, Mask terminal, int letter);

// Poset of reduced alternating sequences in two letters.  Elements are the
// classes of subsequences of the last m letters of the alternation
// i,j,i,... (m_ij letters); there are exactly 2m of them.
struct ReducedSequencePoset {
  int i = 0, j = 0, m = 0, m_ij = 0;

  struct Element {
    int start;  // first letter of the reduced sequence; 0 for the empty one
    int len;
    bool operator==(const Element&) const = default;
  };
  std::vector<Element> elements;  // sorted by (len, start)

  // Unique nontrivial morphism from shorter into strictly longer sequences.
  bool leq(const Element& a, const Element& b) const {
    return a == b || a.len < b.len;
  }
};

ReducedSequencePoset reduced_sequence_poset(int i, int j, int m, int m_ij);

}  // namespace brokensym::cube
