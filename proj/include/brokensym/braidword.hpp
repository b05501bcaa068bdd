#pragma once

// Braid words over a Cartan datum, the text format, and the word moves:
// cyclic permutation, braid relation, inverse contraction/insertion,
// reflection and stabilization.  Moves that change the filtration carry a
// grading ledger delta; honest equivalences carry (0, 0).

#include <string>
#include <vector>

#include "brokensym/rootdata.hpp"

namespace brokensym::braid {

struct BraidLetter {
  int index;  // generator index, 1 <= index <= ss_rank
  int sign;   // +1 or -1
  bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
  rootdata::CartanDatum datum;
  std::vector<BraidLetter> letters;

  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const BraidWord&) const = default;
};

BraidWord make_word(const rootdata::CartanDatum& cd,
                    const std::vector<int>& signed_indices);

// Whitespace-separated nonzero integers, |n| <= strands - 1.
BraidWord parse(const std::string& text, int strands);
std::string format(const BraidWord& w);

struct GradingLedger {
  int suspension = 0;
  int shift = 0;
  // Stabilizations whose E-level comparison goes through a null M2-type map;
  // recorded as counts, the shift itself is calibrated downstream.
  int m2a_events = 0;
  int m2b_events = 0;

  GradingLedger operator+(const GradingLedger& o) const {
    return {suspension + o.suspension, shift + o.shift,
            m2a_events + o.m2a_events, m2b_events + o.m2b_events};
  }
  bool operator==(const GradingLedger&) const = default;
};

struct Lengths {
  int l_plus = 0;
  int l_minus = 0;
  int l_normalization = 0;  // l_minus - 2 * l_plus
};
Lengths lengths(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);

// Moves.  Positions are 1-based into the pre-move word.

BraidWord cyclic_permute(const BraidWord& w);  // honest, delta (0,0)
BraidWord reflect(const BraidWord& w);         // honest, delta (0,0)

// Replaces the alternating window i,j,i,... (m_ij letters, all positive)
// starting at `at` by the alternation starting with j.  Delta (0,0).
BraidWord apply_braid_relation(const BraidWord& w, int at, int i, int j);

struct MoveResult {
  BraidWord word;
  GradingLedger delta;
};

// Letters at positions at, at+1 must form (i,+)(i,-) or (i,-)(i,+).
// Delta (+1, -1), the shifted suspension of the reduced word.
MoveResult contract_inverse_pair(const BraidWord& w, int at);

// Formal inverse of contraction: inserts (index, first_sign)(index, -first_sign)
// before position at (at may be length+1 to append).  Delta (-1, +1).
MoveResult insert_inverse_pair(const BraidWord& w, int at, int index,
                               int first_sign);

// Appends sigma_r^{sign} and re-hosts the word on r+1 strands (type A only).
// Delta (+2, 0) for sign +1, (-1, 0) for sign -1, plus the M2 event flag.
MoveResult stabilize(const BraidWord& w, int sign);

}  // namespace brokensym::braid
