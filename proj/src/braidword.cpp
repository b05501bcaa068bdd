#include "brokensym/braidword.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace brokensym::braid {

namespace {
void check_letter(const rootdata::CartanDatum& cd, const BraidLetter& l) {
  if (l.index < 1 || l.index > cd.ss_rank)
    throw std::invalid_argument("braid letter index out of range");
  if (l.sign != 1 && l.sign != -1)
    throw std::invalid_argument("braid letter sign must be +1 or -1");
}
}  // namespace

BraidWord make_word(const rootdata::CartanDatum& cd,
                    const std::vector<int>& signed_indices) {
  BraidWord w{cd, {}};
  for (int n : signed_indices) {
    if (n == 0) throw std::invalid_argument("zero is not a braid letter");
    BraidLetter l{n > 0 ? n : -n, n > 0 ? 1 : -1};
    check_letter(cd, l);
    w.letters.push_back(l);
  }
  return w;
}

BraidWord parse(const std::string& text, int strands) {
  if (strands < 1) throw std::invalid_argument("parse: strands must be >= 1");
  std::istringstream is(text);
  std::vector<int> values;
  std::string tok;
  while (is >> tok) {
    size_t pos = 0;
    int n;
    try {
      n = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse: malformed token '" + tok + "'");
    }
    if (pos != tok.size())
      throw std::invalid_argument("parse: malformed token '" + tok + "'");
    if (n == 0) throw std::invalid_argument("parse: zero token");
    if (n > strands - 1 || n < -(strands - 1))
      throw std::invalid_argument("parse: generator out of range for " +
                                  std::to_string(strands) + " strands");
    values.push_back(n);
  }
  return make_word(rootdata::type_a(strands), values);
}

std::string format(const BraidWord& w) {
  std::ostringstream os;
  for (int i = 0; i < w.length(); ++i) {
    if (i) os << ' ';
    os << w.letters[i].sign * w.letters[i].index;
  }
  return os.str();
}

Lengths lengths(const BraidWord& w) {
  Lengths out;
  for (auto& l : w.letters) (l.sign > 0 ? out.l_plus : out.l_minus)++;
  out.l_normalization = out.l_minus - 2 * out.l_plus;
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (!(a.datum == b.datum))
    throw std::invalid_argument("concat: words over different data");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord cyclic_permute(const BraidWord& w) {
  if (w.letters.empty()) return w;
  BraidWord r = w;
  BraidLetter first = r.letters.front();
  r.letters.erase(r.letters.begin());
  r.letters.push_back(first);
  return r;
}

BraidWord reflect(const BraidWord& w) {
  BraidWord r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

BraidWord apply_braid_relation(const BraidWord& w, int at, int i, int j) {
  int m = rootdata::braid_exponent(w.datum, i, j);
  if (m == rootdata::kInfiniteBraidExponent)
    throw std::invalid_argument("apply_braid_relation: m_ij is infinite");
  if (at < 1 || at + m - 1 > w.length())
    throw std::invalid_argument("apply_braid_relation: window out of range");
  for (int k = 0; k < m; ++k) {
    const BraidLetter& l = w.letters[at - 1 + k];
    int expected = (k % 2 == 0) ? i : j;
    if (l.sign != 1)
      throw std::invalid_argument("apply_braid_relation: negative letter in window");
    if (l.index != expected)
      throw std::invalid_argument("apply_braid_relation: window is not the alternation");
  }
  BraidWord r = w;
  for (int k = 0; k < m; ++k)
    r.letters[at - 1 + k] = BraidLetter{(k % 2 == 0) ? j : i, 1};
  return r;
}

MoveResult contract_inverse_pair(const BraidWord& w, int at) {
  if (at < 1 || at + 1 > w.length())
    throw std::invalid_argument("contract_inverse_pair: position out of range");
  const BraidLetter& a = w.letters[at - 1];
  const BraidLetter& b = w.letters[at];
  if (a.index != b.index || a.sign != -b.sign)
    throw std::invalid_argument("contract_inverse_pair: not an inverse pair");
  BraidWord r = w;
  r.letters.erase(r.letters.begin() + (at - 1), r.letters.begin() + (at + 1));
  return {r, GradingLedger{+1, -1, 0, 0}};
}

MoveResult insert_inverse_pair(const BraidWord& w, int at, int index,
                               int first_sign) {
  if (at < 1 || at > w.length() + 1)
    throw std::invalid_argument("insert_inverse_pair: position out of range");
  BraidLetter a{index, first_sign}, b{index, -first_sign};
  check_letter(w.datum, a);
  BraidWord r = w;
  r.letters.insert(r.letters.begin() + (at - 1), {a, b});
  return {r, GradingLedger{-1, +1, 0, 0}};
}

MoveResult stabilize(const BraidWord& w, int sign) {
  if (!w.datum.type_a)
    throw std::invalid_argument("stabilize: type A words only");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("stabilize: sign must be +1 or -1");
  int r = w.datum.rank;
  BraidWord out{rootdata::type_a(r + 1), w.letters};
  out.letters.push_back(BraidLetter{r, sign});
  GradingLedger delta = sign > 0 ? GradingLedger{+2, 0, 1, 0}
                                 : GradingLedger{-1, 0, 0, 1};
  return {out, delta};
}

}  // namespace brokensym::braid
