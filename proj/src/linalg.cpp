#include "brokensym/linalg.hpp"

#include <algorithm>

namespace brokensym::linalg {

using poly::Field;
using poly::Scalar;

Col col_axpy(const Col& x, const Scalar& c, const Col& y) {
  Col r;
  r.reserve(x.size() + y.size());
  auto a = x.begin();
  auto b = y.begin();
  while (a != x.end() || b != y.end()) {
    if (b == y.end() || (a != x.end() && a->row < b->row)) {
      r.push_back(*a++);
    } else if (a == x.end() || b->row < a->row) {
      Scalar v = c * b->val;
      if (!v.is_zero()) r.push_back({b->row, v});
      ++b;
    } else {
      Scalar v = a->val + c * b->val;
      if (!v.is_zero()) r.push_back({a->row, v});
      ++a, ++b;
    }
  }
  return r;
}

Col col_scaled(const Col& x, const Scalar& c) {
  Col r;
  if (c.is_zero()) return r;
  r.reserve(x.size());
  for (auto& e : x) r.push_back({e.row, e.val * c});
  return r;
}

bool col_is_zero(const Col& c) { return c.empty(); }

void SparseMat::add_entry(int r, int c, const Scalar& v) {
  if (v.is_zero()) return;
  if (c >= col_count()) cols.resize(c + 1);
  if (r >= rows) rows = r + 1;
  auto& col = cols[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, int row) { return e.row < row; });
  if (it != col.end() && it->row == r) {
    it->val = it->val + v;
    if (it->val.is_zero()) col.erase(it);
  } else {
    col.insert(it, {r, v});
  }
}

SparseMat SparseMat::transposed() const {
  SparseMat t;
  t.rows = col_count();
  t.cols.resize(rows);
  for (int c = 0; c < col_count(); ++c)
    for (auto& e : cols[c]) t.cols[e.row].push_back({c, e.val});
  return t;
}

Col SparseMat::apply(const Col& v) const {
  Col r;
  for (auto& e : v) {
    if (e.row >= col_count()) continue;
    r = col_axpy(r, e.val, cols[e.row]);
  }
  return r;
}

bool SparseMat::is_zero() const {
  for (auto& c : cols)
    if (!c.empty()) return false;
  return true;
}

SparseMat identity(int n, Field f) {
  SparseMat m;
  m.rows = n;
  m.cols.resize(n);
  for (int i = 0; i < n; ++i) m.cols[i].push_back({i, Scalar::one(f)});
  return m;
}

SparseMat mat_mul(const SparseMat& a, const SparseMat& b) {
  SparseMat r;
  r.rows = a.rows;
  r.cols.resize(b.col_count());
  for (int c = 0; c < b.col_count(); ++c) r.cols[c] = a.apply(b.cols[c]);
  return r;
}

bool SpanSolver::push(const Col& c) {
  ++pushed_;
  if (pivot_owner_.empty()) pivot_owner_.assign(rows_, -1);
  Col cur = c;
  std::vector<Scalar> comb(pushed_, Scalar::zero(field_));
  comb[pushed_ - 1] = Scalar::one(field_);
  while (!cur.empty()) {
    int pr = cur.front().row;
    int owner = pivot_owner_[pr];
    if (owner < 0) {
      // normalize so the pivot entry is 1
      Scalar inv = cur.front().val.inverse();
      cur = col_scaled(cur, inv);
      for (auto& x : comb) x = x * inv;
      comb.resize(pushed_, Scalar::zero(field_));
      echelon_.push_back({std::move(cur), std::move(comb), pr});
      pivot_owner_[pr] = static_cast<int>(echelon_.size()) - 1;
      return true;
    }
    const EchelonCol& e = echelon_[owner];
    Scalar f = -cur.front().val;  // pivot of e is 1
    cur = col_axpy(cur, f, e.col);
    for (size_t i = 0; i < e.comb.size(); ++i) {
      if (comb.size() <= i) comb.resize(i + 1, Scalar::zero(field_));
      comb[i] = comb[i] + f * e.comb[i];
    }
  }
  return false;
}

std::optional<std::vector<Scalar>> SpanSolver::express(const Col& v) const {
  Col cur = v;
  std::vector<Scalar> coeff;
  while (!cur.empty()) {
    int pr = cur.front().row;
    if (pr >= rows_ || pivot_owner_.empty() || pivot_owner_[pr] < 0)
      return std::nullopt;
    const EchelonCol& e = echelon_[pivot_owner_[pr]];
    Scalar f = cur.front().val;  // pivot of e is 1
    cur = col_axpy(cur, -f, e.col);
    if (coeff.size() < e.comb.size())
      coeff.resize(e.comb.size(), Scalar::zero(field_));
    for (size_t i = 0; i < e.comb.size(); ++i) coeff[i] = coeff[i] + f * e.comb[i];
  }
  coeff.resize(pushed_, Scalar::zero(field_));
  return coeff;
}

int rank(const SparseMat& m, Field f) {
  SpanSolver s(m.rows, f);
  for (auto& c : m.cols) s.push(c);
  return s.rank();
}

std::vector<Col> kernel_basis(const SparseMat& m, Field f) {
  // Reduce columns left to right, remembering combinations; a column that
  // reduces to zero yields a kernel vector.
  std::vector<Col> reduced;     // echelon columns (pivot normalized to 1)
  std::vector<Col> combs;       // combinations in source coordinates
  std::vector<int> pivot_owner(m.rows, -1);
  std::vector<Col> kernel;
  for (int j = 0; j < m.col_count(); ++j) {
    Col cur = m.cols[j];
    Col comb{{j, Scalar::one(f)}};
    while (!cur.empty()) {
      int pr = cur.front().row;
      int owner = pivot_owner[pr];
      if (owner < 0) break;
      Scalar fac = -cur.front().val;
      cur = col_axpy(cur, fac, reduced[owner]);
      comb = col_axpy(comb, fac, combs[owner]);
    }
    if (cur.empty()) {
      kernel.push_back(comb);
    } else {
      Scalar inv = cur.front().val.inverse();
      pivot_owner[cur.front().row] = static_cast<int>(reduced.size());
      reduced.push_back(col_scaled(cur, inv));
      combs.push_back(col_scaled(comb, inv));
    }
  }
  return kernel;
}

}  // namespace brokensym::linalg
