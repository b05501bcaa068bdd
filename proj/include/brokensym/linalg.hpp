#pragma once

// Sparse exact linear algebra over a Scalar field.  Column-major storage,
// left-to-right column reduction with a fixed pivot rule (lowest nonzero row
// of each column), so every result is deterministic.

#include <optional>
#include <vector>

#include "brokensym/polyalg.hpp"

namespace brokensym::linalg {

struct Entry {
  int row;
  poly::Scalar val;
};

// Sorted by row, no zero values.
using Col = std::vector<Entry>;

Col col_axpy(const Col& x, const poly::Scalar& c, const Col& y);  // x + c*y
Col col_scaled(const Col& x, const poly::Scalar& c);
bool col_is_zero(const Col& c);

struct SparseMat {
  int rows = 0;
  std::vector<Col> cols;

  int col_count() const { return static_cast<int>(cols.size()); }
  void add_entry(int r, int c, const poly::Scalar& v);
  SparseMat transposed() const;
  Col apply(const Col& v) const;  // matrix * vector
  bool is_zero() const;
};

SparseMat identity(int n, poly::Field f);
SparseMat mat_mul(const SparseMat& a, const SparseMat& b);

// Incremental echelon structure.  Columns are pushed one at a time and
// reduced against earlier pivots; the combination over the pushed columns is
// tracked, so membership and coordinates in the pushed span can be recovered.
class SpanSolver {
 public:
  explicit SpanSolver(int rows, poly::Field f) : rows_(rows), field_(f) {}

  // Returns true if the column increased the rank (i.e. was independent).
  bool push(const Col& c);

  int rank() const { return static_cast<int>(echelon_.size()); }
  int rows() const { return rows_; }

  // Coordinates over the pushed columns expressing v, or nullopt if v is not
  // in the span.  Coordinates of dependent pushed columns are zero.
  std::optional<std::vector<poly::Scalar>> express(const Col& v) const;

 private:
  struct EchelonCol {
    Col col;
    std::vector<poly::Scalar> comb;  // over pushed columns
    int pivot_row;
  };
  int rows_;
  poly::Field field_;
  int pushed_ = 0;
  std::vector<EchelonCol> echelon_;  // pivot rows strictly increasing order of insertion
  std::vector<int> pivot_owner_;     // per row: index into echelon_, -1 if free
};

int rank(const SparseMat& m, poly::Field f);

// Basis of the kernel, as columns in source coordinates.
std::vector<Col> kernel_basis(const SparseMat& m, poly::Field f);

}  // namespace brokensym::linalg
