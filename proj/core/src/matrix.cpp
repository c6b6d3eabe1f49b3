#include "frobw2/poly.hpp"

namespace frobw2 {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const Poly& fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) raise(ErrorKind::ShapeError, "entry count mismatch");
  for (const auto& e : entries_)
    if (&e.ring() != &entries_.front().ring() || e.nvars() != entries_.front().nvars())
      raise(ErrorKind::RingMismatch, "matrix entries over different rings");
}

PolyMatrix PolyMatrix::transposed() const {
  std::vector<Poly> t;
  t.reserve(entries_.size());
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) t.push_back(at(i, j));
  return PolyMatrix(cols_, rows_, std::move(t));
}

namespace {

// Expansion along the first row of the minor on rows [row, n) and the columns
// whose bit is clear in `used`.
Poly minor_det(const PolyMatrix& m, std::size_t row, unsigned used) {
  const std::size_t n = m.rows();
  if (row == n) return Poly::constant(m.at(0, 0).ring(), m.at(0, 0).nvars(), 1);
  Poly acc(m.at(0, 0).ring(), m.at(0, 0).nvars());
  bool negative = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (used & (1u << j)) continue;
    const Poly& a = m.at(row, j);
    if (!a.is_zero()) {
      Poly t = a * minor_det(m, row + 1, used | (1u << j));
      acc += negative ? -t : t;
    }
    negative = !negative;
  }
  return acc;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) raise(ErrorKind::ShapeError, "determinant of a non-square matrix");
  if (m.rows() == 0) raise(ErrorKind::ShapeError, "determinant of an empty matrix");
  if (m.rows() > kMaxVars) raise(ErrorKind::ShapeError, "determinant limited to 4x4");
  return minor_det(m, 0, 0);
}

}  // namespace frobw2
