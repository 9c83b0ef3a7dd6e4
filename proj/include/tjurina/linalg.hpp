#pragma once

#include <string>
#include <vector>

#include "tjurina/field.hpp"

namespace tjurina {

// Dense exact matrix, the carrier for minimal-degree searches and the
// Macaulay oracle. Over Q elimination is fraction-free (Bareiss) on
// integer-scaled rows; over a prime field it is ordinary Gaussian
// elimination. Pivots are chosen deterministically (first nonzero).
class LinearSystem {
 public:
  LinearSystem(FieldSpec field, size_t rows, size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  const FieldSpec& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Coeff& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Coeff& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  int rank() const;

  // Exact basis of the right nullspace; vectors are primitive integer
  // (over Q) with positive first nonzero entry, listed by free column.
  std::vector<std::vector<Coeff>> nullspace() const;

  std::vector<std::string> labels;  // optional unknown labels

 private:
  FieldSpec field_;
  size_t rows_, cols_;
  std::vector<Coeff> a_;
};

}  // namespace tjurina
