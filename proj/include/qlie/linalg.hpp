#pragma once

#include <cstddef>
#include <vector>

#include "qlie/rational.hpp"

namespace qlie {

// Dense exact-rational matrix, row-major.
class RationalMatrix {
  public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Basis of the exact null space, computed by fraction-free Gaussian
// elimination (Bareiss) on the denominator-cleared matrix. Deterministic:
// pivot search by first nonzero column with row order preserved; the
// returned vectors are RREF-normalized and sorted by leading coordinate.
std::vector<std::vector<Rational>> kernel(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

}  // namespace qlie
