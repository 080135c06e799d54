#pragma once

#include <cstddef>
#include <vector>

namespace bfn {

/// Dense row-major matrix of doubles. Rows usually index time, columns space.
class Array2D {
  public:
    Array2D() = default;
    Array2D(std::size_t rows, std::size_t cols, double fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double> row_copy(std::size_t i) const {
        return std::vector<double>(row(i), row(i) + cols_);
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace bfn
