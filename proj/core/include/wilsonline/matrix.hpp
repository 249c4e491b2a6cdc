#pragma once

#include "wilsonline/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace wilsonline {

// Dense matrix of exact rationals. Small sizes only (group elements live in
// 2x2 .. 6x6 matrices); everything is by value.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("RatMatrix: dimensions must be positive");
    }
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static RatMatrix identity(int n);
    static RatMatrix diagonal(const std::vector<Rat>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix scaled(const Rat& c) const;
    RatMatrix transpose() const;
    RatMatrix inverse() const;

    // Submatrix on the given row and column index sets (0-based).
    RatMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    // Determinant: cofactor expansion up to 3x3, fraction-free Bareiss above.
    Rat det() const;
    // Cofactor expansion at any size; kept as an independent cross-check.
    Rat det_cofactor() const;

    int rank() const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Determinant of the submatrix picked by row/column index sets (0-based).
Rat mat_minor(const RatMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

} // namespace wilsonline
