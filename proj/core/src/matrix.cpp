#include "wilsonline/matrix.hpp"

#include <sstream>

namespace wilsonline {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("RatMatrix: dimensions must be positive");
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("RatMatrix: ragged initializer");
        for (const auto& x : row) a_.push_back(x);
    }
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rat>& d) {
    RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix::operator*: shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& y = o.at(k, j);
                if (y != 0) r.at(i, j) += x * y;
            }
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix::operator+: shape mismatch");
    RatMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix::operator-: shape mismatch");
    RatMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
    RatMatrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::inverse: not square");
    int n = rows_;
    RatMatrix m = *this;
    RatMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::domain_error("RatMatrix::inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rat p = m.at(col, col);
        for (int j = 0; j < n; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            Rat f = m.at(i, col);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

RatMatrix RatMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    if (rows.empty() || cols.empty()) throw std::invalid_argument("RatMatrix::submatrix: empty index set");
    for (int i : rows)
        if (i < 0 || i >= rows_) throw std::out_of_range("RatMatrix::submatrix: row index out of range");
    for (int j : cols)
        if (j < 0 || j >= cols_) throw std::out_of_range("RatMatrix::submatrix: column index out of range");
    RatMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) = at(rows[i], cols[j]);
    return r;
}

Rat RatMatrix::det_cofactor() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::det: not square");
    int n = rows_;
    if (n == 1) return at(0, 0);
    if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    Rat total(0);
    std::vector<int> sub_rows;
    for (int i = 1; i < n; ++i) sub_rows.push_back(i);
    int sign = 1;
    for (int j = 0; j < n; ++j) {
        if (at(0, j) != 0) {
            std::vector<int> sub_cols;
            for (int k = 0; k < n; ++k)
                if (k != j) sub_cols.push_back(k);
            Rat cof = submatrix(sub_rows, sub_cols).det_cofactor();
            total += Rat(sign) * at(0, j) * cof;
        }
        sign = -sign;
    }
    return total;
}

Rat RatMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::det: not square");
    int n = rows_;
    if (n <= 3) return det_cofactor();

    // Fraction-free Bareiss on a common-denominator integer matrix.
    Int denom(1);
    for (const Rat& x : a_) {
        Int d = rat_den(x);
        denom = boost::multiprecision::lcm(denom, d);
    }
    std::vector<Int> m(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) m[i] = rat_num(a_[i]) * (denom / rat_den(a_[i]));
    auto e = [&](int i, int j) -> Int& { return m[static_cast<size_t>(i) * n + j]; };

    int sign = 1;
    Int prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (e(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (e(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Rat(0);
            for (int j = 0; j < n; ++j) std::swap(e(k, j), e(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
        prev = e(k, k);
    }
    Rat result(e(n - 1, n - 1) * sign, 1);
    return result / rat_pow(Rat(denom), n);
}

int RatMatrix::rank() const {
    RatMatrix m = *this;
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        for (int i = r + 1; i < rows_; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) / m.at(r, col);
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << '[';
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << rat_to_string(at(i, j));
        }
        os << ']';
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Rat mat_minor(const RatMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("mat_minor: index sets must have equal size");
    return m.submatrix(rows, cols).det();
}

} // namespace wilsonline
