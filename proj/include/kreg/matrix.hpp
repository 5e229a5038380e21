#ifndef KREG_MATRIX_HPP
#define KREG_MATRIX_HPP

#include "kreg/scalar.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace kreg {

using Vec = std::vector<Scalar>;

Vec zeroVec(std::size_t n);
Vec unitVec(std::size_t n, std::size_t i);
bool isZeroVec(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& c, const Vec& v);
/// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);
std::string formatVec(const Vec& v);

/// Dense row-major matrix over Q(i).
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static MatrixQ identity(std::size_t n);
    /// Columns given as vectors of length `rows`.
    static MatrixQ fromColumns(const std::vector<Vec>& columns, std::size_t rows);
    static MatrixQ fromRows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Scalar> entries() const { return entries_; }
    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;
    void setColumn(std::size_t c, const Vec& v);

    bool isZero() const;
    bool isSymmetric() const;
    MatrixQ transpose() const;
    Scalar trace() const;
    Vec apply(const Vec& v) const;

    friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
    friend MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
    friend MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
    friend MatrixQ operator*(const Scalar& c, const MatrixQ& m);
    friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

}  // namespace kreg

#endif
