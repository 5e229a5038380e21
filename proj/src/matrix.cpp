#include "kreg/matrix.hpp"

#include <stdexcept>

namespace kreg {

Vec zeroVec(std::size_t n) { return Vec(n); }

Vec unitVec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = 1;
    return v;
}

bool isZeroVec(const Vec& v) {
    for (const auto& s : v) {
        if (!s.isZero()) return false;
    }
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

Vec operator-(const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

Vec operator*(const Scalar& c, const Vec& v) {
    Vec out(v.size());
    if (c.isZero()) return out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].isZero()) out[i] = c * v[i];
    }
    return out;
}

void axpy(Vec& a, const Scalar& c, const Vec& b) {
    if (c.isZero()) return;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!b[i].isZero()) a[i] += c * b[i];
    }
}

std::string formatVec(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

MatrixQ MatrixQ::fromColumns(const std::vector<Vec>& columns, std::size_t rows) {
    MatrixQ m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.setColumn(c, columns[c]);
    return m;
}

MatrixQ MatrixQ::fromRows(const std::vector<Vec>& rows, std::size_t cols) {
    MatrixQ m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vec MatrixQ::row(std::size_t r) const {
    return Vec(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec MatrixQ::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void MatrixQ::setColumn(std::size_t c, const Vec& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool MatrixQ::isZero() const {
    for (const auto& s : entries_) {
        if (!s.isZero()) return false;
    }
    return true;
}

bool MatrixQ::isSymmetric() const {
    if (!isSquare()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r + 1; c < cols_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) return false;
        }
    }
    return true;
}

MatrixQ MatrixQ::transpose() const {
    MatrixQ t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

Scalar MatrixQ::trace() const {
    Scalar t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

Vec MatrixQ::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    Vec out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].isZero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = (*this)(r, c);
            if (!a.isZero()) out[r] += a * v[c];
        }
    }
    return out;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
    MatrixQ out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& lhs = a(r, k);
            if (lhs.isZero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const Scalar& rhs = b(k, c);
                if (!rhs.isZero()) out(r, c) += lhs * rhs;
            }
        }
    }
    return out;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum size mismatch");
    MatrixQ out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference size mismatch");
    MatrixQ out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
    return out;
}

MatrixQ operator*(const Scalar& c, const MatrixQ& m) {
    MatrixQ out = m;
    for (auto& s : out.entries_) s *= c;
    return out;
}

}  // namespace kreg
