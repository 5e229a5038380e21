#include "kreg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace kreg {
namespace {

// Element of Z[i]; only what the elimination needs.
struct GaussInt {
    mpz_class re;
    mpz_class im;

    bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
    std::size_t bits() const {
        return mpz_sizeinbase(re.get_mpz_t(), 2) + mpz_sizeinbase(im.get_mpz_t(), 2);
    }
};

// out = (p * a - q * b) / d, all exact in Z[i].
void crossDivide(GaussInt& a, const GaussInt& p, const GaussInt& q, const GaussInt& b, const GaussInt& d) {
    mpz_class re = p.re * a.re - p.im * a.im - (q.re * b.re - q.im * b.im);
    mpz_class im = p.re * a.im + p.im * a.re - (q.re * b.im + q.im * b.re);
    if (sgn(d.im) == 0) {
        if (d.re != 1) {
            mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), d.re.get_mpz_t());
            mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), d.re.get_mpz_t());
        }
    } else {
        mpz_class norm = d.re * d.re + d.im * d.im;
        mpz_class nre = re * d.re + im * d.im;
        mpz_class nim = im * d.re - re * d.im;
        mpz_divexact(re.get_mpz_t(), nre.get_mpz_t(), norm.get_mpz_t());
        mpz_divexact(im.get_mpz_t(), nim.get_mpz_t(), norm.get_mpz_t());
    }
    a.re = std::move(re);
    a.im = std::move(im);
}

struct Echelon {
    std::size_t cols = 0;
    std::vector<std::vector<GaussInt>> rows;
    std::vector<std::size_t> pivotCols;  // pivotCols[k] is the pivot column of rows[k]
};

std::vector<GaussInt> clearDenominators(const MatrixQ& m, std::size_t r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const Scalar& s = m(r, c);
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.im().get_den_mpz_t());
    }
    std::vector<GaussInt> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const Scalar& s = m(r, c);
        row[c].re = s.re().get_num() * (l / s.re().get_den());
        row[c].im = s.im().get_num() * (l / s.im().get_den());
    }
    return row;
}

Echelon echelonize(const MatrixQ& m) {
    Echelon e;
    e.cols = m.cols();
    e.rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) e.rows.push_back(clearDenominators(m, r));

    const std::size_t nrows = e.rows.size();
    GaussInt prev{1, 0};
    std::size_t r = 0;
    for (std::size_t c = 0; c < e.cols && r < nrows; ++c) {
        std::size_t best = nrows;
        std::size_t bestBits = 0;
        for (std::size_t i = r; i < nrows; ++i) {
            if (e.rows[i][c].isZero()) continue;
            std::size_t b = e.rows[i][c].bits();
            if (best == nrows || b < bestBits) {
                best = i;
                bestBits = b;
            }
        }
        if (best == nrows) continue;
        std::swap(e.rows[r], e.rows[best]);
        const std::vector<GaussInt>& pivotRow = e.rows[r];
        const GaussInt& p = pivotRow[c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            std::vector<GaussInt>& row = e.rows[i];
            const GaussInt q = row[c];
            for (std::size_t j = c + 1; j < e.cols; ++j) {
                crossDivide(row[j], p, q, pivotRow[j], prev);
            }
            row[c] = GaussInt{0, 0};
        }
        prev = p;
        e.pivotCols.push_back(c);
        ++r;
    }
    e.rows.resize(r);
    return e;
}

Scalar toScalar(const GaussInt& g) { return Scalar(mpq_class(g.re), mpq_class(g.im)); }

// Nullspace vector attached to the free column `freeCol`.
Vec backSubstitute(const Echelon& e, std::size_t freeCol) {
    Vec x(e.cols);
    x[freeCol] = 1;
    for (std::size_t k = e.pivotCols.size(); k-- > 0;) {
        const std::size_t pc = e.pivotCols[k];
        Scalar s;
        for (std::size_t j = pc + 1; j < e.cols; ++j) {
            if (x[j].isZero() || e.rows[k][j].isZero()) continue;
            s += toScalar(e.rows[k][j]) * x[j];
        }
        if (!s.isZero()) x[pc] = -s / toScalar(e.rows[k][pc]);
    }
    return x;
}

}  // namespace

std::size_t rankOf(const MatrixQ& m) { return echelonize(m).pivotCols.size(); }

std::vector<std::size_t> pivotColumns(const MatrixQ& m) { return echelonize(m).pivotCols; }

std::vector<Vec> nullspaceOf(const MatrixQ& m) {
    const Echelon e = echelonize(m);
    std::vector<bool> isPivot(e.cols, false);
    for (std::size_t c : e.pivotCols) isPivot[c] = true;
    std::vector<Vec> out;
    for (std::size_t c = 0; c < e.cols; ++c) {
        if (!isPivot[c]) out.push_back(backSubstitute(e, c));
    }
    return out;
}

std::optional<Vec> solveIn(const MatrixQ& basis, const Vec& v) {
    if (v.size() != basis.rows()) throw std::invalid_argument("solveIn: vector length mismatch");
    MatrixQ aug(basis.rows(), basis.cols() + 1);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        for (std::size_t c = 0; c < basis.cols(); ++c) aug(r, c) = basis(r, c);
        aug(r, basis.cols()) = v[r];
    }
    const Echelon e = echelonize(aug);
    if (!e.pivotCols.empty() && e.pivotCols.back() == basis.cols()) return std::nullopt;
    // basis * x' + v = 0 for the special solution x' attached to the last column.
    Vec x = backSubstitute(e, basis.cols());
    x.pop_back();
    for (auto& s : x) s = -s;
    return x;
}

bool spanContains(const MatrixQ& basis, const Vec& v) { return solveIn(basis, v).has_value(); }

bool isNilpotentMatrix(const MatrixQ& m, std::size_t dim) {
    if (!m.isSquare() || m.rows() != dim) throw std::invalid_argument("isNilpotentMatrix: expected a dim x dim matrix");
    MatrixQ p = m;
    std::size_t power = 1;
    while (!p.isZero()) {
        if (power >= dim) return false;
        p = p * p;
        power *= 2;
    }
    return true;
}

std::optional<std::size_t> nilpotencyIndex(const MatrixQ& m) {
    if (!m.isSquare()) throw std::invalid_argument("nilpotencyIndex: square matrix required");
    if (m.rows() == 0) return 0;
    MatrixQ p = m;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        if (p.isZero()) return k;
        p = p * m;
    }
    return std::nullopt;
}

Vec SpanBuilder::reduce(Vec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar c = v[pivots_[k]];
        if (!c.isZero()) axpy(v, -c, rows_[k]);
    }
    return v;
}

bool SpanBuilder::contains(const Vec& v) const {
    if (v.size() != dim_) throw std::invalid_argument("SpanBuilder: vector length mismatch");
    return isZeroVec(reduce(v));
}

bool SpanBuilder::add(const Vec& v) {
    if (v.size() != dim_) throw std::invalid_argument("SpanBuilder: vector length mismatch");
    Vec r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p].isZero()) ++p;
    if (p == dim_) return false;
    r = r[p].inverse() * r;
    for (auto& row : rows_) {
        const Scalar c = row[p];
        if (!c.isZero()) axpy(row, -c, r);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

}  // namespace kreg
