#include "kreg/catalog.hpp"

#include <stdexcept>

namespace kreg {

SplitSlLayout::SplitSlLayout(std::size_t n) : n_(n), eIndex_(n * n, 0) {
    if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
    std::size_t next = n - 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) eIndex_[i * n + j] = next++;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) eIndex_[j * n + i] = next++;
    }
}

std::size_t SplitSlLayout::h(std::size_t k) const {
    if (k + 1 >= n_) throw std::out_of_range("H index out of range");
    return k;
}

std::size_t SplitSlLayout::e(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_ || i == j) throw std::out_of_range("E index out of range");
    return eIndex_[i * n_ + j];
}

std::vector<std::string> SplitSlLayout::labels() const {
    std::vector<std::string> out(dim());
    for (std::size_t k = 0; k + 1 < n_; ++k) out[h(k)] = "H" + std::to_string(k + 1);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (i != j) out[e(i, j)] = "E" + std::to_string(i + 1) + std::to_string(j + 1);
        }
    }
    return out;
}

Vec SplitSlLayout::coordinates(const MatrixQ& x) const {
    if (x.rows() != n_ || x.cols() != n_) throw std::invalid_argument("expected an n x n matrix");
    if (!x.trace().isZero()) throw std::invalid_argument("matrix is not traceless");
    Vec v(dim());
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (i != j) v[e(i, j)] = x(i, j);
        }
    }
    // diag(d) = sum c_k H_k with c_k = d_1 + ... + d_k
    Scalar c;
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        c += x(k, k);
        v[h(k)] = c;
    }
    return v;
}

MatrixQ SplitSlLayout::matrix(const Vec& v) const {
    if (v.size() != dim()) throw std::invalid_argument("coordinate vector has wrong length");
    MatrixQ x(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (i != j) x(i, j) = v[e(i, j)];
        }
    }
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        x(k, k) += v[h(k)];
        x(k + 1, k + 1) -= v[h(k)];
    }
    return x;
}

LieAlgebra slAlgebra(std::size_t n, std::string name) {
    const SplitSlLayout layout(n);
    const std::size_t d = layout.dim();
    std::vector<MatrixQ> mats;
    mats.reserve(d);
    for (std::size_t i = 0; i < d; ++i) mats.push_back(layout.matrix(unitVec(d, i)));

    std::vector<std::vector<StructureTerm>> table(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Vec c = layout.coordinates(mats[i] * mats[j] - mats[j] * mats[i]);
            for (std::size_t k = 0; k < d; ++k) {
                if (!c[k].isZero()) table[i * d + j].push_back(StructureTerm{k, c[k]});
            }
        }
    }
    return LieAlgebra(std::move(name), layout.labels(), std::move(table));
}

SymmetricPair catalogBuild(const std::string& family, std::size_t size) {
    if (family != "split-sl") throw std::invalid_argument("unknown catalog family '" + family + "'");
    if (size < 2 || size > 5) {
        throw std::invalid_argument("split-sl size must be in [2, 5], got " + std::to_string(size));
    }
    LieAlgebra alg = slAlgebra(size, "sl" + std::to_string(size));
    alg.setCatalogTag(CatalogTag{family, size});

    const SplitSlLayout layout(size);
    MatrixQ theta(layout.dim(), layout.dim());
    for (std::size_t j = 0; j < layout.dim(); ++j) {
        const MatrixQ x = layout.matrix(unitVec(layout.dim(), j));
        theta.setColumn(j, layout.coordinates(Scalar(-1) * x.transpose()));
    }
    return SymmetricPair{std::move(alg), CartanDecomposition(std::move(theta))};
}

SymmetricPair catalogByName(const std::string& name) {
    const std::string prefix = "split-sl:";
    std::string digits;
    if (name.rfind(prefix, 0) == 0) {
        digits = name.substr(prefix.size());
    } else if (name.rfind("sl", 0) == 0) {
        digits = name.substr(2);
    } else {
        throw std::invalid_argument("unknown catalog algebra '" + name + "'");
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3) {
        throw std::invalid_argument("unknown catalog algebra '" + name + "'");
    }
    return catalogBuild("split-sl", std::stoul(digits));
}

}  // namespace kreg
