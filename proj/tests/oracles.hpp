// Independent reference computations used to check the library.
// Nothing here calls the elimination code, the structure tables or the word evaluator.
#ifndef KREG_TESTS_ORACLES_HPP
#define KREG_TESTS_ORACLES_HPP

#include "kreg/matrix.hpp"
#include "kreg/scalar.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using kreg::MatrixQ;
using kreg::Scalar;
using kreg::Vec;

inline Scalar determinant(const MatrixQ& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Scalar det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).isZero()) continue;
        MatrixQ minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t k = 0, kk = 0; k < n; ++k) {
                if (k == c) continue;
                minor(r - 1, kk++) = m(r, k);
            }
        }
        const Scalar term = m(0, c) * determinant(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

inline void forEachSubset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        if (!fn(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Largest k with a nonzero k x k minor. Exponential; small matrices only.
inline std::size_t rankByMinors(const MatrixQ& m) {
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        bool found = false;
        forEachSubset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            forEachSubset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                MatrixQ sub(k, k);
                for (std::size_t a = 0; a < k; ++a) {
                    for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rows[a], cols[b]);
                }
                found = !determinant(sub).isZero();
                return !found;
            });
            return !found;
        });
        if (found) return k;
    }
    return 0;
}

// Coefficients c_0..c_n of det(tI - A), by Faddeev-LeVerrier.
inline std::vector<Scalar> charPoly(const MatrixQ& a) {
    const std::size_t n = a.rows();
    std::vector<Scalar> c(n + 1);
    c[n] = 1;
    MatrixQ m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        MatrixQ next = a * m;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        m = next;
        c[n - k] = -((a * m).trace() / Scalar(static_cast<long>(k)));
    }
    return c;
}

inline bool nilpotentByCharPoly(const MatrixQ& a) {
    const auto c = charPoly(a);
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        if (!c[k].isZero()) return false;
    }
    return true;
}

// sl(n) realised as traceless matrices. Basis: H_k = E_kk - E_{k+1,k+1}, then E_ij (i < j) in
// lexicographic order, then E_ji in the same order.
struct SlModel {
    std::size_t n;
    std::vector<MatrixQ> basis;

    explicit SlModel(std::size_t size) : n(size) {
        for (std::size_t k = 0; k + 1 < n; ++k) {
            MatrixQ h(n, n);
            h(k, k) = 1;
            h(k + 1, k + 1) = -1;
            basis.push_back(h);
        }
        for (int lower = 0; lower < 2; ++lower) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    MatrixQ e(n, n);
                    if (lower) e(j, i) = 1;
                    else e(i, j) = 1;
                    basis.push_back(e);
                }
            }
        }
    }

    std::size_t dim() const { return basis.size(); }

    MatrixQ matrix(const Vec& v) const {
        MatrixQ m(n, n);
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!v[k].isZero()) m = m + v[k] * basis[k];
        }
        return m;
    }

    // Solve sum c_k basis_k = m by comparing entries.
    Vec coords(const MatrixQ& m) const {
        Vec v(dim());
        Scalar partial;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            partial += m(k, k);
            v[k] = partial;
        }
        std::size_t idx = n - 1;
        for (int lower = 0; lower < 2; ++lower) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) v[idx++] = lower ? m(j, i) : m(i, j);
            }
        }
        return v;
    }

    Vec bracket(const Vec& u, const Vec& v) const {
        const MatrixQ a = matrix(u);
        const MatrixQ b = matrix(v);
        return coords(a * b - b * a);
    }

    // Killing form of sl(n): 2n tr(XY).
    Scalar killing(const Vec& u, const Vec& v) const {
        return Scalar(static_cast<long>(2 * n)) * (matrix(u) * matrix(v)).trace();
    }
};

// Binary words over X < Y that are strictly smaller than every proper rotation.
inline std::vector<std::string> lyndonByRotation(std::size_t length) {
    std::vector<std::string> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
        std::string w(length, 'X');
        for (std::size_t k = 0; k < length; ++k) {
            if ((bits >> (length - 1 - k)) & 1) w[k] = 'Y';
        }
        bool ok = true;
        for (std::size_t r = 1; r < length && ok; ++r) ok = w < w.substr(r) + w.substr(0, r);
        if (ok) out.push_back(w);
    }
    return out;
}

inline Scalar randomGaussian(std::mt19937_64& rng, long box) {
    std::uniform_int_distribution<long> d(-box, box);
    return Scalar(d(rng), d(rng));
}

inline Vec randomVec(std::mt19937_64& rng, std::size_t n, long box) {
    Vec v(n);
    for (auto& s : v) s = randomGaussian(rng, box);
    return v;
}

inline MatrixQ randomMatrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long box) {
    MatrixQ m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = randomGaussian(rng, box);
    }
    return m;
}

// Product of a random r x k and k x c matrix: rank at most k.
inline MatrixQ randomLowRank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k, long box) {
    return randomMatrix(rng, r, k, box) * randomMatrix(rng, k, c, box);
}

}  // namespace oracle

#endif
