#include "kreg/lie_algebra.hpp"

#include <stdexcept>

namespace kreg {
namespace {

std::string tuple(std::initializer_list<std::size_t> idx) {
    std::string s = "(";
    bool first = true;
    for (std::size_t i : idx) {
        if (!first) s += ",";
        s += std::to_string(i + 1);
        first = false;
    }
    return s + ")";
}

MatrixQ computeKilling(const LieAlgebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<MatrixQ> ad;
    ad.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ad.push_back(alg.adMatrix(alg.basisVector(i)));
    MatrixQ b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Scalar t;
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = 0; l < n; ++l) {
                    const Scalar& a = ad[i](k, l);
                    if (a.isZero()) continue;
                    const Scalar& c = ad[j](l, k);
                    if (!c.isZero()) t += a * c;
                }
            }
            b(i, j) = t;
            b(j, i) = t;
        }
    }
    return b;
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels,
                       std::vector<std::vector<StructureTerm>> table,
                       std::optional<MatrixQ> killingOverride)
    : name_(std::move(name)), labels_(std::move(labels)), dim_(labels_.size()), table_(std::move(table)) {
    if (table_.size() != dim_ * dim_) throw std::invalid_argument("structure table must have dim*dim entries");
    for (const auto& cell : table_) {
        for (const auto& t : cell) {
            if (t.index >= dim_) throw std::invalid_argument("structure term index out of range");
        }
    }
    if (killingOverride) {
        if (killingOverride->rows() != dim_ || killingOverride->cols() != dim_) {
            throw std::invalid_argument("killing override has wrong shape");
        }
        killing_ = std::move(*killingOverride);
    } else {
        killing_ = computeKilling(*this);
    }
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw std::invalid_argument("bracket: vector length mismatch");
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].isZero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].isZero()) continue;
            const auto& cell = table_[i * dim_ + j];
            if (cell.empty()) continue;
            const Scalar c = u[i] * v[j];
            for (const auto& t : cell) out[t.index] += c * t.coeff;
        }
    }
    return out;
}

MatrixQ LieAlgebra::adMatrix(const Vec& u) const {
    if (u.size() != dim_) throw std::invalid_argument("adMatrix: vector length mismatch");
    MatrixQ m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].isZero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            for (const auto& t : table_[i * dim_ + j]) m(t.index, j) += u[i] * t.coeff;
        }
    }
    return m;
}

Scalar LieAlgebra::killingPair(const Vec& u, const Vec& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw std::invalid_argument("killingPair: vector length mismatch");
    Scalar s;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].isZero()) continue;
        Scalar row;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].isZero() || killing_(i, j).isZero()) continue;
            row += killing_(i, j) * v[j];
        }
        if (!row.isZero()) s += u[i] * row;
    }
    return s;
}

CartanDecomposition::CartanDecomposition(MatrixQ theta) : theta_(std::move(theta)) {
    if (!theta_.isSquare()) throw std::invalid_argument("theta must be square");
    const std::size_t n = theta_.rows();
    const MatrixQ id = MatrixQ::identity(n);
    kBasis_ = nullspaceOf(theta_ - id);
    pBasis_ = nullspaceOf(theta_ + id);
    const Scalar half = Scalar(mpq_class(1, 2));
    projK_ = half * (id + theta_);
    projP_ = half * (id - theta_);
}

ElementZ CartanDecomposition::decompose(const Vec& z) const {
    if (z.size() != theta_.rows()) throw std::invalid_argument("decompose: vector length mismatch");
    return ElementZ{z, projK_.apply(z), projP_.apply(z)};
}

bool ValidationReport::ok() const { return firstFailure() == nullptr; }

const CheckResult* ValidationReport::firstFailure() const {
    for (const auto& c : checks) {
        if (!c.passed) return &c;
    }
    return nullptr;
}

void ValidationReport::add(std::string name, bool passed, std::string detail) {
    checks.push_back(CheckResult{std::move(name), passed, std::move(detail)});
}

ValidationReport validate(const LieAlgebra& alg, const CartanDecomposition& cd) {
    ValidationReport report;
    const std::size_t n = alg.dim();
    if (cd.theta().rows() != n) {
        report.add("theta-shape", false, "theta is not dim x dim");
        return report;
    }

    std::vector<Vec> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(alg.basisVector(i));

    {
        std::string detail;
        for (std::size_t i = 0; i < n && detail.empty(); ++i) {
            for (std::size_t j = i; j < n; ++j) {
                if (!isZeroVec(alg.bracket(basis[i], basis[j]) + alg.bracket(basis[j], basis[i]))) {
                    detail = "antisymmetry" + tuple({i, j});
                    break;
                }
            }
        }
        report.add("antisymmetry", detail.empty(), detail);
    }

    {
        std::string detail;
        for (std::size_t i = 0; i < n && detail.empty(); ++i) {
            for (std::size_t j = i + 1; j < n && detail.empty(); ++j) {
                const Vec bij = alg.bracket(basis[i], basis[j]);
                for (std::size_t k = j + 1; k < n; ++k) {
                    Vec s = alg.bracket(basis[i], alg.bracket(basis[j], basis[k]));
                    s = s + alg.bracket(basis[j], alg.bracket(basis[k], basis[i]));
                    s = s + alg.bracket(basis[k], bij);
                    if (!isZeroVec(s)) {
                        detail = "jacobi" + tuple({i, j, k});
                        break;
                    }
                }
            }
        }
        report.add("jacobi", detail.empty(), detail);
    }

    {
        const std::size_t r = rankOf(alg.killingMatrix());
        report.add("killing-nondegenerate", r == n,
                   r == n ? "" : "killing rank " + std::to_string(r) + " < " + std::to_string(n));
    }

    const MatrixQ& theta = cd.theta();
    report.add("theta-involution", theta * theta == MatrixQ::identity(n),
               theta * theta == MatrixQ::identity(n) ? "" : "theta^2 != 1");

    {
        std::string detail;
        for (std::size_t i = 0; i < n && detail.empty(); ++i) {
            const Vec ti = theta.column(i);
            for (std::size_t j = i + 1; j < n; ++j) {
                if (theta.apply(alg.bracket(basis[i], basis[j])) != alg.bracket(ti, theta.column(j))) {
                    detail = "theta-automorphism" + tuple({i, j});
                    break;
                }
            }
        }
        report.add("theta-automorphism", detail.empty(), detail);
    }

    const auto& kb = cd.kBasis();
    const auto& pb = cd.pBasis();
    report.add("eigenspace-dims", kb.size() + pb.size() == n,
               kb.size() + pb.size() == n
                   ? ""
                   : "dim k + dim p = " + std::to_string(kb.size() + pb.size()) + " != " + std::to_string(n));

    {
        std::string detail;
        for (std::size_t a = 0; a < kb.size() && detail.empty(); ++a) {
            for (std::size_t b = a + 1; b < kb.size(); ++b) {
                if (!cd.inK(alg.bracket(kb[a], kb[b]))) {
                    detail = "[k,k] not in k at k" + tuple({a, b});
                    break;
                }
            }
        }
        for (std::size_t a = 0; a < kb.size() && detail.empty(); ++a) {
            for (std::size_t b = 0; b < pb.size(); ++b) {
                if (!cd.inP(alg.bracket(kb[a], pb[b]))) {
                    detail = "[k,p] not in p at (k" + std::to_string(a + 1) + ",p" + std::to_string(b + 1) + ")";
                    break;
                }
            }
        }
        for (std::size_t a = 0; a < pb.size() && detail.empty(); ++a) {
            for (std::size_t b = a + 1; b < pb.size(); ++b) {
                if (!cd.inK(alg.bracket(pb[a], pb[b]))) {
                    detail = "[p,p] not in k at p" + tuple({a, b});
                    break;
                }
            }
        }
        report.add("bracket-grading", detail.empty(), detail);
    }

    {
        std::string detail;
        for (std::size_t a = 0; a < kb.size() && detail.empty(); ++a) {
            for (std::size_t b = 0; b < pb.size(); ++b) {
                if (!alg.killingPair(kb[a], pb[b]).isZero()) {
                    detail = "B(k" + std::to_string(a + 1) + ",p" + std::to_string(b + 1) + ") != 0";
                    break;
                }
            }
        }
        report.add("killing-orthogonal", detail.empty(), detail);
    }

    {
        SpanBuilder pp(n);
        bool inside = true;
        for (std::size_t a = 0; a < pb.size(); ++a) {
            for (std::size_t b = a + 1; b < pb.size(); ++b) {
                const Vec v = alg.bracket(pb[a], pb[b]);
                inside = inside && cd.inK(v);
                pp.add(v);
            }
        }
        const bool ok = inside && pp.dim() == kb.size();
        report.add("properness", ok,
                   ok ? "" : "dim span[p,p] = " + std::to_string(pp.dim()) + ", dim k = " + std::to_string(kb.size()));
    }

    return report;
}

}  // namespace kreg
