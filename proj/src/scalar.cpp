#include "kreg/scalar.hpp"

#include <stdexcept>

namespace kreg {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::fromParts(const mpz_class& reNum, const mpz_class& reDen,
                         const mpz_class& imNum, const mpz_class& imDen) {
    if (sgn(reDen) == 0 || sgn(imDen) == 0) {
        throw std::invalid_argument("scalar with zero denominator");
    }
    return Scalar(mpq_class(reNum, reDen), mpq_class(imNum, imDen));
}

Scalar Scalar::inverse() const {
    if (isZero()) throw std::domain_error("inverse of zero scalar");
    mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.isZero()) throw std::domain_error("division by zero scalar");
    if (o.isReal()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string Scalar::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    mpq_class a = abs(im_);
    if (sgn(im_) < 0) {
        out += "-";
    } else if (!out.empty()) {
        out += "+";
    }
    if (a != 1) out += a.get_str();
    out += "i";
    return out;
}

std::size_t Scalar::bitLength() const {
    return mpz_sizeinbase(re_.get_num_mpz_t(), 2) + mpz_sizeinbase(re_.get_den_mpz_t(), 2) +
           mpz_sizeinbase(im_.get_num_mpz_t(), 2) + mpz_sizeinbase(im_.get_den_mpz_t(), 2);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace kreg
