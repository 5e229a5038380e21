#ifndef KREG_SCALAR_HPP
#define KREG_SCALAR_HPP

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>

namespace kreg {

/// Exact Gaussian rational a + bi with a, b in Q.
///
/// Both parts are kept canonical by GMP (lowest terms, positive
/// denominator), so structural equality is value equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class re, mpq_class im = 0);

    /// Builds (re_num/re_den) + (im_num/im_den) i. Throws std::invalid_argument
    /// on a zero denominator.
    static Scalar fromParts(const mpz_class& reNum, const mpz_class& reDen,
                            const mpz_class& imNum, const mpz_class& imDen);
    static Scalar i() { return Scalar(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool isReal() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// Throws std::domain_error for zero.
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Exact rendering: "0", "-3/2", "2i", "1/2-3/4i", "-i".
    std::string str() const;

    /// Sum of the bit sizes of all four integers; used for pivot choice.
    std::size_t bitLength() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace kreg

#endif
