#ifndef HEISUPER_GAUSS_RATIONAL_HPP
#define HEISUPER_GAUSS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

namespace heisuper {

/*
 * Exact scalar in the field of Gaussian rationals Q(i): a + b*i with
 * arbitrary-precision rational a, b and i^2 = -1.
 *
 * Both components are kept in GMP canonical form (lowest terms, positive
 * denominator), so equality is structural equality of reduced forms.
 * Values are immutable in spirit: every operation returns a fresh value
 * and nothing here shares mutable state, so scalars may be copied and
 * used across threads freely.
 */
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long v) : re_(v) {}
    GaussRational(mpq_class re) : re_(std::move(re)) { canonicalize(re_); }
    GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        canonicalize(re_);
        canonicalize(im_);
    }

    // num/den reduced to canonical form; den must be nonzero.
    static GaussRational fraction(long num, long den);
    static GaussRational imaginary_unit() { return GaussRational(mpq_class(0), mpq_class(1)); }

    // Parses the ("p/q", "r/s") string pair used by the JSON encoding.
    // A bare "p" is accepted as p/1.  Throws std::invalid_argument on junk.
    static GaussRational parse(const std::string& re, const std::string& im);
    static mpq_class parse_fraction(const std::string& s);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRational operator-() const { return GaussRational(-re_, -im_); }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }

    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }

    GaussRational& operator*=(const GaussRational& o) {
        if (is_zero()) return *this;
        if (o.is_zero()) {
            re_ = 0;
            im_ = 0;
            return *this;
        }
        if (im_ == 0 && o.im_ == 0) {
            re_ *= o.re_;
            return *this;
        }
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }

    // Multiplicative inverse; throws std::domain_error on zero.
    GaussRational inv() const;

    GaussRational conj() const { return GaussRational(re_, -im_); }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    // Canonical "p/q" strings (denominator always written, also for q=1).
    std::string re_str() const;
    std::string im_str() const;

    // Human-readable form: "0", "1/2", "-i", "1/2+3i", "2-1/2i".
    std::string str() const;

private:
    static void canonicalize(mpq_class& q);

    mpq_class re_;
    mpq_class im_;
};

inline GaussRational operator*(long a, const GaussRational& b) { return GaussRational(a) * b; }

} // namespace heisuper

#endif
