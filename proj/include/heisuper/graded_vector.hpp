#ifndef HEISUPER_GRADED_VECTOR_HPP
#define HEISUPER_GRADED_VECTOR_HPP

#include "heisuper/gauss_rational.hpp"
#include "heisuper/super_dim.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace heisuper {

/*
 * Vector of a graded space, stored as dense exact coordinates against the
 * even-block-first index convention of SuperDim.  Homogeneous means the
 * support lies entirely in one block; the zero vector is homogeneous of
 * either parity.
 */
class GradedVector {
public:
    explicit GradedVector(SuperDim dim) : dim_(dim), c_(dim.total()) {}

    GradedVector(SuperDim dim, std::vector<GaussRational> coords)
        : dim_(dim), c_(std::move(coords)) {
        if (c_.size() != dim_.total())
            throw std::invalid_argument("GradedVector: coordinate count does not match dimension");
    }

    static GradedVector unit(SuperDim dim, std::size_t idx) {
        GradedVector v(dim);
        v.at(idx) = GaussRational(1);
        return v;
    }

    SuperDim dim() const { return dim_; }
    std::size_t size() const { return c_.size(); }

    const GaussRational& at(std::size_t i) const { return c_.at(i); }
    GaussRational& at(std::size_t i) { return c_.at(i); }
    const std::vector<GaussRational>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_homogeneous() const {
        bool even_support = false, odd_support = false;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            (dim_.parity_of(i) == Parity::even ? even_support : odd_support) = true;
        }
        return !(even_support && odd_support);
    }

    // Parity of a nonzero homogeneous vector; nullopt for zero or mixed.
    std::optional<Parity> homogeneous_parity() const {
        std::optional<Parity> p;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            Parity q = dim_.parity_of(i);
            if (p && *p != q) return std::nullopt;
            p = q;
        }
        return p;
    }

    GradedVector even_part() const { return block_part(Parity::even); }
    GradedVector odd_part() const { return block_part(Parity::odd); }

    GradedVector& operator+=(const GradedVector& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    GradedVector& operator-=(const GradedVector& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    GradedVector& operator*=(const GaussRational& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
    friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
    friend GradedVector operator*(const GaussRational& s, GradedVector v) { return v *= s; }

    friend bool operator==(const GradedVector& a, const GradedVector& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

private:
    GradedVector block_part(Parity p) const {
        GradedVector out(dim_);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (dim_.parity_of(i) == p) out.c_[i] = c_[i];
        return out;
    }

    void require_same_dim(const GradedVector& o) const {
        if (!(dim_ == o.dim_))
            throw std::invalid_argument("GradedVector: dimension mismatch");
    }

    SuperDim dim_;
    std::vector<GaussRational> c_;
};

} // namespace heisuper

#endif
