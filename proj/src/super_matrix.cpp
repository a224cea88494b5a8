#include "heisuper/super_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace heisuper {

bool SuperMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool SuperMatrix::is_homogeneous_of(Parity p) const {
    const std::size_t n = total();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!at(r, c).is_zero() &&
                parity_sum(dim_.parity_of(r), dim_.parity_of(c)) != p)
                return false;
    return true;
}

std::optional<Parity> SuperMatrix::homogeneous_parity() const {
    std::optional<Parity> p;
    const std::size_t n = total();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (at(r, c).is_zero()) continue;
            Parity q = parity_sum(dim_.parity_of(r), dim_.parity_of(c));
            if (p && *p != q) return std::nullopt;
            p = q;
        }
    return p;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
    if (!(dim_ == o.dim_)) throw std::invalid_argument("SuperMatrix: dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
    if (!(dim_ == o.dim_)) throw std::invalid_argument("SuperMatrix: dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

SuperMatrix& SuperMatrix::operator*=(const GaussRational& s) {
    for (auto& x : e_) x *= s;
    return *this;
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
    if (!(dim_ == o.dim_)) throw std::invalid_argument("SuperMatrix: dimension mismatch");
    const std::size_t n = total();
    SuperMatrix out(dim_);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const GaussRational& x = at(r, k);
            if (x.is_zero()) continue; // matrices here are mostly sparse
            for (std::size_t c = 0; c < n; ++c) {
                const GaussRational& y = o.at(k, c);
                if (y.is_zero()) continue;
                out.at(r, c) += x * y;
            }
        }
    return out;
}

GradedVector SuperMatrix::operator*(const GradedVector& v) const {
    if (!(dim_ == v.dim())) throw std::invalid_argument("SuperMatrix: vector dimension mismatch");
    const std::size_t n = total();
    GradedVector out(dim_);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const GaussRational& x = at(r, c);
            if (x.is_zero() || v.at(c).is_zero()) continue;
            out.at(r) += x * v.at(c);
        }
    return out;
}

std::string SuperMatrix::str() const {
    std::ostringstream os;
    const std::size_t n = total();
    for (std::size_t r = 0; r < n; ++r) {
        os << "[ ";
        for (std::size_t c = 0; c < n; ++c) {
            os << at(r, c).str();
            if (c + 1 < n) os << "  ";
        }
        os << " ]\n";
    }
    return os.str();
}

SuperMatrix matrix_unit(SuperDim dim, std::size_t r, std::size_t c) {
    if (r < 1 || c < 1 || r > dim.total() || c > dim.total())
        throw std::out_of_range("matrix_unit: index out of range");
    SuperMatrix m(dim);
    m.at(r - 1, c - 1) = GaussRational(1);
    return m;
}

SuperMatrix super_commutator(const SuperMatrix& x, const SuperMatrix& y) {
    if (!(x.dim() == y.dim()))
        throw std::invalid_argument("super_commutator: dimension mismatch");
    if (x.is_zero() || y.is_zero()) return SuperMatrix(x.dim());
    auto px = x.homogeneous_parity();
    auto py = y.homogeneous_parity();
    if (!px || !py)
        throw std::invalid_argument("super_commutator: non-homogeneous input");
    SuperMatrix out = x * y;
    if (koszul_sign(*px, *py) < 0)
        out += y * x;
    else
        out -= y * x;
    return out;
}

namespace {
// Old index of the k-th coordinate after the block exchange.
std::size_t flip_source(SuperDim d, std::size_t k) {
    return k < d.odd ? d.even + k : k - d.odd;
}
} // namespace

SuperDim parity_flip(SuperDim d) { return d.flipped(); }

GradedVector parity_flip(const GradedVector& v) {
    SuperDim nd = v.dim().flipped();
    GradedVector out(nd);
    for (std::size_t k = 0; k < nd.total(); ++k)
        out.at(k) = v.at(flip_source(v.dim(), k));
    return out;
}

SuperMatrix parity_flip(const SuperMatrix& m) {
    SuperDim nd = m.dim().flipped();
    SuperMatrix out(nd);
    const std::size_t n = nd.total();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out.at(r, c) = m.at(flip_source(m.dim(), r), flip_source(m.dim(), c));
    return out;
}

} // namespace heisuper
