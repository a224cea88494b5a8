#include "heisuper/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace heisuper {

namespace detail {

void Rref::reduce_in_place(Row& coords) const {
    if (coords.size() != cols)
        throw std::invalid_argument("Rref::reduce_in_place: length mismatch");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const GaussRational coef = coords[pivots[i]];
        if (coef.is_zero()) continue;
        for (std::size_t c = pivots[i]; c < cols; ++c) {
            if (rows[i][c].is_zero()) continue;
            coords[c] -= coef * rows[i][c];
        }
    }
}

Rref reduce(Mat m) {
    Rref out;
    out.cols = m.empty() ? 0 : m[0].size();
    for (const auto& r : m)
        if (r.size() != out.cols)
            throw std::invalid_argument("reduce: ragged matrix");

    // Fraction-free forward elimination: every row below the pivot row is
    // updated by the cross-multiplication rule and divided by the previous
    // pivot, which is an exact division.
    GaussRational prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < out.cols && rank < m.size(); ++col) {
        std::size_t p = rank;
        while (p < m.size() && m[p][col].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[rank], m[p]);
        const GaussRational pivot = m[rank][col];
        const GaussRational prev_inv = prev.inv();
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            const GaussRational lead = m[r][col];
            for (std::size_t c = col + 1; c < out.cols; ++c) {
                GaussRational v = pivot * m[r][c];
                if (!lead.is_zero() && !m[rank][c].is_zero()) v -= lead * m[rank][c];
                m[r][c] = v * prev_inv;
            }
            m[r][col] = GaussRational(0);
        }
        prev = pivot;
        out.pivots.push_back(col);
        ++rank;
    }
    m.resize(rank);

    // Normalize pivots to 1 and clear entries above them.
    for (std::size_t i = rank; i-- > 0;) {
        const std::size_t pc = out.pivots[i];
        const GaussRational inv = m[i][pc].inv();
        for (std::size_t c = pc; c < out.cols; ++c)
            if (!m[i][c].is_zero()) m[i][c] *= inv;
        for (std::size_t j = 0; j < i; ++j) {
            const GaussRational coef = m[j][pc];
            if (coef.is_zero()) continue;
            for (std::size_t c = pc; c < out.cols; ++c)
                if (!m[i][c].is_zero()) m[j][c] -= coef * m[i][c];
        }
    }
    out.rows = std::move(m);
    return out;
}

namespace {

Mat rows_from_vectors(const std::vector<GradedVector>& vectors) {
    Mat m;
    m.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (!(v.dim() == vectors.front().dim()))
            throw std::invalid_argument("vectors do not share an ambient dimension");
        m.push_back(v.coords());
    }
    return m;
}

} // namespace

} // namespace detail

std::size_t rank(const std::vector<GradedVector>& vectors) {
    if (vectors.empty()) return 0;
    return detail::reduce(detail::rows_from_vectors(vectors)).rank();
}

Subspace kernel(const std::vector<GradedVector>& map_columns, SuperDim domain) {
    const std::size_t t = map_columns.size();
    if (t != domain.total())
        throw std::invalid_argument("kernel: column count does not match the domain dimension");
    if (t == 0) return Subspace::zero(domain);

    const std::size_t n = map_columns.front().size();
    detail::Mat m(n, detail::Row(t));
    for (std::size_t j = 0; j < t; ++j) {
        if (map_columns[j].size() != n)
            throw std::invalid_argument("kernel: columns do not share an ambient dimension");
        for (std::size_t r = 0; r < n; ++r) m[r][j] = map_columns[j].at(r);
    }
    detail::Rref rr = detail::reduce(std::move(m));

    std::vector<GradedVector> basis;
    std::size_t next_pivot = 0;
    for (std::size_t f = 0; f < t; ++f) {
        if (next_pivot < rr.pivots.size() && rr.pivots[next_pivot] == f) {
            ++next_pivot;
            continue;
        }
        GradedVector v(domain);
        v.at(f) = GaussRational(1);
        for (std::size_t i = 0; i < rr.rank(); ++i)
            v.at(rr.pivots[i]) = -rr.rows[i][f];
        basis.push_back(std::move(v));
    }
    return Subspace(domain, std::move(basis));
}

SuperMatrix inverse(const SuperMatrix& m) {
    const std::size_t n = m.total();
    detail::Mat aug(n, detail::Row(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = m.at(r, c);
        aug[r][n + r] = GaussRational(1);
    }
    detail::Rref rr = detail::reduce(std::move(aug));
    if (rr.rank() < n || rr.pivots[n - 1] != n - 1)
        throw std::domain_error("inverse: singular matrix");
    SuperMatrix out(m.dim());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) = rr.rows[r][n + c];
    return out;
}

Subspace::Subspace(SuperDim ambient, std::vector<GradedVector> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
    detail::Mat m;
    m.reserve(basis_.size());
    for (const auto& v : basis_) {
        if (!(v.dim() == ambient_))
            throw std::invalid_argument("Subspace: basis vector has wrong ambient dimension");
        m.push_back(v.coords());
    }
    if (m.empty()) {
        rref_.cols = ambient_.total();
        return;
    }
    rref_ = detail::reduce(std::move(m));
    if (rref_.rank() != basis_.size())
        throw std::invalid_argument("Subspace: basis vectors are linearly dependent");
}

Subspace Subspace::from_span(SuperDim ambient, const std::vector<GradedVector>& spanning) {
    detail::Mat m;
    m.reserve(spanning.size());
    for (const auto& v : spanning) {
        if (!(v.dim() == ambient))
            throw std::invalid_argument("Subspace::from_span: wrong ambient dimension");
        m.push_back(v.coords());
    }
    if (m.empty()) return zero(ambient);
    detail::Rref rr = detail::reduce(std::move(m));
    std::vector<GradedVector> basis;
    basis.reserve(rr.rank());
    for (auto& row : rr.rows) basis.emplace_back(ambient, std::move(row));
    return Subspace(ambient, std::move(basis));
}

bool Subspace::contains(const GradedVector& v) const {
    if (!(v.dim() == ambient_))
        throw std::invalid_argument("Subspace::contains: wrong ambient dimension");
    detail::Row coords = v.coords();
    rref_.reduce_in_place(coords);
    for (const auto& x : coords)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains_subspace(const Subspace& s) const {
    for (const auto& v : s.basis())
        if (!contains(v)) return false;
    return true;
}

bool Subspace::is_graded() const {
    for (const auto& v : basis_)
        if (!contains(v.even_part())) return false;
    return true;
}

SuperDim Subspace::super_dim() const {
    if (!is_graded())
        throw std::logic_error("Subspace::super_dim: subspace is not graded");
    std::vector<GradedVector> evens, odds;
    for (const auto& v : basis_) {
        GradedVector e = v.even_part();
        if (!e.is_zero()) evens.push_back(std::move(e));
        GradedVector o = v.odd_part();
        if (!o.is_zero()) odds.push_back(std::move(o));
    }
    SuperDim out;
    out.even = evens.empty() ? 0 : rank(evens);
    out.odd = odds.empty() ? 0 : rank(odds);
    return out;
}

} // namespace heisuper
