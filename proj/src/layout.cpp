#include "heisuper/layout.hpp"

#include <sstream>
#include <stdexcept>

namespace heisuper {

namespace {

GaussRational cell_value(const LayoutCell& cell, const ElementCoefficients& k) {
    static const GaussRational half = GaussRational::fraction(1, 2);
    static const GaussRational i = GaussRational::imaginary_unit();
    switch (cell.kind) {
        case CellKind::blank:
        case CellKind::zero:
            return GaussRational(0);
        case CellKind::coeff_a:
            return k.a.at(cell.i - 1);
        case CellKind::coeff_b:
            return k.b.at(cell.i - 1);
        case CellKind::neg_a:
            return -k.a.at(cell.i - 1);
        case CellKind::coeff_c:
            return k.c;
        case CellKind::d_pair:
            return k.d.at(cell.i - 1) - i * k.d.at(cell.j - 1);
        case CellKind::d_bar:
            return half * (k.d.at(cell.i - 1) + i * k.d.at(cell.j - 1));
        case CellKind::d_plain:
            return k.d.at(cell.i - 1);
        case CellKind::d_half:
            return half * k.d.at(cell.i - 1);
    }
    throw std::logic_error("cell_value: unknown cell kind");
}

std::string cell_latex(const LayoutCell& cell) {
    const auto sub = [](std::size_t i) { return std::to_string(i); };
    switch (cell.kind) {
        case CellKind::blank:
            return "";
        case CellKind::zero:
            return "0";
        case CellKind::coeff_a:
            return "a_{" + sub(cell.i) + "}";
        case CellKind::coeff_b:
            return "b_{" + sub(cell.i) + "}";
        case CellKind::neg_a:
            return "-a_{" + sub(cell.i) + "}";
        case CellKind::coeff_c:
            return "c";
        case CellKind::d_pair:
            return "d_{" + sub(cell.i) + "," + sub(cell.j) + "}";
        case CellKind::d_bar:
            return "\\overline{d}_{" + sub(cell.i) + "," + sub(cell.j) + "}";
        case CellKind::d_plain:
            return "d_{" + sub(cell.i) + "}";
        case CellKind::d_half:
            return "\\frac{1}{2}d_{" + sub(cell.i) + "}";
    }
    throw std::logic_error("cell_latex: unknown cell kind");
}

} // namespace

SuperMatrix GenericLayout::instantiate(const ElementCoefficients& coeffs) const {
    SuperMatrix out(dim_);
    const std::size_t t = dim_.total();
    for (std::size_t r = 0; r < t; ++r)
        for (std::size_t c = 0; c < t; ++c) out.at(r, c) = cell_value(cell(r, c), coeffs);
    return out;
}

std::string GenericLayout::to_latex() const {
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    const std::size_t t = dim_.total();
    for (std::size_t r = 0; r < t; ++r) {
        for (std::size_t c = 0; c < t; ++c) {
            os << cell_latex(cell(r, c));
            if (c + 1 < t) os << " & ";
        }
        if (r + 1 < t) os << " \\\\";
        os << "\n";
    }
    os << "\\end{pmatrix}\n";
    return os.str();
}

GenericLayout generic_layout_even_center(std::size_t m, std::size_t n) {
    HeisenbergSpec::even_center(m, n).ensure_valid();
    const std::size_t q = (n + 1) / 2;
    GenericLayout out(SuperDim{m + 2, q});
    out.set(1, 1, {CellKind::zero});
    for (std::size_t i = 1; i <= m; ++i) {
        out.set(1, i + 1, {CellKind::coeff_a, i});
        out.set(i + 1, m + 2, {CellKind::coeff_b, i});
    }
    out.set(1, m + 2, {CellKind::coeff_c});
    out.set(m + 2, m + 2, {CellKind::zero});
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        out.set(1, m + 2 + k, {CellKind::d_pair, 2 * k - 1, 2 * k});
        out.set(m + 2 + k, m + 2, {CellKind::d_bar, 2 * k - 1, 2 * k});
    }
    if (n % 2 == 1) {
        out.set(1, m + 2 + q, {CellKind::d_plain, n});
        out.set(m + 2 + q, m + 2, {CellKind::d_half, n});
    }
    return out;
}

GenericLayout generic_layout_even_center_flipped(std::size_t m, std::size_t n) {
    HeisenbergSpec::even_center(m, n).ensure_valid();
    const std::size_t q = (n + 1) / 2;
    GenericLayout out(SuperDim{q, m + 2});
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        out.set(k, q + 2, {CellKind::d_bar, 2 * k - 1, 2 * k});
        out.set(q + 1, k, {CellKind::d_pair, 2 * k - 1, 2 * k});
    }
    if (n % 2 == 1) {
        out.set(q, q + 2, {CellKind::d_half, n});
        out.set(q + 1, q, {CellKind::d_plain, n});
    }
    out.set(q + 1, q + 1, {CellKind::zero});
    out.set(q + 1, q + 2, {CellKind::coeff_c});
    out.set(q + 2, q + 2, {CellKind::zero});
    for (std::size_t i = 1; i <= m; ++i) {
        out.set(q + 1, q + 2 + i, {CellKind::coeff_a, i});
        out.set(q + 2 + i, q + 2, {CellKind::coeff_b, i});
    }
    return out;
}

GenericLayout generic_layout_odd_center(std::size_t n, std::size_t r) {
    HeisenbergSpec::odd_center(n).ensure_valid();
    if (r > n) throw std::invalid_argument("generic_layout_odd_center: r out of range");
    GenericLayout out(SuperDim{r + 1, n - r + 1});
    out.set(1, 1, {CellKind::zero});
    for (std::size_t i = 1; i <= r; ++i) {
        out.set(1, i + 1, {CellKind::coeff_a, i});
        out.set(i + 1, n + 2, {CellKind::coeff_b, i});
    }
    for (std::size_t j = r + 1; j <= n; ++j) {
        out.set(1, j + 1, {CellKind::coeff_b, j});
        out.set(j + 1, n + 2, {CellKind::neg_a, j});
    }
    out.set(1, n + 2, {CellKind::coeff_c});
    out.set(n + 2, n + 2, {CellKind::zero});
    return out;
}

GradedVector element_coordinates_even_center(std::size_t m, std::size_t n,
                                             const ElementCoefficients& coeffs) {
    const HeisenbergSpec spec = HeisenbergSpec::even_center(m, n);
    spec.ensure_valid();
    if (coeffs.a.size() != m || coeffs.b.size() != m || coeffs.d.size() != n)
        throw std::invalid_argument("element_coordinates_even_center: wrong coefficient counts");
    GradedVector x(spec.algebra_super_dim());
    for (std::size_t i = 0; i < m; ++i) {
        x.at(i) = coeffs.a[i];
        x.at(m + i) = coeffs.b[i];
    }
    x.at(2 * m) = coeffs.c;
    for (std::size_t j = 0; j < n; ++j) x.at(2 * m + 1 + j) = coeffs.d[j];
    return x;
}

GradedVector element_coordinates_odd_center(std::size_t n, const ElementCoefficients& coeffs) {
    const HeisenbergSpec spec = HeisenbergSpec::odd_center(n);
    spec.ensure_valid();
    if (coeffs.a.size() != n || coeffs.b.size() != n)
        throw std::invalid_argument("element_coordinates_odd_center: wrong coefficient counts");
    GradedVector x(spec.algebra_super_dim());
    for (std::size_t i = 0; i < n; ++i) {
        x.at(i) = coeffs.a[i];
        x.at(n + 1 + i) = coeffs.b[i];
    }
    x.at(n) = coeffs.c;
    return x;
}

} // namespace heisuper
