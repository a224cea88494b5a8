#include "heisuper/constructions.hpp"

#include <stdexcept>

namespace heisuper {

namespace {

const GaussRational kHalf = GaussRational::fraction(1, 2);
const GaussRational kI = GaussRational::imaginary_unit();
const GaussRational kHalfI = kHalf * kI;

} // namespace

Representation build_pi_even_center(std::size_t m, std::size_t n) {
    const HeisenbergSpec spec = HeisenbergSpec::even_center(m, n);
    LieSuperalgebra g = make_heisenberg(spec);
    const SuperDim module{m + 2, (n + 1) / 2};
    std::vector<SuperMatrix> images(g.dim(), SuperMatrix(module));

    for (std::size_t i = 1; i <= m; ++i) {
        images[i - 1] = matrix_unit(module, 1, i + 1);          // u_i
        images[m + i - 1] = matrix_unit(module, i + 1, m + 2);  // v_i
    }
    images[2 * m] = matrix_unit(module, 1, m + 2);              // z
    for (std::size_t j = 1; j <= n; ++j) {
        const std::size_t k = (j + 1) / 2; // pair index of w_j
        SuperMatrix tail = matrix_unit(module, m + 2 + k, m + 2);
        SuperMatrix head = matrix_unit(module, 1, m + 2 + k);
        if (j % 2 == 1) {
            tail *= kHalf;
            images[2 * m + j] = tail + head;
        } else {
            tail *= kHalfI;
            head *= -kI;
            images[2 * m + j] = tail + head;
        }
    }
    return Representation(std::move(g), module, std::move(images));
}

Representation build_pi_even_center_flipped(std::size_t m, std::size_t n) {
    const HeisenbergSpec spec = HeisenbergSpec::even_center(m, n);
    LieSuperalgebra g = make_heisenberg(spec);
    const std::size_t q = (n + 1) / 2;
    const SuperDim module{q, m + 2};
    std::vector<SuperMatrix> images(g.dim(), SuperMatrix(module));

    for (std::size_t i = 1; i <= m; ++i) {
        images[i - 1] = matrix_unit(module, q + 1, q + 2 + i);      // u_i
        images[m + i - 1] = matrix_unit(module, q + 2 + i, q + 2);  // v_i
    }
    images[2 * m] = matrix_unit(module, q + 1, q + 2);              // z
    for (std::size_t j = 1; j <= n; ++j) {
        const std::size_t k = (j + 1) / 2;
        SuperMatrix tail = matrix_unit(module, k, q + 2);
        SuperMatrix head = matrix_unit(module, q + 1, k);
        if (j % 2 == 1) {
            tail *= kHalf;
            images[2 * m + j] = tail + head;
        } else {
            tail *= kHalfI;
            head *= -kI;
            images[2 * m + j] = tail + head;
        }
    }
    return Representation(std::move(g), module, std::move(images));
}

Representation build_pi_odd_center(std::size_t n, std::size_t r) {
    const HeisenbergSpec spec = HeisenbergSpec::odd_center(n);
    if (r > n) throw std::invalid_argument("build_pi_odd_center: r out of range");
    LieSuperalgebra g = make_heisenberg(spec);
    const SuperDim module{r + 1, n - r + 1};
    std::vector<SuperMatrix> images(g.dim(), SuperMatrix(module));

    for (std::size_t i = 1; i <= n; ++i) {
        if (i <= r) {
            images[i - 1] = matrix_unit(module, 1, i + 1);             // v_i
            images[n + i] = matrix_unit(module, i + 1, n + 2);         // w_i
        } else {
            SuperMatrix vi = matrix_unit(module, i + 1, n + 2);
            vi *= GaussRational(-1);
            images[i - 1] = vi;                                        // v_i, i > r
            images[n + i] = matrix_unit(module, 1, i + 1);             // w_i, i > r
        }
    }
    images[n] = matrix_unit(module, 1, n + 2);                         // z
    return Representation(std::move(g), module, std::move(images));
}

GradedVector canonical_v0(const Representation& r) {
    const SuperMatrix& z = r.image(r.algebra().center_index());
    const std::size_t t = z.total();
    for (std::size_t row = 0; row < t; ++row)
        for (std::size_t col = 0; col < t; ++col)
            if (!z.at(row, col).is_zero()) return GradedVector::unit(r.module_dim(), col);
    throw std::invalid_argument("canonical_v0: the center acts trivially");
}

} // namespace heisuper
