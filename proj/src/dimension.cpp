#include "heisuper/dimension.hpp"

#include <algorithm>

namespace heisuper {

std::size_t mu(const HeisenbergSpec& spec) {
    spec.ensure_valid();
    if (spec.family == Family::even_center) return spec.m + (spec.n + 1) / 2 + 2;
    return spec.n + 2;
}

std::vector<SuperDim> admissible_superdims(const HeisenbergSpec& spec) {
    spec.ensure_valid();
    if (spec.family == Family::even_center) {
        const SuperDim first{spec.m + 2, (spec.n + 1) / 2};
        const SuperDim second = first.flipped();
        if (first == second) return {first};
        return {first, second};
    }
    std::vector<SuperDim> out;
    for (std::size_t i = 0; i <= spec.n; ++i) out.push_back(SuperDim{i + 1, spec.n - i + 1});
    return out;
}

MuParts mu_parts(const HeisenbergSpec& spec) {
    spec.ensure_valid();
    MuParts out;
    if (spec.family == Family::even_center) {
        out.mu0 = std::min(spec.m + 2, (spec.n + 1) / 2);
        out.mu1 = out.mu0;
        out.mu01 = mu(spec);
        out.mu10 = out.mu01;
    } else {
        out.mu0 = 1;
        out.mu1 = 1;
        out.mu01 = spec.n + 2;
        out.mu10 = out.mu01;
    }
    return out;
}

DimensionReport full_report(const HeisenbergSpec& spec) {
    spec.ensure_valid();
    DimensionReport rep;
    rep.spec = spec;
    rep.algebra_dim = spec.dim();
    rep.mu = mu(spec);
    rep.zeta = zeta(spec);
    const MuParts parts = mu_parts(spec);
    rep.mu0 = parts.mu0;
    rep.mu1 = parts.mu1;
    rep.mu01 = parts.mu01;
    rep.mu10 = parts.mu10;
    rep.admissible_superdims = admissible_superdims(spec);
    return rep;
}

} // namespace heisuper
