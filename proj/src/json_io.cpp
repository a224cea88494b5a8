#include "heisuper/json_io.hpp"

#include <stdexcept>

namespace heisuper {

using nlohmann::json;

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

std::size_t size_field(const json& j, const char* key) {
    require(j.contains(key) && j[key].is_number_unsigned(), "expected a non-negative integer field");
    return j[key].get<std::size_t>();
}

} // namespace

json scalar_to_json(const GaussRational& s) {
    return json{{"re", s.re_str()}, {"im", s.im_str()}};
}

GaussRational scalar_from_json(const json& j) {
    require(j.is_object() && j.contains("re") && j.contains("im"), "scalar: need re and im");
    require(j["re"].is_string() && j["im"].is_string(), "scalar: re and im must be strings");
    return GaussRational::parse(j["re"].get<std::string>(), j["im"].get<std::string>());
}

json super_dim_to_json(SuperDim d) {
    return json{{"even", d.even}, {"odd", d.odd}};
}

SuperDim super_dim_from_json(const json& j) {
    require(j.is_object(), "super dimension: expected object");
    return SuperDim{size_field(j, "even"), size_field(j, "odd")};
}

json matrix_to_json(const SuperMatrix& m) {
    json rows = json::array();
    const std::size_t t = m.total();
    for (std::size_t r = 0; r < t; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < t; ++c) row.push_back(scalar_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    json out = super_dim_to_json(m.dim());
    out["entries"] = std::move(rows);
    return out;
}

SuperMatrix matrix_from_json(const json& j) {
    const SuperDim d = super_dim_from_json(j);
    require(j.contains("entries") && j["entries"].is_array(), "matrix: entries must be an array");
    const auto& rows = j["entries"];
    require(rows.size() == d.total(), "matrix: row count does not match dimension");
    SuperMatrix m(d);
    for (std::size_t r = 0; r < d.total(); ++r) {
        require(rows[r].is_array() && rows[r].size() == d.total(),
                "matrix: column count does not match dimension");
        for (std::size_t c = 0; c < d.total(); ++c) m.at(r, c) = scalar_from_json(rows[r][c]);
    }
    return m;
}

json subspace_to_json(const Subspace& s) {
    json basis = json::array();
    for (const auto& v : s.basis()) {
        json coords = json::array();
        for (const auto& x : v.coords()) coords.push_back(scalar_to_json(x));
        basis.push_back(std::move(coords));
    }
    return json{{"ambient", super_dim_to_json(s.ambient())}, {"basis", std::move(basis)}};
}

Subspace subspace_from_json(const json& j) {
    require(j.is_object() && j.contains("ambient") && j.contains("basis"),
            "subspace: need ambient and basis");
    const SuperDim ambient = super_dim_from_json(j["ambient"]);
    require(j["basis"].is_array(), "subspace: basis must be an array");
    std::vector<GradedVector> basis;
    for (const auto& row : j["basis"]) {
        require(row.is_array() && row.size() == ambient.total(),
                "subspace: basis vector has wrong length");
        GradedVector v(ambient);
        for (std::size_t i = 0; i < ambient.total(); ++i) v.at(i) = scalar_from_json(row[i]);
        basis.push_back(std::move(v));
    }
    return Subspace(ambient, std::move(basis));
}

json algebra_to_json(const LieSuperalgebra& g) {
    json basis = json::array();
    for (const auto& b : g.basis())
        basis.push_back(json{{"label", b.label},
                             {"parity", b.parity == Parity::even ? "even" : "odd"}});
    json structure = json::array();
    for (const auto& e : g.structure_entries())
        structure.push_back(json::array({e.i, e.j, e.k, scalar_to_json(e.coeff)}));
    return json{{"basis", std::move(basis)},
                {"center_index", g.center_index()},
                {"structure", std::move(structure)}};
}

LieSuperalgebra algebra_from_json(const json& j) {
    require(j.is_object() && j.contains("basis") && j.contains("center_index") &&
                j.contains("structure"),
            "algebra: need basis, center_index and structure");
    require(j["basis"].is_array() && !j["basis"].empty(), "algebra: basis must be non-empty");
    std::vector<BasisElement> basis;
    for (const auto& b : j["basis"]) {
        require(b.is_object() && b.contains("label") && b.contains("parity") &&
                    b["label"].is_string() && b["parity"].is_string(),
                "algebra: malformed basis element");
        const std::string parity = b["parity"].get<std::string>();
        require(parity == "even" || parity == "odd", "algebra: parity must be even or odd");
        basis.push_back(
            {b["label"].get<std::string>(), parity == "even" ? Parity::even : Parity::odd});
    }
    const std::size_t center = size_field(j, "center_index");
    require(j["structure"].is_array(), "algebra: structure must be an array");
    std::vector<StructureEntry> entries;
    for (const auto& e : j["structure"]) {
        require(e.is_array() && e.size() == 4, "algebra: structure entry must be [i,j,k,scalar]");
        require(e[0].is_number_unsigned() && e[1].is_number_unsigned() && e[2].is_number_unsigned(),
                "algebra: structure indices must be non-negative integers");
        entries.push_back(StructureEntry{e[0].get<std::size_t>(), e[1].get<std::size_t>(),
                                         e[2].get<std::size_t>(), scalar_from_json(e[3])});
    }
    return LieSuperalgebra(std::move(basis), center, entries);
}

json representation_to_json(const Representation& r) {
    json images = json::object();
    for (std::size_t i = 0; i < r.algebra().dim(); ++i)
        images[r.algebra().label(i)] = matrix_to_json(r.image(i));
    return json{{"algebra", algebra_to_json(r.algebra())},
                {"module", super_dim_to_json(r.module_dim())},
                {"images", std::move(images)}};
}

Representation representation_from_json(const json& j) {
    require(j.is_object() && j.contains("algebra") && j.contains("module") &&
                j.contains("images"),
            "representation: need algebra, module and images");
    LieSuperalgebra g = algebra_from_json(j["algebra"]);
    const SuperDim module = super_dim_from_json(j["module"]);
    require(j["images"].is_object(), "representation: images must be an object");
    require(j["images"].size() == g.dim(), "representation: one image per basis element required");
    std::vector<SuperMatrix> images;
    images.reserve(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const std::string& label = g.label(i);
        require(j["images"].contains(label), "representation: missing image for a basis label");
        images.push_back(matrix_from_json(j["images"][label]));
    }
    return Representation(std::move(g), module, std::move(images));
}

json dimension_report_to_json(const DimensionReport& rep) {
    json superdims = json::array();
    for (const auto& d : rep.admissible_superdims)
        superdims.push_back(json::array({d.even, d.odd}));
    json out{{"family", rep.spec.family == Family::even_center ? "hmn" : "hn"},
             {"n", rep.spec.n},
             {"dim", rep.algebra_dim},
             {"mu", rep.mu},
             {"zeta", rep.zeta},
             {"mu0", rep.mu0},
             {"mu1", rep.mu1},
             {"mu01", rep.mu01},
             {"mu10", rep.mu10},
             {"superdims", std::move(superdims)}};
    if (rep.spec.family == Family::even_center) out["m"] = rep.spec.m;
    return out;
}

} // namespace heisuper
