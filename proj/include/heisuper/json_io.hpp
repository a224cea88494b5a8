#ifndef HEISUPER_JSON_IO_HPP
#define HEISUPER_JSON_IO_HPP

#include "heisuper/dimension.hpp"
#include "heisuper/lie_superalgebra.hpp"
#include "heisuper/linalg.hpp"
#include "heisuper/representation.hpp"

#include <json.hpp>

namespace heisuper {

/*
 * JSON encodings.  All scalars are canonical reduced fraction strings, so
 * files are lossless and byte-comparable:
 *
 *   scalar       {"re": "p/q", "im": "r/s"}
 *   supermatrix  {"even": p, "odd": q, "entries": [[scalar, ...], ...]}  (row-major)
 *   subspace     {"ambient": {"even": p, "odd": q}, "basis": [[scalar, ...], ...]}
 *   algebra      {"basis": [{"label": "...", "parity": "even"|"odd"}, ...],
 *                 "center_index": k,
 *                 "structure": [[i, j, k, scalar], ...]}            (0-based indices)
 *   representation {"algebra": ..., "module": {"even": p, "odd": q},
 *                   "images": {label: supermatrix, ...}}
 *
 * Decoders throw std::invalid_argument on structurally bad data; malformed
 * JSON surfaces as nlohmann::json::exception from the parser.
 */

nlohmann::json scalar_to_json(const GaussRational& s);
GaussRational scalar_from_json(const nlohmann::json& j);

nlohmann::json super_dim_to_json(SuperDim d);
SuperDim super_dim_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const SuperMatrix& m);
SuperMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j);

nlohmann::json algebra_to_json(const LieSuperalgebra& g);
LieSuperalgebra algebra_from_json(const nlohmann::json& j);

nlohmann::json representation_to_json(const Representation& r);
Representation representation_from_json(const nlohmann::json& j);

nlohmann::json dimension_report_to_json(const DimensionReport& rep);

} // namespace heisuper

#endif
