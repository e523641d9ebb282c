#pragma once

// JSON encodings of curves, integer matrices, graph-manifold descriptions and
// critical links. Every parse error is a ValidationError whose message starts
// with the path of the offending field, e.g. "rho[1][0]: expected an integer".

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "reeb/curves.hpp"
#include "reeb/graphlink.hpp"
#include "reeb/zlinalg.hpp"

namespace reeb::io {

using nlohmann::json;

/// Samples written for a curve that has no registry entry.
inline constexpr std::size_t kAnonymousCurveSamples = 2001;

/// Reads and parses a JSON file. Throws ValidationError naming the path.
json read_json_file(const std::filesystem::path& path);

/// Integers within +-2^53 become JSON numbers, larger ones decimal strings.
json integer_to_json(const zl::Integer& x);
zl::Integer integer_from_json(const json& j, const std::string& field);

json vector_to_json(const zl::IntVector& v);
zl::IntVector vector_from_json(const json& j, const std::string& field);

json matrix_to_json(const zl::IntMatrix& m);
/// `cols` gives the shape of an empty matrix and is checked against every row.
zl::IntMatrix matrix_from_json(const json& j, const std::string& field, std::size_t cols);
/// Column count inferred from the first row; empty input gives a 0x0 matrix.
zl::IntMatrix matrix_from_json(const json& j, const std::string& field);

/// Closed-form registry curves: {"kind":"closed_form","name":...,"params":{...},"domain":[lo,hi]}.
/// Sampled and anonymous curves: {"kind":"sampled","domain":[lo,hi],"samples":[[t,h1,h2],...]}.
json curve_to_json(const curves::LutzCurve& curve, std::size_t anonymous_samples = kAnonymousCurveSamples);
curves::LutzCurve curve_from_json(const json& j);

json desc_to_json(const graph::GraphManifoldDesc& desc);
graph::GraphManifoldDesc desc_from_json(const json& j);
/// Parses and validates in one step.
graph::GraphManifold manifold_from_json(const json& j);

json class_to_json(const graph::H1Class& u);
/// {"a":[...],"b":[...]}; "b" may be omitted when the manifold has k = 0.
graph::H1Class class_from_json(const json& j, const std::string& field);

/// {"components":[{"type":"elliptic"|"hyperbolic","a":[...],"b":[...]},...]}
json link_to_json(const graph::CriticalLinkDesc& link);
graph::CriticalLinkDesc link_from_json(const json& j);

/// "3,-1,0" -> (3, -1, 0). Throws ValidationError naming `field`.
zl::IntVector parse_int_list(std::string_view text, const std::string& field);

/// Splits flat coordinates into the (a, b) parts of `m`: ngens entries then k.
/// A single "0" is accepted as the zero class.
graph::H1Class split_class(const graph::GraphManifold& m, const zl::IntVector& coords, const std::string& field);

}  // namespace reeb::io
