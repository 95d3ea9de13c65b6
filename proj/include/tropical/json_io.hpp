#pragma once

#include <string>

#include <json.hpp>

#include "tropical/linalg.hpp"
#include "tropical/matrix.hpp"
#include "tropical/poly.hpp"
#include "tropical/puiseux.hpp"

namespace trop::json_io {

using nlohmann::json;

json encode_value(const ValueRat& v);
ValueRat decode_value(const json& j, const std::string& path);

json encode_layer(const SortLayer& layer);
SortLayer decode_layer(const json& j, const SortSemiring& L, const std::string& path);

/// "zero" or {"v": "p/q", "l": n | "inf" | [k, l]}; under "super" a
/// tangible is {"v": ...} and a ghost adds "g": true.
json encode_scalar(const LayeredScalar& x, const SortSemiring& L);
/// Also accepts "-inf" for Zero.
LayeredScalar decode_scalar(const json& j, const SortSemiring& L, const std::string& path = "$");

json encode_matrix(const TropMatrix& A, const SortSemiring& L);
TropMatrix decode_matrix(const json& j, const SortSemiring& L, const std::string& path = "$");

json encode_vector(const TropVector& v, const SortSemiring& L);
TropVector decode_vector(const json& j, const SortSemiring& L, const std::string& path = "$");

json encode_vector_set(const VectorSet& S, const SortSemiring& L);
VectorSet decode_vector_set(const json& j, const SortSemiring& L, const std::string& path = "$");

json encode_poly(const TropPoly& f, const SortSemiring& L);
TropPoly decode_poly(const json& j, const SortSemiring& L, const std::string& path = "$");

BilinearForm decode_form(const json& j, const SortSemiring& L, const std::string& path = "$");

/// Terms carry Puiseux text coefficients: {"exp": [...], "coef": "t^2 - 1"}.
PuiseuxPoly decode_puiseux_poly(const json& j, const std::string& path = "$");
json encode_puiseux_poly(const PuiseuxPoly& F);

json encode_exploded(const ExplodedScalar& x);

}  // namespace trop::json_io
