#include "tropical/json_io.hpp"

#include "tropical/error.hpp"

namespace trop::json_io {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(Errc::ParseError, path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t natural(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    bad(path, "expected a natural number");
  }
  return j.get<std::size_t>();
}

std::uint64_t component(const json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "inf") return kInfLayer;
  return natural(j, path);
}

json encode_component(std::uint64_t c) { return c == kInfLayer ? json("inf") : json(c); }

bool is_super(const SortSemiring& L) { return L == SortSemiring::two_layer(); }

}  // namespace

json encode_value(const ValueRat& v) { return format_value(v); }

ValueRat decode_value(const json& j, const std::string& path) {
  if (j.is_number_integer()) return ValueRat(j.get<std::int64_t>());
  if (!j.is_string()) bad(path, "expected a rational string \"p\" or \"p/q\"");
  try {
    return parse_value(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

json encode_layer(const SortLayer& layer) {
  if (layer.paired) return json::array({encode_component(layer.first), encode_component(layer.second)});
  return encode_component(layer.first);
}

SortLayer decode_layer(const json& j, const SortSemiring& L, const std::string& path) {
  SortLayer layer;
  if (j.is_array()) {
    if (j.size() != 2) bad(path, "a paired layer has two components");
    layer = SortLayer::pair(component(j[0], path + "[0]"), component(j[1], path + "[1]"));
  } else {
    layer = SortLayer::fin(component(j, path));
  }
  if (!L.valid_nonzero(layer)) {
    bad(path, "layer " + to_string(layer) + " is not a nonzero layer of " + L.descriptor());
  }
  return layer;
}

json encode_scalar(const LayeredScalar& x, const SortSemiring& L) {
  if (x.is_zero()) return "zero";
  json out = {{"v", encode_value(x.value())}};
  const SortLayer layer = x.is_generic() ? L.one() : x.layer();
  if (is_super(L)) {
    if (layer == SortLayer::inf()) out["g"] = true;
    return out;
  }
  out["l"] = encode_layer(layer);
  return out;
}

LayeredScalar decode_scalar(const json& j, const SortSemiring& L, const std::string& path) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "zero" || s == "-inf") return LayeredScalar::zero();
    bad(path, "expected \"zero\" or a scalar object");
  }
  if (!j.is_object()) bad(path, "expected a scalar");
  for (const auto& [key, value] : j.items()) {
    if (key != "v" && key != "l" && key != "g") bad(path, "unexpected key \"" + key + "\"");
  }
  const ValueRat v = decode_value(field(j, "v", path), path + ".v");
  if (j.contains("g")) {
    if (!is_super(L)) bad(path, "\"g\" is only meaningful under super");
    if (!j["g"].is_boolean()) bad(path + ".g", "expected a boolean");
    if (j.contains("l")) bad(path, "give either \"g\" or \"l\"");
    return LayeredScalar::make(v, j["g"].get<bool>() ? SortLayer::inf() : L.one(), L);
  }
  if (!j.contains("l")) return LayeredScalar::tangible(v, L);
  return LayeredScalar::make(v, decode_layer(j["l"], L, path + ".l"), L);
}

json encode_matrix(const TropMatrix& A, const SortSemiring& L) {
  json data = json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < A.cols(); ++j) row.push_back(encode_scalar(A(i, j), L));
    data.push_back(std::move(row));
  }
  return {{"rows", A.rows()}, {"cols", A.cols()}, {"data", std::move(data)}};
}

TropMatrix decode_matrix(const json& j, const SortSemiring& L, const std::string& path) {
  const auto rows = natural(field(j, "rows", path), path + ".rows");
  const auto cols = natural(field(j, "cols", path), path + ".cols");
  const json& data = field(j, "data", path);
  if (!data.is_array() || data.size() != rows) bad(path + ".data", "expected " + std::to_string(rows) + " rows");
  TropMatrix A(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rpath = path + ".data[" + std::to_string(i) + "]";
    if (!data[i].is_array() || data[i].size() != cols) bad(rpath, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          decode_scalar(data[i][c], L, rpath + "[" + std::to_string(c) + "]");
    }
  }
  return A;
}

json encode_vector(const TropVector& v, const SortSemiring& L) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(encode_scalar(v(i), L));
  return out;
}

TropVector decode_vector(const json& j, const SortSemiring& L, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of scalars");
  TropVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = decode_scalar(j[i], L, path + "[" + std::to_string(i) + "]");
  }
  return v;
}

json encode_vector_set(const VectorSet& S, const SortSemiring& L) {
  json vectors = json::array();
  for (const auto& v : S.vectors) vectors.push_back(encode_vector(v, L));
  return {{"dim", S.dim}, {"vectors", std::move(vectors)}};
}

VectorSet decode_vector_set(const json& j, const SortSemiring& L, const std::string& path) {
  VectorSet S;
  S.dim = static_cast<int>(natural(field(j, "dim", path), path + ".dim"));
  const json& vectors = field(j, "vectors", path);
  if (!vectors.is_array()) bad(path + ".vectors", "expected an array");
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const std::string vpath = path + ".vectors[" + std::to_string(i) + "]";
    TropVector v = decode_vector(vectors[i], L, vpath);
    if (v.size() != S.dim) bad(vpath, "expected " + std::to_string(S.dim) + " entries");
    S.vectors.push_back(std::move(v));
  }
  return S;
}

json encode_poly(const TropPoly& f, const SortSemiring& L) {
  json terms = json::array();
  for (const auto& [exp, c] : f.terms()) {
    terms.push_back({{"exp", exp}, {"coef", encode_scalar(c, L)}});
  }
  return {{"nvars", f.nvars()}, {"terms", std::move(terms)}};
}

TropPoly decode_poly(const json& j, const SortSemiring& L, const std::string& path) {
  const auto nvars = natural(field(j, "nvars", path), path + ".nvars");
  const json& terms = field(j, "terms", path);
  if (!terms.is_array()) bad(path + ".terms", "expected an array");
  TropPoly f(nvars);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tpath = path + ".terms[" + std::to_string(t) + "]";
    const json& exp = field(terms[t], "exp", tpath);
    if (!exp.is_array() || exp.size() != nvars) bad(tpath + ".exp", "expected " + std::to_string(nvars) + " exponents");
    Exponent e;
    for (std::size_t i = 0; i < nvars; ++i) {
      e.push_back(static_cast<std::uint32_t>(natural(exp[i], tpath + ".exp[" + std::to_string(i) + "]")));
    }
    f.add_term(e, decode_scalar(field(terms[t], "coef", tpath), L, tpath + ".coef"));
  }
  return f;
}

BilinearForm decode_form(const json& j, const SortSemiring& L, const std::string& path) {
  return {decode_matrix(field(j, "gram_generator", path), L, path + ".gram_generator")};
}

PuiseuxPoly decode_puiseux_poly(const json& j, const std::string& path) {
  PuiseuxPoly F;
  F.nvars = natural(field(j, "nvars", path), path + ".nvars");
  const json& terms = field(j, "terms", path);
  if (!terms.is_array()) bad(path + ".terms", "expected an array");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tpath = path + ".terms[" + std::to_string(t) + "]";
    const json& exp = field(terms[t], "exp", tpath);
    if (!exp.is_array() || exp.size() != F.nvars) bad(tpath + ".exp", "wrong exponent length");
    Exponent e;
    for (std::size_t i = 0; i < F.nvars; ++i) {
      e.push_back(static_cast<std::uint32_t>(natural(exp[i], tpath + ".exp")));
    }
    const json& coef = field(terms[t], "coef", tpath);
    if (!coef.is_string()) bad(tpath + ".coef", "expected a Puiseux series string");
    try {
      F.add_term(e, parse_puiseux(coef.get<std::string>()));
    } catch (const Error& err) {
      bad(tpath + ".coef", err.what());
    }
  }
  return F;
}

json encode_puiseux_poly(const PuiseuxPoly& F) {
  json terms = json::array();
  for (const auto& [exp, c] : F.terms) terms.push_back({{"exp", exp}, {"coef", to_string(c)}});
  return {{"nvars", F.nvars}, {"terms", std::move(terms)}};
}

json encode_exploded(const ExplodedScalar& x) {
  if (x.zero) return "zero";
  return {{"coeff", encode_value(x.coeff)}, {"v", encode_value(x.value)}};
}

}  // namespace trop::json_io
