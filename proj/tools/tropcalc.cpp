// Batch front end: reads one JSON request payload and writes one JSON response.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tropical/error.hpp"
#include "tropical/identities.hpp"
#include "tropical/json_io.hpp"
#include "tropical/linalg.hpp"
#include "tropical/matrix.hpp"
#include "tropical/puiseux.hpp"

namespace {

using trop::Errc;
using trop::Error;
using trop::SortSemiring;
using nlohmann::json;
namespace jio = trop::json_io;

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

struct Options {
  std::string command;
  std::string semiring = "super";
  std::string input = "-";
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  int max_n = trop::kDefaultDetCap;
};

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::ParseError, what); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) invalid(std::string("$: missing \"") + key + "\"");
  return j.at(key);
}

std::size_t natural_field(const json& j, const char* key, std::size_t fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    invalid(std::string("$.") + key + ": expected a natural number");
  }
  return v.get<std::size_t>();
}

/// A payload that is itself a matrix, or carries one under "matrix".
trop::TropMatrix matrix_payload(const json& j, const SortSemiring& L, const Options& opt) {
  const bool bare = j.is_object() && j.contains("data");
  trop::TropMatrix A = bare ? jio::decode_matrix(j, L) : jio::decode_matrix(require(j, "matrix"), L, "$.matrix");
  if (A.rows() > opt.max_n || A.cols() > opt.max_n) {
    throw Error(Errc::TooLarge, "matrix exceeds --max-n " + std::to_string(opt.max_n));
  }
  return A;
}

/// A vector set, or the rows of a matrix.
trop::VectorSet vectors_payload(const json& j, const SortSemiring& L, const Options& opt) {
  if (j.is_object() && j.contains("vectors")) return jio::decode_vector_set(j, L);
  return trop::VectorSet::rows_of(matrix_payload(j, L, opt));
}

json witness_json(const std::vector<trop::TropMatrix>& args, const SortSemiring& L) {
  json out = json::array();
  for (const auto& M : args) out.push_back(jio::encode_matrix(M, L));
  return out;
}

json verdict_json(const trop::Verdict& v, const SortSemiring& L) {
  json out = {{"holds", v.holds}, {"trials", v.trials}};
  if (!v.holds) out["counterexample"] = witness_json(v.counterexample, L);
  return out;
}

json run_det(const json& in, const SortSemiring& L, const Options& opt) {
  const auto report = trop::det(matrix_payload(in, L, opt), opt.max_n);
  return {{"value", jio::encode_scalar(report.value, L)},
          {"tangible", report.tangible},
          {"attaining", report.attaining}};
}

json run_adj(const json& in, const SortSemiring& L, const Options& opt) {
  return {{"adjoint", jio::encode_matrix(trop::adjoint(matrix_payload(in, L, opt), opt.max_n), L)}};
}

json run_charpoly(const json& in, const SortSemiring& L, const Options& opt) {
  const auto A = matrix_payload(in, L, opt);
  const auto tangible = trop::tangible_char_poly(A);
  json roots = json::array();
  try {
    for (const auto& r : trop::corner_roots_univariate(tangible)) {
      roots.push_back({{"root", jio::encode_value(r.root)}, {"layer", jio::encode_layer(r.layer)}});
    }
  } catch (const Error& e) {
    if (e.code() != Errc::NoRoots) throw;
  }
  return {{"char_poly", jio::encode_poly(trop::char_poly(A), L)},
          {"tangible_char_poly", jio::encode_poly(tangible, L)},
          {"roots", std::move(roots)}};
}

json run_solve(const json& in, const SortSemiring& L, const Options& opt) {
  const auto A = matrix_payload(in, L, opt);
  const auto v = jio::decode_vector(require(in, "rhs"), L, "$.rhs");
  if (v.size() != A.rows()) invalid("$.rhs: expected " + std::to_string(A.rows()) + " entries");
  const auto x = trop::cramer_solve(A, v);
  return {{"solution", jio::encode_vector(x, L)},
          {"image", jio::encode_vector(trop::mat_mul(A, x), L)}};
}

json run_rank(const json& in, const SortSemiring& L, const Options& opt) {
  return {{"rank", trop::rank(vectors_payload(in, L, opt))}};
}

json run_eigen(const json& in, const SortSemiring& L, const Options& opt) {
  const auto A = matrix_payload(in, L, opt);
  json pairs = json::array();
  for (const auto& p : trop::eigen_tangible(A)) {
    json entry = {{"beta", jio::encode_value(p.beta)}, {"exact", p.exact}};
    if (p.vector) {
      entry["vector"] = jio::encode_vector(*p.vector, L);
      entry["image"] = jio::encode_vector(trop::mat_mul(A, *p.vector), L);
    } else {
      entry["vector"] = nullptr;
    }
    pairs.push_back(std::move(entry));
  }
  return {{"eigen", std::move(pairs)}};
}

json run_depcheck(const json& in, const SortSemiring& L, const Options& opt) {
  const auto S = vectors_payload(in, L, opt);
  json out = {{"dependent", trop::is_dependent(S)}};
  if (const auto w = trop::dependence_witness(S)) {
    json alpha = json::array();
    for (const auto& a : *w) alpha.push_back(jio::encode_scalar(a, L));
    out["witness"] = std::move(alpha);
    out["combination"] = jio::encode_vector(trop::combine(S, *w), L);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json run_gram(const json& in, const SortSemiring& L, const Options& opt) {
  const auto B = jio::decode_form(require(in, "form"), L, "$.form");
  const auto S = jio::decode_vector_set(require(in, "vectors"), L, "$.vectors");
  if (B.gram_generator.rows() > opt.max_n) throw Error(Errc::TooLarge, "form exceeds --max-n");
  const auto nd = trop::is_nondegenerate(B, S);
  json out = {{"gram", jio::encode_matrix(trop::gram(B, S), L)},
              {"nondegenerate", nd.nondegenerate},
              {"approximate", nd.approximate}};
  if (nd.radical_vector) out["radical_vector"] = jio::encode_vector(*nd.radical_vector, L);
  return out;
}

trop::PIPair identity_payload(const json& in) {
  if (in.contains("standard")) return trop::standard_pair(static_cast<std::uint32_t>(natural_field(in, "standard", 0)));
  if (in.contains("capelli")) return trop::capelli_pair(static_cast<std::uint32_t>(natural_field(in, "capelli", 0)));
  const json& text = require(in, "identity");
  if (!text.is_string()) invalid("$.identity: expected \"lhs == rhs\"");
  return trop::parse_pi_pair(text.get<std::string>());
}

json run_check_identity(const json& in, const SortSemiring& L, const Options& opt) {
  const int n = static_cast<int>(natural_field(in, "n", 2));
  if (n < 1 || n > opt.max_n) invalid("$.n: expected 1 <= n <= --max-n");
  const auto pair = identity_payload(in);
  json out = verdict_json(trop::check_pi(pair, n, opt.trials, opt.seed, L), L);
  out["lhs"] = trop::to_string(pair.f);
  out["rhs"] = trop::to_string(pair.g);
  return out;
}

json run_transfer(const json& in, const SortSemiring&, const Options& opt) {
  const int n = static_cast<int>(natural_field(in, "n", 2));
  if (n < 2 || n > opt.max_n) invalid("$.n: expected 2 <= n <= --max-n");
  const json& name = require(in, "identity");
  if (!name.is_string()) invalid("$.identity: expected a name");
  const std::string id_name = name.get<std::string>();
  trop::MatrixIdentity id;
  if (id_name == "det-mult") {
    id = trop::det_multiplicativity_identity(n);
  } else if (id_name == "adjugate") {
    id = trop::adjugate_identity(n);
  } else if (id_name == "double-adjoint") {
    id = trop::double_adjoint_identity(n);
  } else {
    invalid("$.identity: expected det-mult, adjugate or double-adjoint");
  }
  // Layered samples always live over the naturals.
  const SortSemiring nat = SortSemiring::naturals();
  const auto ell = trop::SortLayer::fin(natural_field(in, "ell", 1));
  if (ell.first == 0) invalid("$.ell: expected a positive layer");
  json out = verdict_json(trop::transfer_check(id, n, ell, opt.trials, opt.seed), nat);
  out["identity"] = id.name;
  out["degree"] = id.degree;
  return out;
}

json run_tropicalize(const json& in, const SortSemiring& L, const Options&) {
  const bool bare = in.is_object() && in.contains("terms");
  const auto F = bare ? jio::decode_puiseux_poly(in) : jio::decode_puiseux_poly(require(in, "poly"), "$.poly");
  json out = {{"tropical", jio::encode_poly(trop::tropicalize(F, L), L)}};
  if (!bare && in.contains("root")) {
    const json& root = in.at("root");
    if (!root.is_string()) invalid("$.root: expected a Puiseux series string");
    trop::PuiseuxElem a;
    try {
      a = trop::parse_puiseux(root.get<std::string>());
    } catch (const Error& e) {
      invalid(std::string("$.root: ") + e.what());
    }
    out["kapranov"] = trop::kapranov_forward_check(F, a);
    out["exploded_root"] = jio::encode_exploded(trop::explode(a));
  }
  return out;
}

json run_scalar_eval(const json& in, const SortSemiring& L, const Options&) {
  const auto f = jio::decode_poly(require(in, "poly"), L, "$.poly");
  const auto point = jio::decode_vector(require(in, "point"), L, "$.point");
  if (static_cast<std::size_t>(point.size()) != f.nvars()) invalid("$.point: length differs from nvars");
  const std::span<const trop::LayeredScalar> p(point.data(), static_cast<std::size_t>(point.size()));
  return {{"value", jio::encode_scalar(trop::poly_eval(f, p), L)}, {"is_root", trop::is_root(f, p)}};
}

json dispatch(const Options& opt, const json& in, const SortSemiring& L) {
  if (opt.command == "det") return run_det(in, L, opt);
  if (opt.command == "adj") return run_adj(in, L, opt);
  if (opt.command == "charpoly") return run_charpoly(in, L, opt);
  if (opt.command == "solve") return run_solve(in, L, opt);
  if (opt.command == "rank") return run_rank(in, L, opt);
  if (opt.command == "eigen") return run_eigen(in, L, opt);
  if (opt.command == "depcheck") return run_depcheck(in, L, opt);
  if (opt.command == "gram") return run_gram(in, L, opt);
  if (opt.command == "check-identity") return run_check_identity(in, L, opt);
  if (opt.command == "transfer") return run_transfer(in, L, opt);
  if (opt.command == "tropicalize") return run_tropicalize(in, L, opt);
  if (opt.command == "scalar-eval") return run_scalar_eval(in, L, opt);
  invalid("unknown command " + opt.command);
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream file(path);
  if (!file) invalid("cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

int report_error(std::string_view name, const std::string& message, int code) {
  std::cout << json{{"error", name}, {"message", message}}.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Layered tropical algebra calculator"};
  app.add_option("command", opt.command, "Command to run")
      ->required()
      ->check(CLI::IsMember({"det", "adj", "charpoly", "solve", "rank", "eigen", "depcheck", "gram",
                             "check-identity", "transfer", "tropicalize", "scalar-eval"}));
  app.add_option("--semiring", opt.semiring, "Sorting semiring descriptor")->capture_default_str();
  app.add_option("--trials", opt.trials, "Random trials for sampled checks")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--max-n", opt.max_n, "Largest accepted matrix size")->capture_default_str();
  app.add_option("--input", opt.input, "Input file, or - for stdin")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    const SortSemiring L = SortSemiring::parse(opt.semiring);
    json in;
    try {
      in = json::parse(read_input(opt.input));
    } catch (const json::parse_error& e) {
      invalid(std::string("invalid JSON: ") + e.what());
    }
    std::cout << dispatch(opt, in, L).dump() << '\n';
    return 0;
  } catch (const Error& e) {
    return report_error(e.name(), e.what(), e.code() == Errc::ParseError ? kExitParse : kExitDomain);
  } catch (const json::exception& e) {
    return report_error("ParseError", e.what(), kExitParse);
  }
}
