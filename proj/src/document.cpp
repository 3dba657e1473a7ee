#include "kproj/document.hpp"

#include <sstream>

#include <json.hpp>

#include "kproj/constructions.hpp"

namespace kproj {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) bad("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t as_size(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string(what) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

const json& as_array(const json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array");
  return v;
}

// Scalars.

template <Field T>
T scalar_from_json(const json& v) {
  if (v.is_string()) {
    const Rational q = parse_rational(v.get<std::string>());
    if constexpr (std::same_as<T, Rational>) {
      return q;
    } else {
      return Complex(q.get_d(), 0.0);
    }
  }
  if (v.is_number_integer()) return from_int<T>(v.get<long>());
  if constexpr (std::same_as<T, Rational>) {
    bad("exact values must be integers or \"p/q\" strings");
  } else {
    if (v.is_number()) return Complex(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      return Complex(v[0].get<double>(), v[1].get<double>());
    }
    bad("float values must be numbers or [re, im] pairs");
  }
}

json scalar_to_json(const Rational& x) { return x.get_str(); }

json scalar_to_json(const Complex& x) {
  if (x.imag() == 0.0) return x.real();
  return json::array({x.real(), x.imag()});
}

template <Field T>
Matrix<T> matrix_from_json(const json& v) {
  as_array(v, "matrix");
  if (v.empty()) bad("matrix must have at least one row");
  const std::size_t cols = as_array(v[0], "matrix row").size();
  Matrix<T> m(v.size(), cols);
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (as_array(v[r], "matrix row").size() != cols) bad("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json<T>(v[r][c]);
  }
  return m;
}

template <Field T>
json matrix_to_json(const Matrix<T>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

// Sparse tensors with 1-based indices.

template <Field T>
Tensor<T> tensor_from_json(const json& v, std::size_t n, const char* what) {
  auto t = Tensor<T>::cube(n);
  std::vector<bool> seen(t.size(), false);
  for (const auto& e : as_array(v, what)) {
    if (!e.is_array() || e.size() != 4) bad(std::string(what) + " entries must be [i, j, k, value]");
    std::array<std::size_t, 3> idx{};
    for (std::size_t a = 0; a < 3; ++a) {
      idx[a] = as_size(e[a], "index");
      if (idx[a] < 1 || idx[a] > n) bad(std::string(what) + " index out of range 1.." + std::to_string(n));
      --idx[a];
    }
    const std::size_t flat = (idx[0] * n + idx[1]) * n + idx[2];
    if (seen[flat]) bad(std::string(what) + " lists an entry twice");
    seen[flat] = true;
    t(idx[0], idx[1], idx[2]) = scalar_from_json<T>(e[3]);
  }
  return t;
}

template <Field T>
json tensor_to_json(const Tensor<T>& t) {
  const std::size_t n = t.shape()[0];
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const T& x = t(i, j, k);
        if constexpr (std::same_as<T, Rational>) {
          if (is_zero(x)) continue;
        } else {
          if (x == Complex(0.0, 0.0)) continue;
        }
        out.push_back(json::array({i + 1, j + 1, k + 1, scalar_to_json(x)}));
      }
  return out;
}

// Recipe metadata.

ZeroOneMatrix zero_one_from_json(const json& v) {
  as_array(v, "r");
  if (v.empty()) bad("r must have at least one row");
  std::vector<std::vector<long>> rows;
  for (const auto& row : v) {
    std::vector<long> out;
    if (row.is_string()) {
      for (char ch : row.get<std::string>()) {
        if (ch != '0' && ch != '1') bad("r rows must be strings of 0 and 1");
        out.push_back(ch - '0');
      }
    } else {
      for (const auto& x : as_array(row, "r row")) {
        if (!x.is_number_integer()) bad("r entries must be 0 or 1");
        out.push_back(x.get<long>());
      }
    }
    rows.push_back(std::move(out));
  }
  for (const auto& row : rows)
    if (row.size() != rows.size()) bad("r must be square");
  return ZeroOneMatrix::from_rows(rows);
}

json zero_one_to_json(const ZeroOneMatrix& r) {
  json out = json::array();
  const std::string bits = r.bitstring();
  for (std::size_t i = 0; i < r.size(); ++i) out.push_back(bits.substr(i * r.size(), r.size()));
  return out;
}

std::vector<std::size_t> dims_from_json(const json& v, const char* what) {
  std::vector<std::size_t> out;
  for (const auto& x : as_array(v, what)) out.push_back(as_size(x, what));
  return out;
}

template <Field T>
SemisimpleData<T> semisimple_from_json(const json& obj) {
  auto l = dims_from_json(field(obj, "l_dims"), "l_dims");
  auto m = dims_from_json(field(obj, "m_dims"), "m_dims");
  if (obj.contains("q")) return SemisimpleData<T>::from_q(std::move(l), std::move(m), matrix_from_json<T>(obj["q"]));
  SemisimpleData<T> d{std::move(l), std::move(m), {}};
  for (const auto& row : as_array(field(obj, "q_bar"), "q_bar")) {
    std::vector<Matrix<T>> blocks;
    for (const auto& b : as_array(row, "q_bar row")) blocks.push_back(matrix_from_json<T>(b));
    d.q_bar.push_back(std::move(blocks));
  }
  return d;
}

template <Field T>
json semisimple_to_json(const SemisimpleData<T>& d) {
  json q = json::array();
  for (const auto& row : d.q_bar) {
    json r = json::array();
    for (const auto& b : row) r.push_back(matrix_to_json(b));
    q.push_back(std::move(r));
  }
  return {{"l_dims", d.l_dims}, {"m_dims", d.m_dims}, {"q_bar", std::move(q)}};
}

template <Field T>
IdempotentBasis<T> basis_from_json(const json& obj) {
  if (obj.contains("a") || obj.contains("b")) {
    return example5_block(matrix_from_json<T>(field(obj, "a")), matrix_from_json<T>(field(obj, "b")));
  }
  const json& mode = field(obj, "mode");
  if (!mode.is_string()) bad("mode must be a string");
  IdempotentBasis<T> b;
  b.mode = parse_basis_mode(mode.get<std::string>());
  for (const auto& m : as_array(field(obj, "matrices"), "matrices")) b.matrices.push_back(matrix_from_json<T>(m));
  if (b.matrices.empty()) bad("matrices must not be empty");
  b.n = b.matrices.front().rows();
  return b;
}

template <Field T>
json basis_to_json(const IdempotentBasis<T>& b) {
  json ms = json::array();
  for (const auto& m : b.matrices) ms.push_back(matrix_to_json(m));
  return {{"mode", std::string(basis_mode_name(b.mode))}, {"matrices", std::move(ms)}};
}

template <Field T>
Recipe<T> recipe_from_json(const json& obj) {
  const json& name = field(obj, "recipe");
  if (!name.is_string()) bad("recipe must be a string");
  const std::string s = name.get<std::string>();
  if (s == "zero-one") return zero_one_from_json(field(obj, "r"));
  if (s == "semisimple") return semisimple_from_json<T>(obj);
  if (s == "idempotent-basis") return basis_from_json<T>(obj);
  if (s == "none") return std::monostate{};
  bad("unknown recipe \"" + s + "\"");
}

template <Field T>
json recipe_to_json(const Recipe<T>& recipe) {
  json out;
  if (const auto* r = std::get_if<ZeroOneMatrix>(&recipe)) {
    out = {{"r", zero_one_to_json(*r)}};
  } else if (const auto* d = std::get_if<SemisimpleData<T>>(&recipe)) {
    out = semisimple_to_json(*d);
  } else if (const auto* b = std::get_if<IdempotentBasis<T>>(&recipe)) {
    out = basis_to_json(*b);
  } else {
    out = json::object();
  }
  out["recipe"] = std::string(recipe_name<T>(recipe));
  return out;
}

Multiplicities multiplicities_from_json(const json& v) {
  Multiplicities m;
  for (const auto& row : as_array(v, "multiplicities")) {
    std::vector<std::size_t> r;
    for (const auto& x : as_array(row, "multiplicities row")) r.push_back(as_size(x, "multiplicity"));
    m.push_back(std::move(r));
  }
  return m;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

// Any type or access error inside nlohmann surfaces as a parse error.
template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    bad(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

Backend document_backend(std::string_view text) {
  const json doc = parse_json(text);
  return guarded([&] {
    const json& fmt = field(doc, "format");
    if (!fmt.is_string() || fmt.get<std::string>() != document_format) {
      bad("unsupported format, expected \"" + std::string(document_format) + "\"");
    }
    const json& b = field(doc, "backend");
    if (!b.is_string()) bad("backend must be a string");
    return parse_backend(b.get<std::string>());
  });
}

template <Field T>
AlgebraDocument<T> parse_document(std::string_view text) {
  const Backend backend = document_backend(text);
  if (backend == Backend::floating && std::same_as<T, Rational>) {
    bad("a float document cannot be read with the exact backend");
  }
  const json doc = parse_json(text);
  return guarded([&] {
    AlgebraDocument<T> out;
    const std::size_t n = as_size(field(doc, "n"), "n");
    if (n == 0) bad("n must be positive");
    out.product = tensor_from_json<T>(field(doc, "product"), n, "product");
    out.coproduct = tensor_from_json<T>(field(doc, "coproduct"), n, "coproduct");
    if (doc.contains("label")) {
      if (!doc["label"].is_string()) bad("label must be a string");
      out.label = doc["label"].get<std::string>();
    }
    if (doc.contains("metadata")) out.recipe = recipe_from_json<T>(doc["metadata"]);
    if (doc.contains("multiplicities")) out.multiplicities = multiplicities_from_json(doc["multiplicities"]);
    if (doc.contains("epsilon")) {
      if (!doc["epsilon"].is_number() || doc["epsilon"].get<double>() <= 0) bad("epsilon must be a positive number");
      out.epsilon = doc["epsilon"].get<double>();
    }
    return out;
  });
}

template <Field T>
std::string serialize_document(const AlgebraDocument<T>& doc) {
  // Fixed key order, one tensor entry per line.
  std::ostringstream os;
  os << "{\n";
  os << "  \"format\": " << json(std::string(document_format)).dump() << ",\n";
  os << "  \"backend\": " << json(std::string(backend_name(backend_of<T>))).dump() << ",\n";
  if constexpr (std::same_as<T, Complex>) os << "  \"epsilon\": " << json(doc.epsilon.value_or(epsilon())).dump() << ",\n";
  if (!doc.label.empty()) os << "  \"label\": " << json(doc.label).dump() << ",\n";
  os << "  \"n\": " << doc.n();
  auto entries = [&](const char* key, const Tensor<T>& t) {
    const json list = tensor_to_json(t);
    os << ",\n  \"" << key << "\": [";
    for (std::size_t k = 0; k < list.size(); ++k) os << (k ? ",\n    " : "\n    ") << list[k].dump();
    os << (list.empty() ? "]" : "\n  ]");
  };
  entries("product", doc.product);
  entries("coproduct", doc.coproduct);
  if (doc.recipe.index() != 0) os << ",\n  \"metadata\": " << recipe_to_json<T>(doc.recipe).dump();
  if (doc.multiplicities) os << ",\n  \"multiplicities\": " << json(*doc.multiplicities).dump();
  os << "\n}\n";
  return os.str();
}

template <Field T>
AlgebraDocument<T> document_from_algebra(const PAlgebra<T>& p) {
  AlgebraDocument<T> out;
  out.product = p.product();
  out.coproduct = p.coproduct();
  out.label = p.label();
  out.recipe = p.recipe();
  return out;
}

template <Field T>
PAlgebra<T> algebra_from_document(const AlgebraDocument<T>& doc) {
  return PAlgebra<T>::create(doc.product, doc.coproduct, doc.label, doc.recipe);
}

template <Field T>
PAlgebra<T> construct_from_params(std::string_view recipe, std::string_view params) {
  const json obj = parse_json(params);
  json with_name = obj;
  guarded([&] {
    if (!obj.is_object()) bad("construction parameters must be a JSON object");
    with_name["recipe"] = std::string(recipe);
    return 0;
  });
  const Recipe<T> r = guarded([&] { return recipe_from_json<T>(with_name); });
  if (const auto* z = std::get_if<ZeroOneMatrix>(&r)) return from_zero_one_matrix<T>(*z);
  if (const auto* d = std::get_if<SemisimpleData<T>>(&r)) return from_semisimple_data(*d);
  if (const auto* b = std::get_if<IdempotentBasis<T>>(&r)) return from_idempotent_basis(*b);
  bad("recipe \"none\" cannot be constructed");
}

Multiplicities parse_multiplicities(std::string_view text) {
  Multiplicities m;
  std::stringstream rows{std::string(text)};
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<std::size_t> r;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t"), e = cell.find_last_not_of(" \t");
      if (b == std::string::npos) bad("empty multiplicity entry");
      const std::string t = cell.substr(b, e - b + 1);
      if (t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9) {
        bad("multiplicities must be nonnegative integers, got \"" + t + "\"");
      }
      r.push_back(std::stoul(t));
    }
    if (r.empty()) bad("empty multiplicity row");
    m.push_back(std::move(r));
  }
  if (m.empty()) bad("empty multiplicity matrix");
  for (const auto& r : m)
    if (r.size() != m.front().size()) bad("multiplicity rows must have equal length");
  return m;
}

std::string format_multiplicities(const Multiplicities& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? "," : "") + std::to_string(m[i][j]);
  }
  return out;
}

#define KPROJ_INSTANTIATE(T)                                                           \
  template AlgebraDocument<T> parse_document(std::string_view);                         \
  template std::string serialize_document(const AlgebraDocument<T>&);                   \
  template AlgebraDocument<T> document_from_algebra(const PAlgebra<T>&);                \
  template PAlgebra<T> algebra_from_document(const AlgebraDocument<T>&);                \
  template PAlgebra<T> construct_from_params(std::string_view, std::string_view);

KPROJ_INSTANTIATE(Rational)
KPROJ_INSTANTIATE(Complex)

#undef KPROJ_INSTANTIATE

}  // namespace kproj
