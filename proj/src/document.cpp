#include "homprelie/document.hpp"

#include <json.hpp>

namespace homprelie {

namespace {

using nlohmann::json;

Scalar parse_entry(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_number_float())
    throw ParseError(where + ": decimal literals are not accepted, write p/q");
  throw ParseError(where + ": expected an integer or a 'p/q' string");
}

std::size_t parse_count(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(where + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

// 1-based index within [1, bound]
std::size_t parse_index(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_number_integer())
    throw ParseError(where + ": expected a 1-based basis index");
  long long i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > bound)
    throw ParseError(where + ": index " + std::to_string(i) + " outside 1.." +
                     std::to_string(bound));
  return static_cast<std::size_t>(i) - 1;
}

Matrix parse_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array() || v.size() != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(where + " row " + std::to_string(i + 1) + ": expected " +
                       std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = parse_entry(row[j], where + "[" + std::to_string(i + 1) + "][" +
                                        std::to_string(j + 1) + "]");
  }
  return m;
}

StructureConstants parse_tensor(const json& v, std::size_t dim1, std::size_t dim3,
                                const std::string& where) {
  // sparse [i, j, k, value] rows; i, j in 1..dim1, k in 1..dim3
  if (!v.is_array()) throw ParseError(where + ": expected a list of [i, j, k, value] rows");
  StructureConstants sc(dim1);
  (void)dim3;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const json& row = v[r];
    std::string rw = where + " row " + std::to_string(r + 1);
    if (!row.is_array() || row.size() != 4) throw ParseError(rw + ": expected [i, j, k, value]");
    std::size_t i = parse_index(row[0], dim1, rw);
    std::size_t j = parse_index(row[1], dim1, rw);
    std::size_t k = parse_index(row[2], dim3, rw);
    sc.at(i, j, k) = parse_entry(row[3], rw);
  }
  return sc;
}

HomPreLieAlgebra parse_algebra(const json& v, const std::string& where) {
  if (!v.is_object()) throw ParseError(where + ": expected an object");
  if (!v.contains("dim")) throw ParseError(where + ".dim: missing");
  HomPreLieAlgebra a;
  a.dim = parse_count(v["dim"], where + ".dim");
  if (a.dim == 0) throw ParseError(where + ".dim: must be positive");
  a.mult = v.contains("mult") ? parse_tensor(v["mult"], a.dim, a.dim, where + ".mult")
                              : StructureConstants(a.dim);
  a.alpha = v.contains("alpha") ? parse_matrix(v["alpha"], a.dim, a.dim, where + ".alpha")
                                : Matrix(a.dim, a.dim);
  return a;
}

}  // namespace

InputDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  InputDocument out;
  if (doc.contains("algebra")) out.algebra = parse_algebra(doc["algebra"], "algebra");

  if (doc.contains("representation")) {
    if (!out.algebra) throw ParseError("representation: requires an algebra block");
    const json& v = doc["representation"];
    const std::size_t d = out.algebra->dim;
    if (!v.is_object() || !v.contains("vdim"))
      throw ParseError("representation.vdim: missing");
    Representation r;
    r.algebra = *out.algebra;
    r.vdim = parse_count(v["vdim"], "representation.vdim");
    if (r.vdim == 0) throw ParseError("representation.vdim: must be positive");
    const std::size_t m = r.vdim;
    r.beta = v.contains("beta") ? parse_matrix(v["beta"], m, m, "representation.beta")
                                : Matrix(m, m);
    auto parse_list = [&](const char* key) {
      std::vector<Matrix> list(d, Matrix(m, m));
      if (!v.contains(key)) return list;
      const json& lv = v[key];
      std::string where = std::string("representation.") + key;
      if (!lv.is_array() || lv.size() != d)
        throw ParseError(where + ": expected one matrix per basis vector");
      for (std::size_t i = 0; i < d; ++i)
        list[i] = parse_matrix(lv[i], m, m, where + "[" + std::to_string(i + 1) + "]");
      return list;
    };
    r.rho = parse_list("rho");
    r.mu = parse_list("mu");
    out.representation = std::move(r);
  }

  auto parse_cocycle = [&](const char* key) -> std::optional<Cocycle2> {
    if (!doc.contains(key)) return std::nullopt;
    if (!out.algebra) throw ParseError(std::string(key) + ": requires an algebra block");
    const std::size_t d = out.algebra->dim;
    const std::size_t m = out.representation ? out.representation->vdim : d;
    const json& v = doc[key];
    if (!v.is_object()) throw ParseError(std::string(key) + ": expected an object");
    Cocycle2 c;
    c.adim = d;
    c.vdim = m;
    c.theta.assign(d * d * m, Scalar(0));
    if (v.contains("theta")) {
      StructureConstants t = parse_tensor(v["theta"], d, m, std::string(key) + ".theta");
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t w = 0; w < m; ++w) c.theta_at(i, j, w) = t.at(i, j, w);
    }
    c.xi = v.contains("xi") ? parse_matrix(v["xi"], m, d, std::string(key) + ".xi")
                            : Matrix(m, d);
    return c;
  };
  out.cocycle = parse_cocycle("cocycle");
  out.cocycle2 = parse_cocycle("cocycle2");

  if (doc.contains("deformation")) {
    if (!out.algebra) throw ParseError("deformation: requires an algebra block");
    const json& v = doc["deformation"];
    if (!v.is_object() || !v.contains("order")) throw ParseError("deformation.order: missing");
    DeformationBlock b;
    b.order = parse_count(v["order"], "deformation.order");
    const std::size_t d = out.algebra->dim;
    b.omegas.assign(b.order, StructureConstants(d));
    b.alphas.assign(b.order, Matrix(d, d));
    if (v.contains("omegas")) {
      const json& lv = v["omegas"];
      if (!lv.is_array() || lv.size() != b.order)
        throw ParseError("deformation.omegas: expected one tensor per order");
      for (std::size_t i = 0; i < b.order; ++i)
        b.omegas[i] =
            parse_tensor(lv[i], d, d, "deformation.omegas[" + std::to_string(i + 1) + "]");
    }
    if (v.contains("alphas")) {
      const json& lv = v["alphas"];
      if (!lv.is_array() || lv.size() != b.order)
        throw ParseError("deformation.alphas: expected one matrix per order");
      for (std::size_t i = 0; i < b.order; ++i)
        b.alphas[i] =
            parse_matrix(lv[i], d, d, "deformation.alphas[" + std::to_string(i + 1) + "]");
    }
    out.deformation = std::move(b);
  }

  if (doc.contains("gauge")) {
    if (!out.algebra) throw ParseError("gauge: requires an algebra block");
    const json& v = doc["gauge"];
    if (!v.is_object() || !v.contains("order")) throw ParseError("gauge.order: missing");
    GaugeTransformation g;
    g.order = parse_count(v["order"], "gauge.order");
    const std::size_t d = out.algebra->dim;
    g.phis.assign(g.order, Matrix(d, d));
    if (v.contains("phis")) {
      const json& lv = v["phis"];
      if (!lv.is_array() || lv.size() != g.order)
        throw ParseError("gauge.phis: expected one matrix per order");
      for (std::size_t i = 0; i < g.order; ++i)
        g.phis[i] = parse_matrix(lv[i], d, d, "gauge.phis[" + std::to_string(i + 1) + "]");
    }
    out.gauge = std::move(g);
  }

  if (doc.contains("extension")) {
    if (!out.algebra) throw ParseError("extension: requires an algebra block");
    const json& v = doc["extension"];
    if (!v.is_object() || !v.contains("total")) throw ParseError("extension.total: missing");
    ExtensionBlock b;
    b.extension.total = parse_algebra(v["total"], "extension.total");
    const std::size_t n = b.extension.total.dim, d = out.algebra->dim;
    if (n < d) throw ParseError("extension.total.dim: smaller than the base dimension");
    const std::size_t m = n - d;
    if (m == 0) throw ParseError("extension: fiber dimension is zero");
    b.extension.iota = v.contains("iota") ? parse_matrix(v["iota"], n, m, "extension.iota")
                                          : Matrix(n, m);
    b.extension.proj = v.contains("proj") ? parse_matrix(v["proj"], d, n, "extension.proj")
                                          : Matrix(d, n);
    if (v.contains("section"))
      b.section = parse_matrix(v["section"], n, d, "extension.section");
    out.extension = std::move(b);
  }
  return out;
}

const HomPreLieAlgebra& require_algebra(const InputDocument& doc) {
  if (!doc.algebra) throw ParseError("algebra: block is required for this command");
  return *doc.algebra;
}

Representation resolve_representation(const InputDocument& doc, bool use_regular) {
  const auto& a = require_algebra(doc);
  if (use_regular || !doc.representation) {
    auto check = check_hom_pre_lie(a);
    if (!check.pass)
      throw ParseError("algebra: fails the Hom-pre-Lie axioms, no regular representation");
    return regular_representation(a);
  }
  return *doc.representation;
}

TruncatedDeformation resolve_deformation(const InputDocument& doc) {
  const auto& a = require_algebra(doc);
  if (!doc.deformation) throw ParseError("deformation: block is required for this command");
  TruncatedDeformation d;
  d.base = a;
  d.order = doc.deformation->order;
  d.omegas = doc.deformation->omegas;
  d.alphas = doc.deformation->alphas;
  return d;
}

}  // namespace homprelie
