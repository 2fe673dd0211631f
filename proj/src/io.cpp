#include "indh/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "indh/builtins.hpp"
#include "indh/error.hpp"

namespace indh::io {

namespace {

/// A malformed field; `pointer` is its JSON pointer.
class FieldError : public Error {
 public:
  FieldError(std::string pointer, const std::string& message)
      : Error(ErrorKind::ParseError, pointer + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

/// Approximate the line of a JSON pointer by finding its keys in order.
std::size_t pointer_line(const std::string& text, const std::string& pointer) {
  std::size_t pos = 0;
  std::stringstream ss(pointer);
  std::string token;
  while (std::getline(ss, token, '/')) {
    if (token.empty() || std::all_of(token.begin(), token.end(), ::isdigit)) continue;
    const std::size_t found = text.find("\"" + token + "\"", pos);
    if (found == std::string::npos) break;
    pos = found;
  }
  return line_col(text, pos).first;
}

const Json& field(const Json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) throw FieldError(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FieldError(at, "missing field \"" + key + "\"");
  return *it;
}

std::size_t as_index(const Json& j, const std::string& at) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw FieldError(at, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Complex complex_at(const Json& j, const std::string& at) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw FieldError(at, "expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

CMatrix matrix_at(const Json& j, std::size_t rows, std::size_t cols, const std::string& at) {
  if (!j.is_array() || j.size() != rows)
    throw FieldError(at, "expected " + std::to_string(rows) + " rows");
  CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_at = at + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols)
      throw FieldError(row_at, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_at(j[r][c], row_at + "/" + std::to_string(c));
  }
  return m;
}

GroupSpec group_at(const Json& j, const std::string& at) {
  const std::string kind = field(j, "kind", at).get<std::string>();
  if (kind == "builtin") {
    const Json& name = field(j, "name", at);
    if (!name.is_string()) throw FieldError(at + "/name", "expected a string");
    return {make_group(builtin_group(name.get<std::string>())), std::nullopt};
  }
  if (kind == "cayley") {
    const Json& table = field(j, "table", at);
    if (!table.is_array()) throw FieldError(at + "/table", "expected an array of rows");
    CayleyTable t;
    for (std::size_t r = 0; r < table.size(); ++r) {
      const std::string row_at = at + "/table/" + std::to_string(r);
      if (!table[r].is_array()) throw FieldError(row_at, "expected an array");
      std::vector<std::size_t> row;
      for (std::size_t c = 0; c < table[r].size(); ++c)
        row.push_back(as_index(table[r][c], row_at + "/" + std::to_string(c)));
      t.push_back(std::move(row));
    }
    const std::string name = j.contains("name") ? j["name"].get<std::string>() : "cayley";
    return {make_group(LCGroup::finite(FiniteGroup::from_table(std::move(t), name))),
            std::nullopt};
  }
  if (kind == "z_cross") {
    GroupSpec inner = group_at(field(j, "finite", at), at + "/finite");
    if (!inner.group->is_finite()) throw FieldError(at + "/finite", "finite part must be finite");
    GroupSpec out{make_group(LCGroup::z_cross(inner.group->finite_part())), std::nullopt};
    if (j.contains("subgroupOfFinite")) {
      const Json& s = j["subgroupOfFinite"];
      if (!s.is_array()) throw FieldError(at + "/subgroupOfFinite", "expected an array");
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < s.size(); ++i)
        members.push_back(as_index(s[i], at + "/subgroupOfFinite/" + std::to_string(i)));
      out.subgroup = std::move(members);
    }
    return out;
  }
  throw FieldError(at + "/kind", "unknown group kind \"" + kind + "\"");
}

void append_number(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void dump_into(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        dump_into(out, it.value(), indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool scalar = true;
      for (const Json& e : j) scalar = scalar && !e.is_structured();
      if (scalar) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump_into(out, j[i], indent + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        dump_into(out, j[i], indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      append_number(out, j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

template <class F>
auto with_source(const Document& doc, F&& fn) {
  try {
    return fn();
  } catch (const FieldError& e) {
    const std::size_t line = pointer_line(doc.text, e.pointer());
    throw Error(ErrorKind::ParseError, doc.source + ":" + std::to_string(line) + ": " + e.what(),
                {static_cast<std::int64_t>(line)});
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, doc.source + ": " + e.what());
  }
}

}  // namespace

Document parse_json(const std::string& text, const std::string& source) {
  Document doc;
  doc.text = text;
  doc.source = source;
  try {
    doc.json = Json::parse(text);
    return doc;
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string reason = e.what();
    const std::size_t cut = reason.find("syntax error");
    if (cut != std::string::npos) reason = reason.substr(cut);
    throw Error(ErrorKind::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + reason,
                {static_cast<std::int64_t>(line), static_cast<std::int64_t>(col)});
  }
}

Document read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

GroupSpec parse_group(const Document& doc) {
  return with_source(doc, [&] { return group_at(doc.json, ""); });
}

GroupSpec load_group(const std::string& arg) {
  if (arg.rfind("builtin:", 0) == 0) return {make_group(builtin_group(arg.substr(8))), std::nullopt};
  if (arg.rfind("cayley:", 0) == 0) {
    const Document table = parse_json(arg.substr(7), "--group");
    return parse_group(Json{{"kind", "cayley"}, {"table", table.json}});
  }
  return parse_group(read_json_file(arg));
}

namespace {

Element element_at(const std::string& key, const LCGroup& group, const std::string& at) {
  Element e;
  try {
    std::size_t used = 0;
    const std::size_t comma = key.find(',');
    if (comma == std::string::npos) {
      e.index = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } else {
      e.shift = std::stoll(key.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument(key);
      const std::string rest = key.substr(comma + 1);
      e.index = std::stoul(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(key);
    }
  } catch (const std::logic_error&) {
    throw FieldError(at, "element key must be \"f\" or \"m,f\"");
  }
  if (!group.contains(e)) throw FieldError(at, "element outside " + group.name());
  return e;
}

}  // namespace

Element parse_element(const std::string& key, const LCGroup& group) {
  return with_source(Document{}, [&] { return element_at(key, group, "/" + key); });
}

std::string element_key(Element e, const LCGroup& group) {
  if (group.is_finite()) return std::to_string(e.index);
  return std::to_string(e.shift) + "," + std::to_string(e.index);
}

Complex parse_complex(const Json& j) { return complex_at(j, ""); }

CMatrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols) {
  return matrix_at(j, rows, cols, "");
}

namespace {

UnitaryRep irrep_at(const Json& j, const FiniteGroupPtr& group,
                    const std::vector<std::size_t>& domain, const std::string& at,
                    std::size_t position) {
  const std::size_t d = as_index(field(j, "dim", at), at + "/dim");
  if (d == 0) throw FieldError(at + "/dim", "dimension must be positive");
  const Json& mats = field(j, "matrices", at);
  if (!mats.is_object()) throw FieldError(at + "/matrices", "expected an object");
  std::map<std::size_t, CMatrix> m;
  LCGroup carrier = LCGroup::finite(*group);
  for (auto it = mats.begin(); it != mats.end(); ++it) {
    const std::string mat_at = at + "/matrices/" + it.key();
    const std::size_t index = element_at(it.key(), carrier, mat_at).index;
    m.emplace(index, matrix_at(it.value(), d, d, mat_at));
  }
  std::string label = j.contains("label") && j["label"].is_string()
                          ? j["label"].get<std::string>()
                          : std::to_string(position);
  return UnitaryRep::from_map(group, domain, m, label);
}

}  // namespace

UnitaryRep parse_irrep(const Document& doc, const FiniteGroupPtr& group,
                       const std::vector<std::size_t>& domain, std::size_t position) {
  return with_source(doc, [&] { return irrep_at(doc.json, group, domain, "", position); });
}

std::vector<UnitaryRep> parse_dual(const Document& doc, const FiniteGroupPtr& group,
                                   const std::vector<std::size_t>& domain) {
  return with_source(doc, [&] {
    const Json& body = doc.json;
    const Json& list = body.is_object() && body.contains("irreps") ? body["irreps"] : body;
    if (!list.is_array()) throw FieldError("", "expected a list of irreps");
    std::vector<UnitaryRep> out;
    for (std::size_t i = 0; i < list.size(); ++i)
      out.push_back(irrep_at(list[i], group, domain, "/" + std::to_string(i), i));
    return out;
  });
}

namespace {

std::map<Element, CMatrix> atoms_at(const Json& j, const GroupPtr& group, std::size_t k,
                                    const std::string& at) {
  if (!j.is_object()) throw FieldError(at, "expected an object keyed by element");
  std::map<Element, CMatrix> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string a = at + "/" + it.key();
    const Element e = element_at(it.key(), *group, a);
    const Json& v = it.value();
    const bool scalar = v.is_number() || (v.is_array() && v.size() == 2 && v[0].is_number());
    out.emplace(e, k == 1 && scalar ? CMatrix::Constant(1, 1, complex_at(v, a))
                                    : matrix_at(v, k, k, a));
  }
  return out;
}

std::size_t algebra_dim_at(const Json& j) {
  if (!j.contains("algebraDim")) return 1;
  const std::size_t k = as_index(j["algebraDim"], "/algebraDim");
  if (k == 0) throw FieldError("/algebraDim", "algebra dimension must be positive");
  return k;
}

}  // namespace

VectorMeasure parse_measure(const Document& doc, const GroupPtr& group) {
  return with_source(doc, [&] {
    const Json& body = doc.json;
    VectorMeasure m{group, algebra_dim_at(body), {}};
    m.atoms = atoms_at(field(body, "atoms", ""), group, m.algebra_dim, "/atoms");
    return m;
  });
}

DensityFunction parse_density(const Document& doc, const GroupPtr& group, double lambda) {
  return with_source(doc, [&] {
    const Json& body = doc.json;
    DensityFunction f{group, lambda, algebra_dim_at(body), {}};
    const char* key = body.contains("values") ? "values" : "atoms";
    f.values = atoms_at(field(body, key, ""), group, f.algebra_dim, std::string("/") + key);
    return f;
  });
}

GroupFunction parse_function(const Document& doc, const GroupPtr& group) {
  return with_source(doc, [&] {
    const Json& body = doc.json;
    GroupFunction f;
    const Json& values = field(body, "values", "");
    if (!values.is_object()) throw FieldError("/values", "expected an object");
    for (auto it = values.begin(); it != values.end(); ++it) {
      const std::string a = "/values/" + it.key();
      const Element e = element_at(it.key(), *group, a);
      f.values[e] = complex_at(it.value(), a);
    }
    if (body.contains("background")) f.background = complex_at(body["background"], "/background");
    return f;
  });
}

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CoefficientMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.dim; ++j)
      row.push_back(a.algebra_dim == 1 ? to_json(a.at(i, j)(0, 0)) : to_json(a.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const UnitaryRep& rep) {
  Json mats = Json::object();
  for (std::size_t i = 0; i < rep.domain().size(); ++i)
    mats[std::to_string(rep.domain()[i])] = to_json(rep.matrices()[i]);
  return Json{{"dim", rep.dim()}, {"label", rep.label()}, {"matrices", mats}};
}

std::string dump(const Json& j) {
  std::string out;
  dump_into(out, j, 0);
  out += "\n";
  return out;
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
  const fs::path tmp =
      dir / ("." + target.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorKind::InvalidInput, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorKind::InvalidInput, "cannot rename onto " + path + ": " + ec.message());
  }
}

}  // namespace indh::io
