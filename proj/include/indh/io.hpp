#pragma once

// JSON formats:
//   group    {"kind":"cayley","table":[[...]]} | {"kind":"builtin","name":"S3"}
//            | {"kind":"z_cross","finite":<group>,"subgroupOfFinite":[...]}
//   irrep    {"dim":d,"label":"...","matrices":{"<index>":[[[re,im],...],...]}}
//   dual     [<irrep>, ...]
//   measure  {"algebraDim":k,"atoms":{"<element>":<matrix>}}
//   density  {"algebraDim":k,"values":{"<element>":<matrix>}}
//   function {"values":{"<element>":[re,im]},"background":[re,im]}
// Element keys are "f" (shift 0) or "m,f" for Z × F.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "indh/group.hpp"
#include "indh/rep.hpp"
#include "indh/transform.hpp"

namespace indh::io {

using Json = nlohmann::json;

/// Parsed JSON plus the text it came from, for line-numbered diagnostics.
struct Document {
  Json json;
  std::string text;
  std::string source = "<input>";

  Document() = default;
  Document(Json j) : json(std::move(j)) {}  // NOLINT(google-explicit-constructor)
};

/// Throws ParseError "<source>:<line>:<column>: <reason>".
Document parse_json(const std::string& text, const std::string& source = "<input>");
Document read_json_file(const std::string& path);

struct GroupSpec {
  GroupPtr group;
  std::optional<std::vector<std::size_t>> subgroup;
};

GroupSpec parse_group(const Document& doc);
/// "builtin:NAME", "cayley:[[...]]" or a path to a group JSON file.
GroupSpec load_group(const std::string& arg);

/// Throws ParseError.
Element parse_element(const std::string& key, const LCGroup& group);
std::string element_key(Element e, const LCGroup& group);

Complex parse_complex(const Json& j);
CMatrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols);

UnitaryRep parse_irrep(const Document& doc, const FiniteGroupPtr& group,
                       const std::vector<std::size_t>& domain, std::size_t position);
std::vector<UnitaryRep> parse_dual(const Document& doc, const FiniteGroupPtr& group,
                                   const std::vector<std::size_t>& domain);

VectorMeasure parse_measure(const Document& doc, const GroupPtr& group);
DensityFunction parse_density(const Document& doc, const GroupPtr& group, double lambda);
GroupFunction parse_function(const Document& doc, const GroupPtr& group);

Json to_json(Complex c);
Json to_json(const CMatrix& m);
Json to_json(const CoefficientMatrix& a);
Json to_json(const UnitaryRep& rep);

/// Sorted keys, two-space indent, floats with 17 significant digits,
/// non-finite floats as null.
std::string dump(const Json& j);

/// Writes via a temporary file in the same directory and renames it.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace indh::io
