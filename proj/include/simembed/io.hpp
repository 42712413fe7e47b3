#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "simembed/certify.hpp"
#include "simembed/embedding.hpp"
#include "simembed/error.hpp"

namespace simembed {

// Malformed or invalid document. `where` is a byte offset for JSON syntax
// errors or a path such as "layers[1].rotation" for validation errors.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what) : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// {"n", "mapping", "layers": [{"class", "edges", "rotation"?, "outer_cycle"?}],
///  "labels"?}. Unknown fields are rejected; the result is validated.
LayeredInstance parse_instance(std::string_view text);
std::string serialize_instance(const LayeredInstance& inst);

struct ResultDocument {
  std::vector<GridPoint> coords;
  Coord width = 0;
  Coord height = 0;
  std::optional<PointAssignment> assignments;
  CertificateReport certificate;

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

ResultDocument parse_result(std::string_view text);
std::string serialize_result(const ResultDocument& doc);

ResultDocument make_result(const SimultaneousEmbedding& e, const CertificateReport& cert);

// Rebuilds the embedding a result describes, taking edges from the instance.
SimultaneousEmbedding to_embedding(const ResultDocument& doc, const LayeredInstance& inst);

}  // namespace simembed
