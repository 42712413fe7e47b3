#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "simembed/certify.hpp"
#include "simembed/embedding.hpp"
#include "simembed/error.hpp"

namespace simembed {

// The instance's class combination has no embedder behind it.
class UnsupportedCombinationError : public Error {
 public:
  using Error::Error;
};

struct EmbedOutcome {
  SimultaneousEmbedding embedding;  // instance order; width/height = bounds
  Bounds bounds;                    // grid the method guarantees
  std::string method;
  CertificateReport certificate;    // certify_embedding against `bounds`
};

/// Human-readable list of the accepted (mapping, classes) combinations.
std::string supported_combinations();

/// Picks the embedder for the instance's mapping mode and layer classes,
/// runs it and certifies the result.
EmbedOutcome embed_instance(const LayeredInstance& inst);

/// Exit codes: 0 success, 2 violation or impossibility, 1 usage or IO error.
/// args[0] is the program name. "-" (the default) for --in/--out means
/// the given streams.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int cli_main(const std::vector<std::string>& args);

}  // namespace simembed
