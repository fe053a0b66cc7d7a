#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flagclean/atlas.hpp"
#include "flagclean/error.hpp"
#include "flagclean/loop_matrix.hpp"

namespace flagclean {

/// Atlas data plus the optional loop-group fixtures that ship with it.
struct ModelDocument {
  AtlasModel atlas;
  std::vector<std::string> loop_vars;
  std::vector<LoopFixture> fixtures;

  bool operator==(const ModelDocument&) const = default;
};

struct Diagnostic {
  int line = 0;    ///< 1-based; 0 when not tied to a line
  int column = 0;  ///< 1-based
  std::string path;
  std::string message;
};

std::string to_string(const Diagnostic& d, std::string_view source);

/// ParseError or ValidationError carrying every diagnostic found.
class ModelError : public Error {
 public:
  ModelError(ErrorKind kind, std::string source, std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::vector<Diagnostic> diagnostics_;
};

/// Structural problems of a model as (field path, message) pairs; empty
/// when the model is valid.
struct Problem {
  std::string path;
  std::string message;
};
std::vector<Problem> validate(const ModelDocument& doc);

/// Parses and validates; all-or-nothing.
ModelDocument parse_model(std::string_view text, std::string_view source = "<input>");
ModelDocument load_model(const std::string& path);

/// Text form accepted by parse_model.
std::string serialize(const ModelDocument& doc);

/// Four-chart atlas of the closure of O in the affine flag variety of SL2
/// with the T-torsor and central-extension fibers.
AtlasModel builtin_sl2();
/// builtin_sl2() plus the loop-group fixture set.
ModelDocument builtin_document();

}  // namespace flagclean
