#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kummer/hurwitz.hpp"

namespace kummer::app {

enum class OutputFormat { text, jsonl };

struct DocumentOptions {
  std::optional<int> precision_bits;
  std::optional<double> step_scale;
  std::optional<OutputFormat> output_format;
};

// Exactly one of branch_data / tuple is set.
struct InputDocument {
  std::optional<hurwitz::BranchData> branch_data;
  std::optional<hurwitz::HurwitzCover> tuple;
  DocumentOptions options;
};

// Carries every violation found, each prefixed with its location ("line 3, column 7" or a field path).
class DocumentError : public std::runtime_error {
 public:
  explicit DocumentError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

InputDocument parse_document(const std::string& text);
InputDocument load_document(const std::string& path);

OutputFormat parse_format(const std::string& name);

}  // namespace kummer::app
