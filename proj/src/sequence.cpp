#include "sequence.hpp"

#include <cmath>

#include "errors.hpp"

namespace npst {

NumericSequence::NumericSequence(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw data_error("sequence must contain at least one value");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      throw data_error("sequence value " + std::to_string(i + 1) + " is not finite");
  }
}

StringSequence::StringSequence(std::vector<std::string> tokens)
    : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw data_error("sequence must contain at least one token");
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const std::string& t = tokens_[i];
    if (t.empty())
      throw data_error("token " + std::to_string(i + 1) + " is empty");
    if (t.find(';') != std::string::npos || t.find('\n') != std::string::npos ||
        t.find('\r') != std::string::npos)
      throw data_error("token " + std::to_string(i + 1) +
                       " contains a reserved separator character");
  }
}

}  // namespace npst
