#ifndef NPST_SEQUENCE_HPP_
#define NPST_SEQUENCE_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace npst {

// Ordered univariate sample of finite reals. Order is significant
// (randomness and trend tests read it); immutable after construction.
class NumericSequence {
 public:
  explicit NumericSequence(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

// Ordered sequence of symbolic labels. Tokens are non-empty and may not
// contain ';' or line breaks (the CSV/TXT grammar reserves them).
class StringSequence {
 public:
  explicit StringSequence(std::vector<std::string> tokens);

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }

 private:
  std::vector<std::string> tokens_;
};

}  // namespace npst

#endif  // NPST_SEQUENCE_HPP_
