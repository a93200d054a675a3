#ifndef HANKELND_ERRORS_HPP
#define HANKELND_ERRORS_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hankelnd {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iterative procedure failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Container sizes or arities do not agree.
class LengthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Grid violates a structural requirement (uniformity, tensor shape, plan match).
class GridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Helmholtz symbol vanishes at a discrete frequency tuple.
class ResonanceError : public std::runtime_error {
 public:
  ResonanceError(std::vector<std::size_t> index, std::vector<double> frequencies)
      : std::runtime_error(describe(index, frequencies)),
        index_(std::move(index)),
        frequencies_(std::move(frequencies)) {}

  const std::vector<std::size_t>& index() const noexcept { return index_; }
  const std::vector<double>& frequencies() const noexcept { return frequencies_; }

 private:
  static std::string describe(const std::vector<std::size_t>& index,
                              const std::vector<double>& frequencies) {
    std::ostringstream out;
    out << "resonant frequency tuple (";
    for (std::size_t j = 0; j < index.size(); ++j) {
      if (j) out << ", ";
      out << "m" << j + 1 << "=" << index[j] << " k=" << frequencies[j];
    }
    out << ")";
    return out.str();
  }

  std::vector<std::size_t> index_;
  std::vector<double> frequencies_;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hankelnd

#endif  // HANKELND_ERRORS_HPP
