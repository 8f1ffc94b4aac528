#ifndef IPATH_ERRORS_HPP
#define IPATH_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ipath {

/// Base class for everything this library throws on bad input.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A path breaks one of the path rules (adjacency, simplicity, edge range).
class InvalidPathError : public Error {
public:
  InvalidPathError(std::size_t position, const std::string& msg)
      : Error(msg), position_(position) {}
  /// 0-based index of the offending edge within the path.
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// An edge id appears more than once across a collection.
class DisjointnessError : public Error {
public:
  DisjointnessError(std::uint32_t edge, const std::string& msg)
      : Error(msg), edge_(edge) {}
  std::uint32_t edge() const { return edge_; }

private:
  std::uint32_t edge_;
};

/// A claimed partition leaves edges uncovered.
class CoverageError : public Error {
public:
  CoverageError(std::vector<std::uint32_t> missing, const std::string& msg)
      : Error(msg), missing_(std::move(missing)) {}
  const std::vector<std::uint32_t>& missing_edges() const { return missing_; }

private:
  std::vector<std::uint32_t> missing_;
};

/// Text input did not parse; line is 1-based, 0 when unknown.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& msg)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// An input fails a documented precondition (sizes, ranges, structure).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// The operation needs an acyclic graph; carries a certificate cycle
/// (edge ids in forward order, cyclically adjacent).
class CyclicGraphError : public Error {
public:
  CyclicGraphError(std::vector<std::uint32_t> cycle, const std::string& msg)
      : Error(msg), cycle_(std::move(cycle)) {}
  const std::vector<std::uint32_t>& cycle() const { return cycle_; }

private:
  std::vector<std::uint32_t> cycle_;
};

/// A brute-force reference refused to run because the input exceeds its
/// hard size limit.  Never a silent truncation.
class SizeLimitError : public Error {
public:
  using Error::Error;
};

/// A witness fails one of the structural obligations the translation
/// relies on (missing required paths, wrong shape).
class MalformedWitnessError : public Error {
public:
  using Error::Error;
};

}  // namespace ipath

#endif
