#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace domeq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential oracle was asked to run beyond its hard size limit.
class SizeGuardError : public Error {
 public:
  SizeGuardError(const std::string& what_arg, std::size_t limit, std::size_t actual)
      : Error(what_arg + " (limit " + std::to_string(limit) + ", got " + std::to_string(actual) + ")"),
        limit_(limit),
        actual_(actual) {}

  std::size_t limit() const noexcept { return limit_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t limit_;
  std::size_t actual_;
};

/// Malformed edge list passed to Graph::from_edges.
class EdgeListError : public Error {
 public:
  EdgeListError(const std::string& what_arg, std::size_t index)
      : Error(what_arg + " at edge #" + std::to_string(index)), index_(index) {}

  /// Position of the offending pair in the input list.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A construction blueprint (or an instance) breaks one of the class rules.
class ConstructionError : public Error {
 public:
  ConstructionError(std::string rule, const std::string& detail)
      : Error("rule '" + rule + "' violated: " + detail), rule_(std::move(rule)) {}

  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

/// Text or JSON input could not be parsed. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what_arg, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what_arg : what_arg), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace domeq
