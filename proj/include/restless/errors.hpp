#pragma once

#include <stdexcept>
#include <string>

namespace restless {

// Base for every error raised by the library. The CLI maps subclasses to
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input graph breaks a model invariant (unsorted arcs, zero delay, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A solver was handed a graph outside the delay model it supports.
class ModelMismatchError : public Error {
 public:
  using Error::Error;
};

// A path references a timed arc that is not part of the graph.
class ArcNotInGraphError : public Error {
 public:
  using Error::Error;
};

class NoPathError : public Error {
 public:
  using Error::Error;
};

// Retrieval requested from a result computed without path records.
class RetrievalMisuseError : public Error {
 public:
  using Error::Error;
};

// Interval expansion, oracle search space or brute-force size guards.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace restless
