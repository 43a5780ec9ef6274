// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_ERRORS_HPP_
#define GAPKIT_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gapkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph construction rejected the input (bad ids, inconsistent weights, ...).
struct BuildError : Error {
  using Error::Error;
};

// A text graph file could not be parsed; message carries path:line.
struct ParseError : Error {
  using Error::Error;
  ParseError(const std::string& path, int64_t line, const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what) {}
};

// Caller asked for something the graph or flags cannot satisfy.
struct ConfigError : Error {
  using Error::Error;
};

// Serialized graph files produce one of three distinct failures.
struct LoadError : Error {
  using Error::Error;
};
struct BadMagicError : LoadError {
  using LoadError::LoadError;
};
struct VersionMismatchError : LoadError {
  using LoadError::LoadError;
};
struct TruncatedError : LoadError {
  using LoadError::LoadError;
};

}  // namespace gapkit

#endif  // GAPKIT_ERRORS_HPP_
