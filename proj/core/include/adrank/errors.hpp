#pragma once

#include <stdexcept>
#include <string>

namespace adrank {

/// Malformed external input: instance files, configs, ratings data.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Input exceeds a documented size precondition (e.g. exact DP limits).
class SizeError : public std::invalid_argument {
 public:
  explicit SizeError(const std::string& what) : std::invalid_argument(what) {}
};

/// A policy failed to cover a positive-probability scenario: it returned an
/// already-displayed element, stalled, or its trie has no branch for an
/// observed feedback symbol.
class PolicyIncompleteError : public std::runtime_error {
 public:
  explicit PolicyIncompleteError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace adrank
