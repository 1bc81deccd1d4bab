#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace parldoc {

/// Base class for all pipeline errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Malformed input that could not be parsed (manifest, fixture, response).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input violating a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Bad or inconsistent configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A required external tool or resource is missing.
class EnvironmentError : public Error {
 public:
  using Error::Error;
};

/// A source document is unreadable or degenerate.
class DocumentError : public Error {
 public:
  using Error::Error;
};

/// Inference backend unreachable or failing after retries.
class BackendError : public Error {
 public:
  using Error::Error;
};

/// Backend answered, but the payload does not follow the expected protocol.
/// Carries the raw payload for inspection.
class ProtocolError : public Error {
 public:
  ProtocolError(const std::string& message, std::string raw_payload)
      : Error(message), raw_payload_(std::move(raw_payload)) {}

  const std::string& raw_payload() const { return raw_payload_; }

 private:
  std::string raw_payload_;
};

/// Semantic labelling failed for a page after repair and re-query.
class LabellingError : public Error {
 public:
  using Error::Error;
};

/// Knowledge-base retrieval failed (SPARQL endpoint, cache miss).
class RetrievalError : public Error {
 public:
  using Error::Error;
};

/// Command line misuse: missing inputs, bad stage ordering.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace parldoc
