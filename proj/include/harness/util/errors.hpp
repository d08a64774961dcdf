#pragma once

#include <stdexcept>
#include <string>

namespace harness {

// Error taxonomy shared across modules. Every category is catchable as
// std::runtime_error; campaigns distinguish per-case failures (transport,
// protocol) from setup failures (config, parse).

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Wire-level failure: the peer answered, but not in the expected grammar.
class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(const std::string& msg) : std::runtime_error(msg) {}
};

// Process/socket-level failure: the peer died, timed out, or never spoke.
class TransportError : public std::runtime_error {
 public:
  explicit TransportError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition or invariant was violated by the caller or by
// inconsistent upstream data.
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace harness
