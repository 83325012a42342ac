#pragma once

#include <stdexcept>
#include <string>

namespace strokegraph {

enum class ErrorKind {
  Format,           // malformed input file
  Consistency,      // headers and payload disagree
  EmptySketch,      // no usable foreground / all strokes filtered out
  Shape,            // array shape mismatch in a compute op
  Numeric,          // NaN/Inf produced
  Usage,            // API misuse (wrong call order, cross-tape mixing)
  Config,           // incompatible configuration (n mismatch etc.)
  Checksum,         // stored checksum does not match payload
  Incompatibility,  // file version not understood
  Io,               // file unreadable/unwritable
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace strokegraph
