#pragma once

#include <stdexcept>
#include <string>

namespace betaring {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// A group grew past the configured element cap.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& m) : Error("CapExceeded", m) {}
};

// A construction would exceed the configured maximum degree.
struct DegreeCap : Error {
  explicit DegreeCap(const std::string& m) : Error("DegreeCap", m) {}
};

// A G-set construction would exceed the tuple-space cap.
struct SizeCap : Error {
  explicit SizeCap(const std::string& m) : Error("SizeCap", m) {}
};

struct NotASubgroup : Error {
  explicit NotASubgroup(const std::string& m) : Error("NotASubgroup", m) {}
};

// An exact division that must be integral was not. Always a bug or a
// falsified claim, never an input error.
struct IntegralityViolation : Error {
  explicit IntegralityViolation(const std::string& m)
      : Error("IntegralityViolation", m) {}
};

struct NotEffective : Error {
  explicit NotEffective(const std::string& m) : Error("NotEffective", m) {}
};

struct PrecisionMismatch : Error {
  explicit PrecisionMismatch(const std::string& m)
      : Error("PrecisionMismatch", m) {}
};

}  // namespace betaring
