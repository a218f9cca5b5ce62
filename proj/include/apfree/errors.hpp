#pragma once

// Domain error taxonomy. Each error carries a stable machine-readable code;
// the CLI maps these to {"error":{"type":...}} objects with exit status 1.

#include <stdexcept>
#include <string>
#include <utility>

namespace apfree {

class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class not_in_set_error : public error {
 public:
  explicit not_in_set_error(const std::string& what) : error("NotInSet", what) {}
};

class zero_gap_error : public error {
 public:
  explicit zero_gap_error(const std::string& what) : error("ZeroGap", what) {}
};

class measure_too_large_error : public error {
 public:
  explicit measure_too_large_error(const std::string& what)
      : error("MeasureTooLarge", what) {}
};

class unsupported_spec_error : public error {
 public:
  explicit unsupported_spec_error(const std::string& what)
      : error("UnsupportedSpec", what) {}
};

// An enclosure-backed value could not be separated from a boundary within the
// refinement budget. Codes are "Undecidable" + context (Floor, Boundary, Sign).
class undecidable_error : public error {
 public:
  undecidable_error(std::string code, const std::string& what)
      : error(std::move(code), what) {}
};

inline undecidable_error undecidable_floor(const std::string& what) {
  return {"UndecidableFloor", what};
}
inline undecidable_error undecidable_boundary(const std::string& what) {
  return {"UndecidableBoundary", what};
}
inline undecidable_error undecidable_sign(const std::string& what) {
  return {"UndecidableSign", what};
}

}  // namespace apfree
