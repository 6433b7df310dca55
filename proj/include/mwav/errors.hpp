#pragma once

#include <stdexcept>
#include <string>

namespace mwav {

// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented contract (bad committee size, unknown
// candidate id, inconsistent voter data, ...).
class contract_error : public error {
 public:
  explicit contract_error(const std::string& what) : error(what) {}
};

// An operation precondition is not met (wrong rule kind, wrong k, ...).
class precondition_error : public error {
 public:
  explicit precondition_error(const std::string& what) : error(what) {}
};

// The requested computation exceeds a configured enumeration cap.
class capacity_error : public error {
 public:
  explicit capacity_error(const std::string& what) : error(what) {}
};

// An internal invariant failed mid-computation; indicates either a library
// bug or an injected rule outside the supported family.
class invariant_error : public error {
 public:
  explicit invariant_error(const std::string& what) : error(what) {}
};

// Malformed instance/config text. Carries a 1-based line number when known.
class parse_error : public error {
 public:
  parse_error(const std::string& what, int line)
      : error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Infeasible generator/experiment configuration.
class config_error : public error {
 public:
  explicit config_error(const std::string& what) : error(what) {}
};

}  // namespace mwav
