#pragma once

#include <stdexcept>
#include <string>

namespace aggrec {

// Error hierarchy shared by every module.  Callers distinguish the broad
// categories; the message carries the detail.
class error : public std::runtime_error {
  public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad rational string, bad expression, bad model file.
class parse_error : public error {
  public:
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// Model-level validation failure (parameter out of range, unsupported kind).
class model_error : public error {
  public:
    explicit model_error(const std::string& msg) : error(msg) {}
};

// Symbolic derivation failure (branch condition violated, ansatz exhausted,
// unsupported exponent).
class derivation_error : public error {
  public:
    explicit derivation_error(const std::string& msg) : error(msg) {}
};

// Numeric routine could not reach the requested precision.
class numeric_error : public error {
  public:
    explicit numeric_error(const std::string& msg) : error(msg) {}
};

// No linear dependency at the current ansatz size.
class empty_nullspace : public error {
  public:
    explicit empty_nullspace(const std::string& msg) : error(msg) {}
};

// Violated internal invariant; indicates a bug, not bad input.
class internal_error : public error {
  public:
    explicit internal_error(const std::string& msg) : error(msg) {}
};

#define AGGREC_CHECK(cond, msg)                                                \
    do {                                                                       \
        if (!(cond)) throw ::aggrec::internal_error(msg);                      \
    } while (0)

} // namespace aggrec
