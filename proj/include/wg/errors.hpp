#pragma once

#include <stdexcept>
#include <string>

namespace wg {

// Input text could not be parsed; message carries a character position.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string &msg) : std::runtime_error(msg) {}
};

// A hard enumeration or table cap was exceeded.
class CapError : public std::runtime_error {
  public:
    explicit CapError(const std::string &msg) : std::runtime_error(msg) {}
};

// An exact linear system turned out singular at the requested evaluation point.
class SingularError : public std::runtime_error {
  public:
    explicit SingularError(const std::string &msg) : std::runtime_error(msg) {}
};

// Precondition violation (degree mismatch, pole of a closed form, ...).
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace wg
