#pragma once

#include <stdexcept>
#include <string>

namespace keymesh {

// Malformed input documents (edge lists, scheme files).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that the requested operation refuses.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Exact search rejected because the instance is above the configured cap.
class ExactCapExceeded : public DomainError {
public:
  explicit ExactCapExceeded(const std::string& what) : DomainError(what) {}
};

}  // namespace keymesh
