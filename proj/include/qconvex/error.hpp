#pragma once

#include <stdexcept>
#include <string>

namespace qconvex {

/// Raised when an operation is called outside its mathematical domain
/// (index out of range, dimension mismatch, hypothesis violated).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qconvex
