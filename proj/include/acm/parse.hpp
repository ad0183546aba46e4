#pragma once

// Polynomial expression parser: integers, variables, + - * ^ and parentheses.

#include <string>
#include <string_view>

#include "acm/ring.hpp"

namespace acm {

/// Syntax error with a 0-based character offset into the parsed text.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t offset) : DomainError(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses an expression; the result need not be homogeneous.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Parses and requires a nonzero homogeneous result.
Polynomial parse_form(const RingPtr& ring, std::string_view text);

}  // namespace acm
