#pragma once

#include "bsplus/bsgroup.hpp"
#include "bsplus/intset.hpp"
#include "bsplus/subsets.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bsplus {

/// Malformed literal. Carries the byte offset of the failure and the grammar
/// that was expected there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, std::string_view input);

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// Grammars (whitespace is insignificant everywhere):
//   set      := '{' int (',' int)* '}'
//   element  := 'b^' nat 'a^' int | 'b^' nat | 'a^' int | 'b' | 'a' | '1'
//   subset   := nat ':' set (';' nat ':' set)* [';']
//   int-list := int (',' int)*

IntSet parse_set(std::string_view text);
std::string format_set(const IntSet& a);

BSElement parse_element(std::string_view text);
/// Always fully explicit: "b^m a^x".
std::string format_element(const BSElement& g);

/// Repeated b-exponents are merged.
BSSubset parse_subset(const BSContext& ctx, std::string_view text);
std::string format_subset(const BSSubset& s);

std::vector<Integer> parse_integer_list(std::string_view text);

}  // namespace bsplus
