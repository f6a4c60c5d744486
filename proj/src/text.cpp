#include "bsplus/text.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace bsplus {

ParseError::ParseError(std::size_t position, std::string expected, std::string_view input)
    : std::runtime_error("parse error at position " + std::to_string(position) + " in \"" +
                         std::string(input) + "\": expected " + expected),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

constexpr const char* kSetGrammar = "set literal '{' int (',' int)* '}'";
constexpr const char* kElementGrammar = "element 'b^m a^x' (m >= 0), 'b^m', 'a^x', 'b', 'a' or '1'";
constexpr const char* kSubsetGrammar = "subset 'm:{x,...}' entries separated by ';'";

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const std::string& grammar) {
    if (!accept(c)) fail("'" + std::string(1, c) + "' in " + grammar);
  }

  Integer integer(const std::string& grammar) {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("integer in " + grammar);
    }
    return *parse_integer(text_.substr(start, pos_ - start));
  }

  unsigned long natural(const std::string& grammar) {
    std::size_t start = (skip_ws(), pos_);
    Integer v = integer(grammar);
    if (v < 0 || mpz_fits_ulong_p(v.get_mpz_t()) == 0) {
      pos_ = start;
      fail("non-negative machine-sized integer in " + grammar);
    }
    return v.get_ui();
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(pos_, expected, text_);
  }

  void finish(const std::string& grammar) {
    if (!at_end()) fail("end of input after " + grammar);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

IntSet read_set(Cursor& cur) {
  cur.expect('{', kSetGrammar);
  std::vector<Integer> elems;
  elems.push_back(cur.integer(kSetGrammar));
  while (cur.accept(',')) elems.push_back(cur.integer(kSetGrammar));
  cur.expect('}', kSetGrammar);
  return IntSet(std::move(elems));
}

std::string join(std::span<const Integer> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += to_string(xs[i]);
  }
  return out;
}

}  // namespace

IntSet parse_set(std::string_view text) {
  Cursor cur(text);
  IntSet a = read_set(cur);
  cur.finish(kSetGrammar);
  return a;
}

std::string format_set(const IntSet& a) { return "{" + join(a.elements()) + "}"; }

BSElement parse_element(std::string_view text) {
  Cursor cur(text);
  BSElement g = identity();
  if (cur.accept('1')) {
    cur.finish(kElementGrammar);
    return g;
  }
  bool any = false;
  if (cur.accept('b')) {
    any = true;
    g.m = cur.accept('^') ? cur.natural(kElementGrammar) : 1;
  }
  if (cur.accept('a')) {
    any = true;
    g.x = cur.accept('^') ? cur.integer(kElementGrammar) : Integer(1);
  }
  if (!any) cur.fail(kElementGrammar);
  cur.finish(kElementGrammar);
  return g;
}

std::string format_element(const BSElement& g) {
  return "b^" + std::to_string(g.m) + " a^" + to_string(g.x);
}

BSSubset parse_subset(const BSContext& ctx, std::string_view text) {
  Cursor cur(text);
  std::map<unsigned long, std::vector<Integer>> buckets;
  do {
    if (cur.at_end() && !buckets.empty()) break;  // trailing ';'
    unsigned long m = cur.natural(kSubsetGrammar);
    cur.expect(':', kSubsetGrammar);
    IntSet a = read_set(cur);
    auto& bucket = buckets[m];
    bucket.insert(bucket.end(), a.begin(), a.end());
  } while (cur.accept(';'));
  cur.finish(kSubsetGrammar);
  BSSubset::CosetMap cosets;
  for (auto& [m, xs] : buckets) cosets.emplace(m, IntSet(std::move(xs)));
  return BSSubset(ctx, std::move(cosets));
}

std::string format_subset(const BSSubset& s) {
  std::string out;
  for (const auto& [m, a] : s.cosets()) {
    if (!out.empty()) out += "; ";
    out += std::to_string(m) + ":" + format_set(a);
  }
  return out;
}

std::vector<Integer> parse_integer_list(std::string_view text) {
  constexpr const char* grammar = "comma-separated integer list";
  Cursor cur(text);
  std::vector<Integer> out;
  out.push_back(cur.integer(grammar));
  while (cur.accept(',')) out.push_back(cur.integer(grammar));
  cur.finish(grammar);
  return out;
}

}  // namespace bsplus
