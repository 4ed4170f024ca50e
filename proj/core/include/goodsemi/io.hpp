#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "goodsemi/core_model.hpp"
#include "goodsemi/tropical.hpp"

namespace goodsemi {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// "goodsemi 1" / "c x y" / "s x y"
GoodSemigroup parse_semigroup(std::istream& in);
std::string serialize_semigroup(const GoodSemigroup& s);

// "goodsemi-gen 1" / "g x|inf y|inf"
GeneratorSet parse_generators(std::istream& in);
std::string serialize_generators(const GeneratorSet& g);

GoodSemigroup load_semigroup(const std::string& path, bool from_ia = false);
GeneratorSet load_generators(const std::string& path);

// Inverse of Point::str, accepting "inf".
Point parse_point(const std::string& text);

}  // namespace goodsemi
