#include "goodsemi/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace goodsemi {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    Line line{n, {}};
    for (std::string t; ls >> t;) line.tokens.push_back(t);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

ExtNat parse_coord(const std::string& t, int line, bool allow_inf) {
  if (t == "inf") {
    if (!allow_inf) throw ParseError(line, "infinite coordinate not allowed here");
    return kInf;
  }
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "bad number '" + t + "'");
  }
  if (used != t.size() || v < 0) throw ParseError(line, "bad number '" + t + "'");
  return ExtNat(v);
}

void expect_header(const std::vector<Line>& lines, const std::string& magic) {
  if (lines.empty()) throw ParseError(1, "missing header '" + magic + " 1'");
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != magic)
    throw ParseError(h.number, "expected header '" + magic + " 1'");
  if (h.tokens[1] != "1") throw ParseError(h.number, "unsupported version " + h.tokens[1]);
}

}  // namespace

GoodSemigroup parse_semigroup(std::istream& in) {
  const auto lines = tokenize(in);
  expect_header(lines, "goodsemi");
  std::optional<Point> c;
  std::vector<Point> small;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3) throw ParseError(l.number, "expected 3 fields");
    const Point p{parse_coord(l.tokens[1], l.number, false), parse_coord(l.tokens[2], l.number, false)};
    if (l.tokens[0] == "c") {
      if (c) throw ParseError(l.number, "duplicate conductor line");
      c = p;
    } else if (l.tokens[0] == "s") {
      small.push_back(p);
    } else {
      throw ParseError(l.number, "unknown record '" + l.tokens[0] + "'");
    }
  }
  if (!c) throw ParseError(lines.back().number, "missing conductor line");
  return from_small(small, *c);
}

std::string serialize_semigroup(const GoodSemigroup& s) {
  std::ostringstream os;
  os << "goodsemi 1\n";
  os << "c " << s.c1() << ' ' << s.c2() << '\n';
  for (const auto& p : s.small()) os << "s " << p.x.str() << ' ' << p.y.str() << '\n';
  return os.str();
}

GeneratorSet parse_generators(std::istream& in) {
  const auto lines = tokenize(in);
  expect_header(lines, "goodsemi-gen");
  std::vector<Point> pts;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3 || l.tokens[0] != "g") throw ParseError(l.number, "expected 'g x y'");
    const Point p{parse_coord(l.tokens[1], l.number, true), parse_coord(l.tokens[2], l.number, true)};
    if (p.x.is_inf() && p.y.is_inf()) throw ParseError(l.number, "at most one coordinate may be inf");
    if (p.is_zero()) throw ParseError(l.number, "generator (0,0) is not allowed");
    pts.push_back(p);
  }
  return make_generators(std::move(pts));
}

std::string serialize_generators(const GeneratorSet& g) {
  std::ostringstream os;
  os << "goodsemi-gen 1\n";
  for (const auto& p : g) os << "g " << p.x.str() << ' ' << p.y.str() << '\n';
  return os.str();
}

GoodSemigroup load_semigroup(const std::string& path, bool from_ia) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  if (from_ia) return reconstruct_from_ia(parse_generators(in));
  return parse_semigroup(in);
}

GeneratorSet load_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_generators(in);
}

Point parse_point(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  if (t.size() < 5 || t.front() != '(' || t.back() != ')') throw ParseError(1, "bad point '" + text + "'");
  const auto comma = t.find(',');
  if (comma == std::string::npos) throw ParseError(1, "bad point '" + text + "'");
  return {parse_coord(t.substr(1, comma - 1), 1, true), parse_coord(t.substr(comma + 1, t.size() - comma - 2), 1, true)};
}

}  // namespace goodsemi
