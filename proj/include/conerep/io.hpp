#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "conerep/cone.hpp"
#include "conerep/decision.hpp"
#include "conerep/rep_family.hpp"

namespace conerep {

/// Rational text syntax: optional sign, integer, optionally "/" and a
/// positive integer. Examples: "2", "-3/7".
inline Rational parseRational(const std::string& text) {
  size_t i = 0;
  auto fail = [&] { throw ParseError("bad rational: '" + text + "'"); };
  if (text.empty()) fail();
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  size_t numStart = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == numStart) fail();
  Integer num(text.substr(numStart, i - numStart));
  if (negative) num = -num;
  if (i == text.size()) return Rational(num);
  if (text[i] != '/') fail();
  size_t denStart = ++i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i;
  if (i != text.size() || i == denStart) fail();
  Integer den(text.substr(denStart));
  if (den == 0) fail();
  Rational r(num);
  r /= den;
  return r;
}

inline std::string formatRational(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

/// Space-separated rationals on one line.
inline Vector parseVectorLine(const std::string& line) {
  std::istringstream is(line);
  std::vector<Rational> coords;
  std::string tok;
  while (is >> tok) coords.push_back(parseRational(tok));
  if (coords.empty()) throw ParseError("empty vector line");
  Vector v(static_cast<Index>(coords.size()));
  for (size_t i = 0; i < coords.size(); ++i)
    v[static_cast<Index>(i)] = coords[i];
  return v;
}

/// Inline vector syntax "(1, 0, -3/7)"; also accepted without parentheses.
inline Vector parseInlineVector(std::string text) {
  size_t a = text.find_first_not_of(" \t");
  if (a == std::string::npos) throw ParseError("empty vector");
  size_t b = text.find_last_not_of(" \t");
  text = text.substr(a, b - a + 1);
  if (text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced '(' in vector");
    text = text.substr(1, text.size() - 2);
  }
  for (auto& ch : text)
    if (ch == ',') ch = ' ';
  return parseVectorLine(text);
}

inline std::string formatVector(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

namespace detail {

/// Non-empty, non-comment lines of a stream.
inline std::vector<std::string> contentLines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    std::string t = line.substr(a, b - a + 1);
    if (t.empty() || t[0] == '#') continue;
    lines.push_back(std::move(t));
  }
  return lines;
}

inline std::vector<std::string> fileLines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return contentLines(in);
}

inline Vector parseDimVector(const std::string& line, Index dim,
                             const std::string& ctx) {
  Vector v = parseVectorLine(line);
  if (v.size() != dim)
    throw ParseError(ctx + ": expected " + std::to_string(dim) +
                     " coordinates, got line '" + line + "'");
  return v;
}

}  // namespace detail

/// Cone text format: "dim N"; "vrep" | "hrep" | "union K"; one vector per
/// line (for unions, K blocks each preceded by "part M").
struct ParsedCone {
  enum class Kind { V, H, Union } kind = Kind::V;
  ConeV v;
  ConeH h;
  UnionConeV u;
  Index dim = 0;
};

inline ParsedCone parseConeLines(const std::vector<std::string>& lines) {
  if (lines.size() < 2) throw ParseError("cone file: too few lines");
  std::istringstream l0(lines[0]);
  std::string kw;
  long dim = 0;
  if (!(l0 >> kw >> dim) || kw != "dim" || dim <= 0)
    throw ParseError("cone file: expected 'dim N'");
  ParsedCone out;
  out.dim = static_cast<Index>(dim);
  std::istringstream l1(lines[1]);
  std::string mode;
  l1 >> mode;
  size_t i = 2;
  if (mode == "vrep" || mode == "hrep") {
    std::vector<Vector> vs;
    for (; i < lines.size(); ++i)
      vs.push_back(detail::parseDimVector(lines[i], out.dim, "cone file"));
    if (mode == "vrep") {
      out.kind = ParsedCone::Kind::V;
      out.v = ConeV(out.dim, vs);
    } else {
      out.kind = ParsedCone::Kind::H;
      out.h = ConeH(out.dim, vs);
    }
  } else if (mode == "union") {
    long k = 0;
    if (!(l1 >> k) || k <= 0) throw ParseError("cone file: expected 'union K'");
    out.kind = ParsedCone::Kind::Union;
    out.u.dim = out.dim;
    for (long part = 0; part < k; ++part) {
      if (i >= lines.size()) throw ParseError("cone file: missing part");
      std::istringstream lp(lines[i++]);
      std::string pw;
      long m = -1;
      if (!(lp >> pw >> m) || pw != "part" || m < 0)
        throw ParseError("cone file: expected 'part M'");
      std::vector<Vector> gens;
      for (long g = 0; g < m; ++g) {
        if (i >= lines.size()) throw ParseError("cone file: missing generator");
        gens.push_back(
            detail::parseDimVector(lines[i++], out.dim, "cone file"));
      }
      out.u.parts.emplace_back(out.dim, gens);
    }
    if (i != lines.size()) throw ParseError("cone file: trailing lines");
  } else {
    throw ParseError("cone file: expected 'vrep', 'hrep' or 'union K'");
  }
  return out;
}

inline ParsedCone parseConeFile(const std::string& path) {
  return parseConeLines(detail::fileLines(path));
}

/// Family text format: "dim N"; "family M" with M "set S" blocks, or
/// "wholespace" for the convention family. A literal empty family is
/// accepted and normalized to the whole-space flag.
inline RepFamily parseFamilyLines(const std::vector<std::string>& lines) {
  if (lines.size() < 2) throw ParseError("family file: too few lines");
  std::istringstream l0(lines[0]);
  std::string kw;
  long dim = 0;
  if (!(l0 >> kw >> dim) || kw != "dim" || dim <= 0)
    throw ParseError("family file: expected 'dim N'");
  RepFamily fam;
  fam.dim = static_cast<Index>(dim);
  if (lines[1] == "wholespace") {
    fam.wholeSpace = true;
    if (lines.size() != 2) throw ParseError("family file: trailing lines");
    return fam;
  }
  std::istringstream l1(lines[1]);
  std::string mode;
  long count = -1;
  if (!(l1 >> mode >> count) || mode != "family" || count < 0)
    throw ParseError("family file: expected 'family M' or 'wholespace'");
  if (count == 0) {
    fam.wholeSpace = true;  // vacuous predicate also yields X
    return fam;
  }
  size_t i = 2;
  for (long s = 0; s < count; ++s) {
    if (i >= lines.size()) throw ParseError("family file: missing set");
    std::istringstream ls(lines[i++]);
    std::string sw;
    long size = 0;
    if (!(ls >> sw >> size) || sw != "set" || size <= 0)
      throw ParseError("family file: expected 'set S'");
    std::vector<Vector> set;
    for (long v = 0; v < size; ++v) {
      if (i >= lines.size()) throw ParseError("family file: missing vector");
      set.push_back(detail::parseDimVector(lines[i++], fam.dim, "family file"));
    }
    fam.sets.push_back(std::move(set));
  }
  if (i != lines.size()) throw ParseError("family file: trailing lines");
  return fam;
}

inline RepFamily parseFamilyFile(const std::string& path) {
  return parseFamilyLines(detail::fileLines(path));
}

/// Lottery syntax "(1/2, 1/4, 1/4)".
inline Lottery parseLottery(const std::string& text, Index m) {
  Vector v = parseInlineVector(text);
  if (v.size() != m) throw ParseError("lottery has wrong outcome count");
  return Lottery(v);
}

/// Act syntax: lottery rows separated by ";".
inline Act parseAct(const std::string& text, Index omega, Index m) {
  std::vector<Lottery> rows;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t semi = text.find(';', pos);
    std::string piece =
        text.substr(pos, semi == std::string::npos ? semi : semi - pos);
    rows.push_back(parseLottery(piece, m));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  if (static_cast<Index>(rows.size()) != omega)
    throw ParseError("act has wrong state count");
  return Act(rows);
}

/// Relation text format: "lotteries m" or "acts omega m"; lines
/// "pref: <object> | <object>" and "npref: <object> | <object>".
inline PreferenceData parseRelationLines(
    const std::vector<std::string>& lines) {
  if (lines.empty()) throw ParseError("relation file: empty");
  std::istringstream l0(lines[0]);
  std::string kind;
  l0 >> kind;
  PreferenceData data;
  if (kind == "lotteries") {
    long m = 0;
    if (!(l0 >> m) || m <= 0)
      throw ParseError("relation file: expected 'lotteries m'");
    data.m = static_cast<Index>(m);
  } else if (kind == "acts") {
    long omega = 0, m = 0;
    if (!(l0 >> omega >> m) || omega <= 0 || m <= 0)
      throw ParseError("relation file: expected 'acts omega m'");
    data.acts = true;
    data.omega = static_cast<Index>(omega);
    data.m = static_cast<Index>(m);
  } else {
    throw ParseError("relation file: expected 'lotteries' or 'acts'");
  }
  auto parseObject = [&](const std::string& text) -> Vector {
    if (data.acts) return parseAct(text, data.omega, data.m).flatten();
    return parseLottery(text, data.m).probs;
  };
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    bool denied;
    size_t colon;
    if (line.rfind("pref:", 0) == 0) {
      denied = false;
      colon = 5;
    } else if (line.rfind("npref:", 0) == 0) {
      denied = true;
      colon = 6;
    } else {
      throw ParseError("relation file: expected 'pref:' or 'npref:' line");
    }
    std::string rest = line.substr(colon);
    size_t bar = rest.find('|');
    if (bar == std::string::npos)
      throw ParseError("relation file: missing '|' separator");
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      if (a == std::string::npos) throw ParseError("relation file: empty object");
      return s.substr(a, b - a + 1);
    };
    Vector lhs = parseObject(trim(rest.substr(0, bar)));
    Vector rhs = parseObject(trim(rest.substr(bar + 1)));
    (denied ? data.denied : data.asserted).emplace_back(lhs, rhs);
  }
  return data;
}

inline PreferenceData parseRelationFile(const std::string& path) {
  return parseRelationLines(detail::fileLines(path));
}

/// Single-line vector file.
inline Vector parseVectorFile(const std::string& path) {
  auto lines = detail::fileLines(path);
  if (lines.size() != 1)
    throw ParseError("vector file must contain exactly one line: " + path);
  return parseVectorLine(lines[0]);
}

inline std::string formatConeV(const ConeV& cone) {
  std::ostringstream os;
  os << "dim " << cone.dim << "\nvrep\n";
  for (const auto& g : sortedUnique(cone.generators)) {
    for (Index i = 0; i < g.size(); ++i) os << (i ? " " : "") << g[i];
    os << "\n";
  }
  return os.str();
}

inline std::string formatFamily(const RepFamily& family) {
  std::ostringstream os;
  os << "dim " << family.dim << "\n";
  if (family.wholeSpace) {
    os << "wholespace\n";
    return os.str();
  }
  os << "family " << family.sets.size() << "\n";
  for (const auto& set : family.sets) {
    os << "set " << set.size() << "\n";
    for (const auto& y : set) {
      for (Index i = 0; i < y.size(); ++i) os << (i ? " " : "") << y[i];
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace conerep
