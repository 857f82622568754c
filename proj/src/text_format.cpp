#include "sdepth/text_format.hpp"

#include <cctype>

namespace sdepth {

namespace {

struct Token {
  std::string text;
  int line, column;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1, column = 1;
  std::string cur;
  int tok_line = 1, tok_column = 1;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back({cur, tok_line, tok_column});
      cur.clear();
    }
  };
  for (char ch : text) {
    if (ch == '\n' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
      if (ch == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      continue;
    }
    if (cur.empty()) {
      tok_line = line;
      tok_column = column;
    }
    cur += ch;
    ++column;
  }
  flush();
  return tokens;
}

Mask parse_facet(const Token& tok) {
  Mask m = 0;
  if (tok.text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= tok.text.size()) {
      const std::size_t comma = tok.text.find(',', pos);
      const std::string part =
          tok.text.substr(pos, comma == std::string::npos ? std::string::npos
                                                          : comma - pos);
      int v = 0;
      if (part.empty())
        throw ParseError(tok.line, tok.column, "empty vertex in facet '" + tok.text + "'");
      for (char ch : part) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError(tok.line, tok.column, "malformed facet '" + tok.text + "'");
        v = v * 10 + (ch - '0');
        if (v > max_ground)
          throw ParseError(tok.line, tok.column,
                           "vertex " + part + " out of range 1..16");
      }
      if (v < 1)
        throw ParseError(tok.line, tok.column, "vertex out of range 1..16");
      const Mask bit = Mask{1} << (v - 1);
      if (m & bit)
        throw ParseError(tok.line, tok.column,
                         "repeated vertex " + std::to_string(v) + " in facet");
      m |= bit;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char ch : tok.text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
        throw ParseError(tok.line, tok.column, "malformed facet '" + tok.text + "'");
      const int v = ch - '0';
      const Mask bit = Mask{1} << (v - 1);
      if (m & bit)
        throw ParseError(tok.line, tok.column,
                         "repeated vertex " + std::to_string(v) + " in facet");
      m |= bit;
    }
  }
  return m;
}

}  // namespace

Antichain parse_antichain(const std::string& text, int ground_n) {
  if (ground_n < 0 || ground_n > max_ground)
    throw ParseError(1, 1, "ground set size must be between 0 and 16");
  const auto tokens = tokenize(text);
  std::vector<Mask> members;
  std::vector<Token> sources;
  int maxv = 0;
  for (const auto& tok : tokens) {
    const Mask m = parse_facet(tok);
    members.push_back(m);
    sources.push_back(tok);
    maxv = std::max(maxv, m == 0 ? 0 : 32 - std::countl_zero(m));
  }
  const int n = ground_n > 0 ? ground_n : maxv;
  if (maxv > n)
    throw ParseError(1, 1, "vertex " + std::to_string(maxv) +
                               " exceeds the declared ground set [" +
                               std::to_string(n) + "]");
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (comparable(members[i], members[j]))
        throw ParseError(sources[j].line, sources[j].column,
                         "comparable pair: '" + sources[i].text + "' and '" +
                             sources[j].text + "'");
  return make_antichain(n, std::move(members));
}

std::string format_set(Mask m, int n) {
  if (m == 0) return "-";
  std::string out;
  for (int v = 1; v <= max_ground; ++v) {
    if (!(m & (Mask{1} << (v - 1)))) continue;
    if (n > 9 && !out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string format_antichain(const Antichain& a) {
  std::string out;
  for (Mask m : a.members) {
    if (!out.empty()) out += ' ';
    out += format_set(m, a.n);
  }
  return out;
}

std::string format_partition(const IntervalPartition& p, int n) {
  std::string out;
  for (const auto& iv : p.intervals) {
    if (!out.empty()) out += ' ';
    out += format_set(iv.lower, n) + ":" + format_set(iv.upper, n);
  }
  return out;
}

std::vector<Multidegree> parse_multidegrees(const std::string& text) {
  std::vector<Multidegree> out;
  for (const auto& tok : tokenize(text)) {
    Multidegree c;
    std::size_t pos = 0;
    while (pos <= tok.text.size()) {
      const std::size_t comma = tok.text.find(',', pos);
      const std::string part =
          tok.text.substr(pos, comma == std::string::npos ? std::string::npos
                                                          : comma - pos);
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(tok.line, tok.column, "malformed tuple '" + tok.text + "'");
      c.push_back(std::stoi(part));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string format_multidegree(const Multidegree& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace sdepth
