#include "spti/alkane_names.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

namespace spti {

int branch_size(Branch b) noexcept {
  switch (b) {
    case Branch::Methyl: return 1;
    case Branch::Ethyl: return 2;
    case Branch::Propyl:
    case Branch::Isopropyl: return 3;
    case Branch::Butyl:
    case Branch::Isobutyl:
    case Branch::SecButyl:
    case Branch::TertButyl: return 4;
  }
  return 0;
}

std::string_view branch_name(Branch b) noexcept {
  switch (b) {
    case Branch::Methyl: return "methyl";
    case Branch::Ethyl: return "ethyl";
    case Branch::Propyl: return "propyl";
    case Branch::Isopropyl: return "isopropyl";
    case Branch::Butyl: return "butyl";
    case Branch::Isobutyl: return "isobutyl";
    case Branch::SecButyl: return "sec-butyl";
    case Branch::TertButyl: return "tert-butyl";
  }
  return "?";
}

int AlkaneAst::carbon_count() const noexcept {
  int total = parent_length;
  for (const auto& s : substituents) total += branch_size(s.branch);
  return total;
}

namespace {

enum class Tok { Number, Sep, Hyphen, Word, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int value = 0;
};

std::vector<Token> tokenize(std::string_view raw) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
  std::size_t end = raw.size();
  while (end > i && std::isspace(static_cast<unsigned char>(raw[end - 1]))) --end;
  while (i < end) {
    const char c = raw[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Token t{Tok::Number, {}, 0};
      while (i < end && std::isdigit(static_cast<unsigned char>(raw[i]))) {
        t.text += raw[i];
        if (t.value < 1000) t.value = t.value * 10 + (raw[i] - '0');
        ++i;
      }
      out.push_back(std::move(t));
    } else if (c == ',' || c == '.') {
      out.push_back({Tok::Sep, std::string(1, c), 0});
      ++i;
    } else if (c == '-') {
      out.push_back({Tok::Hyphen, "-", 0});
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      Token t{Tok::Word, {}, 0};
      while (i < end && std::isalpha(static_cast<unsigned char>(raw[i]))) {
        t.text += static_cast<char>(std::tolower(static_cast<unsigned char>(raw[i])));
        ++i;
      }
      out.push_back(std::move(t));
    } else {
      throw NameError("unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::End, {}, 0});
  return out;
}

constexpr std::array<std::pair<std::string_view, int>, 21> kParents{{
    {"meth", 1},     {"eth", 2},       {"prop", 3},      {"but", 4},       {"pent", 5},
    {"hex", 6},      {"hept", 7},      {"oct", 8},       {"non", 9},       {"dec", 10},
    {"undec", 11},   {"dodec", 12},    {"tridec", 13},   {"tetradec", 14}, {"pentadec", 15},
    {"hexadec", 16}, {"heptadec", 17}, {"octadec", 18},  {"nonadec", 19},  {"icos", 20},
    {"eicos", 20},
}};

constexpr std::array<std::pair<std::string_view, int>, 5> kMultipliers{{
    {"di", 2}, {"tri", 3}, {"tetra", 4}, {"penta", 5}, {"hexa", 6},
}};

// Longest match first so that "isopropyl" wins over "propyl".
constexpr std::array<std::pair<std::string_view, Branch>, 6> kStems{{
    {"isopropyl", Branch::Isopropyl},
    {"isobutyl", Branch::Isobutyl},
    {"methyl", Branch::Methyl},
    {"propyl", Branch::Propyl},
    {"ethyl", Branch::Ethyl},
    {"butyl", Branch::Butyl},
}};

// Locant-free trivial names that appear in the isomer tables.
constexpr std::array<std::pair<std::string_view, std::string_view>, 3> kAliases{{
    {"tetramethylbutane", "2,2,3,3-tetramethylbutane"},
    {"isobutane", "2-methylpropane"},
    {"neopentane", "2,2-dimethylpropane"},
}};

std::optional<int> parent_length(std::string_view word) {
  if (word.size() < 4 || word.substr(word.size() - 3) != "ane") return std::nullopt;
  auto root = word.substr(0, word.size() - 3);
  for (auto [name, len] : kParents)
    if (root == name) return len;
  return std::nullopt;
}

struct Group {
  std::vector<int> locants;
  std::string qualifier;
  std::string word;
};

class NameParser {
 public:
  explicit NameParser(std::string_view name) : source_(name), tokens_(tokenize(name)) {}

  AlkaneAst parse() {
    AlkaneAst ast;
    if (peek().kind == Tok::Word && peek(1).kind == Tok::End) {
      auto len = parent_length(peek().text);
      if (!len) throw error("unknown parent name '" + peek().text + "'");
      ast.parent_length = *len;
      return ast;
    }
    bool done = false;
    while (!done) {
      Group g = group();
      std::string rest;
      int count = 1;
      Branch branch = split_substituent(g, rest, count);
      if (static_cast<int>(g.locants.size()) != count) {
        throw error("multiplier expects " + std::to_string(count) + " locants but " +
                    std::to_string(g.locants.size()) + " were given");
      }
      for (int loc : g.locants) ast.substituents.push_back({loc, branch});
      if (!rest.empty()) {
        auto len = parent_length(rest);
        if (!len) throw error("unknown parent name '" + rest + "'");
        ast.parent_length = *len;
        if (peek().kind != Tok::End) throw error("trailing text after parent name");
        done = true;
      } else {
        expect(Tok::Hyphen, "'-' after substituent");
      }
    }
    for (const auto& s : ast.substituents) {
      if (s.locant < 1 || s.locant > ast.parent_length) {
        throw error("locant " + std::to_string(s.locant) + " outside parent chain of length " +
                    std::to_string(ast.parent_length));
      }
    }
    return ast;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw error(std::string("expected ") + what);
    take();
  }

  NameError error(const std::string& what) const {
    return NameError("cannot parse \"" + std::string(source_) + "\": " + what);
  }

  // locants '-' [qualifier '-'] word
  Group group() {
    Group g;
    if (peek().kind != Tok::Number) throw error("expected locant");
    g.locants.push_back(take().value);
    while (peek().kind == Tok::Sep) {
      take();
      if (peek().kind != Tok::Number) throw error("expected locant after separator");
      g.locants.push_back(take().value);
    }
    expect(Tok::Hyphen, "'-' after locants");
    if (peek().kind == Tok::Word && peek(1).kind == Tok::Hyphen) {
      const auto& q = peek().text;
      if (q == "n" || q == "sec" || q == "s" || q == "tert" || q == "t" || q == "iso") {
        g.qualifier = take().text;
        take();
      }
    }
    if (peek().kind != Tok::Word) throw error("expected substituent name");
    g.word = take().text;
    return g;
  }

  // Splits "[multiplier]stem[parent]" and applies the qualifier.
  Branch split_substituent(const Group& g, std::string& rest, int& count) const {
    std::string_view word = g.word;
    for (auto [prefix, k] : kMultipliers) {
      if (word.starts_with(prefix) && match_stem(word.substr(prefix.size()))) {
        word.remove_prefix(prefix.size());
        count = k;
        break;
      }
    }
    auto stem = match_stem(word);
    if (!stem) throw error("unknown substituent '" + g.word + "'");
    rest = std::string(word.substr(stem->first.size()));
    Branch b = stem->second;
    const auto& q = g.qualifier;
    if (q.empty() || (q == "n" && (b == Branch::Propyl || b == Branch::Butyl))) return b;
    if ((q == "sec" || q == "s") && b == Branch::Butyl) return Branch::SecButyl;
    if ((q == "tert" || q == "t") && b == Branch::Butyl) return Branch::TertButyl;
    if (q == "iso" && b == Branch::Propyl) return Branch::Isopropyl;
    if (q == "iso" && b == Branch::Butyl) return Branch::Isobutyl;
    throw error("qualifier '" + q + "' does not apply to " + std::string(branch_name(b)));
  }

  static std::optional<std::pair<std::string_view, Branch>> match_stem(std::string_view word) {
    for (auto entry : kStems)
      if (word.starts_with(entry.first)) return entry;
    return std::nullopt;
  }

  std::string_view source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

AlkaneAst parse_name(std::string_view name) {
  std::string lowered;
  for (char c : name) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  if (lowered.empty()) throw NameError("empty name");
  for (auto [alias, expansion] : kAliases) {
    if (lowered == alias) return parse_name(expansion);
  }
  AlkaneAst ast = NameParser(name).parse();
  if (ast.parent_length < 1 || ast.parent_length > kMaxParentLength) {
    throw NameError("parent chain length out of range");
  }
  to_graph(ast);  // valence check
  return ast;
}

Graph to_graph(const AlkaneAst& ast) {
  const int parent = ast.parent_length;
  if (parent < 1) throw NameError("parent chain must have at least one carbon");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < parent; ++i) edges.push_back({i, i + 1});
  int next = parent;
  auto add = [&](int from) {
    edges.push_back({from, next});
    return next++;
  };
  for (const auto& s : ast.substituents) {
    if (s.locant < 1 || s.locant > parent) throw NameError("locant outside parent chain");
    const int at = s.locant - 1;
    switch (s.branch) {
      case Branch::Methyl: add(at); break;
      case Branch::Ethyl: add(add(at)); break;
      case Branch::Propyl: add(add(add(at))); break;
      case Branch::Isopropyl: {
        int a = add(at);
        add(a);
        add(a);
        break;
      }
      case Branch::Butyl: add(add(add(add(at)))); break;
      case Branch::Isobutyl: {
        int b = add(add(at));
        add(b);
        add(b);
        break;
      }
      case Branch::SecButyl: {
        int a = add(at);
        add(a);
        add(add(a));
        break;
      }
      case Branch::TertButyl: {
        int a = add(at);
        add(a);
        add(a);
        add(a);
        break;
      }
    }
  }
  Graph g(next, std::move(edges));
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 4) {
      throw NameError("carbon " + std::to_string(v < parent ? v + 1 : v) + (v < parent ? " of the parent chain" : "") +
                      " would carry " + std::to_string(g.degree(v)) + " bonds");
    }
  }
  return g;
}

std::string describe(const AlkaneAst& ast) {
  std::ostringstream out;
  out << "parent=" << ast.parent_length << " carbons=" << ast.carbon_count();
  for (const auto& s : ast.substituents) out << ' ' << s.locant << '-' << branch_name(s.branch);
  return out.str();
}

}  // namespace spti
