#include "qmaps/parser.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace qmaps {

ParseError::ParseError(const std::string& message, std::size_t position, std::size_t line)
    : Error((line ? "line " + std::to_string(line) + ", " : std::string()) + "offset " +
            std::to_string(position) + ": " + message),
      position_(position),
      line_(line) {}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '@';
}

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  NCExpr parse_all() {
    NCExpr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

  NCExpr expression() {
    skip_space();
    NCExpr sum;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    sum += negative ? -term() : term();
    for (;;) {
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      negative = text_[pos_] == '-';
      ++pos_;
      sum += negative ? -term() : term();
    }
    return sum;
  }

 private:
  NCExpr term() {
    skip_space();
    if (!starts_atom()) fail("expected a term");
    NCExpr prod = NCExpr::constant(1);
    while (starts_atom()) {
      prod = prod * factor();
      skip_space();
    }
    return prod;
  }

  bool starts_atom() {
    skip_space();
    const char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || is_name_start(c);
  }

  NCExpr factor() {
    NCExpr a = atom();
    while (peek() == '\'') {
      ++pos_;
      a = a.star();
    }
    return a;
  }

  NCExpr atom() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NCExpr inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(integer());
      std::size_t save = pos_;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        mpz_class den(integer());
        if (den == 0) fail("zero denominator");
        value = mpq_class(value.get_num(), den);
        value.canonicalize();
      } else {
        pos_ = save;
      }
      return NCExpr::constant(Scalar(value));
    }
    if (is_name_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return NCExpr::constant(Scalar::i());
      return NCExpr::letter(name);
    }
    fail(pos_ < text_.size() ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool valid_name(const std::string& n) {
  if (n.empty() || !is_name_start(n[0]) || n == "i") return false;
  for (char c : n) {
    if (!is_name_char(c)) return false;
  }
  return true;
}

}  // namespace

NCExpr parse_expression(std::string_view text) { return ExpressionParser(text).parse_all(); }

NCExpr parse_relation(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) return parse_expression(text);
  if (text.find('=', eq + 1) != std::string_view::npos) throw ParseError("more than one '='", eq);
  NCExpr lhs;
  NCExpr rhs;
  try {
    lhs = parse_expression(text.substr(0, eq));
  } catch (const ParseError& e) {
    throw ParseError("in left-hand side: " + std::string(e.what()), e.position());
  }
  try {
    rhs = parse_expression(text.substr(eq + 1));
  } catch (const ParseError& e) {
    throw ParseError("in right-hand side: " + std::string(e.what()), eq + 1 + e.position());
  }
  return lhs - rhs;
}

PresentationFile parse_presentation_file(std::string_view text) {
  PresentationFile file;
  std::set<std::string> names;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(offset, end - offset);
    const std::size_t line_offset = offset;
    offset = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    std::istringstream words(content);
    std::string keyword;
    words >> keyword;
    if (keyword == "gen") {
      GeneratorDecl decl;
      std::string flag;
      words >> decl.name >> flag;
      if (!valid_name(decl.name)) throw ParseError("invalid generator name '" + decl.name + "'", line_offset, line_no);
      if (!names.insert(decl.name).second) {
        throw ParseError("duplicate generator '" + decl.name + "'", line_offset, line_no);
      }
      if (flag == "selfadjoint") {
        decl.kind = GeneratorDecl::Kind::kSelfAdjoint;
      } else if (flag == "adjoint_of") {
        decl.kind = GeneratorDecl::Kind::kAdjointOf;
        words >> decl.partner;
        if (decl.partner.empty()) throw ParseError("adjoint_of needs a generator", line_offset, line_no);
      } else if (!flag.empty()) {
        throw ParseError("unknown generator flag '" + flag + "'", line_offset, line_no);
      }
      std::string extra;
      if (words >> extra) throw ParseError("trailing text '" + extra + "'", line_offset, line_no);
      file.generators.push_back(decl);
    } else if (keyword == "rel") {
      const std::string body = content.substr(3);
      try {
        file.relations.push_back(parse_relation(body));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_offset + 3 + e.position(), line_no);
      }
    } else {
      throw ParseError("expected 'gen' or 'rel', got '" + keyword + "'", line_offset, line_no);
    }
  }
  for (const auto& g : file.generators) {
    if (g.kind != GeneratorDecl::Kind::kAdjointOf) continue;
    bool found = false;
    for (const auto& h : file.generators) {
      if (h.name == g.partner) {
        if (h.kind == GeneratorDecl::Kind::kAdjointOf) {
          throw ParseError("adjoint_of target '" + g.partner + "' is itself an alias", 0);
        }
        found = true;
      }
    }
    if (!found) throw UnknownGenerator(g.partner);
  }
  return file;
}

PresentationFile read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation_file(ss.str());
}

Presentation PresentationFile::to_presentation() const {
  Presentation p;
  std::map<std::string, std::string> alias;
  for (const auto& g : generators) {
    if (g.kind == GeneratorDecl::Kind::kAdjointOf) {
      alias.emplace(g.name, g.partner);
    } else {
      p.generators.push_back({g.name, g.kind == GeneratorDecl::Kind::kSelfAdjoint});
    }
  }
  for (const auto& r : relations) {
    p.relations.push_back(r.substituted([&](const std::string& name) {
      if (auto it = alias.find(name); it != alias.end()) return NCExpr::letter(it->second, true);
      if (!p.has(name)) throw UnknownGenerator(name);
      return NCExpr::letter(name);
    }));
  }
  p.validate();
  return p;
}

std::string print_presentation_file(const PresentationFile& file) {
  std::ostringstream os;
  for (const auto& g : file.generators) {
    os << "gen " << g.name;
    if (g.kind == GeneratorDecl::Kind::kSelfAdjoint) os << " selfadjoint";
    if (g.kind == GeneratorDecl::Kind::kAdjointOf) os << " adjoint_of " << g.partner;
    os << "\n";
  }
  for (const auto& r : file.relations) os << "rel " << r.to_string() << "\n";
  return os.str();
}

PresentationFile to_file(const Presentation& presentation) {
  PresentationFile file;
  for (const auto& g : presentation.generators) {
    file.generators.push_back(
        {g.name, g.self_adjoint ? GeneratorDecl::Kind::kSelfAdjoint : GeneratorDecl::Kind::kGeneral, ""});
  }
  file.relations = presentation.relations;
  return file;
}

}  // namespace qmaps
