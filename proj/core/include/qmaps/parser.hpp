#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qmaps/errors.hpp"
#include "qmaps/ncexpr.hpp"
#include "qmaps/presentation.hpp"

namespace qmaps {

/// Syntax error at a byte offset of the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position, std::size_t line = 0);
  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

/// Parses a noncommutative *-polynomial.
///
///   expression := ['+' | '-'] term (('+' | '-') term)*
///   term       := factor+                       (juxtaposition = product)
///   factor     := atom "'"*                     (postfix ' = adjoint)
///   atom       := integer ['/' integer] | 'i' | name | '(' expression ')'
///
/// `i` is the imaginary unit and cannot name a generator. Names are
/// [A-Za-z][A-Za-z0-9_@]*. Generators are not checked here.
NCExpr parse_expression(std::string_view text);

/// "lhs = rhs" parses to lhs - rhs; a bare expression is read as "= 0".
NCExpr parse_relation(std::string_view text);

/// Declared generator of a presentation file.
struct GeneratorDecl {
  enum class Kind { kGeneral, kSelfAdjoint, kAdjointOf };
  std::string name;
  Kind kind = Kind::kGeneral;
  std::string partner;  // for kAdjointOf

  bool operator==(const GeneratorDecl&) const = default;
};

/// A presentation file as written:
///
///   # comment
///   gen p selfadjoint
///   gen z
///   gen w adjoint_of z
///   rel p = p p + z' z
///
/// Relations are stored as parsed; `w` stays a name until to_presentation()
/// rewrites it to z'.
struct PresentationFile {
  std::vector<GeneratorDecl> generators;
  std::vector<NCExpr> relations;

  /// Resolves adjoint_of aliases and checks that relations only use
  /// declared names (UnknownGenerator otherwise).
  Presentation to_presentation() const;

  bool operator==(const PresentationFile&) const = default;
};

PresentationFile parse_presentation_file(std::string_view text);
PresentationFile read_presentation_file(const std::string& path);
std::string print_presentation_file(const PresentationFile& file);
PresentationFile to_file(const Presentation& presentation);

}  // namespace qmaps
