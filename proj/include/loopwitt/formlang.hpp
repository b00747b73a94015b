#pragma once

#include <string>
#include <variant>

#include "loopwitt/cocycles.hpp"
#include "loopwitt/loopforms.hpp"
#include "loopwitt/wittcore.hpp"

namespace loopwitt {

/// Parse failure with source position. Also raised for literals that do not
/// fit the declared field and for variables outside the ambient tower; all
/// three reject the input text rather than the mathematical request.
class ParseError : public Error {
public:
    ParseError(std::string code, const std::string& message, int line, int col)
        : Error(std::move(code),
                "line " + std::to_string(line) + ", column " +
                    std::to_string(col) + ": " + message),
          line_(line), col_(col) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return col_; }

private:
    int line_;
    int col_;
};

struct ParseContext {
    BaseField field;
    int nvars;
};

/// Input grammar (authoritative):
///
///   form       := "diag" "(" [poly {"," poly}] ")" | matrix
///   matrix     := "[" row {"," row} "]"
///   row        := "[" poly {"," poly} "]"
///   poly       := ["-"] term {("+"|"-") term}
///   term       := factor {"*" factor}
///   factor     := atom ["^" signed-int]
///   atom       := integer | rational | var | "(" poly ")"
///   var        := "t" positive-int
///   rational   := integer "/" positive-int
///   components := "{" subset ":" form {"," subset ":" form} "}"
///   subset     := "{}" | "{" int {"," int} "}"
///   cocycle    := "cocycle" "(" "m" "=" int "," "r" "=" int ","
///                 "e" "=" int "," (orth-data | table-data) ")"
///   orth-data  := "units" "=" "(" [poly {"," poly}] ")" ","
///                 "exp" "=" "[" [exp-row {"," exp-row}] "]"
///   exp-row    := "[" [signed-int {"," signed-int}] "]"
///   table-data := "target" "=" "(" int {"," int} ")" ","
///                 "action" "=" ("trivial" | "invert") ","
///                 "values" "=" "{" entry {"," entry} "}"
///   entry      := "(" [int {"," int}] ";" int ")" ":"
///                 "(" [signed-int {"," signed-int}] ")"
///
/// Whitespace-insensitive. Integer literals reduce into the field (mod p
/// over F_p); rationals with denominator divisible by p are rejected.

LaurentPoly parse_poly(const std::string& text, const ParseContext& ctx);
DiagForm parse_diag(const std::string& text, const ParseContext& ctx);
SymMatrix parse_matrix(const std::string& text, const ParseContext& ctx);

/// Either branch of the `form` rule.
std::variant<DiagForm, SymMatrix> parse_form(const std::string& text,
                                             const ParseContext& ctx);

/// `form`, with matrices diagonalized into forms.
DiagForm parse_form_as_diag(const std::string& text, const ParseContext& ctx);

LoopComponents parse_components(const std::string& text,
                                const ParseContext& ctx);

using CocycleInput = std::variant<LoopCocycle, DiagOrthCocycle>;
CocycleInput parse_cocycle(const std::string& text, const ParseContext& ctx);

std::string render(const LaurentPoly& f);
std::string render(const SqClassFn& c);
std::string render(const DiagForm& q);
std::string render(const BaseForm& q);
std::string render(const SymMatrix& m); // grammar-conformant iff entries are polynomial
std::string render(const LoopComponents& cs);
std::string render(const WittClass& w);
std::string render(const DiagOrthCocycle& c);

} // namespace loopwitt
