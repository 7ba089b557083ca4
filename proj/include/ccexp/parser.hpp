#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ccexp/logic.hpp"

namespace ccexp {

// Parser for the script dialect used throughout:
//
//   def crep "(Aj ((j>=i) & (j+p<s+n)) => T[j]=T[j+p]) & ...":
//   eval testpref "An (n>=1) => ($prefeq11(n) | ...)":
//   #sequence pf
//
// Quantifiers E/A bind a variable list and extend as far right as possible;
// precedence ~  then &  then |  then =>  then <=>; relations = != < <= > >=;
// terms use + - and literal*var; `T[...]` indexes the active sequence
// (Thue-Morse unless a #sequence directive rebinds it); `$name(args)` calls
// a stored predicate; `@c` in a sequence equation means the literal letter c.

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

struct ScriptCommand {
    enum class Kind { Define, Eval, Sequence };
    Kind kind;
    std::string name;        // define/eval target, or the sequence id
    FormulaPtr formula;      // define/eval only
    std::string formula_text;
    int line = 0;
};

// `sequence` is the id `T[...]` binds to at the start of the script.
std::vector<ScriptCommand> parse_script(std::string_view text,
                                        const std::string& sequence = "tm");

FormulaPtr parse_formula(std::string_view text, const std::string& sequence = "tm");

}  // namespace ccexp
