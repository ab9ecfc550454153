#pragma once

#include <functional>
#include <string>

#include "cedga/bundle.hpp"

namespace cedga {

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line(line), column(column), message(message)
    {
    }
    int line;
    int column;
    std::string message;
};

/// Supplies presentations that a map or augmentation block names but the
/// text does not define. Returns nullptr for unknown names.
using PresentationResolver = std::function<PresentationPtr(const std::string&)>;

/// Parses a .cedga text. Statements before the first `presentation NAME`
/// header belong to a presentation called "main".
///
///   presentation NAME
///   ring Q | GF2 | laurent(p1,p2,...)
///   convention potential_plus | potential_minus
///   idempotents e1 e2 ...
///   gen NAME deg INT from E to E [long | short LINK] [level P]
///   diff NAME = EXPR
///   map NAME : SRC -> TGT { E -> E ; GEN -> EXPR ; ... }
///   aug NAME on SRC scope LINK... { GEN -> COEFF ; ... }
///   note free text to end of line
///
/// `#` starts a comment. Words are written in print order, the rightmost
/// letter acting first; `1` is the sum of all idempotents.
CatalogBundle parse(const std::string& text, const PresentationResolver& resolver = {});

/// Canonical text: presentations (the first one headerless when it is
/// called "main"), then maps, augmentations and notes.
std::string serialize(const CatalogBundle& bundle);

/// Coefficient in DSL syntax, e.g. "-3", "2/3", "lam^-1*mu", "(mu - mu*lam)".
Coeff parse_coeff(const std::string& text, const CoeffRing& ring);

/// Element of P in DSL syntax.
Element parse_element(const std::string& text, const Presentation& P);

}  // namespace cedga
