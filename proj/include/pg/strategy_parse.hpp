#pragma once

#include <set>
#include <string>

#include "pg/strategy.hpp"

namespace pg {

// Concrete strategy syntax (case-sensitive, '#' comments):
//   S    ::= T | A | S ";" S | S "+" S | S "orelse" S | "(" S ")"
//          | "ppick(" S ("," S)* ")"
//          | "while(" S ")do(" S ")min(" int ")max(" int ")"
//          | "if(" S ")then(" S ")else(" S ")"
//          | "pnotempty" | "atomic(" S ")"
//          | "repeat*(" S ")" | "repeat+(" S ")" | "not(" S ")" | "try(" S ")"
//   A    ::= "id" | "fail" | RULENAME | "par(" A "," A ")" | "ipar(" A "," A ")"
//          | "multi(" A "," int "," int ")"
//   T    ::= "crtpos" | "allsuc" | "onesuc" | "nextsuc" | "setpos(" id ("," id)* ")"
//          | "property(" pred "," ("graph"|"pos") ")" | "union(" T "," T ")"
//          | "inter(" T "," T ")" | "compl(" T ")" | "minus(" T "," T ")"
//   pred ::= atom | pred "or" pred | pred "and" pred | "not" pred | "(" pred ")"
//   atom ::= "name==" string | "portstate(" port ")==" string | "interface"
// ";" is right-associative; "orelse" and "+" bind looser than ";". Sugar
// expands during parsing (repeat*/repeat+/not/orelse/try). Unknown rule names
// are rejected. par/ipar/multi operands must be bare rule applications.
StratPtr parse_strategy(const std::string& text, const std::set<std::string>& known_rules);

}  // namespace pg
