#pragma once

#include <string>

#include "theta/standard_module.hpp"

namespace theta {

// Text form of a standard module:
//
//   module := "pair=" ("SpO"|"MpO") ";" ["side=" ("W"|"V") ";"]
//             [xi ";"] block ";" tau
//   xi     := label { "x" label }
//   block  := factor { "x" factor } | ""
//   factor := ("D"|"Z") "[" num "," num "]"
//   num    := ["-"] digits [ "/" "2" ]
//   tau    := "tau(" "l=" int ["," "m={" int ":" int {"," int ":" int} "}"]
//             ["," "n=" int] ")"
//
// Whitespace is insignificant. Half-integers are written as k/2 only.
// Errors carry line/column positions; validation failures name the violated
// invariant.
StandardModule parse_module(const std::string& text);

}  // namespace theta
