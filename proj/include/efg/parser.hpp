#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "efg/formula.hpp"

namespace efg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/*
 * Grammar:
 *   formula  := implies
 *   implies  := or ("->" implies)?
 *   or       := and ("|" and)*
 *   and      := unary ("&" unary)*
 *   unary    := "!" unary | quant | atom | "(" formula ")"
 *   quant    := ("E" | "A") var "." formula        -- scope extends maximally right
 *   atom     := "true" | "false" | Pred "(" term ")" | term ("<" | "=") term
 *   term     := var | "f" "(" term ")" | "f^" k "(" term ")"
 *
 * Variables are [a-z][a-z0-9_]*, predicates [A-Z][A-Za-z0-9_]*.
 */
Formula parse(std::string_view text);

}  // namespace efg
