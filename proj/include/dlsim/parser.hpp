#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dlsim/concept.hpp"
#include "dlsim/error.hpp"
#include "dlsim/kb.hpp"

namespace dlsim {

enum class ParseErrorKind { Lex, Syntax, DuplicateDefinition, Cycle, Unknown };

const char* to_string(ParseErrorKind kind) noexcept;

/// Error in `.dlkb` input. Line and column are 1-based.
class ParseError : public DlError {
public:
    ParseError(ParseErrorKind kind, int line, int column, const std::string& message);

    ParseErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    ParseErrorKind kind_;
    int line_;
    int column_;
    std::string message_;
};

/*
 * Grammar of the `.dlkb` format, one statement per line:
 *
 *   stmt    := NAME ":=" concept | NAME "<=" concept
 *            | NAME "(" NAME ")" | NAME "(" NAME "," NAME ")"
 *   concept := conj ("or" conj)*
 *   conj    := unary ("and" unary)*
 *   unary   := "not" unary | "exists" NAME "." unary | "forall" NAME "." unary
 *            | "atleast" INT NAME | "(" concept ")" | "Top" | "Bottom" | NAME
 *
 * '#' starts a comment running to the end of the line.
 */
KnowledgeBase parse_kb(std::string_view text);
Concept parse_concept(std::string_view text);

/// Reads and parses a `.dlkb` file. I/O failures raise std::runtime_error.
KnowledgeBase load_kb(const std::filesystem::path& path);

/// Concept in `.dlkb` syntax with the minimal parentheses needed to parse back to the same tree.
std::string to_string(const Concept& c);
/// Definitions by name, then concept assertions, then role assertions; LF terminated.
std::string serialize(const KnowledgeBase& kb);

}  // namespace dlsim
