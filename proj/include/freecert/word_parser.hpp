#pragma once

#include <map>
#include <string>
#include <vector>

#include "freecert/words.hpp"

namespace freecert {

/// Named constants available to word expressions.
struct WordEnv {
    GroupSpec spec;
    std::map<std::string, Element> constants;
};

/// Parses expressions like "g x1 g^-1 x2^-1" or "(g x1)^-2": variables
/// x1, x2, ...; other identifiers name constants from the environment;
/// juxtaposition multiplies; ^<integer> takes powers; parentheses group.
/// Throws ParseError with a 1-based character position on bad input.
FreeProductWord parse_word(const std::string& text, const WordEnv& env);

/// Renders a word using environment names where a constant matrix matches
/// one; unmatched constants print as "#k" with k indexing first occurrence.
std::string format_word(const FreeProductWord& word, const WordEnv& env);

}  // namespace freecert
