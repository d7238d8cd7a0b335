#pragma once

#include <string>

#include "triplet/groups.hpp"

// Parsers for the command-line representation specs ("mu:n=3,k=1") and
// generator words ("l1 l2 l1"). Parse failures throw ParseError carrying the
// offending position in the input string.

namespace triplet {

GroupWord parse_word(const std::string& text);

// Builds the representation named by the spec, evaluates the word, and
// returns the rendered matrix.
std::string eval_repspec_word(const std::string& spec, const std::string& word);

}  // namespace triplet
