#pragma once

// Text and JSON forms of digit words.
//
//   left   ~(P)H.F    e.g. ~(10)0100.001
//   right  H.F(P)~    e.g. 0.(010)~
//   finite H.F        e.g. 101.01
//
// "~(P)" is dropped for an empty period and ".F" for an empty fraction. A
// digit outside 0..9 is written in brackets: 1[-1]1[-1].10, [12]0.

#include <pisot/words.hpp>

#include <string>
#include <string_view>

namespace pisot {

std::string to_text(const DigitWord &w);
std::string to_text(const FiniteWord &w);
std::string to_text(const RightWord &w);
std::string to_text(const LeftWord &w);

// Parsers return the word as written; canonicalize separately if needed.
DigitWord parse_digits(std::string_view text);
FiniteWord parse_finite_word(std::string_view text);
RightWord parse_right_word(std::string_view text);
LeftWord parse_left_word(std::string_view text);

// {"period":[...],"head":[...],"fraction":[...],"side":"left"|"right"}.
// For a right word, head is the integer part and fraction the pre-period.
std::string to_json(const LeftWord &w);
std::string to_json(const RightWord &w);
LeftWord left_word_from_json(std::string_view text);
RightWord right_word_from_json(std::string_view text);

} // namespace pisot
