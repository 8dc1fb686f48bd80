#pragma once

#include <string>

#include "vspin/pulse.hpp"

namespace vspin {

// Line-oriented pulse-program text format, one event per line:
//
//   pulse <X|Y> <m> <n> angle=<literal> [phase=<literal>]
//   grad
//   delay <seconds>
//
// Keywords are case-insensitive; '#' starts a comment; blank lines are
// ignored; LF and CRLF both accepted (LF emitted). Angle literals are
// rational multiples of pi ("pi", "-pi/2", "2pi", "3pi/4") kept exact, or
// decimal radians.

struct ParseError : std::runtime_error {
  ParseError(int line_, int col_, const std::string& message_);
  int line;
  int col;
  std::string message;
};

PulseSequence parse(const std::string& text);

// Canonical text: normalized whitespace/case, zero phases omitted,
// rational-pi angles printed symbolically, trailing LF.
std::string serialize(const PulseSequence& seq);

}  // namespace vspin
