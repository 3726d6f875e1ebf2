#pragma once

#include <iosfwd>
#include <string>

#include "relaxbound/core.hpp"
#include "relaxbound/machine.hpp"

namespace relaxbound {

/// Malformed instance or transcript document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance document: {"version":1,"n":N,"s":0,"weights":[row-major N*N]}.
std::string format_instance(const WeightAssignment& l);
WeightAssignment parse_instance(const std::string& text);

// Transcript: one JSON object per line,
// {"t":1,"op":"relax","u":0,"v":1,"ans":"done"}; weight queries add "x","y".
std::string format_step(const Step& step);
Step parse_step(const std::string& line);

void write_transcript(std::ostream& out, const Transcript& transcript);
/// Throws FormatError if step indices are not 1, 2, ... in order.
Transcript read_transcript(std::istream& in);

}  // namespace relaxbound
