#ifndef SDEPTH_TEXT_FORMAT_HPP
#define SDEPTH_TEXT_FORMAT_HPP

// Text formats: antichains as whitespace-separated facets, each facet a
// comma-separated 1-based vertex list ("1,2,3 1,2,4"); the compact digit
// form "123 124" is accepted and printed when n <= 9. Grid generators as
// comma-separated integer tuples.

#include <string>
#include <vector>

#include "sdepth/core.hpp"
#include "sdepth/multigraded.hpp"

namespace sdepth {

struct ParseError : std::runtime_error {
  int line = 1, column = 1;
  ParseError(int line_, int column_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + what),
        line(line_),
        column(column_) {}
};

// ground_n = 0 infers the ground set as the largest vertex mentioned.
Antichain parse_antichain(const std::string& text, int ground_n = 0);

std::string format_set(Mask m, int n);
std::string format_antichain(const Antichain& a);
std::string format_partition(const IntervalPartition& p, int n);

std::vector<Multidegree> parse_multidegrees(const std::string& text);
std::string format_multidegree(const Multidegree& c);

}  // namespace sdepth

#endif
