#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace rosette {

// decimal radians or a rational multiple of pi: "pi/4", "-2pi/5", "3*pi", "0.3"
double parse_beta(const std::string& s);
// "RxC" -> (R, C), both >= 1
std::pair<int, int> parse_grid(const std::string& s);

// args excludes the program name; returns the process exit status
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rosette
