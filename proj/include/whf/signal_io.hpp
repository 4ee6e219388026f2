#pragma once

// Signal interchange format: a self-describing JSON document
//   {"n": N, "a": a, "q": q, "L": L, "data": [[re, im], ...]}
// with n = a*q, L | q and exactly n data pairs.

#include <iosfwd>
#include <string>

#include "whf/zak.hpp"

namespace whf {

Signal load_signal(std::istream& in);
Signal load_signal_file(const std::string& path);

void save_signal(std::ostream& out, const Signal& f);
void save_signal_file(const std::string& path, const Signal& f);

}  // namespace whf
