#pragma once

#include <stdexcept>
#include <string>

namespace tuttex {

// Malformed input files or option values (CLI exit code 2).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An algorithm was invoked outside its precondition, e.g. the forest route
// off the y = 1 line (CLI exit code 3).
struct inapplicable_error : std::runtime_error {
  explicit inapplicable_error(const std::string& what) : std::runtime_error(what) {}
};

// A guard against super-polynomial blowup fired, e.g. the brute-force
// oracle asked for too many edges (CLI exit code 5).
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tuttex
