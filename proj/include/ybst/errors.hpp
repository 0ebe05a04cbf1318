#pragma once

#include <stdexcept>
#include <string>

namespace ybst {

// Malformed data: out-of-range table entries, size mismatches, bad JSON.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A semantic precondition of an operation does not hold for the given
// (well-formed) input, e.g. inverting a non-bijective solution.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget (word count, carrier size, candidate cap) was exceeded.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ybst
