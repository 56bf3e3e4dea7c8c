#pragma once

#include <stdexcept>
#include <string>

namespace sqc {

/// Malformed or out-of-contract input (bad matrix, bad parameters, dimension
/// overflow). The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string &what) : std::invalid_argument(what) {}
};

/// A numerical engine failed to converge. The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace sqc
