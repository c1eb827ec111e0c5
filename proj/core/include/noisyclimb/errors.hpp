#ifndef NOISYCLIMB_ERRORS_HPP_
#define NOISYCLIMB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace noisyclimb {

// A configuration violates its documented invariants.
class InvalidConfigError : public std::invalid_argument {
 public:
  explicit InvalidConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A simulator state contains non-finite components.
class InvalidStateError : public std::invalid_argument {
 public:
  explicit InvalidStateError(const std::string& what) : std::invalid_argument(what) {}
};

// Two inputs that must agree in shape do not.
class ShapeMismatchError : public std::invalid_argument {
 public:
  explicit ShapeMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace noisyclimb

#endif  // NOISYCLIMB_ERRORS_HPP_
