#pragma once

#include <stdexcept>
#include <string>

namespace matchroid {

// Failure categories surfaced by the library. The CLI maps these onto exit
// codes; tests match on the kind rather than on message text.
enum class ErrorKind {
  Structural,          // value does not conform to its group context
  Domain,              // parameter outside the operation's domain
  UnsupportedOrder,    // no compatible total order is available
  TorsionCollision,    // multiples of a torsion element collide (or hit zero)
  SizeLimit,           // input exceeds a desk-scale enumeration bound
  InvalidBasisSystem,  // basis exchange axiom fails
  Loop,                // a ground element lies in no basis
  Disjointness,        // ground sets overlap where they must not
  Parse,               // malformed document
  Internal,            // invariant broken inside the library
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace matchroid
