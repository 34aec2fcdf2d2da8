#ifndef HIGMAN_ERRORS_HPP_
#define HIGMAN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace higman {

// A well-formed request outside an operation's domain (graduation of the
// empty segment, factorization of the empty segment, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: alphabet specs, JSON payloads, command lines.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A violated internal contract. Reaching this is a bug, not a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace higman

#endif  // HIGMAN_ERRORS_HPP_
