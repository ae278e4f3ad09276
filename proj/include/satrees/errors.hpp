#pragma once

#include <stdexcept>
#include <string>

namespace satrees {

enum class ErrKind {
    dimension,    // ring context / length mismatch
    domain,       // argument outside the operation's domain (zero ideal, zero poly, ...)
    precondition, // stated precondition violated
    resource,     // budget guard exceeded
    validation,   // internal cross-check failed (indicates a bug)
    parse,        // workspace / input syntax
    usage,        // bad CLI invocation
};

class Error : public std::runtime_error {
  public:
    Error(ErrKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrKind kind() const { return kind_; }

  private:
    ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace satrees
