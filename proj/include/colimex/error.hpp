#pragma once

#include <stdexcept>
#include <string>

namespace colimex {

// Base for all recoverable errors raised by the library. `code` is a stable
// machine-readable tag (e.g. "NonFinite", "MalformedRelation") used in
// reports and exit-code handling.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline void require(bool ok, const std::string& code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

// Violations of internal contracts (e.g. a universal property that provably
// cannot fail did). These indicate a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& msg) {
  if (!ok) throw InternalError(msg);
}

}  // namespace colimex
