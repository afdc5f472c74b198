#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "colimex/error.hpp"

namespace colimex {

// Scalar field of an exact computation: the rationals, or Z/p for a prime p.
// All arithmetic downstream is exact; there is no floating point anywhere.
class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  static Field prime(std::int64_t p);

  Kind kind() const { return kind_; }
  std::int64_t p() const { return p_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  bool is_prime() const { return kind_ == Kind::prime; }

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  // "Q", "F2", "F3", ...
  std::string name() const;
  static std::optional<Field> parse(const std::string& s);

 private:
  Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

}  // namespace colimex
