#include "colimex/field.hpp"

namespace colimex {

namespace {

bool is_prime_int(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  require(p >= 2 && p < (std::int64_t{1} << 31), "BadField",
          "prime field modulus out of range: " + std::to_string(p));
  require(is_prime_int(p), "BadField",
          "modulus is not prime: " + std::to_string(p));
  return Field(Kind::prime, p);
}

std::string Field::name() const {
  return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

std::optional<Field> Field::parse(const std::string& s) {
  if (s == "Q" || s == "q") return rationals();
  if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
    std::int64_t p = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      p = p * 10 + (s[i] - '0');
      if (p > (std::int64_t{1} << 31)) return std::nullopt;
    }
    if (!is_prime_int(p)) return std::nullopt;
    return prime(p);
  }
  return std::nullopt;
}

}  // namespace colimex
