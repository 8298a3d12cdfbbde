#include "nestgen/bigint.hpp"

#include "nestgen/errors.hpp"

namespace nestgen {

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt from_decimal(std::string_view text) {
  BigInt out;
  if (text.empty() || out.set_str(std::string(text), 10) != 0) {
    throw InvalidInput("not a decimal integer: '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace nestgen
