#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nestgen {

/// Arbitrary-precision integer used for every count in the library.
using BigInt = mpz_class;
using BigRational = mpq_class;

std::string to_decimal(const BigInt& value);
BigInt from_decimal(std::string_view text);

}  // namespace nestgen
