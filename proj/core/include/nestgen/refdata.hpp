#pragma once

// Published counting sequences, embedded verbatim as decimal strings.

#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "nestgen/gentree.hpp"

namespace nestgen {

struct ReferenceSequence {
  std::string oeis_id;
  FamilySpec family;
  int offset = 1;  ///< n of terms[0]
  std::vector<std::string> terms;
  std::uint64_t checksum = 0;  ///< fnv1a64 of the comma-joined terms
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::string joined_terms(const ReferenceSequence& seq);

/// Partitions k=3..7, enhanced partitions k=3..7, permutations k=3..6.
/// Throws NotFound otherwise.
const ReferenceSequence& lookup(const FamilySpec& spec);
const std::vector<ReferenceSequence>& all_references();

/// Coefficients of z^0..z^10 in B(1,1).
const ReferenceSequence& baxter_reference();

struct SeriesTerm {
  int z = 0;
  int u = 0;
  int v = 0;
  long coefficient = 0;
};

/// Every term of B(u,v) through z^4.
const std::vector<SeriesTerm>& baxter_series_terms();

}  // namespace nestgen
