#pragma once

// Walks every k-nonnesting open diagram up to a size and compares the labels
// of its geometric children with the succession rule's prediction.

#include <map>
#include <string>

#include "nestgen/arcdiag.hpp"
#include "nestgen/gentree.hpp"

namespace nestgen::check {

struct AgreementResult {
  long diagrams = 0;
  long mismatches = 0;
  std::string first_mismatch;
};

template <class Label>
std::map<Label, std::uint64_t> as_map(const ChildMultiset<Label>& m) {
  std::map<Label, std::uint64_t> out;
  for (const auto& [l, c] : m) out[l] += c;
  return out;
}

inline void walk_partitions(const OpenPartitionDiagram& d, int k, NestingMode mode, int max_n,
                            AgreementResult& result) {
  ++result.diagrams;
  const PartitionLabel label = partition_label(d, k, mode);
  std::map<PartitionLabel, std::uint64_t> geometric;
  std::vector<OpenPartitionDiagram> children;
  for (const auto& step : legal_steps(d, k, mode)) {
    children.push_back(apply_step(d, step));
    ++geometric[partition_label(children.back(), k, mode)];
  }
  if (geometric != as_map(successors_partition(label, mode))) {
    if (result.mismatches++ == 0) result.first_mismatch = label.to_string();
  }
  if (d.size() + 1 >= max_n) return;
  for (const auto& c : children) walk_partitions(c, k, mode, max_n, result);
}

inline void walk_permutations(const OpenPermutationDiagram& d, int k, int max_n,
                              AgreementResult& result) {
  ++result.diagrams;
  const PermutationLabel label = permutation_label(d, k);
  std::map<PermutationLabel, std::uint64_t> geometric;
  std::vector<OpenPermutationDiagram> children;
  for (const auto& step : legal_steps(d, k)) {
    children.push_back(apply_step(d, step));
    ++geometric[permutation_label(children.back(), k)];
  }
  if (geometric != as_map(successors_permutation(label))) {
    if (result.mismatches++ == 0) result.first_mismatch = label.to_string();
  }
  if (d.size() + 1 >= max_n) return;
  for (const auto& c : children) walk_permutations(c, k, max_n, result);
}

/// Every diagram of size < max_n is checked, so every child has size <= max_n.
inline AgreementResult partition_agreement(int k, NestingMode mode, int max_n) {
  AgreementResult r;
  walk_partitions(OpenPartitionDiagram{}, k, mode, max_n, r);
  return r;
}

inline AgreementResult permutation_agreement(int k, int max_n) {
  AgreementResult r;
  walk_permutations(OpenPermutationDiagram{}, k, max_n, r);
  return r;
}

}  // namespace nestgen::check
