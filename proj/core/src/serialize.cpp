#include "nestgen/serialize.hpp"

#include <cstdio>

#include "nestgen/errors.hpp"

namespace nestgen {

namespace {

Json arcs_json(const std::vector<Arc>& arcs, bool skip_degenerate) {
  Json out = Json::array();
  for (const Arc& a : arcs) {
    if (skip_degenerate && a.degenerate()) continue;
    out.push_back({a.left, a.right});
  }
  return out;
}

std::vector<Arc> arcs_from(const Json& j) {
  std::vector<Arc> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw InvalidInput("arc must be [left, right]");
    out.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return out;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const OpenPartitionDiagram& d, bool with_blocks) {
  Json j{{"n", d.size()},
         {"closed_arcs", arcs_json(d.closed_arcs(), false)},
         {"open_arcs", d.open_arcs()}};
  if (with_blocks && d.open_arcs().empty()) j["blocks"] = d.blocks();
  return j;
}

Json to_json(const OpenPermutationDiagram& d, bool with_permutation) {
  Json j{{"n", d.size()},
         {"upper_arcs", arcs_json(d.upper_arcs(), true)},
         {"fixed_points", d.fixed_points()},
         {"lower_arcs", arcs_json(d.lower_arcs(), false)},
         {"upper_open", d.upper_open()},
         {"lower_open", d.lower_open()}};
  if (with_permutation && d.upper_open().empty()) j["permutation"] = d.permutation();
  return j;
}

OpenPartitionDiagram partition_diagram_from_json(const Json& j) {
  return guarded([&] {
    return OpenPartitionDiagram(j.at("n").get<int>(), arcs_from(j.at("closed_arcs")),
                                j.at("open_arcs").get<std::vector<int>>());
  });
}

OpenPermutationDiagram permutation_diagram_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Arc> upper = arcs_from(j.at("upper_arcs"));
    for (int f : j.at("fixed_points").get<std::vector<int>>()) upper.push_back({f, f});
    return OpenPermutationDiagram(j.at("n").get<int>(), std::move(upper),
                                  arcs_from(j.at("lower_arcs")),
                                  j.at("upper_open").get<std::vector<int>>(),
                                  j.at("lower_open").get<std::vector<int>>());
  });
}

Json to_json(const LevelDistribution& level) {
  Json labels = Json::array();
  for (const auto& [label, count] : level.entries) {
    labels.push_back({{"label", label}, {"count", to_decimal(count)}});
  }
  return {{"n", level.level}, {"labels", std::move(labels)}};
}

LevelDistribution level_from_json(const Json& j) {
  return guarded([&] {
    LevelDistribution out;
    out.level = j.at("n").get<int>();
    for (const auto& e : j.at("labels")) {
      out.entries[e.at("label").get<FlatLabel>()] =
          from_decimal(e.at("count").get<std::string>());
    }
    return out;
  });
}

Json to_json(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

std::vector<BigInt> big_ints_from_json(const Json& j) {
  return guarded([&] {
    std::vector<BigInt> out;
    for (const auto& v : j) out.push_back(from_decimal(v.get<std::string>()));
    return out;
  });
}

Json to_json(const ReferenceSequence& seq) {
  char checksum[19];
  std::snprintf(checksum, sizeof checksum, "%016llx",
                static_cast<unsigned long long>(seq.checksum));
  return {{"oeis", seq.oeis_id},
          {"family", to_string(seq.family.family)},
          {"k", seq.family.k},
          {"offset", seq.offset},
          {"terms", seq.terms},
          {"checksum", checksum}};
}

}  // namespace nestgen
