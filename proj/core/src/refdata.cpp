#include "nestgen/refdata.hpp"

#include "nestgen/errors.hpp"

namespace nestgen {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string joined_terms(const ReferenceSequence& seq) {
  std::string out;
  for (const auto& t : seq.terms) {
    if (!out.empty()) out += ',';
    out += t;
  }
  return out;
}

const std::vector<ReferenceSequence>& all_references() {
  static const std::vector<ReferenceSequence> table{
    {"A108304", {Family::Partition, 3}, 1,
     {
      "1", "2", "5", "15", "52", "202", "859", "3930", "19095", "97566", "520257",
      "2877834", "16434105", "96505490", "580864901", "3573876308", "22426075431",
      "143242527870", "929759705415", "6123822269373", "40877248201308"
     },
     0x7b02ef1bca4d409dull},
    {"A108305", {Family::Partition, 4}, 1,
     {
      "1", "2", "5", "15", "52", "203", "877", "4139", "21119", "115495", "671969",
      "4132936", "26723063", "180775027", "1274056792", "9320514343", "70548979894",
      "550945607475", "4427978077331", "36544023687590", "309088822019071"
     },
     0xfa3e7b9383b0e4e1ull},
    {"A192126", {Family::Partition, 5}, 1,
     {
      "1", "2", "5", "15", "52", "203", "877", "4140", "21147", "115974", "678530",
      "4212654", "27627153", "190624976", "1378972826", "10425400681", "82139435907",
      "672674215928", "5712423473216", "50193986895328", "455436027242590"
     },
     0x19350f2a7feae663ull},
    {"A192127", {Family::Partition, 6}, 1,
     {
      "1", "2", "5", "15", "52", "203", "877", "4140", "21147", "115975", "678570",
      "4213596", "27644383", "190897649", "1382919174", "10479355676", "82850735298",
      "681840170501", "5828967784989", "51665915664913", "473990899143781"
     },
     0x3cf257bee26f3f61ull},
    {"A192128", {Family::Partition, 7}, 1,
     {
      "1", "2", "5", "15", "52", "203", "877", "4140", "21147", "115975", "678570",
      "4213597", "27644437", "190899321", "1382958475", "10480139391", "82864788832",
      "682074818390", "5832698911490", "51723290618772", "474853429890994"
     },
     0x1b63f3109868403full},
    {"A108307", {Family::PartitionEnhanced, 3}, 1,
     {
      "1", "2", "5", "15", "51", "191", "772", "3320", "15032", "71084", "348889",
      "1768483", "9220655", "49286863", "269346822", "1501400222", "8519796094",
      "49133373040", "287544553912", "1705548000296", "10241669069576"
     },
     0xe4151526a7ac01abull},
    {"A192855", {Family::PartitionEnhanced, 4}, 1,
     {
      "1", "2", "5", "15", "52", "203", "876", "4120", "20883", "113034", "648410",
      "3917021", "24785452", "163525976", "1120523114", "7947399981", "58172358642",
      "438300848329", "3391585460591", "26898763482122", "218263920521938"
     },
     0xfae8f62515eda176ull},
    {"A192865", {Family::PartitionEnhanced, 5}, 1,
     {
      "1", "2", "5", "15", "52", "203", "877", "4140", "21146", "115945", "678012",
      "4205209", "27531954", "189486817", "1365888674", "10278272450", "80503198320",
      "654544093035", "5511256984436", "47950929125540", "430240226306346"
     },
     0xb11749cb45a85abaull},
    {"A192866", {Family::PartitionEnhanced, 6}, 1,
     {
      "1", "2", "5", "15", "52", "203", "877", "4140", "21147", "115975", "678569",
      "4213555", "27643388", "190878823", "1382610179", "10474709625", "82784673008",
      "680933897225", "5816811952612", "51505026270176", "471875801114626"
     },
     0xf5d3093075b49c8bull},
    {"A192867", {Family::PartitionEnhanced, 7}, 1,
     {
      "1", "2", "5", "15", "52", "203", "877", "4140", "21147", "115975", "678570",
      "4213597", "27644436", "190899266", "1382956734", "10480097431", "82863928963",
      "682058946982", "5832425824171", "51718812364549", "474782378367618"
     },
     0xc986d000dba823e8ull},
    {"A193938", {Family::Permutation, 3}, 1,
     {
      "1", "2", "6", "24", "118", "675", "4333", "30464", "230615", "1856336",
      "15738672", "139509303", "1285276242", "12248071935", "120255584181",
      "1212503440774", "12519867688928", "132079067871313"
     },
     0x80cb32c692fbd23cull},
    {"A193935", {Family::Permutation, 4}, 1,
     {
      "1", "2", "6", "24", "120", "720", "5034", "40087", "356942", "3500551",
      "37343168", "428886219", "5257753614", "68306562647", "934747457369",
      "13404687958473", "200554264435218", "3118638648191005"
     },
     0x63a3520194ad7a56ull},
    {"A193936", {Family::Permutation, 5}, 1,
     {
      "1", "2", "6", "24", "120", "720", "5040", "40320", "362856", "3627385",
      "39864333", "477407104", "6183182389", "86033729930", "1278515941177",
      "20185987771091"
     },
     0x81078cf3b44566cfull},
    {"A193937", {Family::Permutation, 6}, 1,
     {
      "1", "2", "6", "24", "120", "720", "5040", "40320", "362880", "3628800",
      "39916680", "478991641", "6226516930", "87157924751", "1306945300264"
     },
     0x4f6db61b15010e60ull},
  };
  return table;
}

const ReferenceSequence& lookup(const FamilySpec& spec) {
  for (const auto& seq : all_references()) {
    if (seq.family == spec) return seq;
  }
  throw NotFound("no reference sequence for " + to_string(spec.family) + " k=" +
                 std::to_string(spec.k));
}

const ReferenceSequence& baxter_reference() {
  static const ReferenceSequence seq{
      "A001181", {Family::PartitionEnhanced, 3}, 0,
      {"1", "2", "6", "22", "92", "422", "2074", "10754", "58202", "326240", "1882960"},
      0x6158e9e70fdbca05ull};
  return seq;
}

const std::vector<SeriesTerm>& baxter_series_terms() {
  static const std::vector<SeriesTerm> terms{
      {0, 0, 0, 1},
      {1, 1, 0, 1}, {1, 0, 0, 1},
      {2, 1, 1, 1}, {2, 2, 0, 1}, {2, 1, 0, 2}, {2, 0, 0, 2},
      {3, 2, 2, 1}, {3, 2, 1, 2}, {3, 1, 1, 4}, {3, 1, 0, 6}, {3, 2, 0, 3}, {3, 3, 0, 1},
      {3, 0, 0, 5},
      {4, 3, 3, 1}, {4, 2, 2, 7}, {4, 3, 2, 2}, {4, 1, 1, 16}, {4, 2, 1, 11}, {4, 3, 1, 3},
      {4, 1, 0, 20}, {4, 2, 0, 12}, {4, 3, 0, 4}, {4, 4, 0, 1}, {4, 0, 0, 15},
  };
  return terms;
}

}  // namespace nestgen
