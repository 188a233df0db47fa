#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "psisum/canonical.hpp"
#include "psisum/catalog.hpp"
#include "psisum/enumerate.hpp"
#include "psisum/families.hpp"
#include "psisum/psi_formulas.hpp"

using namespace psisum;

namespace {

// Number of groups of each order up to isomorphism, from the standard tables.
const std::map<std::uint64_t, std::size_t> kKnownCounts = {{1, 1}, {2, 1}, {3, 1},  {4, 2},  {5, 1},  {6, 2},
                                                          {7, 1}, {8, 5}, {9, 2},  {10, 2}, {11, 1}, {12, 5}};

// Brute-force isomorphism test over all bijections fixing the identity.
bool naive_isomorphic(const CayleyTable& a, const CayleyTable& b) {
  const std::size_t n = a.order();
  if (n != b.order()) return false;
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = perm[a.at(i, j)] == b.at(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("psisum_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Canonical, DistinguishesAndIdentifies) {
  EXPECT_NE(canonical_form(build_group(Cyclic{4})), canonical_form(build_group(Abelian{{2, 2}})));
  EXPECT_EQ(canonical_form(build_group(SemidirectCyclic{3, 2, 2})), canonical_form(build_group(Dihedral{6})));
  EXPECT_TRUE(is_canonical(canonical_form(build_group(parse_group_spec("Q8"))).table));
}

TEST(Enumerate, ClassCountsMatchKnownTable) {
  for (const auto& [n, count] : kKnownCounts) EXPECT_EQ(all_groups(n).size(), count) << n;
}

TEST(Enumerate, OutputsAreValidCanonicalAndSorted) {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    const auto tables = all_groups(n);
    std::uint64_t prev = std::numeric_limits<std::uint64_t>::max();
    for (const auto& t : tables) {
      const Group g = to_group(t);  // full axiom check
      EXPECT_TRUE(is_canonical(t));
      EXPECT_LE(psi(g), prev);
      prev = psi(g);
    }
    EXPECT_TRUE(is_cyclic(to_group(tables.front())));
    EXPECT_EQ(psi(to_group(tables.front())), psi_cyclic(n));
  }
}

TEST(Enumerate, ClassesArePairwiseNonIsomorphicByBruteForce) {
  for (std::uint64_t n = 4; n <= 8; ++n) {
    const auto tables = all_groups(n);
    for (std::size_t i = 0; i < tables.size(); ++i)
      for (std::size_t j = i + 1; j < tables.size(); ++j) EXPECT_FALSE(naive_isomorphic(tables[i], tables[j])) << n;
  }
}

TEST(Enumerate, CanonicalFormIsExactIsomorphismTest) {
  const auto tables = all_groups(8);
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t j = 0; j < tables.size(); ++j)
      EXPECT_EQ(canonical_form(tables[i]) == canonical_form(tables[j]), naive_isomorphic(tables[i], tables[j]));
}

TEST(Enumerate, EveryFamilyGroupIsInTheCatalog) {
  Catalog catalog;
  for (std::uint64_t n = 1; n <= 12; ++n) {
    const auto& entries = catalog.groups(n);
    for (const auto& spec : family_specs(n)) {
      const Group g = build_group(spec);
      const std::size_t idx = catalog.find_class(g);
      EXPECT_EQ(entries[idx].psi, psi(g)) << to_string(spec);
    }
  }
}

TEST(Enumerate, DeterministicAcrossThreadCounts) {
  EnumerationOptions one;
  one.threads = 1;
  EnumerationOptions many;
  many.threads = 4;
  for (std::uint64_t n : {8u, 12u}) EXPECT_EQ(all_groups(n, one), all_groups(n, many));
}

TEST(Enumerate, BoundsAreEnforced) {
  EXPECT_THROW(all_groups(13), BoundExceeded);
  EXPECT_THROW(all_groups(0), BoundExceeded);
  EnumerationOptions past_cap;
  past_cap.bound = 17;
  EXPECT_THROW(all_groups(4, past_cap), BoundExceeded);

  EnumerationOptions slow;
  slow.bound = 13;
  std::vector<std::string> warnings;
  slow.warn = [&](const std::string& msg) { warnings.push_back(msg); };
  EXPECT_EQ(all_groups(13, slow).size(), 1u);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(Spectrum, KnownOrders) {
  auto values = [](std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& s : psi_spectrum(n)) out.push_back(s.psi);
    return out;
  };
  EXPECT_EQ(values(8), (std::vector<std::uint64_t>{43, 27, 23, 19, 15}));
  EXPECT_EQ(values(12), (std::vector<std::uint64_t>{77, 49, 45, 33, 31}));
  for (std::uint64_t n = 2; n <= 12; ++n) {
    const auto s = psi_spectrum(n);
    EXPECT_EQ(s.front().psi, psi_cyclic(n));
    EXPECT_EQ(s.front().count, 1u);
  }
}

TEST(Catalog, NamesFamilyClasses) {
  Catalog catalog;
  const auto& e = catalog.groups(12);
  EXPECT_EQ(e[0].name, "C12");
  EXPECT_EQ(e[1].name, "A[2,6]");
  EXPECT_EQ(e[3].name, "D12");
  EXPECT_EQ(e[4].name, "#12.5");
  EXPECT_FALSE(e[4].spec.has_value());
}

TEST(Catalog, CacheRoundTrip) {
  const auto dir = fresh_dir("cache_roundtrip");
  std::vector<CayleyTable> first;
  {
    Catalog c({}, dir);
    for (const auto& e : c.groups(8)) first.push_back(e.table);
  }
  const auto file = dir / "catalog" / "n=8.json";
  ASSERT_TRUE(std::filesystem::exists(file));
  const auto stamp = std::filesystem::last_write_time(file);
  Catalog warm({}, dir);
  std::vector<CayleyTable> second;
  for (const auto& e : warm.groups(8)) second.push_back(e.table);
  EXPECT_EQ(first, second);
  EXPECT_EQ(std::filesystem::last_write_time(file), stamp);
  EXPECT_EQ(warm.groups(8)[1].name, "Q8");
}

TEST(Catalog, StaleOrCorruptCacheIsRebuilt) {
  const auto dir = fresh_dir("cache_stale");
  { Catalog({}, dir).groups(6); }
  const auto file = dir / "catalog" / "n=6.json";

  nlohmann::json j = nlohmann::json::parse(std::ifstream(file));
  j["generator_version"] = "older";
  std::ofstream(file) << j.dump();
  EXPECT_EQ(Catalog({}, dir).groups(6).size(), 2u);
  EXPECT_EQ(nlohmann::json::parse(std::ifstream(file))["generator_version"], kGeneratorVersion);

  j = nlohmann::json::parse(std::ifstream(file));
  j["classes"][1]["table"][1][1] = 2;  // no longer a group
  std::ofstream(file) << j.dump();
  Catalog again({}, dir);
  const auto& rebuilt = again.groups(6);
  EXPECT_EQ(rebuilt.size(), 2u);
  EXPECT_EQ(rebuilt[1].psi, 13u);

  std::ofstream(file) << "not json";
  EXPECT_EQ(Catalog({}, dir).groups(6).size(), 2u);
}

TEST(Catalog, UnwritableCacheRaises) {
  const auto dir = fresh_dir("cache_unwritable");
  std::ofstream(dir / "catalog") << "a file where a directory belongs";
  Catalog c({}, dir);
  EXPECT_THROW(c.groups(4), CacheError);
}

TEST(Catalog, JsonShape) {
  Catalog c;
  const auto j = catalog_to_json(4, c.groups(4));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["n"], 4);
  ASSERT_EQ(j["classes"].size(), 2u);
  EXPECT_EQ(j["classes"][0]["name"], "C4");
  EXPECT_EQ(j["classes"][1]["name"], "A[2,2]");
}
