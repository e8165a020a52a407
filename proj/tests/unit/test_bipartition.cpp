#include "doctest.h"

#include <set>
#include <string>

#include "gravent/bipartition.hpp"
#include "gravent/error.hpp"

using namespace gravent;

TEST_SUITE("bipartition") {

TEST_CASE("parse and canonical form") {
  const Bipartition b = Bipartition::parse("346|125", 6);
  CHECK(b.to_string() == "125|346");
  CHECK(b.left() == 0b010011);
  CHECK(b.k() == 3);
  CHECK(b == Bipartition::parse("125|346", 6));
  CHECK(Bipartition::parse("2|13", 3).to_string() == "13|2");
  CHECK(Bipartition::parse("2|13", 3).smaller_side() == 0b010);
}

TEST_CASE("parse errors") {
  try {
    Bipartition::parse("17|2345", 7);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidBipartition);
    CHECK(std::string(e.what()).find("mass 6 unassigned") != std::string::npos);
  }
  CHECK_THROWS_AS(Bipartition::parse("12|23", 3), Error);
  CHECK_THROWS_AS(Bipartition::parse("14|23", 3), Error);
  CHECK_THROWS_AS(Bipartition::parse("123", 3), Error);
  CHECK_THROWS_AS(Bipartition::parse("123|", 3), Error);
  CHECK_THROWS_AS(Bipartition::parse("1|2|3", 3), Error);
  CHECK_THROWS_AS(Bipartition(3, 0), Error);
  CHECK_THROWS_AS(Bipartition(3, 0b111), Error);
  CHECK_THROWS_AS(Bipartition(3, 0b1001), Error);
}

TEST_CASE("multi-digit labels") {
  const Bipartition b = Bipartition::parse("1,10|2,3,4,5,6,7,8,9,11", 11);
  CHECK(b.left_members() == std::vector<std::size_t>{0, 9});
  CHECK(b.to_string() == "1,10|2,3,4,5,6,7,8,9,11");
  CHECK(Bipartition::parse(b.to_string(), 11) == b);
}

TEST_CASE("enumeration") {
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto all = all_bipartitions(n);
    CHECK(all.size() == (std::size_t{1} << (n - 1)) - 1);
    std::set<std::string> labels;
    for (const auto& b : all) labels.insert(b.to_string());
    CHECK(labels.size() == all.size());
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].to_string() < all[i].to_string());
    CHECK(one_vs_rest_bipartitions(n).size() == (n == 2 ? 1u : n));
  }
  CHECK(k_subsets(4, 2) == std::vector<MassMask>{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100});
  CHECK(k_subsets(5, 0) == std::vector<MassMask>{0});
}

}
