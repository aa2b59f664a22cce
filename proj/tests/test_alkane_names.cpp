#include <doctest.h>

#include "oracles.hpp"
#include "spti/alkane_names.hpp"
#include "spti/canonical.hpp"

using spti::AlkaneAst;
using spti::Branch;
using spti::NameError;

namespace {

spti::CanonicalKey key_of(std::string_view name) { return spti::canonical_key(spti::to_graph(spti::parse_name(name))); }

}  // namespace

TEST_CASE("parent chains") {
  CHECK(spti::parse_name("Octane") == AlkaneAst{8, {}});
  CHECK(spti::parse_name("methane").carbon_count() == 1);
  CHECK(spti::parse_name("icosane").parent_length == 20);
  CHECK(spti::parse_name("EICOSANE").parent_length == 20);
  CHECK(spti::to_graph(spti::parse_name("hexane")) == spti::path_graph(6));
}

TEST_CASE("substituents and locant separators") {
  const auto a = spti::parse_name("2,2,4-Trimethylpentane");
  CHECK(a.parent_length == 5);
  CHECK(a.substituents ==
        std::vector<spti::Substituent>{{2, Branch::Methyl}, {2, Branch::Methyl}, {4, Branch::Methyl}});
  CHECK(spti::parse_name("2.2.4-trimethylpentane") == a);

  const auto b = spti::parse_name("2-Methyl-3.3-diethylpentane");
  CHECK(b.carbon_count() == 10);
  CHECK(b.substituents.size() == 3);

  CHECK(spti::parse_name("4-n-Propylheptane").substituents.front().branch == Branch::Propyl);
  CHECK(spti::parse_name("4-Isopropylheptane").substituents.front().branch == Branch::Isopropyl);
  CHECK(spti::parse_name("4-iso-propylheptane").substituents.front().branch == Branch::Isopropyl);
  CHECK(spti::parse_name("5-sec-butylnonane").substituents.front().branch == Branch::SecButyl);
  CHECK(spti::parse_name("5-tert-Butylnonane").substituents.front().branch == Branch::TertButyl);
  CHECK(spti::parse_name("5-isobutylnonane").carbon_count() == 13);
}

TEST_CASE("trivial names") {
  CHECK(spti::parse_name("Tetramethylbutane") == spti::parse_name("2,2,3,3-tetramethylbutane"));
  CHECK(key_of("neopentane") == key_of("2,2-dimethylpropane"));
  CHECK(key_of("isobutane") == key_of("2-methylpropane"));
}

TEST_CASE("different names for the same skeleton share a key") {
  CHECK(key_of("3-methylheptane") == key_of("5-methylheptane"));
  CHECK(key_of("4-Ethyl-2-methylhexane") == key_of("2-Methyl-4-ethylhexane"));
  CHECK(key_of("2-ethylpentane") == key_of("3-methylhexane"));
  CHECK(key_of("4-isopropylheptane") == key_of("2-methyl-3-propylhexane"));
  CHECK(key_of("5-tert-butylnonane") == key_of("2,2-dimethyl-3-butylheptane"));
}

TEST_CASE("branch skeletons") {
  // sec-butyl attaches through its second carbon.
  const auto g = spti::to_graph(spti::parse_name("3-sec-butylhexane"));
  CHECK(g.order() == 10);
  CHECK(key_of("3-sec-butylhexane") == key_of("3-methyl-4-ethylheptane"));
  CHECK(key_of("3-isobutylhexane") == key_of("2-methyl-4-ethylheptane"));
  CHECK(spti::branch_size(Branch::TertButyl) == 4);
  CHECK(spti::branch_name(Branch::SecButyl) == "sec-butyl");
}

TEST_CASE("grammar errors") {
  for (const char* bad : {"", "2-", "methyl", "2-methyl", "2-methylfoo", "2,3-methylpentane", "2-dimethylpentane",
                          "0-methylpentane", "9-methylpentane", "2-methyl--pentane", "2-xylpentane",
                          "2,-methylpentane", "pentane-2", "2-methylpentane extra", "21-methylhenicosane"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(spti::parse_name(bad), NameError);
  }
}

TEST_CASE("valence errors") {
  CHECK_THROWS_AS(spti::parse_name("2,2,2-trimethylpropane"), NameError);
  CHECK_THROWS_AS(spti::parse_name("1,1,1,1,1-pentamethylmethane"), NameError);
  CHECK_NOTHROW(spti::parse_name("2,2-dimethylpropane"));
}

TEST_CASE("describe") {
  CHECK(spti::describe(spti::parse_name("4-Isopropylheptane")) == "parent=7 carbons=10 4-isopropyl");
}
