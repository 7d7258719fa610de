#include "doctest.h"

#include "gaunt/cells.hpp"
#include "gaunt/constructions.hpp"
#include "gaunt/io.hpp"

using namespace gaunt;

TEST_CASE("cell tables round trip") {
  const Complex x = oriental(3);
  for (int d = 0; d <= 3; ++d)
    for (std::size_t i = 0; i < x.count(d); ++i) {
      auto t = atom_table(x, {d, i});
      CHECK(table_from_json(x, to_json(x, t)) == t);
    }
  auto j = to_json(x, atom_table(x, x.at("012")));
  CHECK(j[1][0] == "02");
  CHECK(j[1][1] == "01+12");
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS(complex_from_json(Json::parse(R"({"name": "x"})")));
  CHECK_THROWS(complex_from_json(Json::parse(R"({"name": "x", "generators": [["a"], ["f"]], "differential": {"f": [[1, "zz"]]}})")));
  CHECK_THROWS(poset_from_json(Json::parse(R"({"elements": ["a"], "leq": [[0, 3]]})")));
}

TEST_CASE("canonical dump") {
  const std::string a = dump(to_json(cube(2)));
  CHECK(a == dump(to_json(gray_tensor(oriental(1), oriental(1)))));
  CHECK(a.back() == '\n');
  CHECK(a.find("\"differential\"") < a.find("\"generators\""));
}
