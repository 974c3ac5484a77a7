#include <doctest.h>

#include "fbal/io.hpp"

using namespace fbal;
using nlohmann::json;

namespace {

json a2_spec() {
  return json::parse(R"({
    "schema": "fbal.quiver/1",
    "vertices": ["1", "2"],
    "arrows": [{"name": "a", "source": "1", "target": "2"}],
    "length_bound": 2,
    "modules": [
      {"name": "X", "dims": [1, 1], "arrows": {"a": [[1]]}},
      {"name": "T", "dims": {"2": 1}}
    ],
    "indecomposables": ["X", "T"]
  })");
}

std::string error_field(const json& j) {
  try {
    instance_from_json(j);
  } catch (const SpecError& e) {
    return e.field();
  }
  return "";
}

}  // namespace

TEST_CASE("quiver specs round trip") {
  CorpusInstance t3 = truncated_polynomial(3);
  json j = to_json(t3.quiver.spec);
  CHECK(j["schema"] == kQuiverSchema);
  QuiverSpec back = quiver_spec_from_json(j);
  BoundQuiver q = build_bound_quiver_category(back);
  CHECK(q.category->hom_dim(0, 0) == 3);
  CHECK(to_json(back) == j);
}

TEST_CASE("representations round trip through the arrow form") {
  for (auto inst : {truncated_polynomial(3), linear_quiver(3)})
    for (const auto& m : inst.indecomposables) {
      json j = rep_to_json(inst.quiver, m.rep);
      Rep back = rep_from_json(inst.quiver, j);
      CHECK(back == m.rep);
    }
  CorpusInstance a3 = linear_quiver(3);
  Rep r = random_module(a3, 4, 3);
  CHECK(rep_from_json(a3.quiver, json::parse(rep_to_json(a3.quiver, r).dump())) == r);
}

TEST_CASE("instances from JSON") {
  CorpusInstance c = instance_from_json(a2_spec(), "a2");
  CHECK(c.indecomposables.size() == 2);
  CHECK(c.module("X").dims() == std::vector<std::size_t>{1, 1});
  CHECK(c.module("T").dims() == std::vector<std::size_t>{0, 1});
  CHECK(c.module("regular").dims() == std::vector<std::size_t>{2, 1});
  CHECK(validate_rep(c.module("X")).empty());
  CHECK(enumerate_basic_subcategories(c).size() == 3);
}

TEST_CASE("malformed specs name the offending field") {
  json j = a2_spec();
  j.erase("vertices");
  CHECK(error_field(j) == "/vertices");

  j = a2_spec();
  j["arrows"][0]["target"] = "3";
  CHECK(error_field(j) == "/arrows/0/target");

  j = a2_spec();
  j["modules"][0]["arrows"]["a"][0][0] = 500;
  CHECK(error_field(j) == "/modules/0/arrows/a/0/0");

  j = a2_spec();
  j["modules"][0]["arrows"]["a"] = json::array({json::array({1, 0})});
  CHECK(error_field(j) == "/modules/0/arrows/a/0");

  j = a2_spec();
  j["modules"][1]["arrows"] = {{"b", json::array()}};
  CHECK(error_field(j) == "/modules/1/arrows/b");

  j = a2_spec();
  j["schema"] = "fbal.quiver/9";
  CHECK(error_field(j) == "/schema");

  j = a2_spec();
  j["indecomposables"][1] = "nope";
  CHECK(error_field(j) == "/indecomposables/1");

  j = a2_spec();
  j["modules"][0]["dims"] = json::array({1});
  CHECK(error_field(j) == "/modules/0/dims");

  j = a2_spec();
  j["modules"][1]["name"] = "X";
  CHECK(error_field(j) == "/modules/1/name");
}

TEST_CASE("relations violated by a module are reported at the module") {
  json j = json::parse(R"({
    "vertices": ["v"],
    "arrows": [{"name": "x", "source": "v", "target": "v"}],
    "relations": [[{"coeff": 1, "path": ["x", "x"]}]],
    "length_bound": 2,
    "modules": [{"name": "bad", "dims": [2], "arrows": {"x": [[1, 0], [0, 1]]}}]
  })");
  CHECK(error_field(j) == "/modules/0");
  j["modules"][0]["arrows"]["x"] = json::array({json::array({0, 0}), json::array({1, 0})});
  CorpusInstance c = instance_from_json(j);
  CHECK(c.module("bad").dims() == std::vector<std::size_t>{2});
}

TEST_CASE("verdicts serialize with their certificates") {
  CorpusInstance t2 = truncated_polynomial(2);
  ModuleCategory m = add_category({t2.module("M2")});
  json d = to_json(cogen_definitional(t2.module("M1"), m, 1));
  CHECK(d["member"] == true);
  CHECK(d["certificate"]["term_dims"].size() == 2);
  CHECK(d["convention"] == "k+1 terms M_0..M_k");
  json c = to_json(cogen_characterized(t2.module("M1"), m, 2));
  CHECK(c["certificate"]["unit_iso"] == true);
  CHECK(c["method"] == "characterized");
}
