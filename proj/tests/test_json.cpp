#include <doctest.h>

#include "qsg/json_io.hpp"
#include "qsg/sampling.hpp"
#include "qsg/verify.hpp"

using namespace qsg;

namespace {

std::vector<Semigroup> instances() {
  return {Semigroup::lattice(1), Semigroup::lattice(2),
          Semigroup::numerical({Int(2), Int(3)}), Semigroup::half_line()};
}

}  // namespace

TEST_CASE("instance configs round-trip") {
  for (const Semigroup& s : instances()) {
    Json j = instance_to_json(s);
    CHECK(instance_from_json(j) == s);
  }
  CHECK(instance_from_json(Json::parse(R"({"kind":"lattice","rank":2})")) ==
        Semigroup::lattice(2));
  CHECK(instance_from_json(
            Json::parse(R"({"kind":"numerical","generators":[2,3]})")) ==
        Semigroup::numerical({Int(2), Int(3)}));
  CHECK(instance_from_json(Json::parse(R"({"kind":"half_line"})")) ==
        Semigroup::half_line());
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"kind":"torus"})")),
                  Error);
}

TEST_CASE("values round-trip through JSON") {
  for (const Semigroup& s : instances()) {
    Sampler smp(3);
    for (int i = 0; i < 150; ++i) {
      GroupElem g = smp.group_elem(s, 9);
      CHECK(elem_from_json(s, elem_to_json(s, g)) == g);

      GIdeal x = smp.ideal(s, 4, 3);
      CHECK(ideal_from_json(s, ideal_to_json(s, x)) == x);

      Word w = smp.word(s, 5, 3);
      CHECK(word_from_json(s, word_to_json(s, w)) == w);

      Element e = smp.element(s, 4, 4, 3);
      CHECK(element_from_json(s, element_to_json(s, e)) == e);

      TensorElement t = delta(s, e);
      CHECK(tensor_from_json(s, tensor_to_json(s, t)) == t);

      GroupAlgebraElement u = quotient_to_group_algebra(s, e);
      CHECK(group_algebra_from_json(s, group_algebra_to_json(s, u)) == u);
    }
  }
}

TEST_CASE("ideal JSON matches the documented schema") {
  Semigroup z = Semigroup::lattice(1);
  Json j = ideal_to_json(z, GIdeal::lattice_based({Int(2)}));
  CHECK(j["kind"] == "lattice");
  CHECK(j["base"][0] == 2);

  Semigroup n = Semigroup::numerical({Int(2), Int(3)});
  GIdeal x = act(n, parse_word(n, "2^-1 3"), full_ideal(n));
  Json nj = ideal_to_json(n, x);
  CHECK(nj["kind"] == "numerical");
  CHECK(nj["offset"] == 3);
  CHECK(nj["mask"] == "11");

  Json ej = ideal_to_json(n, empty_ideal(n));
  CHECK(ej["kind"] == "empty");

  Semigroup h = Semigroup::half_line();
  Json hj = ideal_to_json(h, GIdeal::half_line_from(Rat(7, 2)));
  CHECK(hj["kind"] == "half_line");
  CHECK(hj["t"]["num"] == 7);
  CHECK(hj["t"]["den"] == 2);
}

TEST_CASE("malformed input is rejected") {
  Semigroup z = Semigroup::lattice(1);
  CHECK_THROWS_AS(rat_from_json(Json::parse(R"({"num":1,"den":0})")), Error);
  CHECK_THROWS_AS(ideal_from_json(z, Json::parse(R"({"base":[2]})")), Error);
  CHECK_THROWS_AS(element_from_json(z, Json::parse(R"({"x":1})")), Error);
  // mask not closed under adding generators: 0 in the set forces 3 in it
  Semigroup n35 = Semigroup::numerical({Int(3), Int(5)});
  CHECK_THROWS_AS(
      ideal_from_json(n35, Json::parse(R"({"kind":"numerical","offset":0,
                                           "mask":"10000000"})")),
      Error);
}

TEST_CASE("reports serialize with summary counts and are deterministic") {
  Semigroup z = Semigroup::lattice(1);
  SuiteConfig cfg;
  cfg.seed = 9;
  cfg.samples = 20;
  Report r1 = run_suite(z, "eq7", cfg);
  Report r2 = run_suite(z, "eq7", cfg);
  CHECK(report_to_json(r1).dump(2) == report_to_json(r2).dump(2));

  Json j = report_to_json(r1);
  CHECK(j["suite"] == "eq7");
  CHECK(j["summary"]["total"] == r1.cases.size());
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["seed"] == "9");
  CHECK(j["cases"].is_array());
  CHECK(std::string(j["cases"][0]["status"]) == "pass");
}
