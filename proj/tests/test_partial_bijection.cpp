#include <doctest.h>

#include "grograde/partial_bijection.hpp"
#include "grograde/util.hpp"

using namespace grograde;

static FinSet mkset(const char* id, std::vector<std::string> e) {
  return FinSet{id, std::move(e)};
}

TEST_CASE("composition restricts through the middle set") {
  FinSet A = mkset("A", {"a", "b"});
  FinSet B = mkset("B", {"1", "2", "3"});
  FinSet C = mkset("C", {"x", "y", "z"});
  // f : B -> A on {1,2}, g : C -> B with image {2,3}
  PartialBijection f = make_pb(B, A, {{"1", "a"}, {"2", "b"}});
  PartialBijection g = make_pb(C, B, {{"x", "2"}, {"y", "3"}});
  PartialBijection fg = compose_pb(f, g);
  CHECK(fg.src.id == "C");
  CHECK(fg.dst.id == "A");
  CHECK(fg.map == std::vector<std::pair<std::string, std::string>>{{"x", "b"}});
  CHECK(fg.dom_elems() == std::vector<std::string>{"x"});
  CHECK(fg.img_elems() == std::vector<std::string>{"b"});
}

TEST_CASE("mismatched middle set gives the zero morphism") {
  FinSet A = mkset("A", {"a"});
  FinSet B = mkset("B", {"1"});
  FinSet B2 = mkset("B2", {"1"});
  FinSet C = mkset("C", {"x"});
  PartialBijection f = make_pb(B, A, {{"1", "a"}});
  PartialBijection g = make_pb(C, B2, {{"x", "1"}});
  PartialBijection fg = compose_pb(f, g);
  CHECK(is_zero_pb(fg));
  CHECK(fg.src.id == "C");
  CHECK(fg.dst.id == "A");
}

TEST_CASE("star reverses a partial bijection") {
  FinSet A = mkset("A", {"a", "b", "c"});
  FinSet B = mkset("B", {"1", "2", "3"});
  PartialBijection f = make_pb(B, A, {{"1", "c"}, {"3", "a"}});
  PartialBijection fs = star_pb(f);
  CHECK(fs.src.id == "A");
  CHECK(fs.dst.id == "B");
  CHECK(fs.map == std::vector<std::pair<std::string, std::string>>{
                      {"a", "3"}, {"c", "1"}});
  CHECK(pb_eq(star_pb(fs), f));
  // f f* f = f and f* f f* = f*
  CHECK(pb_eq(compose_pb(compose_pb(f, fs), f), f));
  CHECK(pb_eq(compose_pb(compose_pb(fs, f), fs), fs));
}

TEST_CASE("validation rejects non injective maps") {
  FinSet A = mkset("A", {"a"});
  FinSet B = mkset("B", {"1", "2"});
  CHECK_THROWS_AS(make_pb(B, A, {{"1", "a"}, {"2", "a"}}), Error);
  CHECK_THROWS_AS(make_pb(B, A, {{"9", "a"}}), Error);
}

TEST_CASE("enumeration counts") {
  FinSet X = mkset("X", {"1", "2", "3"});
  auto all = enumerate_pbs(X, X);
  CHECK(all.size() == 34);  // sum_k C(3,k)^2 k!
  FinSet Y = mkset("Y", {"u", "v"});
  CHECK(enumerate_pbs(Y, Y).size() == 7);  // 1 + 4 + 2
  CHECK(enumerate_pbs(X, Y).size() == 13); // 1 + 6 + 6
}

TEST_CASE("inverse category laws on an exhaustive small family") {
  FinSet X = mkset("X", {"1", "2"});
  auto fams = enumerate_pbs(X, X);
  Rng rng(7);
  InverseCategoryOptions opt;
  opt.exhaustive_triples = true;
  opt.uniqueness = true;
  InverseCategoryReport r = check_inverse_category(fams, opt, rng);
  CHECK(r.ok);
  CHECK(r.counterexample.empty());
  CHECK(r.triples_checked == 7 * 7 * 7);
}

TEST_CASE("inverse category random sampling across distinct sets") {
  FinSet A = mkset("A", {"a", "b", "c"});
  FinSet B = mkset("B", {"1", "2"});
  std::vector<PartialBijection> fams;
  for (auto& f : enumerate_pbs(A, B)) fams.push_back(f);
  for (auto& f : enumerate_pbs(B, A)) fams.push_back(f);
  for (auto& f : enumerate_pbs(A, A)) fams.push_back(f);
  Rng rng(11);
  InverseCategoryOptions opt;
  opt.random_triples = 2000;
  InverseCategoryReport r = check_inverse_category(fams, opt, rng);
  CHECK(r.ok);
  CHECK(r.triples_checked == 2000);
}
