#include "doctest.h"
#include "ludics/fixtures.hpp"
#include "ludics/orthogonality.hpp"
#include "support.hpp"

using namespace ludics;
using namespace ludics::testing;

TEST_CASE("orthogonality against anti-designs") {
  Design n = D("{a() => daimon}");
  CHECK(orthogonal(Design::daimon(), MultiDesign::binding("x", n)) == Tri::True);
  CHECK(orthogonal(fixtures::fig1_p(), MultiDesign::of(fixtures::fig1_n())) == Tri::True);
  CHECK(orthogonal(fixtures::fig1_n(), MultiDesign::of(fixtures::fig1_p())) == Tri::True);
  CHECK(orthogonal(D("x0|a<>"), MultiDesign::of(D("{b() => daimon}"))) == Tri::False);
  CHECK_THROWS_AS(orthogonal(D("y|a<>"), MultiDesign::of(D("{a() => daimon}"))), Error);
  CHECK_THROWS_AS(orthogonal(D("{a() => daimon}"), MultiDesign::of(D("{a() => daimon}"))), Error);
}

TEST_CASE("atomic orthogonality") {
  CHECK(atomic_orthogonal(Design::daimon(), fixtures::fig1_n()) == Tri::True);
  CHECK(atomic_orthogonal(fixtures::fig1_p(), fixtures::fig1_n()) == Tri::True);
  CHECK(atomic_orthogonal(D("x0|c<>"), D("{c() => daimon}")) == Tri::True);
  CHECK(atomic_orthogonal(D("x0|c<>"), D("{b() => daimon}")) == Tri::False);
}

TEST_CASE("atomic orthogonality is symmetric") {
  StandardGen g(11);
  for (int i = 0; i < 200; ++i) {
    Design p = g.positive(3, {"x0"});
    Design n = g.negative(3, {});
    CHECK(atomic_orthogonal(p, n) == orthogonal(n, MultiDesign::of(p)));
  }
}

TEST_CASE("workbench validation") {
  auto ok = BehaviourWorkbench::of_designs("W", {Design::daimon()}, {D("{a() => daimon}")});
  CHECK(validate_workbench(ok).valid);
  auto fig = BehaviourWorkbench::of_designs("F", {fixtures::fig1_p()}, {fixtures::fig1_n()});
  CHECK(validate_workbench(fig).valid);
  auto bad = BehaviourWorkbench::of_designs("B", {D("x0|a<>")}, {D("{b() => daimon}")});
  auto r = validate_workbench(bad);
  CHECK_FALSE(r.valid);
  REQUIRE(r.witness);
  CHECK(r.witness->first == 0);
  CHECK(r.witness->second == 0);
  CHECK_THROWS_AS(check_workbench(bad), Error);
  auto nonstandard = BehaviourWorkbench::of_designs("S", {D("{a() => daimon}|a<>")}, {D("{a() => daimon}")});
  CHECK_FALSE(validate_workbench(nonstandard).valid);
  CHECK(fig.dual().polarity == Polarity::Negative);
  CHECK(fig.dual().generator_designs() == fig.tester_designs());
}

TEST_CASE("incarnation") {
  Design big = D("{a() => daimon, b(y) => daimon}");
  Design small = D("{a() => daimon}");
  auto single = BehaviourWorkbench::of_designs("S", {big}, {Design::daimon()});
  CHECK(alpha_eq(*incarnation(big, single), big));
  CHECK(is_material(big, single));
  auto two = BehaviourWorkbench::of_designs("T", {big, small}, {Design::daimon()});
  CHECK(alpha_eq(*incarnation(big, two), small));
  CHECK_FALSE(is_material(big, two));
  CHECK(is_material(small, two));
  auto mats = material_generators(two);
  REQUIRE(mats.size() == 1);
  CHECK(alpha_eq(mats[0], small));
}

TEST_CASE("visitable paths of workbenches") {
  auto d = BehaviourWorkbench::of_designs("D", {Design::daimon()}, {D("{a() => daimon}")});
  CHECK(workbench_visitable_paths(d).paths == PathSet{Sequence{LocatedAction::daimon()}});
  auto fig = BehaviourWorkbench::of_designs("F", {fixtures::fig1_p()}, {fixtures::fig1_n()});
  CHECK(workbench_visitable_paths(fig).paths == PathSet{canonical(fixtures::path_fig1())});
  auto empty = BehaviourWorkbench::of_designs("E", {fixtures::fig1_p()}, {});
  CHECK(workbench_visitable_paths(empty).paths.empty());
  // a tester stopping at the y1 side and one visiting both sides
  Design left = D("{a(y1,y2) => y1|b<{c() => daimon}>}");
  auto split = BehaviourWorkbench::of_designs("F2", {fixtures::fig1_p()}, {fixtures::fig1_n(), left});
  auto v = workbench_visitable_paths(split).paths;
  REQUIRE(v.size() == 2);
  CHECK(v.begin()->front() == std::next(v.begin())->front());
  for (const Sequence& p : v) CHECK(is_path_of(p, fixtures::fig1_p()));
}

TEST_CASE("enumeration of designs") {
  Signature s;
  s.add("a", 0);
  s.add("b", 1);
  auto neg = enumerate_designs(Polarity::Negative, s, {}, 2);
  auto pos = enumerate_designs(Polarity::Positive, s, {"x0"}, 2);
  CHECK_FALSE(neg.empty());
  CHECK_FALSE(pos.empty());
  std::set<std::string> fps;
  for (const Design& d : pos) {
    CHECK(d.positive());
    CHECK_FALSE(d.is_omega());
    CHECK(is_standard(d));
    fps.insert(fingerprint(d));
  }
  CHECK(fps.size() == pos.size());
}

TEST_CASE("orthogonal filter") {
  std::vector<MultiDesign> cands{MultiDesign::of(D("x0|a<>")), MultiDesign::of(Design::daimon()),
                                 MultiDesign::of(D("x0|b<>"))};
  std::vector<MultiDesign> against{MultiDesign::of(D("{a() => daimon}"))};
  auto r = orthogonal_filter(cands, against);
  CHECK(r.size() == 2);
}
