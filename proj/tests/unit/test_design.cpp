#include "doctest.h"
#include "ludics/fixtures.hpp"
#include "support.hpp"

using namespace ludics;
using namespace ludics::testing;

TEST_CASE("canonicalize renames bound variables in order") {
  CHECK(to_text(canonicalize(D("{c(x) => x|a<>}"))) == "{c(v0) => v0|a<>}");
  CHECK(canonicalize(Design::daimon()) == Design::daimon());
  CHECK(to_text(canonicalize(fixtures::fig1_n())) ==
        "{a(v0,v1) => v0|b<{c() => v1|b<{a(v2,v3) => daimon, c() => daimon}>}>}");
  Design t = D("{a(x, y) => x|b<{c() => y|c<>}>}");
  CHECK(canonicalize(canonicalize(t)) == canonicalize(t));
}

TEST_CASE("canonical names skip free variables") {
  Design t = D("v0|f<{g(x) => x|h<>}>");
  Design c = canonicalize(t);
  CHECK(free_vars(c) == std::set<Var>{"v0"});
  CHECK(alpha_eq(t, c));
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(D("{a(x) => x|c<>}"), D("{a(y) => y|c<>}")));
  CHECK_FALSE(alpha_eq(Design::var("x"), Design::var("y")));
  CHECK_FALSE(alpha_eq(D("{a(x) => daimon}"), D("{b(x) => daimon}")));
  CHECK_FALSE(alpha_eq(D("{a(x, y) => x|c<>}"), D("{a(x, y) => y|c<>}")));
}

TEST_CASE("substitution") {
  Design n = D("{c() => daimon}");
  CHECK(alpha_eq(substitute(Design::var("x"), "x", n), n));
  CHECK(alpha_eq(substitute(D("x|a<y>"), "y", n), Design::app("x", "a", {n})));
  CHECK(substitute(Design::daimon(), "x", n) == Design::daimon());
  CHECK_THROWS_AS(substitute(Design::var("x"), "x", Design::daimon()), Error);
}

TEST_CASE("substitution avoids capture") {
  // y is free in the replacement and bound in t
  Design t = D("{a(y) => x|b<y>}");
  Design r = substitute(t, "x", Design::var("y"));
  CHECK(free_vars(r) == std::set<Var>{"y"});
  const Branch* br = r.branch("a");
  REQUIRE(br);
  CHECK(br->body.head().var_name() == "y");
  CHECK(br->body.args()[0].var_name() != "y");
}

TEST_CASE("substitution is simultaneous") {
  Design t = D("x|c<y, {}>");
  Design r = substitute(t, Bindings{{"x", Design::var("y")}, {"y", Design::var("x")}});
  CHECK(to_text(r) == "y|c<x, {}>");
}

TEST_CASE("free variables") {
  CHECK(free_vars(Design::var("x")) == std::set<Var>{"x"});
  CHECK(free_vars(D("{a(x) => x|c<>}")).empty());
  CHECK(free_vars(fixtures::fig1_p()) == std::set<Var>{"x0"});
}

TEST_CASE("classification") {
  auto cut = classify(D("{a(x) => daimon}|a<{}>"));
  CHECK_FALSE(cut.cut_free);
  CHECK(cut.cut_witness.has_value());
  auto id = classify(D("x0|a<y>"));
  CHECK_FALSE(id.identity_free);
  CHECK_FALSE(id.standard);
  auto fig = classify(fixtures::fig1_p());
  CHECK(fig.standard);
  CHECK(fig.atomic);
  CHECK(fig.cut_free);
  CHECK(fig.identity_free);
  CHECK(fig.linear);
  CHECK(fig.total);
  CHECK_FALSE(classify(Design::omega()).total);
  auto nonlinear = classify(D("x|c<{a() => y|a<>}, {a() => y|a<>}>"));
  CHECK_FALSE(nonlinear.linear);
  CHECK(is_standard(fixtures::fig1_n()));
  CHECK(is_atomic(fixtures::fig1_n()));
  CHECK_FALSE(is_atomic(D("y|a<>")));
}

TEST_CASE("validate against a signature") {
  Signature s = fixtures::fig1_signature();
  CHECK_NOTHROW(validate(fixtures::fig1_p(), s));
  CHECK_THROWS_AS(validate(D("x0|a<{}>"), s), Error);
  CHECK_THROWS_AS(validate(D("x0|z<>"), s), Error);
}

TEST_CASE("orderings") {
  Design p = D("x|a<{b(y) => daimon}>");
  CHECK(stable_leq(Design::omega(), p));
  CHECK(stable_leq(Design::omega(), Design::daimon()));
  CHECK(obs_leq(p, Design::daimon()));
  CHECK_FALSE(stable_leq(p, Design::daimon()));
  CHECK(stable_leq(p, p));
  CHECK(obs_leq(p, p));
  CHECK_FALSE(stable_leq(Design::daimon(), Design::omega()));
  CHECK(stable_leq(D("{a() => omega}"), D("{a() => daimon, b(y) => daimon}")));
  CHECK_FALSE(stable_leq(D("{a() => daimon}"), D("{a() => omega}")));
  CHECK_THROWS_AS(stable_leq(Design::daimon(), D("{}")), Error);
}

TEST_CASE("intersection") {
  CHECK(*intersect(Design::daimon(), Design::daimon()) == Design::daimon());
  Design p = D("x|a<{}>");
  CHECK(intersect(Design::omega(), p)->is_omega());
  CHECK(intersect(p, Design::omega())->is_omega());
  CHECK_FALSE(intersect(D("x|a<{}>"), D("x|b<{}>")).has_value());
  auto r = intersect(D("{a(x) => daimon, b(y) => daimon}"), D("{a(x) => daimon, b(y) => omega}"));
  REQUIRE(r);
  CHECK(alpha_eq(*r, D("{a(x) => daimon}")));
}

TEST_CASE("fresh names avoid the given set") {
  FreshNames f({"v0", "v2"});
  CHECK(f.next() == "v1");
  CHECK(f.next() == "v3");
}

TEST_CASE("signature merge detects conflicts") {
  Signature a, b;
  a.add("p", 1);
  b.add("p", 2);
  CHECK_THROWS_AS(a.merged(b), Error);
  CHECK_THROWS_AS(a.of("q"), Error);
}
