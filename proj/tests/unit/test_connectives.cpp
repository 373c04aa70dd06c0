#include "doctest.h"
#include "ludics/connectives.hpp"
#include "ludics/fixtures.hpp"
#include "support.hpp"

using namespace ludics;
using namespace ludics::testing;

namespace {
Connective make(std::vector<Var> z, std::vector<NegAction> i, std::vector<NegAction> e) {
  return Connective{"C", std::move(z), std::move(i), std::move(e)};
}
}  // namespace

TEST_CASE("validation") {
  CHECK(validate_connective(library::with()).valid);
  CHECK(validate_connective(library::gamma()).valid);
  auto dropped = make({"x1", "x2", "x3"}, {{"a", {"x1", "x2"}}}, {{"c", {"x1"}}});
  auto r = validate_connective(dropped);
  CHECK_FALSE(r.valid);
  CHECK_FALSE(r.violations.empty());
  CHECK_THROWS_AS(check_connective(dropped), Error);
  CHECK_FALSE(validate_connective(make({"x0"}, {{"a", {"x0"}}}, {{"a", {"x0"}}})).valid);
  CHECK_FALSE(validate_connective(make({"x1"}, {{"a", {"x1"}}}, {{"a", {}}})).valid);
  CHECK_FALSE(validate_connective(make({"x1"}, {{"a", {"x1", "x1"}}}, {})).valid);
  auto one_sided = validate_connective(make({"x1"}, {{"a", {"x1"}}}, {}));
  CHECK(one_sided.valid);
  CHECK(one_sided.empty_elim);
  Signature s;
  s.add("pi1", 2);
  CHECK_FALSE(validate_connective(library::with(), &s).valid);
}

TEST_CASE("text and alpha equivalence") {
  CHECK(to_text(library::with()) == "(x1,x2 ; I={pi1(x1), pi2(x2)} ; E={pi1(x1), pi2(x2)})");
  auto renamed = make({"u", "w"}, {{"pi2", {"w"}}, {"pi1", {"u"}}}, {{"pi1", {"u"}}, {"pi2", {"w"}}});
  CHECK(alpha_eq(renamed, library::with()));
  CHECK_FALSE(alpha_eq(library::with(), library::alpha0()));
}

TEST_CASE("harmony") {
  CHECK(check_harmony(library::with()).harmony);
  CHECK(check_harmony(library::shift()).harmony);
  CHECK(check_harmony(library::par()).harmony);
  auto g = check_harmony(library::gamma());
  CHECK_FALSE(g.inversion);
  CHECK_FALSE(g.recovery);
  CHECK_FALSE(g.harmony);
  auto a = check_harmony(library::alpha0());
  CHECK_FALSE(a.inversion);
  CHECK_FALSE(a.recovery);
  REQUIRE(a.overlap.size() == 1);
  CHECK(to_text(a.overlap[0]) == "b(x2)");
  REQUIRE(a.missing_from_intro.size() == 1);
  CHECK(to_text(a.missing_from_intro[0]) == "c(x1)");
  REQUIRE(a.missing_from_elim.size() == 1);
  CHECK(to_text(a.missing_from_elim[0]) == "a(x1)");
  auto d = check_harmony(library::delta());
  CHECK_FALSE(d.harmony);
}

TEST_CASE("harmony respects renaming of the bound variables") {
  auto c = make({"p", "q"}, {{"pi1", {"p"}}, {"pi2", {"q"}}}, {{"pi1", {"p"}}, {"pi2", {"q"}}});
  CHECK(check_harmony(c).harmony);
  // one name at two argument tuples
  auto d = make({"p", "q"}, {{"pi1", {"p"}}, {"pi2", {"q"}}}, {{"pi1", {"q"}}, {"pi2", {"p"}}});
  CHECK_FALSE(validate_connective(d).valid);
}

TEST_CASE("beta condition") {
  Design n = D("{k() => daimon}");
  auto w = beta_condition_check(library::with(), {{"pi1", Design::daimon()}, {"pi2", Design::daimon()}},
                                {"pi1", {"x1"}}, {n});
  CHECK(w.holds);
  REQUIRE(w.result);
  CHECK(*w.result == Design::daimon());
  auto g = beta_condition_check(library::gamma(), {{"a", Design::daimon()}, {"b", Design::daimon()}},
                                {"c", {"x1"}}, {n});
  CHECK_FALSE(g.holds);
  REQUIRE(g.result);
  CHECK(g.result->is_omega());
  Design p = D("x1|k<>");
  Design q = D("x2|k<>");
  auto a = beta_condition_check(library::alpha0(), {{"a", p}, {"b", q}}, {"b", {"x2"}}, {n});
  CHECK(a.holds);
  REQUIRE(a.result);
  CHECK(alpha_eq(*a.result, substitute(q, "x2", n)));
}

TEST_CASE("beta pool") {
  CHECK(beta_pool_check(library::with()).holds);
  CHECK(beta_pool_check(library::shift()).holds);
  auto g = beta_pool_check(library::gamma());
  CHECK_FALSE(g.holds);
  CHECK(g.counterexample.has_value());
  CHECK_FALSE(beta_pool_check(library::alpha0()).holds);
  CHECK(beta_pool_check(library::with()).checked > 0);
}

TEST_CASE("eta expansion") {
  Connective lam{"L", {"x1"}, {{"lam", {"x1"}}}, {{"lam", {"x1"}}}};
  Design n = Design::var("n");
  CHECK(alpha_eq(eta_expand(n, lam), D("{lam(x) => n|lam<x>}")));
  CHECK(alpha_eq(eta_expand(n, library::shift()), D("{down(x) => n|down<x>}")));
  CHECK(alpha_eq(eta_expand(n, library::with()), D("{pi1(x) => n|pi1<x>, pi2(y) => n|pi2<y>}")));
  // bound names never capture free ones
  Design m = D("{pi1(e0) => e0|k<>}");
  Design e = eta_expand(m, library::with());
  CHECK(free_vars(e).empty());
  CHECK(normalize(e).converged());
  CHECK(alpha_eq(eta_expand(n, canonical(library::with())), eta_expand(n, library::with())));
}

TEST_CASE("eta condition") {
  auto w = eta_condition_check(library::with());
  CHECK(w.holds);
  CHECK(w.witness.at("pi1") == "pi1");
  CHECK(w.witness.at("pi2") == "pi2");
  auto a = eta_condition_check(library::alpha0());
  CHECK_FALSE(a.holds);
  CHECK(a.stuck == Name("a"));
  CHECK_FALSE(eta_condition_check(library::gamma()).holds);
}

TEST_CASE("counter sets") {
  Design n1 = D("{k() => daimon}");
  Design n2 = D("{j() => daimon}");
  auto p1 = BehaviourWorkbench::of_designs("P1", {D("x0|k<>")}, {n1});
  auto p2 = BehaviourWorkbench::of_designs("P2", {D("x0|j<>")}, {n2});
  auto ci = counter_set_intro(library::with(), {p1, p2});
  REQUIRE(ci.size() == 2);
  CHECK(alpha_eq(ci[0], Design::app(kAtomicAddress, "pi1", {n1})));
  CHECK(alpha_eq(ci[1], Design::app(kAtomicAddress, "pi2", {n2})));
  auto cs = counter_set_intro(library::shift(), {p1});
  REQUIRE(cs.size() == 1);
  CHECK(alpha_eq(cs[0], Design::app(kAtomicAddress, "down", {n1})));
  auto none = BehaviourWorkbench::of_designs("P0", {D("x0|j<>")}, {});
  CHECK(counter_set_intro(library::with(), {p1, none}).size() == 1);
  CHECK_THROWS_AS(counter_set_intro(library::with(), {p1}), Error);

  Design q = D("x0|k<>");
  auto nb = BehaviourWorkbench::of_designs("N1", {n1}, {q});
  auto ce = counter_set_elim(library::with(), {nb, nb});
  REQUIRE(ce.size() == 2);
  CHECK(alpha_eq(ce[0], D("{pi1(x1) => x1|k<>, pi2(x2) => daimon}")));
  CHECK(alpha_eq(ce[1], D("{pi1(x1) => daimon, pi2(x2) => x2|k<>}")));
  auto sh = counter_set_elim(library::shift(), {nb});
  REQUIRE(sh.size() == 1);
  CHECK(alpha_eq(sh[0], D("{down(x1) => x1|k<>}")));
  Connective intro_only{"I", {"x1"}, {{"a", {"x1"}}}, {}};
  CHECK(counter_set_elim(intro_only, {nb}).empty());
}

TEST_CASE("dual connective") {
  Connective g = dual_connective(library::gamma());
  CHECK(to_text(g) == "(x1,x2,x3 ; I={c(x1), d(x2,x3)} ; E={a(x1,x2), b(x3)})");
  CHECK(alpha_eq(dual_connective(library::with()), library::with()));
  for (const Connective& c : library::all()) {
    CHECK(alpha_eq(dual_connective(dual_connective(c)), c));
    CHECK(check_harmony(c).harmony == check_harmony(dual_connective(c)).harmony);
  }
}

TEST_CASE("enumeration of connectives") {
  auto one = enumerate_connectives({"a"}, 1);
  for (const Connective& c : one) CHECK(validate_connective(c).valid);
  std::set<std::string> texts;
  for (const Connective& c : one) texts.insert(to_text(canonical(c)));
  CHECK(texts.size() == one.size());
  CHECK(texts.count("(z1 ; I={a(z1)} ; E={})"));
}
