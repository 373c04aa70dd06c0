#include <algorithm>

#include "doctest.h"
#include "ludics/fixtures.hpp"
#include "ludics/interaction.hpp"
#include "support.hpp"

using namespace ludics;
using namespace ludics::testing;

namespace {
MultiDesign fig2_d() { return M("[y1|b<{c() => y2|b<{a(y5,y6) => daimon, c() => daimon}>}>]"); }
MultiDesign fig2_e() { return M("[{b(x1) => x1|c<>} / y1, {b(x2) => x2|c<>} / y2]"); }
MultiDesign fig1_pos() { return MultiDesign::of(fixtures::fig1_p()); }
MultiDesign fig1_neg() { return MultiDesign::of(fixtures::fig1_n()); }
}  // namespace

TEST_CASE("multi-designs") {
  CHECK(fig2_d().polarity() == Polarity::Positive);
  CHECK(fig2_e().np() == std::set<Var>{"y1", "y2"});
  CHECK(fig2_d().fv() == std::set<Var>{"y1", "y2"});
  CHECK(is_anti_design(fig2_e()));
  CHECK_FALSE(is_anti_design(fig2_d()));
  CHECK_THROWS_AS(md_union(fig2_d(), fig2_e()), Error);
  CHECK(fig1_neg().bindings.count(kAtomicAddress));
  MultiDesign both;
  both.positive = Design::daimon();
  both.bindings["x"] = D("{a() => x|a<>}");
  CHECK(multidesign_violation(both).has_value());
}

TEST_CASE("compatibility") {
  CHECK(quasi_closed_compatible(fig2_d(), fig2_e()));
  CHECK(compatible(fig2_d(), fig2_e()));
  MultiDesign a = MultiDesign::binding("x", D("{a() => daimon}"));
  MultiDesign b = MultiDesign::binding("y", D("{a() => daimon}"));
  CHECK(compatible(a, b));
  CHECK_FALSE(quasi_closed_compatible(a, b));
  CHECK_FALSE(compatible(a, a));
  CHECK(quasi_closed_compatible(fig1_pos(), fig1_neg()));
}

TEST_CASE("cut of multi-designs") {
  MultiDesign d = fig1_neg();
  CHECK(cut_multidesigns(d, MultiDesign{}) == d);
  MultiDesign n = MultiDesign::binding("x", D("{a() => daimon}"));
  MultiDesign p = MultiDesign::of(D("x|a<>"));
  MultiDesign r = cut_multidesigns(n, p);
  REQUIRE(r.positive);
  CHECK(alpha_eq(*r.positive, D("{a() => daimon}|a<>")));
  MultiDesign fig = cut_multidesigns(fig1_neg(), fig1_pos());
  REQUIRE(fig.positive);
  CHECK(free_vars(*fig.positive).empty());
  CHECK(normalize(*fig.positive).design == Design::daimon());
  CHECK_THROWS_AS(cut_multidesigns(n, n), Error);
}

TEST_CASE("cut order does not matter") {
  MultiDesign d = M("[x1|a<{b(u) => u|c<>}>, {c() => x2|c<>} / y]");
  MultiDesign e = M("[{a(v) => y|c<>} / x1, {c() => daimon} / x2]");
  REQUIRE(compatible(d, e));
  std::vector<std::size_t> order{0, 1};
  std::set<std::string> seen;
  do {
    seen.insert(fingerprint(cut_multidesigns(d, e, order)));
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(seen.size() == 1);
  MultiDesign r = cut_multidesigns(d, e);
  REQUIRE(r.positive);
  CHECK(r.bindings.empty());
  CHECK(free_vars(*r.positive).empty());
  CHECK(normalize(*r.positive).design == Design::daimon());
}

TEST_CASE("multi-design orthogonality") {
  MultiDesign w = MultiDesign::of(Design::daimon());
  MultiDesign n = MultiDesign::binding("x", D("{a() => daimon}"));
  CHECK(msd_orthogonal(w, n) == Tri::True);
  CHECK(msd_orthogonal(fig1_pos(), fig1_neg()) == Tri::True);
  CHECK(msd_orthogonal(MultiDesign::of(D("x0|a<>")), MultiDesign::of(D("{b() => daimon}"))) == Tri::False);
  CHECK(msd_orthogonal(fig2_d(), fig2_e()) == Tri::True);
  CHECK_THROWS_AS(msd_orthogonal(n, n), Error);
}

TEST_CASE("interaction sequences") {
  MultiDesign w = MultiDesign::of(Design::daimon());
  MultiDesign n = MultiDesign::binding("x", D("{a() => daimon}"));
  CHECK(iseq(w, n).actions == Sequence{LocatedAction::daimon()});
  CHECK(iseq(n, w).actions.empty());
  CHECK(iseq(MultiDesign::of(Design::omega()), n).actions.empty());
  Interaction fwd = iseq(fig1_pos(), fig1_neg());
  CHECK(seq_alpha_eq(fwd.actions, fixtures::path_fig1()));
  CHECK(fwd.status == EvalOutcome::Status::Converged);
  Interaction back = iseq(fig1_neg(), fig1_pos());
  CHECK(seq_alpha_eq(back.actions, dual_seq(fixtures::path_fig1())));
  CHECK(back.actions.back().is_daimon());
  Interaction fig2 = iseq(fig2_d(), fig2_e());
  CHECK(seq_alpha_eq(fig2.actions, S("y1|b<u> c^u() y2|b<w> c^w() daimon")));
}

TEST_CASE("interaction fuel") {
  Interaction r = iseq(fig1_pos(), fig1_neg(), 2);
  CHECK(r.exhausted());
  CHECK(r.actions.size() == 2);
  CHECK(is_path(r.actions));
}

TEST_CASE("associativity for paths") {
  // <E <- [[Cut(F, D)]]> = <E u F <- D> restricted to E
  MultiDesign d = M("[x1|a<{b(u) => x2|c<>}>]");
  MultiDesign f = M("[{a(v) => v|b<{}>} / x1]");
  MultiDesign e = M("[{c() => daimon} / x2]");
  MultiDesign cut = cut_multidesigns(f, d);
  REQUIRE(cut.positive);
  MultiDesign reduced = MultiDesign::of(normalize(*cut.positive).value());
  Interaction lhs = iseq(e, reduced);
  Interaction rhs = iseq(md_union(e, f), d);
  CHECK(seq_alpha_eq(lhs.actions, restrict(rhs.actions, e)));
}
