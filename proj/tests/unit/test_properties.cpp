#include "doctest.h"
#include "ludics/decompose.hpp"
#include "ludics/fixtures.hpp"
#include "support.hpp"

using namespace ludics;
using namespace ludics::testing;

namespace {

Design rename_bound(const Design& t, const std::string& tag) {
  switch (t.kind()) {
    case Design::Kind::App: {
      std::vector<Design> args;
      for (const Design& a : t.args()) args.push_back(rename_bound(a, tag));
      Design head = t.head().is_var() ? t.head() : rename_bound(t.head(), tag);
      return Design::app(head, t.name(), std::move(args));
    }
    case Design::Kind::Sum: {
      std::map<Name, Branch> bs;
      for (const auto& [a, b] : t.branches()) {
        std::map<Var, Var> r;
        Branch nb;
        for (const Var& x : b.vars) {
          nb.vars.push_back(x + tag);
          r[x] = x + tag;
        }
        nb.body = rename_bound(rename_free(b.body, r), tag);
        bs.emplace(a, std::move(nb));
      }
      return Design::sum(std::move(bs));
    }
    default:
      return t;
  }
}

}  // namespace

TEST_CASE("alpha equivalence is an equivalence") {
  DesignGen g(1);
  for (int i = 0; i < 150; ++i) {
    Design t = g.positive(4, {"x", "y"});
    Design u = rename_bound(t, "_r");
    Design w = canonicalize(u);
    CHECK(alpha_eq(t, t));
    CHECK(alpha_eq(t, u) == alpha_eq(u, t));
    CHECK(alpha_eq(t, u));
    CHECK(alpha_eq(u, w));
    CHECK(alpha_eq(t, w));
    Design other = g.positive(4, {"x", "y"});
    CHECK(alpha_eq(t, other) == alpha_eq(other, t));
    CHECK(alpha_eq(t, other) == (fingerprint(t) == fingerprint(other)));
  }
}

TEST_CASE("substitution and canonical forms") {
  DesignGen g(2);
  for (int i = 0; i < 150; ++i) {
    Design t = g.positive(4, {"x", "y"});
    Design n = g.negative(2, {"z"});
    CHECK(alpha_eq(substitute(canonicalize(t), "x", n), substitute(t, "x", n)));
    CHECK(alpha_eq(substitute(t, "x", canonicalize(n)), substitute(t, "x", n)));
    CHECK(alpha_eq(substitute(t, "unused", n), t));
    Design s = substitute(t, "x", n);
    CHECK(canonicalize(s) == s);
  }
}

TEST_CASE("stable ordering implies observational ordering") {
  Signature s;
  s.add("a", 0);
  s.add("b", 1);
  for (Polarity pol : {Polarity::Positive, Polarity::Negative}) {
    std::vector<Design> ds = enumerate_designs(pol, s, pol == Polarity::Positive ? std::set<Var>{"x0"} : std::set<Var>{}, 3);
    if (pol == Polarity::Positive) ds.push_back(Design::omega());
    REQUIRE(ds.size() > 10);
    std::size_t related = 0;
    for (const Design& t : ds)
      for (const Design& u : ds)
        if (stable_leq(t, u)) {
          ++related;
          CHECK(obs_leq(t, u));
        }
    CHECK(related > ds.size());
  }
}

TEST_CASE("intersection is the greatest lower bound") {
  Signature s;
  s.add("a", 0);
  s.add("b", 1);
  std::vector<Design> ds = enumerate_designs(Polarity::Negative, s, {}, 3);
  std::size_t defined = 0;
  for (std::size_t i = 0; i < ds.size(); i += 3)
    for (std::size_t j = 0; j < ds.size(); j += 5) {
      auto m = intersect(ds[i], ds[j]);
      if (!m) continue;
      ++defined;
      CHECK(stable_leq(*m, ds[i]));
      CHECK(stable_leq(*m, ds[j]));
      for (const Design& c : ds)
        if (stable_leq(c, ds[i]) && stable_leq(c, ds[j])) CHECK(stable_leq(c, *m));
    }
  CHECK(defined > 0);
}

TEST_CASE("normal forms") {
  DesignGen g(3);
  std::size_t checked = 0;
  for (int i = 0; i < 300; ++i) {
    Design t = g.positive(4, {"x", "y"});
    EvalOutcome r = normalize(t);
    if (r.exhausted()) continue;
    ++checked;
    Design v = r.value();
    CHECK(classify(v).cut_free);
    EvalOutcome again = normalize(v);
    REQUIRE_FALSE(again.exhausted());
    CHECK(alpha_eq(again.value(), v));
    // more fuel never changes a converged outcome
    EvalOutcome more = normalize(t, kDefaultFuel * 4);
    CHECK(more.status == r.status);
    CHECK(alpha_eq(more.value(), v));
    if (r.steps > 0) {
      EvalOutcome tight = normalize(t, r.steps);
      CHECK(tight.status == r.status);
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("associativity on random designs") {
  DesignGen g(4);
  std::size_t compared = 0;
  for (int i = 0; i < 200; ++i) {
    Design t = g.positive(4, {"x", "y"});
    Bindings b{{"x", g.negative(3, {"y"})}, {"y", g.negative(2, {})}};
    EvalOutcome lhs = normalize(substitute(t, b));
    EvalOutcome nt = normalize(t);
    if (lhs.exhausted() || nt.exhausted()) continue;
    Bindings nb;
    bool ok = true;
    for (const auto& [x, n] : b) {
      EvalOutcome r = normalize(n);
      if (r.exhausted()) ok = false;
      else nb[x] = r.value();
    }
    if (!ok) continue;
    EvalOutcome rhs = normalize(substitute(nt.value(), nb));
    if (rhs.exhausted()) continue;
    ++compared;
    CHECK_MESSAGE(alpha_eq(lhs.value(), rhs.value()), to_text(t));
  }
  CHECK(compared > 150);
}

TEST_CASE("dual of the dual") {
  StandardGen g(5);
  for (int i = 0; i < 40; ++i) {
    Design p = g.positive(4, {"x0"});
    for (const Sequence& s : paths_of(p, 5)) {
      if (!s.empty() && s.back().is_daimon()) continue;
      CHECK(dual_seq(dual_seq(s)) == s);
      CHECK(view(view(s)) == view(s));
    }
  }
}

TEST_CASE("shuffle is commutative and associative") {
  std::vector<PathSet> sides;
  for (const Design& n : {fixtures::regular_negative().generator_designs()[0], fixtures::fig1_n()}) {
    PathSet ps = bounded(paths_of(n, 4), 4);
    sides.push_back(ps);
  }
  PathSet all = sides[0];
  all.insert(sides[1].begin(), sides[1].end());
  std::vector<Sequence> ps(all.begin(), all.end());
  REQUIRE(ps.size() > 4);
  auto at = [](const Sequence& p, const Var& x) { return *relabel_initial(PathSet{p}, x).begin(); };
  for (const Sequence& p : ps)
    for (const Sequence& q : ps) {
      auto l = shuffle(at(p, "x1"), at(q, "x2"));
      auto r = shuffle(at(q, "x2"), at(p, "x1"));
      REQUIRE(l);
      REQUIRE(r);
      CHECK(canonical_set(*l) == canonical_set(*r));
    }
  for (std::size_t i = 0; i < ps.size(); i += 2)
    for (std::size_t j = 0; j < ps.size(); j += 3)
      for (std::size_t k = 0; k < ps.size(); k += 4) {
        PathSet p{at(ps[i], "x1")}, q{at(ps[j], "x2")}, r{at(ps[k], "x3")};
        PathSet left = canonical_set(shuffle_sets(canonical_set(shuffle_sets(p, q)), r));
        PathSet right = canonical_set(shuffle_sets(p, canonical_set(shuffle_sets(q, r))));
        CHECK(left == right);
      }
}

TEST_CASE("shuffles are paths") {
  auto r = shuffle(fixtures::shuffle_left(), fixtures::shuffle_right());
  REQUIRE(r);
  for (const Sequence& s : *r) {
    CHECK(is_path(s));
    CHECK(restrict(canonical(s), canonical(s)) == canonical(s));
  }
}

TEST_CASE("path completion keeps the path") {
  StandardGen g(6);
  Signature sig = small_signature();
  for (int i = 0; i < 40; ++i) {
    Design n = g.negative(3, {});
    for (const Sequence& p : paths_of(n, 4)) {
      Design c = path_completion(p, n, sig);
      CHECK(is_path_of(p, c));
      CHECK(obs_leq(n, c));
    }
  }
}

TEST_CASE("interaction duality and prefixes") {
  auto pairs = orthogonal_pairs(8, 60);
  REQUIRE(pairs.size() == 60);
  for (const auto& [p, n] : pairs) {
    Interaction fwd = iseq(p, n);
    Interaction back = iseq(n, p);
    REQUIRE_FALSE(fwd.exhausted());
    CHECK(seq_alpha_eq(fwd.actions, dual_seq(back.actions)));
    for (std::size_t k = 1; k <= fwd.actions.size(); ++k) {
      Sequence pre(fwd.actions.begin(), fwd.actions.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK(is_path_of(pre, p));
    }
    // the daimon is played on exactly one side
    bool here = !fwd.actions.empty() && fwd.actions.back().is_daimon();
    bool there = !back.actions.empty() && back.actions.back().is_daimon();
    CHECK(here != there);
  }
}

TEST_CASE("orthogonality matches the end of the interaction") {
  StandardGen g(9);
  for (int i = 0; i < 200; ++i) {
    MultiDesign p = MultiDesign::of(g.positive(3, {"x0"}));
    MultiDesign n = MultiDesign::of(g.negative(3, {}));
    Interaction r = iseq(p, n);
    Interaction back = iseq(n, p);
    REQUIRE_FALSE(r.exhausted());
    auto ends = [](const Interaction& i) { return !i.actions.empty() && i.actions.back().is_daimon(); };
    bool won = ends(r) || ends(back);
    CHECK((msd_orthogonal(p, n) == Tri::True) == won);
  }
}

TEST_CASE("visitable paths are paths of generators") {
  auto n = fixtures::regular_negative();
  for (const auto* w : {&n}) {
    for (const Sequence& p : workbench_visitable_paths(*w).paths) {
      bool found = false;
      for (const auto& gen : w->generators) found = found || is_path_of(p, gen);
      CHECK(found);
    }
  }
}
