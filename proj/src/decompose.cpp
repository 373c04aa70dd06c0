#include "ludics/decompose.hpp"

#include <algorithm>
#include <functional>

namespace ludics {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::optional<InstanceRecord> DecompositionReport::first_failure() const {
  for (const auto& r : instances)
    if (r.verdict == Verdict::Fail) return r;
  return std::nullopt;
}

Signature signature_of(const std::vector<BehaviourWorkbench>& ws) {
  Signature s;
  auto add = [&](const MultiDesign& d) {
    if (d.positive) s = s.merged(signature_of(*d.positive));
    for (const auto& [x, n] : d.bindings) s = s.merged(signature_of(n));
  };
  for (const auto& w : ws) {
    for (const auto& g : w.generators) add(g);
    for (const auto& t : w.testers) add(t);
  }
  return s;
}

namespace {

void for_each_product(const std::vector<std::vector<Design>>& lists,
                      const std::function<void(const std::vector<Design>&)>& f) {
  std::vector<Design> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == lists.size()) return f(cur);
    for (const auto& d : lists[i]) {
      cur.push_back(d);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::size_t z_index(const Connective& c, const Var& x) {
  auto it = std::find(c.z.begin(), c.z.end(), x);
  if (it == c.z.end()) throw Error(ErrorKind::InvalidConnective, x + " is not a variable of " + c.label);
  return static_cast<std::size_t>(it - c.z.begin());
}

std::vector<BehaviourWorkbench> pick(const Connective& c, const NegAction& a, const std::vector<BehaviourWorkbench>& ws) {
  std::vector<BehaviourWorkbench> out;
  for (const auto& x : a.vars) out.push_back(ws[z_index(c, x)]);
  return out;
}

std::vector<BehaviourWorkbench> duals(const std::vector<BehaviourWorkbench>& ws) {
  std::vector<BehaviourWorkbench> out;
  for (const auto& w : ws) out.push_back(w.dual());
  return out;
}

bool in(const std::vector<NegAction>& as, const NegAction& a) { return std::find(as.begin(), as.end(), a) != as.end(); }

Design daimon_sum(const std::vector<NegAction>& as) {
  std::map<Name, Branch> br;
  for (const auto& a : as) br.emplace(a.name, Branch{a.vars, Design::daimon()});
  return Design::sum(std::move(br));
}

Sequence prefixed(const LocatedAction& k, const Sequence& s) {
  Sequence out{k};
  out.insert(out.end(), s.begin(), s.end());
  return canonical(out);
}

bool positive_ended(const Sequence& s) { return !s.empty() && s.back().polarity() == Polarity::Positive; }

std::string set_text(const PathSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : s) {
    if (!first) out += ", ";
    first = false;
    out += to_text(p);
  }
  return out + "}";
}

Verdict combine(const std::vector<InstanceRecord>& rs, bool vacuous) {
  bool inconclusive = vacuous || rs.empty();
  for (const auto& r : rs) {
    if (r.verdict == Verdict::Fail) return Verdict::Fail;
    if (r.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::Pass;
}

void check_sizes(const Connective& c, const std::vector<BehaviourWorkbench>& neg, const std::vector<BehaviourWorkbench>& pos) {
  check_connective(c);
  if (neg.size() != c.arity() || pos.size() != c.arity())
    throw Error(ErrorKind::ArityMismatch, c.label + " needs " + std::to_string(c.arity()) + " workbenches per side");
  for (const auto& w : neg)
    if (w.polarity != Polarity::Negative) throw Error(ErrorKind::PolarityMismatch, w.label + " should be negative");
  for (const auto& w : pos)
    if (w.polarity != Polarity::Positive) throw Error(ErrorKind::PolarityMismatch, w.label + " should be positive");
}

bool any_empty(const std::vector<BehaviourWorkbench>& ws) {
  for (const auto& w : ws)
    if (w.generators.empty() || w.testers.empty()) return true;
  return false;
}

}  // namespace

std::vector<MultiDesign> binding_products(const std::vector<Var>& xs, const std::vector<BehaviourWorkbench>& ws) {
  if (xs.size() != ws.size()) throw Error(ErrorKind::ArityMismatch, "one workbench per variable");
  std::vector<std::vector<Design>> lists;
  for (const auto& w : ws) lists.push_back(w.generator_designs());
  std::vector<MultiDesign> out;
  for_each_product(lists, [&](const std::vector<Design>& ms) {
    MultiDesign d;
    for (std::size_t i = 0; i < xs.size(); ++i) d.bindings.emplace(xs[i], ms[i]);
    out.push_back(std::move(d));
  });
  return out;
}

std::vector<Design> enumerate_orthogonal_positives(const std::vector<Var>& xs, const std::vector<MultiDesign>& against,
                                                   const Signature& sig, std::size_t depth, std::size_t fuel) {
  std::vector<Design> out;
  for (const auto& p : enumerate_designs(Polarity::Positive, sig, std::set<Var>(xs.begin(), xs.end()), depth)) {
    auto md = MultiDesign::of(p);
    bool ok = true;
    for (const auto& a : against)
      if (pair_orthogonal(a, md, fuel) != Tri::True) {
        ok = false;
        break;
      }
    if (ok) out.push_back(p);
  }
  return out;
}

BehaviourWorkbench multi_binding_workbench(const std::vector<Var>& xs, const std::vector<BehaviourWorkbench>& ws,
                                           const CheckBounds& b) {
  BehaviourWorkbench w;
  w.label = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) w.label += (i ? "," : "") + ws[i].label + "/" + xs[i];
  w.label += "]";
  w.polarity = Polarity::Negative;
  w.atomic = false;
  w.generators = binding_products(xs, ws);
  for (const auto& p : enumerate_orthogonal_positives(xs, w.generators, signature_of(ws), b.tester_depth, b.fuel))
    w.testers.push_back(MultiDesign::of(p));
  return w;
}

PathSet bounded(const PathSet& s, std::size_t max_len) {
  PathSet out;
  for (const auto& p : s)
    if (p.size() <= max_len) out.insert(p);
  return out;
}

PathSet shuffle_of_relabelled(const std::vector<Var>& xs, const std::vector<BehaviourWorkbench>& ws,
                              const CheckBounds& b, std::size_t* exhausted) {
  PathSet acc{Sequence{}};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto v = workbench_visitable_paths(ws[i], b.fuel);
    if (exhausted) *exhausted += v.exhausted;
    PathSet vi = relabel_initial(bounded(v.paths, b.max_len), xs[i]);
    acc = i == 0 ? vi : bounded(canonical_set(shuffle_sets(acc, vi)), b.max_len);
  }
  return acc;
}

ShuffleDecompositionReport check_shuffle_decomposition(const std::vector<Var>& xs,
                                                       const std::vector<BehaviourWorkbench>& ws,
                                                       const CheckBounds& b) {
  ShuffleDecompositionReport r;
  auto w = multi_binding_workbench(xs, ws, b);
  auto v = workbench_visitable_paths(w, b.fuel);
  r.exhausted = v.exhausted;
  r.lhs = bounded(v.paths, b.max_len);
  r.rhs = shuffle_of_relabelled(xs, ws, b, &r.exhausted);
  std::set_difference(r.lhs.begin(), r.lhs.end(), r.rhs.begin(), r.rhs.end(), std::inserter(r.only_lhs, r.only_lhs.end()));
  std::set_difference(r.rhs.begin(), r.rhs.end(), r.lhs.begin(), r.lhs.end(), std::inserter(r.only_rhs, r.only_rhs.end()));
  r.equal = r.only_lhs.empty() && r.only_rhs.empty();
  return r;
}

// --- connective level

namespace {

void clause_one(const Connective& c, const std::vector<BehaviourWorkbench>& neg, const CheckBounds& b,
                std::vector<InstanceRecord>& out) {
  std::vector<Design> testers = counter_set_elim(c, neg);
  testers.push_back(daimon_sum(c.elim));

  auto candidates_for = [&](const NegAction& a) {
    std::vector<std::vector<Design>> lists;
    for (const auto& w : pick(c, a, neg)) lists.push_back(w.generator_designs());
    std::vector<Design> ps;
    for_each_product(lists, [&](const std::vector<Design>& ms) { ps.push_back(Design::app(kAtomicAddress, a.name, ms)); });
    return ps;
  };
  auto run = [&](const Design& p, InstanceRecord& rec) {
    for (const auto& t : testers) {
      Tri o = atomic_orthogonal(p, t, b.fuel);
      if (o == Tri::True) continue;
      if (o == Tri::FuelExhausted) {
        rec.verdict = Verdict::Inconclusive;
        rec.witness = "fuel exhausted against " + to_text(t);
        continue;
      }
      rec.verdict = Verdict::Fail;
      rec.witness = "not orthogonal to " + to_text(t);
      return false;
    }
    return true;
  };

  // right to left: daimon and the intro-headed designs belong to the elim behaviour
  {
    InstanceRecord rec{"1 (contains intro decomposition)", "daimon", Verdict::Pass, ""};
    run(Design::daimon(), rec);
    out.push_back(rec);
  }
  for (const auto& a : c.intro)
    for (const auto& p : candidates_for(a)) {
      InstanceRecord rec{"1 (contains intro decomposition)", to_text(p), Verdict::Pass, ""};
      run(p, rec);
      out.push_back(rec);
    }
  // left to right: designs built with elim actions must be intro-headed
  for (const auto& e : c.elim)
    for (const auto& p : candidates_for(e)) {
      InstanceRecord rec{"1 (inside intro decomposition)", to_text(p), Verdict::Pass, ""};
      if (!run(p, rec)) {
        rec.witness = "generator of the elim behaviour fails a counter-set tester: " + rec.witness;
      } else if (!in(c.intro, e)) {
        rec.verdict = Verdict::Fail;
        rec.witness = "in the elim behaviour but " + to_text(e) + " is not an intro action";
      }
      out.push_back(rec);
    }
}

void clause_two(const Connective& c, const std::vector<BehaviourWorkbench>& pos, const CheckBounds& b,
                std::vector<InstanceRecord>& out) {
  const std::vector<Design> counter = counter_set_intro(c, pos);

  std::vector<NegAction> actions = c.intro;
  for (const auto& e : c.elim)
    if (!in(actions, e)) actions.push_back(e);

  // branch options per action; nullopt = absent
  std::vector<std::vector<std::optional<Design>>> options;
  for (const auto& a : actions) {
    std::vector<std::optional<Design>> o{std::nullopt, Design::daimon()};
    for (const auto& x : a.vars)
      for (const auto& g : pos[z_index(c, x)].generator_designs()) o.push_back(rename_free(g, {{kAtomicAddress, x}}));
    options.push_back(std::move(o));
  }

  auto rhs_branch = [&](const NegAction& e, const std::optional<Design>& body) -> Tri {
    if (!body) return Tri::False;
    std::vector<std::vector<Design>> lists;
    for (const auto& w : pick(c, e, pos)) lists.push_back(w.tester_designs());
    Tri result = Tri::True;
    for_each_product(lists, [&](const std::vector<Design>& ms) {
      if (result == Tri::False) return;
      Bindings s;
      for (std::size_t i = 0; i < ms.size(); ++i) s.emplace(e.vars[i], ms[i]);
      Design closed = s.empty() ? *body : substitute(*body, s);
      Tri t = free_vars(closed).empty() ? converges_to_daimon(closed, b.fuel) : Tri::False;
      if (t != Tri::True) result = t;
    });
    return result;
  };

  std::vector<std::size_t> idx(actions.size(), 0);
  for (std::size_t n = 0; n < b.sample_cap; ++n) {
    std::map<Name, Branch> br;
    std::map<Name, std::optional<Design>> bodies;
    for (std::size_t i = 0; i < actions.size(); ++i) {
      const auto& o = options[i][idx[i]];
      bodies[actions[i].name] = o;
      if (o) br.emplace(actions[i].name, Branch{actions[i].vars, *o});
    }
    Design sum = Design::sum(std::move(br));

    Tri lhs = Tri::True;
    for (const auto& q : counter) {
      Tri t = atomic_orthogonal(q, sum, b.fuel);
      if (t != Tri::True) {
        lhs = t;
        if (t == Tri::False) break;
      }
    }
    Tri rhs = Tri::True;
    for (const auto& e : c.elim) {
      Tri t = rhs_branch(e, bodies[e.name]);
      if (t != Tri::True) {
        rhs = t;
        if (t == Tri::False) break;
      }
    }

    InstanceRecord rec{"2 (intro behaviour membership)", to_text(sum), Verdict::Pass, ""};
    if (lhs == Tri::FuelExhausted || rhs == Tri::FuelExhausted) {
      rec.verdict = Verdict::Inconclusive;
      rec.witness = "fuel exhausted";
    } else if ((lhs == Tri::True) != (rhs == Tri::True)) {
      rec.verdict = Verdict::Fail;
      rec.witness = lhs == Tri::True ? "orthogonal to the intro counter set, but some elim branch fails"
                                     : "every elim branch passes, but not orthogonal to the intro counter set";
    }
    out.push_back(rec);

    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
}

DecompositionReport connective_level(const Connective& c, const std::vector<BehaviourWorkbench>& neg,
                                     const std::vector<BehaviourWorkbench>& pos, const CheckBounds& b, bool with_dual) {
  check_sizes(c, neg, pos);
  DecompositionReport r;
  clause_one(c, neg, b, r.instances);
  clause_two(c, pos, b, r.instances);
  bool vacuous = any_empty(neg) || any_empty(pos);
  r.verdict = combine(r.instances, vacuous);
  if (with_dual && r.verdict == Verdict::Pass) {
    // a dually decomposable connective has a dually decomposable dual
    auto d = connective_level(dual_connective(c), duals(pos), duals(neg), b, false);
    InstanceRecord rec{"dual connective", to_text(dual_connective(c)), d.verdict, ""};
    if (auto f = d.first_failure()) rec.witness = f->clause + ": " + f->input + ": " + f->witness;
    r.instances.push_back(rec);
    r.verdict = combine(r.instances, vacuous);
  }
  for (const auto& rec : r.instances)
    if (rec.verdict == Verdict::Inconclusive) ++r.exhausted;
  r.scope = "listed generators and testers of " + std::to_string(neg.size() + pos.size()) + " workbenches; " +
            std::to_string(r.instances.size()) + " instances, intro sums capped at " + std::to_string(b.sample_cap);
  return r;
}

}  // namespace

DecompositionReport check_dual_decomposability_connective(const Connective& c,
                                                          const std::vector<BehaviourWorkbench>& negative,
                                                          const std::vector<BehaviourWorkbench>& positive,
                                                          const CheckBounds& b) {
  return connective_level(c, negative, positive, b, true);
}

// --- path level

namespace {

void compare_sets(const std::string& clause, const PathSet& lhs, const PathSet& rhs, std::vector<InstanceRecord>& out) {
  for (const auto& p : lhs) {
    InstanceRecord rec{clause, to_text(p), Verdict::Pass, ""};
    if (!rhs.count(p)) {
      rec.verdict = Verdict::Fail;
      rec.witness = "visitable, missing from the decomposition";
    }
    out.push_back(rec);
  }
  for (const auto& p : rhs) {
    if (lhs.count(p)) continue;
    out.push_back({clause, to_text(p), Verdict::Fail, "in the decomposition, not visitable"});
  }
}

}  // namespace

DecompositionReport check_dual_decomposability_paths(const Connective& c,
                                                     const std::vector<BehaviourWorkbench>& neg,
                                                     const std::vector<BehaviourWorkbench>& pos,
                                                     const CheckBounds& b) {
  check_sizes(c, neg, pos);
  DecompositionReport r;
  bool vacuous = any_empty(neg) || any_empty(pos);

  for (const auto& w : neg) {
    auto reg = check_regularity(w, w.dual(), b.fuel, b.max_len);
    InstanceRecord rec{"regular input", w.label, reg.verdict, ""};
    for (const auto& cl : reg.clauses)
      if (cl.verdict != Verdict::Pass && rec.witness.empty()) rec.witness = cl.clause + ": " + cl.witness;
    // a failing precondition makes the check inconclusive, not failed
    if (rec.verdict == Verdict::Fail) rec.verdict = Verdict::Inconclusive;
    r.instances.push_back(rec);
  }

  // elim side
  {
    std::vector<NegAction> used = c.intro;
    for (const auto& e : c.elim)
      if (!in(used, e)) used.push_back(e);
    for (const auto& a : used) {
      auto s = check_shuffle_decomposition(a.vars, pick(c, a, neg), b);
      InstanceRecord rec{"shuffle decomposition", to_text(a), s.equal ? Verdict::Pass : Verdict::Fail, ""};
      if (!s.equal) rec.witness = "only visitable " + set_text(s.only_lhs) + ", only shuffled " + set_text(s.only_rhs);
      if (s.exhausted) rec.verdict = Verdict::Inconclusive;
      r.instances.push_back(rec);
    }

    BehaviourWorkbench w;
    w.label = c.label + "^E";
    w.polarity = Polarity::Positive;
    w.generators.push_back(MultiDesign::of(Design::daimon()));
    for (const auto& e : c.elim) {
      std::vector<std::vector<Design>> lists;
      for (const auto& n : pick(c, e, neg)) lists.push_back(n.generator_designs());
      for_each_product(lists, [&](const std::vector<Design>& ms) {
        w.generators.push_back(MultiDesign::of(Design::app(kAtomicAddress, e.name, ms)));
      });
    }
    w.testers.push_back(MultiDesign::binding(kAtomicAddress, daimon_sum(c.elim)));
    Signature sig = signature_of(neg);
    for (const auto& e : c.elim) {
      auto ws = pick(c, e, neg);
      for (const auto& p : enumerate_orthogonal_positives(e.vars, binding_products(e.vars, ws), sig, b.tester_depth, b.fuel)) {
        std::map<Name, Branch> br;
        for (const auto& o : c.elim) br.emplace(o.name, Branch{o.vars, o == e ? p : Design::daimon()});
        w.testers.push_back(MultiDesign::binding(kAtomicAddress, Design::sum(std::move(br))));
      }
    }
    auto v = workbench_visitable_paths(w, b.fuel);
    r.exhausted += v.exhausted;
    PathSet lhs = bounded(v.paths, b.max_len);

    PathSet rhs{Sequence{LocatedAction::daimon()}};
    for (const auto& a : c.intro) {
      auto head = LocatedAction::pos(kAtomicAddress, a.name, a.vars);
      for (const auto& p : shuffle_of_relabelled(a.vars, pick(c, a, neg), b, &r.exhausted)) rhs.insert(prefixed(head, p));
    }
    compare_sets("elim paths", lhs, bounded(rhs, b.max_len), r.instances);
  }

  // intro side
  {
    auto neg_of_pos = duals(pos);  // testers of the positive workbenches as generators
    Signature sig = signature_of(pos);
    std::map<Name, std::vector<Design>> branch_pool;
    std::vector<NegAction> used = c.intro;
    for (const auto& e : c.elim)
      if (!in(used, e)) used.push_back(e);
    for (const auto& a : used)
      branch_pool[a.name] =
          enumerate_orthogonal_positives(a.vars, binding_products(a.vars, pick(c, a, neg_of_pos)), sig, b.tester_depth, b.fuel);

    BehaviourWorkbench w;
    w.label = c.label + "^I";
    w.polarity = Polarity::Negative;
    bool complete = true;
    for (const auto& a : c.intro)
      if (branch_pool[a.name].empty()) complete = false;
    if (complete) {
      for (const auto& a : c.intro) {
        for (const auto& p : branch_pool[a.name]) {
          std::map<Name, Branch> br;
          for (const auto& o : c.intro) br.emplace(o.name, Branch{o.vars, o == a ? p : branch_pool[o.name].front()});
          w.generators.push_back(MultiDesign::binding(kAtomicAddress, Design::sum(std::move(br))));
        }
      }
    } else {
      vacuous = true;
    }
    w.testers.push_back(MultiDesign::of(Design::daimon()));
    for (const auto& q : counter_set_intro(c, pos)) w.testers.push_back(MultiDesign::of(q));
    auto v = workbench_visitable_paths(w, b.fuel);
    r.exhausted += v.exhausted;
    PathSet lhs = bounded(v.paths, b.max_len);

    PathSet rhs{Sequence{}};
    for (const auto& e : c.elim) {
      BehaviourWorkbench we;
      we.polarity = Polarity::Positive;
      we.atomic = false;
      for (const auto& p : branch_pool[e.name]) we.generators.push_back(MultiDesign::of(p));
      we.testers = binding_products(e.vars, pick(c, e, neg_of_pos));
      auto ve = workbench_visitable_paths(we, b.fuel);
      r.exhausted += ve.exhausted;
      auto head = LocatedAction::neg(kAtomicAddress, e.name, e.vars);
      for (const auto& p : bounded(ve.paths, b.max_len)) rhs.insert(prefixed(head, p));
    }
    compare_sets("intro paths", lhs, bounded(rhs, b.max_len), r.instances);
  }

  if (r.exhausted) r.instances.push_back({"fuel", std::to_string(r.exhausted) + " pairs", Verdict::Inconclusive, "fuel exhausted"});
  r.verdict = combine(r.instances, vacuous);
  r.scope = "paths up to length " + std::to_string(b.max_len) + ", testers enumerated to depth " +
            std::to_string(b.tester_depth) + ", listed workbench generators only";
  return r;
}

// --- regularity

RegularityReport check_regularity(const BehaviourWorkbench& w, const BehaviourWorkbench& dual_w, std::size_t fuel,
                                  std::size_t max_len) {
  RegularityReport r;
  r.scope = "listed material generators, paths up to length " + std::to_string(max_len);
  for (const auto* x : {&w, &dual_w}) {
    auto rep = validate_workbench(*x, fuel);
    if (!rep.valid) {
      r.clauses.push_back({"precondition", x->label, Verdict::Inconclusive, rep.problems.front()});
      return r;
    }
  }
  auto vw = workbench_visitable_paths(w, fuel);
  auto vd = workbench_visitable_paths(dual_w, fuel);
  r.visitable = bounded(vw.paths, max_len);
  r.dual_visitable = bounded(vd.paths, max_len);

  auto material_clause = [&](const std::string& name, const BehaviourWorkbench& x, const PathSet& v) {
    InstanceRecord rec{name, x.label, Verdict::Pass, ""};
    for (const auto& t : material_generators(x)) {
      for (const auto& p : paths_of(t, max_len)) {
        if (!positive_ended(p) || v.count(p)) continue;
        rec.verdict = Verdict::Fail;
        rec.witness = to_text(p) + " is a path of " + to_text(t) + " but not visitable";
        return rec;
      }
    }
    return rec;
  };
  auto shuffle_clause = [&](const std::string& name, const PathSet& v) {
    InstanceRecord rec{name, set_text(v), Verdict::Pass, ""};
    for (const auto& p : v)
      for (const auto& q : v) {
        auto s = shuffle(p, q);
        if (!s) continue;
        for (const auto& raw : *s) {
          Sequence x = canonical(raw);
          if (x.size() > max_len || v.count(x)) continue;
          rec.verdict = Verdict::Fail;
          rec.witness = to_text(x) + " shuffles " + to_text(p) + " and " + to_text(q) + " but is not visitable";
          return rec;
        }
      }
    return rec;
  };

  r.clauses.push_back(material_clause("1 (material paths)", w, r.visitable));
  r.clauses.push_back(material_clause("2 (dual material paths)", dual_w, r.dual_visitable));
  r.clauses.push_back(shuffle_clause("3 (shuffle closure)", r.visitable));
  r.clauses.push_back(shuffle_clause("3 (dual shuffle closure)", r.dual_visitable));
  if (vw.exhausted || vd.exhausted)
    r.clauses.push_back({"fuel", std::to_string(vw.exhausted + vd.exhausted) + " pairs", Verdict::Inconclusive, "fuel exhausted"});
  r.verdict = combine(r.clauses, w.generators.empty() || dual_w.generators.empty());
  return r;
}

// --- harmony against beta and eta

IntuitionReport check_intuition(const std::vector<Name>& names, std::size_t max_arity) {
  IntuitionReport r;
  for (const auto& c : enumerate_connectives(names, max_arity)) {
    ++r.connectives;
    bool harmony = check_harmony(c).harmony;
    auto beta = beta_pool_check(c);
    auto eta = eta_condition_check(c);
    r.beta_checks += beta.checked;
    if (harmony) ++r.harmonious;
    if (harmony != (beta.holds && eta.holds))
      r.discrepancies.push_back(to_text(c) + ": harmony " + (harmony ? "true" : "false") + ", beta " +
                                (beta.holds ? "true" : "false") + ", eta " + (eta.holds ? "true" : "false"));
  }
  return r;
}

}  // namespace ludics
