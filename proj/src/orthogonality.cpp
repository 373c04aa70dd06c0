#include "ludics/orthogonality.hpp"

#include <functional>

namespace ludics {

namespace {

Tri closed_converges(const Design& p, std::size_t fuel) {
  auto fv = free_vars(p);
  if (!fv.empty()) throw Error(ErrorKind::NotClosed, "substituted design has free variable " + *fv.begin());
  return converges_to_daimon(p, fuel);
}

Design apply_bindings(const Design& t, const Bindings& b) { return b.empty() ? t : substitute(t, b); }

}  // namespace

Tri orthogonal(const Design& t, const AntiDesign& g, std::size_t fuel) {
  Bindings b(g.bindings.begin(), g.bindings.end());
  if (t.positive()) {
    if (g.positive) throw Error(ErrorKind::PolarityMismatch, "positive design tested by an anti-design against negatives");
    return closed_converges(apply_bindings(t, b), fuel);
  }
  if (!g.positive) throw Error(ErrorKind::PolarityMismatch, "negative design tested by an anti-design against positives");
  return closed_converges(substitute(*g.positive, kAtomicAddress, apply_bindings(t, b)), fuel);
}

Tri atomic_orthogonal(const Design& p, const Design& n, std::size_t fuel) {
  if (!p.positive() || !n.negative()) throw Error(ErrorKind::PolarityMismatch, "atomic orthogonality takes a positive and a negative design");
  return closed_converges(substitute(p, kAtomicAddress, n), fuel);
}

// --- workbenches

BehaviourWorkbench BehaviourWorkbench::of_designs(std::string label, const std::vector<Design>& gens,
                                                  const std::vector<Design>& testers) {
  BehaviourWorkbench w;
  w.label = std::move(label);
  if (!gens.empty()) w.polarity = gens.front().polarity();
  else if (!testers.empty()) w.polarity = opposite(testers.front().polarity());
  for (const auto& g : gens) w.generators.push_back(MultiDesign::of(g));
  for (const auto& t : testers) w.testers.push_back(MultiDesign::of(t));
  return w;
}

BehaviourWorkbench BehaviourWorkbench::dual() const {
  BehaviourWorkbench w;
  w.label = label + "^";
  w.polarity = opposite(polarity);
  w.generators = testers;
  w.testers = generators;
  w.atomic = atomic;
  return w;
}

namespace {

std::optional<Design> single(const MultiDesign& d) {
  if (d.positive && d.bindings.empty()) return d.positive;
  if (!d.positive && d.bindings.size() == 1 && d.bindings.count(kAtomicAddress)) return d.bindings.begin()->second;
  return std::nullopt;
}

}  // namespace

std::vector<Design> BehaviourWorkbench::generator_designs() const {
  std::vector<Design> out;
  for (const auto& g : generators)
    if (auto t = single(g)) out.push_back(*t);
  return out;
}

std::vector<Design> BehaviourWorkbench::tester_designs() const {
  std::vector<Design> out;
  for (const auto& g : testers)
    if (auto t = single(g)) out.push_back(*t);
  return out;
}

Tri pair_orthogonal(const MultiDesign& gen, const MultiDesign& tester, std::size_t fuel) {
  if (!quasi_closed_compatible(gen, tester)) return Tri::False;
  return msd_orthogonal(gen, tester, fuel);
}

WorkbenchReport validate_workbench(const BehaviourWorkbench& w, std::size_t fuel) {
  WorkbenchReport r;
  auto fail = [&](std::string msg) {
    r.valid = false;
    r.problems.push_back(std::move(msg));
  };
  auto check_member = [&](const MultiDesign& d, const std::string& what, Polarity pol) {
    if (auto v = multidesign_violation(d)) return fail(what + ": " + *v);
    if (d.polarity() != pol) return fail(what + ": wrong polarity");
    if (!is_standard(d)) return fail(what + ": not standard");
    if (w.atomic) {
      auto t = single(d);
      if (!t || !is_atomic(*t)) fail(what + ": not a single atomic design");
    }
  };
  for (std::size_t i = 0; i < w.generators.size(); ++i)
    check_member(w.generators[i], "generator " + std::to_string(i), w.polarity);
  for (std::size_t j = 0; j < w.testers.size(); ++j)
    check_member(w.testers[j], "tester " + std::to_string(j), opposite(w.polarity));
  if (!r.valid) return r;
  for (std::size_t i = 0; i < w.generators.size(); ++i) {
    for (std::size_t j = 0; j < w.testers.size(); ++j) {
      Tri t = pair_orthogonal(w.generators[i], w.testers[j], fuel);
      if (t == Tri::True) continue;
      if (t == Tri::FuelExhausted) r.fuel_exhausted = true;
      if (!r.witness) r.witness = std::make_pair(i, j);
      fail("generator " + std::to_string(i) + " and tester " + std::to_string(j) +
           (t == Tri::FuelExhausted ? " ran out of fuel" : " are not orthogonal"));
    }
  }
  return r;
}

void check_workbench(const BehaviourWorkbench& w, std::size_t fuel) {
  auto r = validate_workbench(w, fuel);
  if (!r.valid) throw Error(ErrorKind::InvalidWorkbench, w.label + ": " + r.problems.front());
}

std::optional<Design> incarnation(const Design& u, const BehaviourWorkbench& w) {
  std::optional<Design> acc;
  for (const auto& g : w.generator_designs()) {
    if (g.polarity() != u.polarity() || !stable_leq(g, u)) continue;
    if (!acc) {
      acc = canonicalize(g);
      continue;
    }
    acc = intersect(*acc, g);
    if (!acc) return std::nullopt;
  }
  return acc;
}

bool is_material(const Design& u, const BehaviourWorkbench& w) {
  auto inc = incarnation(u, w);
  return inc && alpha_eq(*inc, u);
}

std::vector<Design> material_generators(const BehaviourWorkbench& w) {
  std::vector<Design> out;
  for (const auto& g : w.generator_designs())
    if (is_material(g, w)) out.push_back(g);
  return out;
}

VisitableSet workbench_visitable_paths(const BehaviourWorkbench& w, std::size_t fuel) {
  VisitableSet out;
  for (const auto& g : w.generators) {
    for (const auto& t : w.testers) {
      Tri o = pair_orthogonal(g, t, fuel);
      if (o == Tri::FuelExhausted) ++out.exhausted;
      if (o != Tri::True) continue;
      auto r = iseq(g, t, fuel);
      if (r.exhausted()) {
        ++out.exhausted;
        continue;
      }
      out.paths.insert(canonical(r.actions));
    }
  }
  return out;
}

// --- enumeration

namespace {

struct Enumerator {
  const Signature& sig;
  std::size_t counter = 0;

  Var fresh(const std::set<Var>& avoid) {
    for (;;) {
      Var v = "u" + std::to_string(counter++);
      if (!avoid.count(v)) return v;
    }
  }

  std::vector<Design> pos(const std::set<Var>& vars, std::size_t depth) {
    std::vector<Design> out{Design::daimon()};
    if (depth == 0) return out;
    for (const auto& x : vars) {
      std::vector<Var> rest;
      for (const auto& v : vars)
        if (v != x) rest.push_back(v);
      for (const auto& [a, k] : sig.arity) {
        // each remaining variable goes to one argument or nowhere
        std::vector<std::size_t> slot(rest.size(), 0);
        for (;;) {
          std::vector<std::vector<Design>> choices;
          for (std::size_t i = 0; i < k; ++i) {
            std::set<Var> vi;
            for (std::size_t r = 0; r < rest.size(); ++r)
              if (slot[r] == i + 1) vi.insert(rest[r]);
            choices.push_back(neg(vi, depth - 1));
          }
          product(choices, [&](const std::vector<Design>& args) { out.push_back(Design::app(x, a, args)); });
          std::size_t r = 0;
          while (r < slot.size() && ++slot[r] > k) slot[r++] = 0;
          if (r == slot.size()) break;
        }
      }
    }
    return out;
  }

  std::vector<Design> neg(const std::set<Var>& vars, std::size_t depth) {
    std::vector<std::pair<Name, std::vector<std::optional<Branch>>>> options;
    for (const auto& [a, k] : sig.arity) {
      std::vector<std::optional<Branch>> opts{std::nullopt};
      if (depth > 0) {
        std::set<Var> inner = vars;
        std::vector<Var> bound;
        for (std::size_t i = 0; i < k; ++i) {
          bound.push_back(fresh(inner));
          inner.insert(bound.back());
        }
        for (const auto& body : pos(inner, depth - 1)) opts.push_back(Branch{bound, body});
      }
      options.emplace_back(a, std::move(opts));
    }
    std::vector<Design> out;
    std::vector<std::size_t> pick(options.size(), 0);
    for (;;) {
      std::map<Name, Branch> br;
      for (std::size_t i = 0; i < options.size(); ++i)
        if (const auto& o = options[i].second[pick[i]]) br.emplace(options[i].first, *o);
      out.push_back(Design::sum(std::move(br)));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i].second.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    return out;
  }

  static void product(const std::vector<std::vector<Design>>& choices,
                      const std::function<void(const std::vector<Design>&)>& f) {
    std::vector<Design> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == choices.size()) return f(cur);
      for (const auto& c : choices[i]) {
        cur.push_back(c);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
};

}  // namespace

std::vector<Design> enumerate_designs(Polarity pol, const Signature& sig, const std::set<Var>& free, std::size_t depth) {
  Enumerator e{sig};
  auto raw = pol == Polarity::Positive ? e.pos(free, depth) : e.neg(free, depth);
  std::vector<Design> out;
  std::set<std::string> seen;
  for (const auto& d : raw)
    if (seen.insert(fingerprint(d)).second) out.push_back(canonicalize(d));
  return out;
}

std::vector<MultiDesign> orthogonal_filter(const std::vector<MultiDesign>& candidates,
                                           const std::vector<MultiDesign>& against, std::size_t fuel) {
  std::vector<MultiDesign> out;
  for (const auto& c : candidates) {
    bool ok = true;
    for (const auto& a : against)
      if (pair_orthogonal(a, c, fuel) != Tri::True) {
        ok = false;
        break;
      }
    if (ok) out.push_back(c);
  }
  return out;
}

}  // namespace ludics
