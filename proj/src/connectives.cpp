#include "ludics/connectives.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace ludics {

std::string to_text(const NegAction& a) {
  std::string out = a.name + "(";
  for (std::size_t i = 0; i < a.vars.size(); ++i) {
    if (i) out += ",";
    out += a.vars[i];
  }
  return out + ")";
}

const NegAction* Connective::find(const Name& a) const {
  for (const auto& x : intro)
    if (x.name == a) return &x;
  for (const auto& x : elim)
    if (x.name == a) return &x;
  return nullptr;
}

namespace {

std::string actions_text(const std::vector<NegAction>& as) {
  std::string out = "{";
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (i) out += ", ";
    out += to_text(as[i]);
  }
  return out + "}";
}

bool contains(const std::vector<NegAction>& as, const NegAction& a) {
  return std::find(as.begin(), as.end(), a) != as.end();
}

}  // namespace

std::string to_text(const Connective& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.z.size(); ++i) {
    if (i) out += ",";
    out += c.z[i];
  }
  return out + " ; I=" + actions_text(c.intro) + " ; E=" + actions_text(c.elim) + ")";
}

ConnectiveReport validate_connective(const Connective& c, const Signature* sig) {
  ConnectiveReport r;
  auto bad = [&](std::string m) {
    r.valid = false;
    r.violations.push_back(std::move(m));
  };
  std::set<Var> zs(c.z.begin(), c.z.end());
  if (zs.size() != c.z.size()) bad("variables: repeated variable");
  if (zs.count(kAtomicAddress)) bad("variables: x0 among the bound variables");

  std::map<Name, NegAction> by_name;
  std::set<Var> used;
  auto visit = [&](const NegAction& a) {
    std::set<Var> vs(a.vars.begin(), a.vars.end());
    if (vs.size() != a.vars.size()) bad("actions: repeated argument in " + to_text(a));
    for (const auto& v : a.vars) {
      if (!zs.count(v)) bad("actions: " + v + " in " + to_text(a) + " is not a bound variable");
      used.insert(v);
    }
    auto [it, fresh] = by_name.emplace(a.name, a);
    if (!fresh && it->second != a) bad("actions: name " + a.name + " used by two different actions");
    if (sig && sig->has(a.name) && sig->arity.at(a.name) != a.vars.size())
      bad("actions: " + to_text(a) + " does not match the arity of " + a.name);
  };
  for (const auto& a : c.intro) visit(a);
  for (const auto& a : c.elim) visit(a);
  if (used != zs) bad("variables: union of the action arguments differs from the bound variables");
  r.empty_intro = c.intro.empty();
  r.empty_elim = c.elim.empty();
  return r;
}

void check_connective(const Connective& c, const Signature* sig) {
  auto r = validate_connective(c, sig);
  if (!r.valid) throw Error(ErrorKind::InvalidConnective, c.label + ": " + r.violations.front());
}

Signature signature_of(const Connective& c) {
  Signature s;
  for (const auto& a : c.intro) s.add(a.name, a.vars.size());
  for (const auto& a : c.elim) s.add(a.name, a.vars.size());
  return s;
}

Connective canonical(const Connective& c) {
  std::map<Var, Var> r;
  Connective out;
  out.label = c.label;
  for (std::size_t i = 0; i < c.z.size(); ++i) {
    r[c.z[i]] = "z" + std::to_string(i + 1);
    out.z.push_back(r[c.z[i]]);
  }
  auto ren = [&](const std::vector<NegAction>& as) {
    std::vector<NegAction> o;
    for (auto a : as) {
      for (auto& v : a.vars)
        if (r.count(v)) v = r[v];
      o.push_back(a);
    }
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    return o;
  };
  out.intro = ren(c.intro);
  out.elim = ren(c.elim);
  return out;
}

bool alpha_eq(const Connective& a, const Connective& b) {
  auto x = canonical(a), y = canonical(b);
  return x.z == y.z && x.intro == y.intro && x.elim == y.elim;
}

HarmonyReport check_harmony(const Connective& c) {
  HarmonyReport h;
  for (const auto& a : c.elim) {
    if (contains(c.intro, a))
      h.overlap.push_back(a);
    else
      h.missing_from_intro.push_back(a);
  }
  for (const auto& a : c.intro)
    if (!contains(c.elim, a)) h.missing_from_elim.push_back(a);
  h.inversion = h.missing_from_intro.empty();
  h.recovery = h.missing_from_elim.empty();
  h.harmony = h.inversion && h.recovery;
  return h;
}

// --- beta

namespace {

Design intro_sum(const Connective& c, const std::map<Name, Design>& family) {
  std::map<Name, Branch> br;
  for (const auto& a : c.intro) {
    auto it = family.find(a.name);
    if (it == family.end() || it->second.is_omega())
      throw Error(ErrorKind::InvalidConnective, "family is not total at " + a.name);
    br.emplace(a.name, Branch{a.vars, it->second});
  }
  return Design::sum(std::move(br));
}

}  // namespace

BetaResult beta_condition_check(const Connective& c, const std::map<Name, Design>& family, const NegAction& elim_action,
                                const std::vector<Design>& args, std::size_t /*fuel*/) {
  if (args.size() != elim_action.vars.size())
    throw Error(ErrorKind::ArityMismatch, to_text(elim_action) + " applied to " + std::to_string(args.size()) + " arguments");
  BetaResult r;
  Design cut = Design::app(intro_sum(c, family), elim_action.name, args);
  r.result = canonicalize(*step(cut));
  for (const auto& a : c.intro) {
    if (a.name != elim_action.name) continue;
    Bindings b;
    for (std::size_t i = 0; i < a.vars.size(); ++i) b.emplace(a.vars[i], args[i]);
    r.expected = substitute(family.at(a.name), b);
  }
  if (!r.expected) {
    r.detail = elim_action.name + " is not an intro action; the cut reduces to " + to_text(*r.result);
  } else if (r.result->is_omega()) {
    r.detail = "the cut reduces to omega";
  } else if (!alpha_eq(*r.result, *r.expected)) {
    r.detail = "reduct " + to_text(*r.result) + " differs from " + to_text(*r.expected);
  } else {
    r.holds = true;
  }
  return r;
}

BetaPoolReport beta_pool_check(const Connective& c) {
  // results only depend on the intro set and the elim action
  static thread_local std::unordered_map<std::string, std::pair<bool, std::size_t>> memo;
  const Design k_sum = Design::sum({{"k", Branch{{}, Design::daimon()}}});
  const std::vector<Design> arg_pool{k_sum, Design::var("w")};

  std::vector<std::vector<Design>> bodies;
  for (const auto& a : c.intro) {
    std::vector<Design> b{Design::daimon(), Design::app("u", "k", {})};
    if (!a.vars.empty()) b.push_back(Design::app(a.vars.front(), "k", {}));
    bodies.push_back(std::move(b));
  }

  BetaPoolReport rep;
  for (const auto& e : c.elim) {
    std::string key = actions_text(c.intro) + "|" + to_text(e);
    if (auto it = memo.find(key); it != memo.end()) {
      rep.checked += it->second.second;
      if (!it->second.first) {
        rep.holds = false;
        if (!rep.counterexample) rep.counterexample = "elim " + to_text(e);
      }
      continue;
    }
    bool ok = true;
    std::size_t checked = 0;
    std::vector<std::size_t> pick(bodies.size(), 0);
    for (;;) {
      std::map<Name, Design> family;
      for (std::size_t i = 0; i < c.intro.size(); ++i) family.emplace(c.intro[i].name, bodies[i][pick[i]]);
      std::vector<std::size_t> apick(e.vars.size(), 0);
      for (;;) {
        std::vector<Design> args;
        for (auto i : apick) args.push_back(arg_pool[i]);
        ++checked;
        if (!beta_condition_check(c, family, e, args).holds) ok = false;
        std::size_t i = 0;
        while (i < apick.size() && ++apick[i] == arg_pool.size()) apick[i++] = 0;
        if (i == apick.size()) break;
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == bodies[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    memo.emplace(key, std::make_pair(ok, checked));
    rep.checked += checked;
    if (!ok) {
      rep.holds = false;
      if (!rep.counterexample) rep.counterexample = "elim " + to_text(e);
    }
  }
  return rep;
}

// --- eta

Design eta_expand(const Design& n, const Connective& c) {
  if (!n.negative()) throw Error(ErrorKind::PolarityMismatch, "eta expansion of a positive design");
  std::set<Var> avoid = all_vars(n);
  FreshNames fresh(avoid, "e");
  std::map<Name, Branch> br;
  for (const auto& a : c.intro) {
    std::vector<Var> ys;
    std::vector<Design> args;
    for (std::size_t i = 0; i < a.vars.size(); ++i) {
      ys.push_back(fresh.next());
      args.push_back(Design::var(ys.back()));
    }
    br.emplace(a.name, Branch{ys, Design::app(n, a.name, args)});
  }
  return canonicalize(Design::sum(std::move(br)));
}

EtaResult eta_condition_check(const Connective& c) {
  EtaResult r;
  const std::vector<Design> probes{Design::var("n"), Design::sum({{"k", Branch{{}, Design::daimon()}}})};
  for (const auto& a : c.intro) {
    std::optional<Name> found;
    for (const auto& e : c.elim) {
      if (e.vars.size() != a.vars.size()) continue;
      bool same = true;
      for (const auto& n : probes) {
        std::vector<Design> args;
        for (const auto& v : a.vars) args.push_back(Design::var(v));
        Design want = Design::sum({{a.name, Branch{a.vars, Design::app(n, a.name, args)}}});
        Design got = Design::sum({{a.name, Branch{a.vars, Design::app(n, e.name, args)}}});
        if (!alpha_eq(want, got)) {
          same = false;
          break;
        }
      }
      if (same) {
        found = e.name;
        break;
      }
    }
    if (!found) {
      r.stuck = a.name;
      return r;
    }
    r.witness[a.name] = *found;
  }
  r.holds = true;
  return r;
}

// --- counter sets

namespace {

std::size_t z_index(const Connective& c, const Var& x) {
  auto it = std::find(c.z.begin(), c.z.end(), x);
  if (it == c.z.end()) throw Error(ErrorKind::InvalidConnective, x + " is not a variable of the connective");
  return static_cast<std::size_t>(it - c.z.begin());
}

void products(const std::vector<std::vector<Design>>& lists, const std::function<void(const std::vector<Design>&)>& f) {
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

}  // namespace

std::vector<Design> counter_set_intro(const Connective& c, const std::vector<BehaviourWorkbench>& positive) {
  if (positive.size() != c.arity())
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(c.arity()) + " workbenches");
  std::vector<Design> out;
  for (const auto& a : c.intro) {
    std::vector<std::vector<Design>> lists;
    for (const auto& x : a.vars) lists.push_back(positive[z_index(c, x)].tester_designs());
    products(lists, [&](const std::vector<Design>& ms) { out.push_back(Design::app(kAtomicAddress, a.name, ms)); });
  }
  return out;
}

std::vector<Design> counter_set_elim(const Connective& c, const std::vector<BehaviourWorkbench>& negative) {
  if (negative.size() != c.arity())
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(c.arity()) + " workbenches");
  std::vector<Design> out;
  for (const auto& a : c.elim) {
    for (const auto& x : a.vars) {
      for (const auto& q : negative[z_index(c, x)].tester_designs()) {
        std::map<Name, Branch> br;
        br.emplace(a.name, Branch{a.vars, rename_free(q, {{kAtomicAddress, x}})});
        for (const auto& b : c.elim)
          if (b.name != a.name) br.emplace(b.name, Branch{b.vars, Design::daimon()});
        out.push_back(canonicalize(Design::sum(std::move(br))));
      }
    }
  }
  return out;
}

Connective dual_connective(const Connective& c) {
  Connective d = c;
  d.label = c.label + "_dual";
  std::swap(d.intro, d.elim);
  return d;
}

// --- enumeration

std::vector<Connective> enumerate_connectives(const std::vector<Name>& names, std::size_t max_arity) {
  std::vector<Connective> out;
  std::size_t max_n = names.size() * max_arity;
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<Var> zs;
    for (std::size_t i = 1; i <= n; ++i) zs.push_back("z" + std::to_string(i));
    // argument tuples: ordered, distinct, length <= max_arity
    std::vector<std::vector<Var>> tuples{{}};
    for (std::size_t len = 1; len <= max_arity; ++len) {
      std::vector<std::vector<Var>> next;
      for (const auto& t : tuples) {
        if (t.size() != len - 1) continue;
        for (const auto& v : zs)
          if (std::find(t.begin(), t.end(), v) == t.end()) {
            auto u = t;
            u.push_back(v);
            next.push_back(u);
          }
      }
      tuples.insert(tuples.end(), next.begin(), next.end());
    }
    // per name: unused, or (role, tuple) with role 1 = intro, 2 = elim, 3 = both
    std::vector<std::pair<int, std::size_t>> options{{0, 0}};
    for (int role = 1; role <= 3; ++role)
      for (std::size_t t = 0; t < tuples.size(); ++t) options.emplace_back(role, t);
    std::vector<std::size_t> pick(names.size(), 0);
    for (;;) {
      Connective c;
      c.z = zs;
      std::set<Var> used;
      for (std::size_t i = 0; i < names.size(); ++i) {
        auto [role, t] = options[pick[i]];
        if (role == 0) continue;
        NegAction a{names[i], tuples[t]};
        used.insert(a.vars.begin(), a.vars.end());
        if (role & 1) c.intro.push_back(a);
        if (role & 2) c.elim.push_back(a);
      }
      if (used.size() == n) {
        c.label = to_text(c);
        out.push_back(std::move(c));
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return out;
}

// --- library

namespace library {

namespace {
Connective make(std::string label, std::vector<Var> z, std::vector<NegAction> intro, std::vector<NegAction> elim) {
  return Connective{std::move(label), std::move(z), std::move(intro), std::move(elim)};
}
}  // namespace

Connective with() {
  return make("With", {"x1", "x2"}, {{"pi1", {"x1"}}, {"pi2", {"x2"}}}, {{"pi1", {"x1"}}, {"pi2", {"x2"}}});
}

Connective plus() {
  auto c = dual_connective(with());
  c.label = "Plus";
  return c;
}

Connective shift() { return make("Shift", {"x1"}, {{"down", {"x1"}}}, {{"down", {"x1"}}}); }

Connective par() { return make("Par", {"x1", "x2"}, {{"p", {"x1", "x2"}}}, {{"p", {"x1", "x2"}}}); }

Connective with_par() {
  return make("WithPar", {"x1", "x2", "x3"}, {{"a", {"x1", "x2"}}, {"b", {"x3"}}}, {{"a", {"x1", "x2"}}, {"b", {"x3"}}});
}

Connective gamma() {
  return make("Gamma", {"x1", "x2", "x3"}, {{"a", {"x1", "x2"}}, {"b", {"x3"}}}, {{"c", {"x1"}}, {"d", {"x2", "x3"}}});
}

Connective delta() { return make("Delta", {"x1", "x2"}, {{"a", {"x1"}}, {"b", {"x2"}}}, {{"c", {"x2", "x1"}}}); }

Connective alpha0() { return make("Alpha0", {"x1", "x2"}, {{"a", {"x1"}}, {"b", {"x2"}}}, {{"c", {"x1"}}, {"b", {"x2"}}}); }

std::vector<Connective> all() { return {with(), plus(), shift(), par(), with_par(), gamma(), delta(), alpha0()}; }

}  // namespace library

}  // namespace ludics
