#include "ludics/paths.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ludics {

LocatedAction LocatedAction::flipped() const {
  LocatedAction k = *this;
  if (kind == Kind::Pos)
    k.kind = Kind::Neg;
  else if (kind == Kind::Neg)
    k.kind = Kind::Pos;
  return k;
}

bool operator<(const LocatedAction& a, const LocatedAction& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.address != b.address) return a.address < b.address;
  if (a.name != b.name) return a.name < b.name;
  return a.args < b.args;
}

std::string to_text(const LocatedAction& k) {
  if (k.is_daimon()) return "daimon";
  std::string args;
  for (std::size_t i = 0; i < k.args.size(); ++i) {
    if (i) args += ",";
    args += k.args[i];
  }
  if (k.kind == LocatedAction::Kind::Pos) return k.address + "|" + k.name + "<" + args + ">";
  return k.name + "^" + k.address + "(" + args + ")";
}

std::string to_text(const Sequence& s) {
  if (s.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " ";
    out += to_text(s[i]);
  }
  return out;
}

// --- aj-sequences

std::optional<AjViolation> aj_violation(const Sequence& s) {
  std::set<Var> addresses;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& k = s[i];
    if (k.is_daimon()) {
      if (i + 1 != s.size()) return AjViolation{"Daimon", i, "daimon is not the last action"};
    } else {
      std::set<Var> args(k.args.begin(), k.args.end());
      if (args.size() != k.args.size()) return AjViolation{"Action", i, "repeated argument"};
      if (args.count(k.address)) return AjViolation{"Action", i, "address among the arguments"};
      if (!addresses.insert(k.address).second)
        return AjViolation{"Linearity", i, "variable " + k.address + " is the address of two actions"};
    }
    if (i > 0 && s[i - 1].polarity() == k.polarity()) return AjViolation{"Alternation", i, "two actions of the same polarity"};
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& k = s[i];
    if (!k.proper()) continue;
    std::size_t anywhere = 0, valid = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      const auto& a = s[j].args;
      if (std::find(a.begin(), a.end(), k.address) == a.end()) continue;
      ++anywhere;
      if (j < i && s[j].polarity() != k.polarity()) ++valid;
    }
    if (anywhere > 0 && valid != 1)
      return AjViolation{"Justification", i, "address " + k.address + " is neither initial nor uniquely justified"};
  }
  return std::nullopt;
}

std::vector<std::optional<std::size_t>> justifiers(const Sequence& s) {
  std::vector<std::optional<std::size_t>> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].proper()) continue;
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = s[j].args;
      if (s[j].polarity() != s[i].polarity() && std::find(a.begin(), a.end(), s[i].address) != a.end()) {
        out[i] = j;
        break;
      }
    }
  }
  return out;
}

AjSequence check_aj(const Sequence& s) {
  if (auto v = aj_violation(s))
    throw Error(ErrorKind::NotAPath, v->clause + " violated at action " + std::to_string(v->index) + ": " + v->detail);
  return AjSequence{s, justifiers(s)};
}

// --- canonical forms

namespace {

Sequence canonical_with_map(const Sequence& s, std::map<Var, Var>& rename) {
  std::set<Var> bound;
  for (const auto& k : s) bound.insert(k.args.begin(), k.args.end());
  std::set<Var> free;
  for (const auto& k : s)
    if (k.proper() && !bound.count(k.address)) free.insert(k.address);
  FreshNames fresh(free);
  rename.clear();
  for (const auto& k : s)
    for (const auto& x : k.args)
      if (!rename.count(x)) rename[x] = fresh.next();
  Sequence out = s;
  for (auto& k : out) {
    if (!k.proper()) continue;
    auto it = rename.find(k.address);
    if (it != rename.end()) k.address = it->second;
    for (auto& x : k.args) x = rename[x];
  }
  return out;
}

Sequence rename_seq(const Sequence& s, const std::map<Var, Var>& r) {
  Sequence out = s;
  for (auto& k : out) {
    if (!k.proper()) continue;
    if (auto it = r.find(k.address); it != r.end()) k.address = it->second;
    for (auto& x : k.args)
      if (auto it = r.find(x); it != r.end()) x = it->second;
  }
  return out;
}

std::set<Var> seq_vars(const Sequence& s) {
  std::set<Var> out;
  for (const auto& k : s) {
    if (!k.proper()) continue;
    out.insert(k.address);
    out.insert(k.args.begin(), k.args.end());
  }
  return out;
}

std::set<Var> seq_bound(const Sequence& s) {
  std::set<Var> out;
  for (const auto& k : s) out.insert(k.args.begin(), k.args.end());
  return out;
}

}  // namespace

Sequence canonical(const Sequence& s) {
  std::map<Var, Var> r;
  return canonical_with_map(s, r);
}

bool seq_alpha_eq(const Sequence& a, const Sequence& b) { return canonical(a) == canonical(b); }

PathSet canonical_set(const PathSet& s) {
  PathSet out;
  for (const auto& p : s) out.insert(canonical(p));
  return out;
}

// --- dual, views

Sequence dual_seq(const Sequence& s) {
  Sequence out;
  if (!s.empty() && s.back().is_daimon()) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) out.push_back(s[i].flipped());
    return out;
  }
  for (const auto& k : s) out.push_back(k.flipped());
  out.push_back(LocatedAction::daimon());
  return out;
}

namespace {

std::vector<std::size_t> view_idx(const Sequence& s, std::size_t n, bool flip,
                                  const std::vector<std::optional<std::size_t>>& just) {
  std::vector<std::size_t> out;
  // walk backwards, collecting positions, then reverse
  while (n > 0) {
    std::size_t i = n - 1;
    const auto& k = s[i];
    Polarity pol = k.polarity();
    if (flip && k.proper()) pol = opposite(pol);
    out.push_back(i);
    if (pol == Polarity::Positive) {
      n = i;
    } else if (!just[i]) {
      n = 0;
    } else {
      std::size_t j = *just[i];
      out.push_back(j);
      // continue with the view of the prefix ending at j, whose last action is j
      Polarity pj = s[j].polarity();
      if (flip && s[j].proper()) pj = opposite(pj);
      if (pj == Polarity::Positive) {
        n = j;
      } else {
        // negative justifier (only possible under flip): re-enter at j
        out.pop_back();
        n = j + 1;
      }
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Sequence pick(const Sequence& s, const std::vector<std::size_t>& idx) {
  Sequence out;
  for (auto i : idx) out.push_back(s[i]);
  return out;
}

}  // namespace

std::vector<std::size_t> view_indices(const Sequence& s, bool flip) {
  return view_idx(s, s.size(), flip, justifiers(s));
}

Sequence view(const Sequence& s) { return pick(s, view_indices(s)); }

Sequence anti_view(const Sequence& s) { return dual_seq(view(dual_seq(s))); }

Sequence biview(const Sequence& s) {
  auto just = justifiers(s);
  std::vector<std::size_t> idx;
  std::size_t n = s.size();
  bool daimon = false;
  if (n > 0 && s[n - 1].is_daimon()) {
    daimon = true;
    --n;
  }
  while (n > 0) {
    std::size_t i = n - 1;
    idx.push_back(i);
    n = just[i] ? *just[i] + 1 : 0;
  }
  std::reverse(idx.begin(), idx.end());
  Sequence out = pick(s, idx);
  if (daimon) out.push_back(LocatedAction::daimon());
  return out;
}

// --- paths

std::optional<PathViolation> path_violation(const Sequence& s) {
  if (auto v = aj_violation(s)) return PathViolation{v->clause, v->index};
  auto just = justifiers(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].proper() || !just[i]) continue;
    bool pos = s[i].polarity() == Polarity::Positive;
    auto idx = view_idx(s, i, !pos, just);
    if (std::find(idx.begin(), idx.end(), *just[i]) == idx.end())
      return PathViolation{pos ? "P-visibility" : "O-visibility", i};
  }
  return std::nullopt;
}

bool is_path(const Sequence& s) { return !path_violation(s); }

Polarity path_polarity(const Sequence& s) { return s.empty() ? Polarity::Negative : s.front().polarity(); }

// --- views of designs

namespace {

struct ViewBuilder {
  PathSet& out;
  FreshNames& fresh;

  void pos(const Design& p, Sequence& prefix, const std::map<Var, Var>& env) {
    switch (p.kind()) {
      case Design::Kind::Omega: return;
      case Design::Kind::Daimon:
        prefix.push_back(LocatedAction::daimon());
        out.insert(canonical(prefix));
        prefix.pop_back();
        return;
      case Design::Kind::App: {
        if (!p.head().is_var()) throw Error(ErrorKind::MalformedDesign, "views of a design with a cut");
        Var x = p.head().var_name();
        if (auto it = env.find(x); it != env.end()) x = it->second;
        std::vector<Var> ys;
        for (std::size_t i = 0; i < p.args().size(); ++i) ys.push_back(fresh.next());
        prefix.push_back(LocatedAction::pos(x, p.name(), ys));
        out.insert(canonical(prefix));
        for (std::size_t i = 0; i < p.args().size(); ++i) neg(p.args()[i], ys[i], prefix, env);
        prefix.pop_back();
        return;
      }
      default: throw Error(ErrorKind::PolarityMismatch, "positive design expected");
    }
  }

  void neg(const Design& n, const Var& x, Sequence& prefix, const std::map<Var, Var>& env) {
    if (!n.is_sum()) throw Error(ErrorKind::MalformedDesign, "views of a design with an identity");
    out.insert(canonical(prefix));
    for (const auto& [a, br] : n.branches()) {
      std::map<Var, Var> inner = env;
      std::vector<Var> ys;
      for (const auto& v : br.vars) {
        ys.push_back(fresh.next());
        inner[v] = ys.back();
      }
      prefix.push_back(LocatedAction::neg(x, a, ys));
      out.insert(canonical(prefix));
      pos(br.body, prefix, inner);
      prefix.pop_back();
    }
  }
};

}  // namespace

PathSet views_of(const Design& n, const Var& x) {
  PathSet out;
  std::set<Var> avoid = all_vars(n);
  avoid.insert(x);
  FreshNames fresh(avoid);
  ViewBuilder b{out, fresh};
  Sequence prefix;
  b.neg(n, x, prefix, {});
  return out;
}

PathSet views_of(const Design& t) {
  if (t.negative()) return views_of(t, kAtomicAddress);
  PathSet out;
  FreshNames fresh(all_vars(t));
  ViewBuilder b{out, fresh};
  Sequence prefix;
  b.pos(t, prefix, {});
  return out;
}

PathSet views_of(const MultiDesign& d) {
  PathSet out;
  if (d.positive) out = views_of(*d.positive);
  for (const auto& [x, n] : d.bindings) {
    auto v = views_of(n, x);
    out.insert(v.begin(), v.end());
  }
  return out;
}

namespace {

bool path_of_views(const Sequence& p, const PathSet& views, Polarity pol) {
  if (!is_path(p)) return false;
  if (path_polarity(p) != pol) return false;
  for (std::size_t n = (pol == Polarity::Positive ? 1 : 0); n <= p.size(); ++n) {
    Sequence prefix(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n));
    if (!views.count(canonical(view(prefix)))) return false;
  }
  return true;
}

}  // namespace

bool is_path_of(const Sequence& p, const MultiDesign& d) { return path_of_views(p, views_of(d), d.polarity()); }

bool is_path_of(const Sequence& p, const Design& t) { return is_path_of(p, MultiDesign::of(t)); }

PathSet paths_of(const MultiDesign& d, std::size_t max_len) {
  PathSet views = views_of(d);
  std::map<Sequence, std::vector<LocatedAction>> next;
  for (const auto& v : views) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      Sequence pre(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
      auto& slot = next[pre];
      if (std::find(slot.begin(), slot.end(), v[k]) == slot.end()) slot.push_back(v[k]);
    }
  }
  auto lookup = [&](const Sequence& w) -> const std::vector<LocatedAction>& {
    static const std::vector<LocatedAction> none;
    auto it = next.find(w);
    return it == next.end() ? none : it->second;
  };

  PathSet out;
  FreshNames fresh(d.all_vars());
  Polarity pol = d.polarity();

  std::function<void(const Sequence&)> dfs = [&](const Sequence& s) {
    if (!s.empty() || pol == Polarity::Negative) out.insert(canonical(s));
    if (s.size() >= max_len) return;
    if (!s.empty() && s.back().is_daimon()) return;
    Polarity want = s.empty() ? pol : opposite(s.back().polarity());

    auto attempt = [&](const LocatedAction& k, const std::map<Var, Var>& back) {
      Sequence t = s;
      LocatedAction a = k;
      if (a.proper()) {
        if (auto it = back.find(a.address); it != back.end()) a.address = it->second;
        for (auto& x : a.args) x = fresh.next();
      }
      t.push_back(a);
      if (is_path(t)) dfs(t);
    };

    if (want == Polarity::Positive) {
      std::map<Var, Var> fwd;
      Sequence w = canonical_with_map(view(s), fwd);
      std::map<Var, Var> back;
      for (const auto& [a, b] : fwd) back[b] = a;
      for (const auto& k : lookup(w))
        if (k.polarity() == Polarity::Positive) attempt(k, back);
      return;
    }
    for (const auto& k : lookup({}))
      if (k.kind == LocatedAction::Kind::Neg) attempt(k, {});
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j].kind != LocatedAction::Kind::Pos) continue;
      Sequence s0(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(j + 1));
      std::map<Var, Var> fwd;
      Sequence w = canonical_with_map(view(s0), fwd);
      std::map<Var, Var> back;
      for (const auto& [a, b] : fwd) back[b] = a;
      std::set<Var> offered;
      for (const auto& y : s[j].args) offered.insert(fwd[y]);
      for (const auto& k : lookup(w))
        if (k.kind == LocatedAction::Kind::Neg && offered.count(k.address)) attempt(k, back);
    }
  };
  dfs({});
  return out;
}

PathSet paths_of(const Design& t, std::size_t max_len) { return paths_of(MultiDesign::of(t), max_len); }

// --- shuffles

namespace {

void merge(const Sequence& p, const Sequence& q, std::size_t i, std::size_t j, const std::set<LocatedAction>& in_p,
           const std::set<LocatedAction>& in_q, Sequence& cur, PathSet& out) {
  if (i == p.size() && j == q.size()) {
    if (is_path(cur)) out.insert(cur);
    return;
  }
  // prune on the prefix: alternation and daimon placement
  if (!cur.empty()) {
    if (cur.back().is_daimon()) return;
    if (cur.size() >= 2 && cur[cur.size() - 2].polarity() == cur.back().polarity()) return;
  }
  if (i < p.size() && j < q.size() && p[i] == q[j]) {
    cur.push_back(p[i]);
    merge(p, q, i + 1, j + 1, in_p, in_q, cur, out);
    cur.pop_back();
  }
  if (i < p.size() && !in_q.count(p[i])) {
    cur.push_back(p[i]);
    merge(p, q, i + 1, j, in_p, in_q, cur, out);
    cur.pop_back();
  }
  if (j < q.size() && !in_p.count(q[j])) {
    cur.push_back(q[j]);
    merge(p, q, i, j + 1, in_p, in_q, cur, out);
    cur.pop_back();
  }
}

PathSet interleavings(const Sequence& p, const Sequence& q) {
  std::set<LocatedAction> in_p(p.begin(), p.end()), in_q(q.begin(), q.end());
  PathSet out;
  Sequence cur;
  merge(p, q, 0, 0, in_p, in_q, cur, out);
  return out;
}

}  // namespace

std::optional<PathSet> shuffle(const Sequence& p, const Sequence& q) {
  Polarity pp = path_polarity(p), pq = path_polarity(q);
  if (pp != pq) return std::nullopt;
  std::set<Var> taken = seq_vars(p);
  auto tq = seq_vars(q);
  taken.insert(tq.begin(), tq.end());
  FreshNames fresh(taken);
  std::map<Var, Var> r;
  if (pp == Polarity::Negative) {
    for (const auto& x : seq_bound(q)) r[x] = fresh.next();
    return interleavings(p, rename_seq(q, r));
  }
  // positive: same first action up to the names of its arguments
  const auto& a = p.front();
  const auto& b = q.front();
  if (a.kind != b.kind || a.is_daimon() != b.is_daimon()) return std::nullopt;
  if (a.proper() && (a.address != b.address || a.name != b.name || a.args.size() != b.args.size()))
    return std::nullopt;
  for (std::size_t i = 0; i < b.args.size(); ++i) r[b.args[i]] = a.args[i];
  for (const auto& x : seq_bound(q))
    if (!r.count(x)) r[x] = fresh.next();
  Sequence q2 = rename_seq(q, r);
  Sequence p1(p.begin() + 1, p.end()), q1(q2.begin() + 1, q2.end());
  PathSet out;
  for (const auto& u : interleavings(p1, q1)) {
    Sequence full{a};
    full.insert(full.end(), u.begin(), u.end());
    if (is_path(full)) out.insert(full);
  }
  return out;
}

PathSet shuffle_sets(const PathSet& d, const PathSet& e) {
  PathSet out;
  for (const auto& p : d)
    for (const auto& q : e)
      if (auto s = shuffle(p, q))
        for (const auto& r : *s) out.insert(canonical(r));
  return out;
}

// --- restriction

Sequence restrict(const Sequence& s, const Sequence& selector) {
  Sequence out;
  for (const auto& k : s)
    if (std::find(selector.begin(), selector.end(), k) != selector.end()) out.push_back(k);
  return out;
}

Sequence restrict(const Sequence& p, const MultiDesign& e) {
  if (p.size() > 20) throw Error(ErrorKind::NotAPath, "restriction limited to 20 actions");
  PathSet views = views_of(e);
  Polarity pol = e.polarity();
  std::size_t n = p.size();
  // largest subsets first
  for (std::size_t k = n + 1; k-- > 0;) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      Sequence sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask[i]) sub.push_back(p[i]);
      if (path_of_views(sub, views, pol)) return sub;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return {};
}

// --- completion

namespace {

struct Completer {
  const PathSet& visited;
  const Signature& sig;
  FreshNames& fresh;

  Design pos(const Design& p, Sequence& prefix, const std::map<Var, Var>& env) {
    if (!p.is_app()) return Design::daimon();  // daimon stays, Omega becomes daimon
    Var x = p.head().var_name();
    if (auto it = env.find(x); it != env.end()) x = it->second;
    std::vector<Var> ys;
    for (std::size_t i = 0; i < p.args().size(); ++i) ys.push_back(fresh.next());
    prefix.push_back(LocatedAction::pos(x, p.name(), ys));
    if (!visited.count(canonical(prefix))) {
      prefix.pop_back();
      return Design::daimon();
    }
    std::vector<Design> args;
    for (std::size_t i = 0; i < p.args().size(); ++i) args.push_back(neg(p.args()[i], ys[i], prefix, env));
    prefix.pop_back();
    return Design::app(p.head(), p.name(), std::move(args));
  }

  Design neg(const Design& n, const Var& x, Sequence& prefix, const std::map<Var, Var>& env) {
    if (!n.is_sum()) throw Error(ErrorKind::MalformedDesign, "completion of a design with an identity");
    std::map<Name, Branch> out;
    for (const auto& [a, ar] : sig.arity) {
      const Branch* br = n.branch(a);
      if (!br) {
        std::vector<Var> vs;
        for (std::size_t i = 0; i < ar; ++i) vs.push_back(fresh.next());
        out.emplace(a, Branch{vs, Design::daimon()});
        continue;
      }
      std::map<Var, Var> inner = env;
      std::vector<Var> ys;
      for (const auto& v : br->vars) {
        ys.push_back(fresh.next());
        inner[v] = ys.back();
      }
      prefix.push_back(LocatedAction::neg(x, a, ys));
      Design body = pos(br->body, prefix, inner);
      prefix.pop_back();
      out.emplace(a, Branch{br->vars, std::move(body)});
    }
    return Design::sum(std::move(out));
  }
};

}  // namespace

Design path_completion(const Sequence& p, const Design& t, const Signature& sig) {
  if (!is_path_of(p, t)) throw Error(ErrorKind::NotAPath, "not a path of the design: " + to_text(p));
  PathSet visited;
  for (std::size_t n = 1; n <= p.size(); ++n)
    visited.insert(canonical(view(Sequence(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n)))));
  std::set<Var> avoid = all_vars(t);
  avoid.insert(kAtomicAddress);
  FreshNames fresh(avoid);
  Completer c{visited, sig, fresh};
  Sequence prefix;
  if (t.positive()) return canonicalize(c.pos(t, prefix, {}));
  return canonicalize(c.neg(t, kAtomicAddress, prefix, {}));
}

PathSet relabel_initial(const PathSet& v, const Var& x) {
  PathSet out;
  for (const auto& p : v) {
    Sequence q = p;
    if (!q.empty() && q.front().proper() && q.front().address == kAtomicAddress) q.front().address = x;
    out.insert(canonical(q));
  }
  return out;
}

}  // namespace ludics
