#include "ludics/interaction.hpp"

#include <algorithm>

namespace ludics {

namespace {

bool disjoint(const std::set<Var>& a, const std::set<Var>& b) {
  for (const auto& x : a)
    if (b.count(x)) return false;
  return true;
}

bool subset(const std::set<Var>& a, const std::set<Var>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool compatible(const MultiDesign& d, const MultiDesign& e) {
  if (!disjoint(d.fv(), e.fv()) || !disjoint(d.np(), e.np())) return false;
  if (d.polarity() != e.polarity()) return true;
  if (d.polarity() == Polarity::Positive) return false;
  auto fv = d.fv();
  auto fe = e.fv();
  fv.insert(fe.begin(), fe.end());
  for (const auto& x : d.np())
    if (!fv.count(x)) return true;
  for (const auto& x : e.np())
    if (!fv.count(x)) return true;
  return false;
}

bool quasi_closed_compatible(const MultiDesign& d, const MultiDesign& e) {
  return d.polarity() != e.polarity() && compatible(d, e) && subset(d.fv(), e.np()) && subset(e.fv(), d.np());
}

// --- cut

namespace {

Bindings take_bindings(MultiDesign& d, const std::set<Var>& vars) {
  Bindings s;
  for (auto it = d.bindings.begin(); it != d.bindings.end();) {
    if (vars.count(it->first)) {
      s.emplace(it->first, it->second);
      it = d.bindings.erase(it);
    } else {
      ++it;
    }
  }
  return s;
}

Design apply_bindings(const Design& t, const Bindings& b) { return b.empty() ? t : substitute(t, b); }

void substitute_all(MultiDesign& d, const Var& x, const Design& n) {
  if (d.positive && free_vars(*d.positive).count(x)) d.positive = substitute(*d.positive, x, n);
  for (auto& [y, m] : d.bindings)
    if (free_vars(m).count(x)) m = substitute(m, x, n);
}

}  // namespace

MultiDesign cut_multidesigns(const MultiDesign& d, const MultiDesign& e, const std::vector<std::size_t>& order) {
  if (!compatible(d, e)) throw Error(ErrorKind::NotCompatible, "cut of incompatible multi-designs");
  // members of e in canonical order
  std::vector<std::pair<std::optional<Var>, Design>> members;
  if (e.positive) members.emplace_back(std::nullopt, *e.positive);
  for (const auto& [x, n] : e.bindings) members.emplace_back(x, n);
  if (order.size() != members.size()) throw Error(ErrorKind::NotCompatible, "cut order has the wrong length");

  MultiDesign cur = d;
  for (std::size_t idx : order) {
    if (idx >= members.size()) throw Error(ErrorKind::NotCompatible, "cut order out of range");
    const auto& [place, t] = members[idx];
    Bindings s = take_bindings(cur, free_vars(t));
    Design t2 = apply_bindings(t, s);
    if (!place) {
      if (cur.positive) throw Error(ErrorKind::NotCompatible, "cut produces two positive designs");
      cur.positive = t2;
    } else if (!cur.fv().count(*place)) {
      cur.bindings.emplace(*place, t2);
    } else {
      substitute_all(cur, *place, t2);
    }
  }
  return cur;
}

MultiDesign cut_multidesigns(const MultiDesign& d, const MultiDesign& e) {
  std::vector<std::size_t> order(e.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return cut_multidesigns(d, e, order);
}

Tri msd_orthogonal(const MultiDesign& d, const MultiDesign& e, std::size_t fuel) {
  if (!quasi_closed_compatible(d, e)) throw Error(ErrorKind::NotCompatible, "orthogonality needs quasi closed compatible multi-designs");
  MultiDesign c = cut_multidesigns(d, e);
  bool exhausted = false;
  auto check = [&](const Design& t) {
    auto r = normalize(t, fuel);
    if (r.exhausted()) {
      exhausted = true;
      return false;
    }
    return r.converged() && r.design.is_daimon();
  };
  if (c.positive && check(*c.positive)) return Tri::True;
  for (const auto& [x, n] : c.bindings)
    if (check(n)) return Tri::True;
  return exhausted ? Tri::FuelExhausted : Tri::False;
}

// --- interaction sequences

Interaction iseq(const MultiDesign& d0, const MultiDesign& e0, std::size_t fuel) {
  if (!quasi_closed_compatible(d0, e0))
    throw Error(ErrorKind::NotCompatible, "interaction needs quasi closed compatible multi-designs");
  MultiDesign d = d0, e = e0;
  std::set<Var> avoid = d.all_vars();
  auto ea = e.all_vars();
  avoid.insert(ea.begin(), ea.end());
  FreshNames fresh(avoid, "y");
  Interaction out;
  for (;;) {
    bool in_d = d.positive.has_value();
    MultiDesign& own = in_d ? d : e;
    MultiDesign& other = in_d ? e : d;
    Design p = *own.positive;
    if (p.is_daimon()) {
      if (in_d) out.actions.push_back(LocatedAction::daimon());
      out.status = EvalOutcome::Status::Converged;
      return out;
    }
    if (p.is_omega()) {
      out.status = EvalOutcome::Status::Omega;
      return out;
    }
    if (!p.head().is_var()) throw Error(ErrorKind::MalformedDesign, "interaction of a design with a cut");
    const Var x = p.head().var_name();
    auto it = other.bindings.find(x);
    if (it == other.bindings.end()) throw Error(ErrorKind::NotCompatible, "no negative design placed at " + x);
    Design n = it->second;
    if (!n.is_sum()) throw Error(ErrorKind::MalformedDesign, "interaction of a design with an identity");
    if (out.steps >= fuel) {
      out.status = EvalOutcome::Status::FuelExhausted;
      return out;
    }
    const auto& margs = p.args();
    std::vector<Var> ys;
    for (std::size_t i = 0; i < margs.size(); ++i) ys.push_back(fresh.next());
    Design body = Design::omega();
    if (const Branch* br = n.branch(p.name())) {
      if (br->vars.size() != margs.size())
        throw Error(ErrorKind::MalformedDesign, "arity mismatch on '" + p.name() + "'");
      std::map<Var, Var> r;
      for (std::size_t i = 0; i < ys.size(); ++i) r[br->vars[i]] = ys[i];
      body = rename_free(br->body, r);
    }
    out.actions.push_back(in_d ? LocatedAction::pos(x, p.name(), ys) : LocatedAction::neg(x, p.name(), ys));
    ++out.steps;
    own.positive.reset();
    for (std::size_t i = 0; i < ys.size(); ++i) own.bindings.emplace(ys[i], margs[i]);
    other.bindings.erase(it);
    other.positive = body;
  }
}

}  // namespace ludics
