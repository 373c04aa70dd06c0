#include "ludics/reduction.hpp"

#include <unordered_set>

namespace ludics {

const char* to_string(EvalOutcome::Status s) {
  switch (s) {
    case EvalOutcome::Status::Converged: return "converged";
    case EvalOutcome::Status::Omega: return "omega";
    case EvalOutcome::Status::FuelExhausted: return "fuel_exhausted";
  }
  return "?";
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::FuelExhausted: return "fuel_exhausted";
  }
  return "?";
}

Design EvalOutcome::value() const {
  if (status == Status::FuelExhausted) throw std::logic_error("value() on FuelExhausted outcome");
  return status == Status::Omega ? Design::omega() : design;
}

std::optional<Design> step(const Design& p) {
  if (!p.is_app() || !p.head().is_sum()) return std::nullopt;
  const Branch* br = p.head().branch(p.name());
  if (!br) return Design::omega();
  if (br->vars.size() != p.args().size())
    throw Error(ErrorKind::MalformedDesign, "cut on '" + p.name() + "' with mismatched arity");
  Bindings b;
  for (std::size_t i = 0; i < br->vars.size(); ++i) b.emplace(br->vars[i], p.args()[i]);
  return substitute(br->body, b);
}

namespace {

struct Budget {
  std::size_t remaining;
  std::size_t used = 0;
};

// nullopt on exhaustion
std::optional<Design> hnf(const Design& t, Budget& budget) {
  if (t.negative()) return t;
  Design cur = t;
  std::unordered_set<std::string> seen;
  bool first = true;
  while (cur.is_app() && cur.head().is_sum()) {
    if (free_vars(cur).empty()) {
      // step results are already canonical
      std::string fp = first ? fingerprint(cur) : to_text(cur);
      if (!seen.insert(std::move(fp)).second) return Design::omega();
    }
    first = false;
    if (budget.remaining == 0) return std::nullopt;
    --budget.remaining;
    ++budget.used;
    cur = *step(cur);
  }
  return cur;
}

std::optional<Design> norm(const Design& t, Budget& budget) {
  switch (t.kind()) {
    case Design::Kind::Var: return t;
    case Design::Kind::Sum: {
      std::map<Name, Branch> out;
      for (const auto& [a, br] : t.branches()) {
        auto body = norm(br.body, budget);
        if (!body) return std::nullopt;
        out.emplace(a, Branch{br.vars, std::move(*body)});
      }
      return Design::sum(std::move(out));
    }
    default: {
      auto h = hnf(t, budget);
      if (!h) return std::nullopt;
      if (!h->is_app()) return h;
      std::vector<Design> args;
      for (const auto& a : h->args()) {
        auto n = norm(a, budget);
        if (!n) return std::nullopt;
        args.push_back(std::move(*n));
      }
      return Design::app(h->head(), h->name(), std::move(args));
    }
  }
}

EvalOutcome finish(const std::optional<Design>& d, const Budget& b) {
  EvalOutcome out;
  out.steps = b.used;
  if (!d)
    out.status = EvalOutcome::Status::FuelExhausted;
  else if (d->is_omega())
    out.status = EvalOutcome::Status::Omega;
  else {
    out.status = EvalOutcome::Status::Converged;
    out.design = *d;
  }
  return out;
}

}  // namespace

EvalOutcome head_normal_form(const Design& t, std::size_t fuel) {
  Budget b{fuel};
  auto d = hnf(t, b);
  return finish(d, b);
}

EvalOutcome normalize(const Design& t, std::size_t fuel) {
  Budget b{fuel};
  auto d = norm(t, b);
  return finish(d, b);
}

Tri converges_to_daimon(const Design& p, std::size_t fuel) {
  if (!p.positive()) throw Error(ErrorKind::PolarityMismatch, "converges_to_daimon expects a positive design");
  // P converges to daimon iff its head normal form is daimon
  auto r = head_normal_form(p, fuel);
  if (r.exhausted()) return Tri::FuelExhausted;
  return r.converged() && r.design.is_daimon() ? Tri::True : Tri::False;
}

}  // namespace ludics
