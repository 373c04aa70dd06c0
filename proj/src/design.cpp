#include "ludics/design.hpp"

#include <algorithm>

namespace ludics {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedDesign: return "MalformedDesign";
    case ErrorKind::PolarityMismatch: return "PolarityMismatch";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::InvalidConnective: return "InvalidConnective";
    case ErrorKind::InvalidWorkbench: return "InvalidWorkbench";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ArityError: return "ArityError";
  }
  return "Error";
}

std::size_t Signature::of(const Name& a) const {
  auto it = arity.find(a);
  if (it == arity.end()) throw Error(ErrorKind::UnknownName, "name '" + a + "' not in signature");
  return it->second;
}

void Signature::add(const Name& a, std::size_t n) {
  auto [it, fresh] = arity.emplace(a, n);
  if (!fresh && it->second != n)
    throw Error(ErrorKind::ArityError, "name '" + a + "' used with arity " + std::to_string(n) +
                                           " and " + std::to_string(it->second));
}

Signature Signature::merged(const Signature& other) const {
  Signature s = *this;
  for (const auto& [a, n] : other.arity) s.add(a, n);
  return s;
}

namespace detail {
struct Node {
  Design::Kind kind;
  Var var;
  std::optional<Design> head;
  Name name;
  std::vector<Design> args;
  std::map<Name, Branch> branches;
};
}  // namespace detail

namespace {

std::shared_ptr<const detail::Node> make_leaf(Design::Kind k) {
  auto n = std::make_shared<detail::Node>();
  n->kind = k;
  return n;
}

const std::shared_ptr<const detail::Node>& omega_node() {
  static const std::shared_ptr<const detail::Node> n = make_leaf(Design::Kind::Omega);
  return n;
}

const std::shared_ptr<const detail::Node>& daimon_node() {
  static const std::shared_ptr<const detail::Node> n = make_leaf(Design::Kind::Daimon);
  return n;
}

const std::vector<Design>& no_args() {
  static const std::vector<Design> v;
  return v;
}

const std::map<Name, Branch>& no_branches() {
  static const std::map<Name, Branch> m;
  return m;
}

}  // namespace

Design::Design() : node_(omega_node()) {}

Design Design::daimon() { return Design(daimon_node()); }
Design Design::omega() { return Design(omega_node()); }

Design Design::var(Var x) {
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::Var;
  n->var = std::move(x);
  return Design(std::move(n));
}

Design Design::app(Design head, Name a, std::vector<Design> args) {
  if (!head.negative())
    throw Error(ErrorKind::PolarityMismatch, "head of '" + a + "' application must be negative");
  for (const auto& d : args)
    if (!d.negative())
      throw Error(ErrorKind::PolarityMismatch, "argument of '" + a + "' must be negative");
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::App;
  n->head = std::move(head);
  n->name = std::move(a);
  n->args = std::move(args);
  return Design(std::move(n));
}

Design Design::app(const Var& head, Name a, std::vector<Design> args) {
  return app(Design::var(head), std::move(a), std::move(args));
}

Design Design::sum(std::map<Name, Branch> branches) {
  for (auto it = branches.begin(); it != branches.end();) {
    const Branch& b = it->second;
    if (!b.body.positive())
      throw Error(ErrorKind::PolarityMismatch, "body of branch '" + it->first + "' must be positive");
    std::set<Var> seen(b.vars.begin(), b.vars.end());
    if (seen.size() != b.vars.size())
      throw Error(ErrorKind::MalformedDesign, "repeated bound variable in branch '" + it->first + "'");
    // Omega bodies are not stored
    if (b.body.is_omega())
      it = branches.erase(it);
    else
      ++it;
  }
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::Sum;
  n->branches = std::move(branches);
  return Design(std::move(n));
}

Design Design::sum() { return sum({}); }

Design::Kind Design::kind() const { return node_->kind; }

Polarity Design::polarity() const {
  switch (node_->kind) {
    case Kind::Var:
    case Kind::Sum: return Polarity::Negative;
    default: return Polarity::Positive;
  }
}

const Var& Design::var_name() const {
  if (kind() != Kind::Var) throw Error(ErrorKind::MalformedDesign, "not a variable");
  return node_->var;
}

const Design& Design::head() const {
  if (kind() != Kind::App) throw Error(ErrorKind::MalformedDesign, "not an application");
  return *node_->head;
}

const Name& Design::name() const {
  if (kind() != Kind::App) throw Error(ErrorKind::MalformedDesign, "not an application");
  return node_->name;
}

const std::vector<Design>& Design::args() const {
  if (kind() != Kind::App) return no_args();
  return node_->args;
}

const std::map<Name, Branch>& Design::branches() const {
  if (kind() != Kind::Sum) return no_branches();
  return node_->branches;
}

const Branch* Design::branch(const Name& a) const {
  const auto& bs = branches();
  auto it = bs.find(a);
  return it == bs.end() ? nullptr : &it->second;
}

bool operator==(const Design& a, const Design& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Design::Kind::Daimon:
    case Design::Kind::Omega: return true;
    case Design::Kind::Var: return a.var_name() == b.var_name();
    case Design::Kind::App:
      return a.name() == b.name() && a.head() == b.head() && a.args() == b.args();
    case Design::Kind::Sum: {
      const auto& x = a.branches();
      const auto& y = b.branches();
      if (x.size() != y.size()) return false;
      for (auto i = x.begin(), j = y.begin(); i != x.end(); ++i, ++j) {
        if (i->first != j->first || i->second.vars != j->second.vars || i->second.body != j->second.body)
          return false;
      }
      return true;
    }
  }
  return false;
}

Var FreshNames::next() {
  for (;;) {
    Var v = prefix_ + std::to_string(counter_++);
    if (!avoid_.count(v)) return v;
  }
}

// --- free variables

namespace {

void collect_fv(const Design& t, std::set<Var>& out, std::vector<Var>& bound) {
  switch (t.kind()) {
    case Design::Kind::Var:
      if (std::find(bound.begin(), bound.end(), t.var_name()) == bound.end()) out.insert(t.var_name());
      return;
    case Design::Kind::App:
      collect_fv(t.head(), out, bound);
      for (const auto& a : t.args()) collect_fv(a, out, bound);
      return;
    case Design::Kind::Sum:
      for (const auto& [a, br] : t.branches()) {
        std::size_t mark = bound.size();
        bound.insert(bound.end(), br.vars.begin(), br.vars.end());
        collect_fv(br.body, out, bound);
        bound.resize(mark);
      }
      return;
    default: return;
  }
}

void collect_all(const Design& t, std::set<Var>& out) {
  switch (t.kind()) {
    case Design::Kind::Var: out.insert(t.var_name()); return;
    case Design::Kind::App:
      collect_all(t.head(), out);
      for (const auto& a : t.args()) collect_all(a, out);
      return;
    case Design::Kind::Sum:
      for (const auto& [a, br] : t.branches()) {
        out.insert(br.vars.begin(), br.vars.end());
        collect_all(br.body, out);
      }
      return;
    default: return;
  }
}

}  // namespace

std::set<Var> free_vars(const Design& t) {
  std::set<Var> out;
  std::vector<Var> bound;
  collect_fv(t, out, bound);
  return out;
}

std::set<Var> all_vars(const Design& t) {
  std::set<Var> out;
  collect_all(t, out);
  return out;
}

// --- renaming and substitution

namespace {

// env maps variables to their replacement; binders are always renamed fresh.
Design subst_rec(const Design& t, std::map<Var, Design>& env, FreshNames& fresh) {
  switch (t.kind()) {
    case Design::Kind::Daimon:
    case Design::Kind::Omega: return t;
    case Design::Kind::Var: {
      auto it = env.find(t.var_name());
      return it == env.end() ? t : it->second;
    }
    case Design::Kind::App: {
      Design h = subst_rec(t.head(), env, fresh);
      std::vector<Design> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(subst_rec(a, env, fresh));
      return Design::app(std::move(h), t.name(), std::move(args));
    }
    case Design::Kind::Sum: {
      std::map<Name, Branch> out;
      for (const auto& [a, br] : t.branches()) {
        std::vector<std::pair<Var, std::optional<Design>>> saved;
        Branch nb;
        for (const auto& x : br.vars) {
          Var y = fresh.next();
          auto it = env.find(x);
          saved.emplace_back(x, it == env.end() ? std::nullopt : std::optional<Design>(it->second));
          env[x] = Design::var(y);
          nb.vars.push_back(y);
        }
        nb.body = subst_rec(br.body, env, fresh);
        for (auto it = saved.rbegin(); it != saved.rend(); ++it) {
          if (it->second)
            env[it->first] = *it->second;
          else
            env.erase(it->first);
        }
        out.emplace(a, std::move(nb));
      }
      return Design::sum(std::move(out));
    }
  }
  return t;
}

}  // namespace

Design canonicalize(const Design& t) {
  FreshNames fresh(free_vars(t));
  std::map<Var, Design> env;
  return subst_rec(t, env, fresh);
}

bool alpha_eq(const Design& a, const Design& b) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind()) return false;
  return canonicalize(a) == canonicalize(b);
}

Design substitute(const Design& t, const Bindings& b) {
  std::set<Var> avoid = free_vars(t);
  for (const auto& [x, n] : b) {
    if (!n.negative())
      throw Error(ErrorKind::PolarityMismatch, "replacement for '" + x + "' must be negative");
    avoid.insert(x);
    auto fv = free_vars(n);
    avoid.insert(fv.begin(), fv.end());
  }
  FreshNames fresh(std::move(avoid));
  std::map<Var, Design> env(b.begin(), b.end());
  return canonicalize(subst_rec(t, env, fresh));
}

Design substitute(const Design& t, const Var& x, const Design& n) { return substitute(t, Bindings{{x, n}}); }

Design rename_free(const Design& t, const std::map<Var, Var>& r) {
  Bindings b;
  for (const auto& [x, y] : r) b.emplace(x, Design::var(y));
  return substitute(t, b);
}

// --- printing

namespace {

void print_rec(const Design& t, std::string& out) {
  switch (t.kind()) {
    case Design::Kind::Daimon: out += "daimon"; return;
    case Design::Kind::Omega: out += "omega"; return;
    case Design::Kind::Var: out += t.var_name(); return;
    case Design::Kind::App:
      print_rec(t.head(), out);
      out += "|";
      out += t.name();
      out += "<";
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ", ";
        print_rec(t.args()[i], out);
      }
      out += ">";
      return;
    case Design::Kind::Sum: {
      out += "{";
      bool first = true;
      for (const auto& [a, br] : t.branches()) {
        if (!first) out += ", ";
        first = false;
        out += a;
        out += "(";
        for (std::size_t i = 0; i < br.vars.size(); ++i) {
          if (i) out += ",";
          out += br.vars[i];
        }
        out += ") => ";
        print_rec(br.body, out);
      }
      out += "}";
      return;
    }
  }
}

}  // namespace

std::string to_text(const Design& t) {
  std::string out;
  print_rec(t, out);
  return out;
}

std::string fingerprint(const Design& t) { return to_text(canonicalize(t)); }

// --- signature checks

namespace {

void validate_rec(const Design& t, const Signature& sig) {
  switch (t.kind()) {
    case Design::Kind::App: {
      std::size_t n = sig.of(t.name());
      if (t.args().size() != n)
        throw Error(ErrorKind::MalformedDesign, "'" + t.name() + "' expects " + std::to_string(n) +
                                                    " arguments, got " + std::to_string(t.args().size()));
      validate_rec(t.head(), sig);
      for (const auto& a : t.args()) validate_rec(a, sig);
      return;
    }
    case Design::Kind::Sum:
      for (const auto& [a, br] : t.branches()) {
        std::size_t n = sig.of(a);
        if (br.vars.size() != n)
          throw Error(ErrorKind::MalformedDesign, "branch '" + a + "' binds " + std::to_string(br.vars.size()) +
                                                      " variables, arity is " + std::to_string(n));
        validate_rec(br.body, sig);
      }
      return;
    default: return;
  }
}

void sig_rec(const Design& t, Signature& sig) {
  switch (t.kind()) {
    case Design::Kind::App:
      sig.add(t.name(), t.args().size());
      sig_rec(t.head(), sig);
      for (const auto& a : t.args()) sig_rec(a, sig);
      return;
    case Design::Kind::Sum:
      for (const auto& [a, br] : t.branches()) {
        sig.add(a, br.vars.size());
        sig_rec(br.body, sig);
      }
      return;
    default: return;
  }
}

}  // namespace

void validate(const Design& t, const Signature& sig) {
  try {
    validate_rec(t, sig);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnknownName) throw Error(ErrorKind::MalformedDesign, e.what());
    throw;
  }
}

Signature signature_of(const Design& t) {
  Signature s;
  sig_rec(t, s);
  return s;
}

std::size_t depth(const Design& t) {
  std::size_t d = 0;
  switch (t.kind()) {
    case Design::Kind::App:
      d = depth(t.head());
      for (const auto& a : t.args()) d = std::max(d, depth(a));
      return d + 1;
    case Design::Kind::Sum:
      for (const auto& [a, br] : t.branches()) d = std::max(d, depth(br.body));
      return d + 1;
    default: return 1;
  }
}

std::size_t size(const Design& t) {
  std::size_t s = 1;
  switch (t.kind()) {
    case Design::Kind::App:
      s += size(t.head());
      for (const auto& a : t.args()) s += size(a);
      return s;
    case Design::Kind::Sum:
      for (const auto& [a, br] : t.branches()) s += size(br.body);
      return s;
    default: return s;
  }
}

// --- classification

namespace {

void classify_rec(const Design& t, const std::string& at, ClassificationReport& r) {
  switch (t.kind()) {
    case Design::Kind::App: {
      if (t.head().is_sum() && r.cut_free) {
        r.cut_free = false;
        r.cut_witness = at;
      }
      std::vector<std::set<Var>> fvs;
      fvs.push_back(free_vars(t.head()));
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        const Design& a = t.args()[i];
        if (a.is_var() && r.identity_free) {
          r.identity_free = false;
          r.identity_witness = at + ".arg" + std::to_string(i + 1);
        }
        fvs.push_back(free_vars(a));
      }
      if (r.linear) {
        std::set<Var> seen;
        for (const auto& s : fvs) {
          for (const auto& x : s) {
            if (!seen.insert(x).second) {
              r.linear = false;
              r.linear_witness = at + " (" + x + ")";
            }
          }
        }
      }
      classify_rec(t.head(), at + ".head", r);
      for (std::size_t i = 0; i < t.args().size(); ++i)
        classify_rec(t.args()[i], at + ".arg" + std::to_string(i + 1), r);
      return;
    }
    case Design::Kind::Sum:
      for (const auto& [a, br] : t.branches()) classify_rec(br.body, at + "." + a, r);
      return;
    default: return;
  }
}

}  // namespace

ClassificationReport classify(const Design& t) {
  ClassificationReport r;
  r.total = !t.is_omega();
  if (t.is_var()) {
    r.identity_free = false;
    r.identity_witness = "root";
  }
  classify_rec(t, "root", r);
  auto fv = free_vars(t);
  if (t.positive()) {
    for (const auto& x : fv)
      if (x != kAtomicAddress) {
        r.atomic = false;
        r.atomic_witness = x;
        break;
      }
  } else if (!fv.empty()) {
    r.atomic = false;
    r.atomic_witness = *fv.begin();
  }
  r.standard = r.cut_free && r.identity_free && r.total && r.linear;
  return r;
}

bool is_standard(const Design& t) { return classify(t).standard; }
bool is_atomic(const Design& t) { return classify(t).atomic; }

bool is_cut_free(const Design& t) {
  switch (t.kind()) {
    case Design::Kind::App:
      if (t.head().is_sum()) return false;
      for (const auto& a : t.args())
        if (!is_cut_free(a)) return false;
      return true;
    case Design::Kind::Sum:
      for (const auto& [a, br] : t.branches())
        if (!is_cut_free(br.body)) return false;
      return true;
    default: return true;
  }
}

// --- orderings

namespace {

// Bound variables of the two sides are matched by binding depth.
struct AlphaEnv {
  std::map<Var, std::size_t> left, right;
  std::size_t depth = 0;
};

bool same_var(const Var& x, const Var& y, const AlphaEnv& env) {
  auto i = env.left.find(x);
  auto j = env.right.find(y);
  if (i == env.left.end() && j == env.right.end()) return x == y;
  if (i == env.left.end() || j == env.right.end()) return false;
  return i->second == j->second;
}

bool leq_rec(const Design& t, const Design& u, AlphaEnv& env, bool observational) {
  switch (t.kind()) {
    case Design::Kind::Daimon: return u.is_daimon();
    case Design::Kind::Omega: return u.positive();
    case Design::Kind::Var: return u.is_var() && same_var(t.var_name(), u.var_name(), env);
    case Design::Kind::App: {
      if (observational && u.is_daimon()) return true;
      if (!u.is_app() || u.name() != t.name() || u.args().size() != t.args().size()) return false;
      if (!leq_rec(t.head(), u.head(), env, observational)) return false;
      for (std::size_t i = 0; i < t.args().size(); ++i)
        if (!leq_rec(t.args()[i], u.args()[i], env, observational)) return false;
      return true;
    }
    case Design::Kind::Sum: {
      if (!u.is_sum()) return false;
      for (const auto& [a, br] : t.branches()) {
        const Branch* ub = u.branch(a);
        // a present branch is below Omega only if it is Omega itself
        if (!ub) return false;
        if (ub->vars.size() != br.vars.size()) return false;
        AlphaEnv inner = env;
        for (std::size_t i = 0; i < br.vars.size(); ++i) {
          inner.left[br.vars[i]] = inner.depth;
          inner.right[ub->vars[i]] = inner.depth;
          ++inner.depth;
        }
        if (!leq_rec(br.body, ub->body, inner, observational)) return false;
      }
      return true;
    }
  }
  return false;
}

std::optional<Design> meet_rec(const Design& t, const Design& u, AlphaEnv& env) {
  if (t.is_daimon() && u.is_daimon()) return t;
  if (t.is_omega() && u.positive()) return Design::omega();
  if (u.is_omega() && t.positive()) return Design::omega();
  if (t.is_app() && u.is_app()) {
    if (!t.head().is_var() || !u.head().is_var()) return std::nullopt;
    if (!same_var(t.head().var_name(), u.head().var_name(), env)) return std::nullopt;
    if (t.name() != u.name() || t.args().size() != u.args().size()) return std::nullopt;
    std::vector<Design> args;
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      auto m = meet_rec(t.args()[i], u.args()[i], env);
      if (!m) return std::nullopt;
      args.push_back(std::move(*m));
    }
    return Design::app(t.head(), t.name(), std::move(args));
  }
  if (t.is_sum() && u.is_sum()) {
    std::map<Name, Branch> out;
    for (const auto& [a, br] : t.branches()) {
      const Branch* ub = u.branch(a);
      if (!ub) continue;  // Omega on the right
      if (ub->vars.size() != br.vars.size()) return std::nullopt;
      AlphaEnv inner = env;
      for (std::size_t i = 0; i < br.vars.size(); ++i) {
        inner.left[br.vars[i]] = inner.depth;
        inner.right[ub->vars[i]] = inner.depth;
        ++inner.depth;
      }
      auto m = meet_rec(br.body, ub->body, inner);
      if (!m) return std::nullopt;
      out.emplace(a, Branch{br.vars, std::move(*m)});
    }
    return Design::sum(std::move(out));
  }
  return std::nullopt;
}

}  // namespace

bool stable_leq(const Design& t, const Design& u) {
  if (t.polarity() != u.polarity()) throw Error(ErrorKind::PolarityMismatch, "stable_leq on mixed polarities");
  AlphaEnv env;
  return leq_rec(t, u, env, false);
}

bool obs_leq(const Design& t, const Design& u) {
  if (t.polarity() != u.polarity()) throw Error(ErrorKind::PolarityMismatch, "obs_leq on mixed polarities");
  AlphaEnv env;
  return leq_rec(t, u, env, true);
}

std::optional<Design> intersect(const Design& t, const Design& u) {
  AlphaEnv env;
  auto m = meet_rec(t, u, env);
  if (m) return canonicalize(*m);
  return m;
}

}  // namespace ludics
