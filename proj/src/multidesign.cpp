#include "ludics/multidesign.hpp"

namespace ludics {

MultiDesign MultiDesign::of(const Design& t) {
  MultiDesign d;
  if (t.positive())
    d.positive = t;
  else
    d.bindings.emplace(kAtomicAddress, t);
  return d;
}

MultiDesign MultiDesign::binding(const Var& x, const Design& n) {
  if (!n.negative()) throw Error(ErrorKind::PolarityMismatch, "binding for '" + x + "' must be negative");
  MultiDesign d;
  d.bindings.emplace(x, n);
  return d;
}

std::set<Var> MultiDesign::fv() const {
  std::set<Var> out;
  if (positive) out = free_vars(*positive);
  for (const auto& [x, n] : bindings) {
    auto f = free_vars(n);
    out.insert(f.begin(), f.end());
  }
  return out;
}

std::set<Var> MultiDesign::np() const {
  std::set<Var> out;
  for (const auto& [x, n] : bindings) out.insert(x);
  return out;
}

std::set<Var> MultiDesign::all_vars() const {
  std::set<Var> out = np();
  if (positive) {
    auto a = ludics::all_vars(*positive);
    out.insert(a.begin(), a.end());
  }
  for (const auto& [x, n] : bindings) {
    auto a = ludics::all_vars(n);
    out.insert(a.begin(), a.end());
  }
  return out;
}

bool operator==(const MultiDesign& a, const MultiDesign& b) {
  if (a.positive.has_value() != b.positive.has_value()) return false;
  if (a.positive && !alpha_eq(*a.positive, *b.positive)) return false;
  if (a.bindings.size() != b.bindings.size()) return false;
  for (const auto& [x, n] : a.bindings) {
    auto it = b.bindings.find(x);
    if (it == b.bindings.end() || !alpha_eq(n, it->second)) return false;
  }
  return true;
}

std::optional<std::string> multidesign_violation(const MultiDesign& d) {
  if (d.positive && !d.positive->positive()) return std::string("positive part is negative");
  std::set<Var> seen;
  std::set<Var> np = d.np();
  auto check = [&](const Design& t, const std::string& what) -> std::optional<std::string> {
    for (const auto& x : free_vars(t)) {
      if (np.count(x)) return what + " has free variable " + x + " which is a negative place";
      if (!seen.insert(x).second) return "free variable " + x + " shared between members";
    }
    return std::nullopt;
  };
  if (d.positive)
    if (auto v = check(*d.positive, "positive part")) return v;
  for (const auto& [x, n] : d.bindings) {
    if (!n.negative()) return "binding for " + x + " is positive";
    if (auto v = check(n, "binding for " + x)) return v;
  }
  return std::nullopt;
}

void check_multidesign(const MultiDesign& d) {
  if (auto v = multidesign_violation(d)) throw Error(ErrorKind::MalformedDesign, "not a multi-design: " + *v);
}

bool is_standard(const MultiDesign& d) {
  if (d.positive && !is_standard(*d.positive)) return false;
  for (const auto& [x, n] : d.bindings)
    if (!is_standard(n)) return false;
  return true;
}

bool is_anti_design(const MultiDesign& d) {
  if (multidesign_violation(d)) return false;
  if (d.positive) {
    for (const auto& x : free_vars(*d.positive))
      if (x != kAtomicAddress) return false;
    if (d.bindings.count(kAtomicAddress)) return false;
  }
  for (const auto& [x, n] : d.bindings)
    if (!free_vars(n).empty()) return false;
  return true;
}

MultiDesign md_union(const MultiDesign& a, const MultiDesign& b) {
  MultiDesign out = a;
  if (b.positive) {
    if (out.positive) throw Error(ErrorKind::MalformedDesign, "union has two positive designs");
    out.positive = b.positive;
  }
  for (const auto& [x, n] : b.bindings)
    if (!out.bindings.emplace(x, n).second)
      throw Error(ErrorKind::MalformedDesign, "union places two designs at " + x);
  check_multidesign(out);
  return out;
}

std::string to_text(const MultiDesign& d) {
  std::string out = "[";
  bool first = true;
  if (d.positive) {
    out += to_text(*d.positive);
    first = false;
  }
  for (const auto& [x, n] : d.bindings) {
    if (!first) out += ", ";
    first = false;
    out += to_text(n) + " / " + x;
  }
  return out + "]";
}

std::string fingerprint(const MultiDesign& d) {
  std::string out = "[";
  if (d.positive) out += fingerprint(*d.positive);
  for (const auto& [x, n] : d.bindings) out += ";" + fingerprint(n) + "/" + x;
  return out + "]";
}

}  // namespace ludics
