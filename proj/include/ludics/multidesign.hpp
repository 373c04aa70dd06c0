#pragma once

#include <optional>
#include <set>
#include <string>

#include "ludics/design.hpp"

namespace ludics {

// At most one positive design plus negative designs placed at variables.
// Anti-designs use the same representation.
struct MultiDesign {
  std::optional<Design> positive;
  std::map<Var, Design> bindings;

  // {P} for positive t, {[t/x0]} for negative t
  static MultiDesign of(const Design& t);
  static MultiDesign binding(const Var& x, const Design& n);

  Polarity polarity() const { return positive ? Polarity::Positive : Polarity::Negative; }
  bool empty() const { return !positive && bindings.empty(); }
  std::size_t size() const { return bindings.size() + (positive ? 1 : 0); }
  std::set<Var> fv() const;
  std::set<Var> np() const;
  std::set<Var> all_vars() const;
};

bool operator==(const MultiDesign& a, const MultiDesign& b);  // members up to alpha

// nullopt when well formed, else the violated condition
std::optional<std::string> multidesign_violation(const MultiDesign& d);
void check_multidesign(const MultiDesign& d);  // throws MalformedDesign
bool is_standard(const MultiDesign& d);
// closed atomic bindings, positive part with free variables in {x0}
bool is_anti_design(const MultiDesign& d);

// union of disjoint multi-designs; throws MalformedDesign when the result is not one
MultiDesign md_union(const MultiDesign& a, const MultiDesign& b);

std::string to_text(const MultiDesign& d);
std::string fingerprint(const MultiDesign& d);

}  // namespace ludics
