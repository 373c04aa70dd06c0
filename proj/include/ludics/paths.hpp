#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ludics/design.hpp"
#include "ludics/multidesign.hpp"

namespace ludics {

struct LocatedAction {
  enum class Kind { Daimon, Pos, Neg };
  Kind kind = Kind::Daimon;
  Var address;
  Name name;
  std::vector<Var> args;

  static LocatedAction daimon() { return {}; }
  static LocatedAction pos(Var x, Name a, std::vector<Var> args) {
    return {Kind::Pos, std::move(x), std::move(a), std::move(args)};
  }
  static LocatedAction neg(Var x, Name a, std::vector<Var> args) {
    return {Kind::Neg, std::move(x), std::move(a), std::move(args)};
  }

  bool is_daimon() const { return kind == Kind::Daimon; }
  bool proper() const { return kind != Kind::Daimon; }
  // daimon counts as positive
  Polarity polarity() const { return kind == Kind::Neg ? Polarity::Negative : Polarity::Positive; }
  LocatedAction flipped() const;  // proper actions only

  friend bool operator==(const LocatedAction& a, const LocatedAction& b) {
    return a.kind == b.kind && a.address == b.address && a.name == b.name && a.args == b.args;
  }
  friend bool operator!=(const LocatedAction& a, const LocatedAction& b) { return !(a == b); }
  friend bool operator<(const LocatedAction& a, const LocatedAction& b);
};

using Sequence = std::vector<LocatedAction>;
using PathSet = std::set<Sequence>;

std::string to_text(const LocatedAction& k);
std::string to_text(const Sequence& s);  // "eps" for the empty sequence

struct AjViolation {
  std::string clause;  // Alternation, Linearity, Daimon, Justification, Action
  std::size_t index;
  std::string detail;
};

struct AjSequence {
  Sequence actions;
  std::vector<std::optional<std::size_t>> justifier;
};

std::optional<AjViolation> aj_violation(const Sequence& s);
AjSequence check_aj(const Sequence& s);  // throws NotAPath
// justification pointers; assumes s is an aj-sequence
std::vector<std::optional<std::size_t>> justifiers(const Sequence& s);

// Sequence with bound variables renamed in order of occurrence.
Sequence canonical(const Sequence& s);
bool seq_alpha_eq(const Sequence& a, const Sequence& b);
PathSet canonical_set(const PathSet& s);

Sequence dual_seq(const Sequence& s);
Sequence view(const Sequence& s);
Sequence anti_view(const Sequence& s);
Sequence biview(const Sequence& s);
// view as positions of s; with flip the polarities are read reversed
std::vector<std::size_t> view_indices(const Sequence& s, bool flip = false);

struct PathViolation {
  std::string clause;  // an aj clause, P-visibility or O-visibility
  std::size_t index;   // offending action
};
std::optional<PathViolation> path_violation(const Sequence& s);
bool is_path(const Sequence& s);
Polarity path_polarity(const Sequence& s);

// views of designs, canonical forms
PathSet views_of(const Design& t);  // negative t is read at x0
PathSet views_of(const Design& n, const Var& x);
PathSet views_of(const MultiDesign& d);

bool is_path_of(const Sequence& p, const Design& t);
bool is_path_of(const Sequence& p, const MultiDesign& d);
// all paths of d with at most max_len actions, canonical forms
PathSet paths_of(const Design& t, std::size_t max_len);
PathSet paths_of(const MultiDesign& d, std::size_t max_len);

// nullopt when the shuffle is undefined
std::optional<PathSet> shuffle(const Sequence& p, const Sequence& q);
PathSet shuffle_sets(const PathSet& d, const PathSet& e);

Sequence restrict(const Sequence& s, const Sequence& selector);
// longest subsequence of p that is a path of e
Sequence restrict(const Sequence& p, const MultiDesign& e);

// replace with daimon every positive subdesign that is Omega or not visited by p
Design path_completion(const Sequence& p, const Design& t, const Signature& sig);

// V(x, N): relabel the address x0 of first actions
PathSet relabel_initial(const PathSet& v, const Var& x);

}  // namespace ludics
