#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ludics/design.hpp"
#include "ludics/orthogonality.hpp"
#include "ludics/reduction.hpp"

namespace ludics {

struct NegAction {
  Name name;
  std::vector<Var> vars;

  friend bool operator==(const NegAction& a, const NegAction& b) { return a.name == b.name && a.vars == b.vars; }
  friend bool operator!=(const NegAction& a, const NegAction& b) { return !(a == b); }
  friend bool operator<(const NegAction& a, const NegAction& b) {
    return a.name != b.name ? a.name < b.name : a.vars < b.vars;
  }
};

std::string to_text(const NegAction& a);  // a(x1,x2)

struct Connective {
  std::string label;
  std::vector<Var> z;
  std::vector<NegAction> intro;
  std::vector<NegAction> elim;

  std::size_t arity() const { return z.size(); }
  const NegAction* find(const Name& a) const;  // in intro or elim
};

// (x1,x2 ; I={pi1(x1), pi2(x2)} ; E={pi1(x1), pi2(x2)})
std::string to_text(const Connective& c);

struct ConnectiveReport {
  bool valid = true;
  std::vector<std::string> violations;
  bool empty_intro = false;  // allowed, flagged
  bool empty_elim = false;
};

ConnectiveReport validate_connective(const Connective& c, const Signature* sig = nullptr);
void check_connective(const Connective& c, const Signature* sig = nullptr);  // throws InvalidConnective
Signature signature_of(const Connective& c);

// z renamed z1..zn positionally, actions sorted
Connective canonical(const Connective& c);
bool alpha_eq(const Connective& a, const Connective& b);

struct HarmonyReport {
  bool inversion = false;
  bool recovery = false;
  bool harmony = false;
  std::vector<NegAction> missing_from_intro;  // elim \ intro
  std::vector<NegAction> missing_from_elim;   // intro \ elim
  std::vector<NegAction> overlap;
};

HarmonyReport check_harmony(const Connective& c);

struct BetaResult {
  bool holds = false;
  std::optional<Design> result;    // one step of the cut
  std::optional<Design> expected;  // P_a[N/x] when a is in the intro set
  std::string detail;
};

// (sum over intro of a(x).P_a) | elim<args>, one step
BetaResult beta_condition_check(const Connective& c, const std::map<Name, Design>& family, const NegAction& elim_action,
                                const std::vector<Design>& args, std::size_t fuel = kDefaultFuel);

// Every total family from a small body pool, every elim action, every argument tuple from a
// two-element pool. Pool: bodies daimon, u|k<> and x|k<> (x the first bound variable);
// arguments {k() => daimon} and a variable.
struct BetaPoolReport {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;
};
BetaPoolReport beta_pool_check(const Connective& c);

Design eta_expand(const Design& n, const Connective& c);

struct EtaResult {
  bool holds = false;
  std::map<Name, Name> witness;  // intro name -> elim name
  std::optional<Name> stuck;     // intro action without a match
};
EtaResult eta_condition_check(const Connective& c);

// tester sets come from the workbenches, one per variable of c, in the order of c.z
std::vector<Design> counter_set_intro(const Connective& c, const std::vector<BehaviourWorkbench>& positive);
std::vector<Design> counter_set_elim(const Connective& c, const std::vector<BehaviourWorkbench>& negative);

Connective dual_connective(const Connective& c);

// all valid connectives over the given names, argument tuples of length <= max_arity,
// canonical (one per alpha class)
std::vector<Connective> enumerate_connectives(const std::vector<Name>& names, std::size_t max_arity);

namespace library {
Connective with();
Connective plus();      // dual of with
Connective shift();     // (x1, {down(x1)})
Connective par();       // (x1,x2, {p(x1,x2)}), tensor on the elim side
Connective with_par();  // (x1,x2,x3, {a(x1,x2), b(x3)})
Connective gamma();
Connective delta();
Connective alpha0();
std::vector<Connective> all();
}  // namespace library

}  // namespace ludics
