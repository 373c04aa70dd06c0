#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ludics/connectives.hpp"
#include "ludics/orthogonality.hpp"
#include "ludics/paths.hpp"

namespace ludics {

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

// one checked instance
struct InstanceRecord {
  std::string clause;
  std::string input;
  Verdict verdict = Verdict::Pass;
  std::string witness;
};

struct DecompositionReport {
  Verdict verdict = Verdict::Inconclusive;
  std::string scope;  // what the finite check covered
  std::vector<InstanceRecord> instances;
  std::size_t exhausted = 0;

  std::optional<InstanceRecord> first_failure() const;
};

struct CheckBounds {
  std::size_t fuel = kDefaultFuel;
  std::size_t max_len = 8;
  std::size_t tester_depth = 4;  // depth of enumerated positive testers
  std::size_t sample_cap = 500;  // sums tried in the intro clause
};

// Names used by the members of the workbenches.
Signature signature_of(const std::vector<BehaviourWorkbench>& ws);

// Anti-designs [M1/x1, ..., Mn/xn] with Mi among the generators of ws[i].
std::vector<MultiDesign> binding_products(const std::vector<Var>& xs, const std::vector<BehaviourWorkbench>& ws);

// Positive designs with free variables among xs, of bounded depth, orthogonal to every anti-design in `against`.
std::vector<Design> enumerate_orthogonal_positives(const std::vector<Var>& xs, const std::vector<MultiDesign>& against,
                                                   const Signature& sig, std::size_t depth, std::size_t fuel);

// Workbench for [N1/x1, ..., Nn/xn]: product anti-designs against enumerated positive testers.
BehaviourWorkbench multi_binding_workbench(const std::vector<Var>& xs, const std::vector<BehaviourWorkbench>& ws,
                                           const CheckBounds& b);

PathSet bounded(const PathSet& s, std::size_t max_len);

// V(x1,N1) shuffled with ... V(xn,Nn)
PathSet shuffle_of_relabelled(const std::vector<Var>& xs, const std::vector<BehaviourWorkbench>& ws,
                              const CheckBounds& b, std::size_t* exhausted = nullptr);

struct ShuffleDecompositionReport {
  bool equal = false;
  PathSet lhs;  // V([N1/x1, ...])
  PathSet rhs;  // shuffle of the relabelled V(Ni)
  PathSet only_lhs;
  PathSet only_rhs;
  std::size_t exhausted = 0;
};

ShuffleDecompositionReport check_shuffle_decomposition(const std::vector<Var>& xs,
                                                       const std::vector<BehaviourWorkbench>& ws,
                                                       const CheckBounds& b = {});

// negative: one negative workbench per variable of c, in the order of c.z;
// positive: one positive workbench per variable.
DecompositionReport check_dual_decomposability_connective(const Connective& c,
                                                          const std::vector<BehaviourWorkbench>& negative,
                                                          const std::vector<BehaviourWorkbench>& positive,
                                                          const CheckBounds& b = {});

DecompositionReport check_dual_decomposability_paths(const Connective& c,
                                                     const std::vector<BehaviourWorkbench>& negative,
                                                     const std::vector<BehaviourWorkbench>& positive,
                                                     const CheckBounds& b = {});

struct RegularityReport {
  Verdict verdict = Verdict::Inconclusive;
  std::string scope;
  std::vector<InstanceRecord> clauses;  // one record per clause, failing ones carry the witness
  PathSet visitable;
  PathSet dual_visitable;
};

RegularityReport check_regularity(const BehaviourWorkbench& w, const BehaviourWorkbench& dual_w,
                                  std::size_t fuel = kDefaultFuel, std::size_t max_len = 8);

// harmony against the beta pool and eta check, over every connective on the given names
struct IntuitionReport {
  std::size_t connectives = 0;
  std::size_t harmonious = 0;
  std::size_t beta_checks = 0;
  std::vector<std::string> discrepancies;
};

IntuitionReport check_intuition(const std::vector<Name>& names, std::size_t max_arity);

}  // namespace ludics
