#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ludics/interaction.hpp"
#include "ludics/multidesign.hpp"
#include "ludics/paths.hpp"
#include "ludics/reduction.hpp"

namespace ludics {

using AntiDesign = MultiDesign;

// t against [G]. Throws NotClosed when the substituted design is open,
// PolarityMismatch when the shapes do not fit.
Tri orthogonal(const Design& t, const AntiDesign& g, std::size_t fuel = kDefaultFuel);
Tri atomic_orthogonal(const Design& p, const Design& n, std::size_t fuel = kDefaultFuel);

// Finite stand-in for a behaviour: generators play the behaviour, testers its orthogonal.
// A design T is the multi-design {T} or {[T/x0]}; anti-designs are multi-designs.
struct BehaviourWorkbench {
  std::string label;
  Polarity polarity = Polarity::Negative;  // of the generators
  std::vector<MultiDesign> generators;
  std::vector<MultiDesign> testers;
  bool atomic = true;  // generators and testers are single atomic designs

  static BehaviourWorkbench of_designs(std::string label, const std::vector<Design>& gens,
                                       const std::vector<Design>& testers);
  // generators and testers swapped
  BehaviourWorkbench dual() const;
  std::vector<Design> generator_designs() const;  // single-design generators
  std::vector<Design> tester_designs() const;
};

// generator x tester orthogonality; false when the pair is not quasi closed compatible
Tri pair_orthogonal(const MultiDesign& gen, const MultiDesign& tester, std::size_t fuel = kDefaultFuel);

struct WorkbenchReport {
  bool valid = true;
  bool fuel_exhausted = false;
  std::vector<std::string> problems;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // failing (generator, tester)
};

WorkbenchReport validate_workbench(const BehaviourWorkbench& w, std::size_t fuel = kDefaultFuel);
// throws InvalidWorkbench with the first problem
void check_workbench(const BehaviourWorkbench& w, std::size_t fuel = kDefaultFuel);

std::optional<Design> incarnation(const Design& u, const BehaviourWorkbench& w);
bool is_material(const Design& u, const BehaviourWorkbench& w);
std::vector<Design> material_generators(const BehaviourWorkbench& w);

struct VisitableSet {
  PathSet paths;  // canonical forms
  std::size_t exhausted = 0;  // pairs that ran out of fuel
};

// { <g <- t> : g generator, t tester }
VisitableSet workbench_visitable_paths(const BehaviourWorkbench& w, std::size_t fuel = kDefaultFuel);

// Standard designs of bounded depth over sig with free variables among `free`.
// Positive designs are never Omega at the root.
std::vector<Design> enumerate_designs(Polarity pol, const Signature& sig, const std::set<Var>& free,
                                      std::size_t depth);

// testers from candidates orthogonal to every generator
std::vector<MultiDesign> orthogonal_filter(const std::vector<MultiDesign>& candidates,
                                           const std::vector<MultiDesign>& against, std::size_t fuel = kDefaultFuel);

}  // namespace ludics
