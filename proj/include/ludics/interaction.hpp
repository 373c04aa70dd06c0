#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ludics/multidesign.hpp"
#include "ludics/paths.hpp"
#include "ludics/reduction.hpp"

namespace ludics {

bool compatible(const MultiDesign& d, const MultiDesign& e);
bool quasi_closed_compatible(const MultiDesign& d, const MultiDesign& e);

// Cut(d, e). Throws NotCompatible. The optional order lists the members of e
// (positive part first, then bindings in key order) in processing order.
MultiDesign cut_multidesigns(const MultiDesign& d, const MultiDesign& e);
MultiDesign cut_multidesigns(const MultiDesign& d, const MultiDesign& e, const std::vector<std::size_t>& order);

// daimon among the normal forms of Cut(d, e). Throws NotCompatible unless quasi closed compatible.
Tri msd_orthogonal(const MultiDesign& d, const MultiDesign& e, std::size_t fuel = kDefaultFuel);

struct Interaction {
  Sequence actions;
  EvalOutcome::Status status = EvalOutcome::Status::Converged;
  std::size_t steps = 0;  // actions emitted
  bool exhausted() const { return status == EvalOutcome::Status::FuelExhausted; }
};

// <d <- e>. Throws NotCompatible / MalformedDesign on bad inputs.
// fuel bounds the number of emitted actions.
Interaction iseq(const MultiDesign& d, const MultiDesign& e, std::size_t fuel = kDefaultFuel);

}  // namespace ludics
