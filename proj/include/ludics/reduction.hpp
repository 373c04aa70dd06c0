#pragma once

#include <cstddef>
#include <optional>

#include "ludics/design.hpp"

namespace ludics {

inline constexpr std::size_t kDefaultFuel = 10000;

struct EvalOutcome {
  enum class Status { Converged, Omega, FuelExhausted };
  Status status = Status::Omega;
  Design design;          // meaningful when Converged
  std::size_t steps = 0;  // steps consumed

  bool converged() const { return status == Status::Converged; }
  bool omega() const { return status == Status::Omega; }
  bool exhausted() const { return status == Status::FuelExhausted; }
  // Converged(d) or Omega as a design; throws on FuelExhausted
  Design value() const;
};

const char* to_string(EvalOutcome::Status s);

// One cut reduction. nullopt if p is not a cut.
std::optional<Design> step(const Design& p);

EvalOutcome head_normal_form(const Design& t, std::size_t fuel = kDefaultFuel);
EvalOutcome normalize(const Design& t, std::size_t fuel = kDefaultFuel);

enum class Tri { False, True, FuelExhausted };
const char* to_string(Tri t);

Tri converges_to_daimon(const Design& p, std::size_t fuel = kDefaultFuel);

}  // namespace ludics
