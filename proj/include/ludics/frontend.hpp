#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ludics/connectives.hpp"
#include "ludics/interaction.hpp"
#include "ludics/orthogonality.hpp"
#include "ludics/paths.hpp"

namespace ludics {

enum class DefKind { Design, Connective, Multi, Anti, Sequence, Workbench };
const char* to_string(DefKind k);

struct Session {
  Signature sig;
  bool declared_sig = false;  // a sig block was given; otherwise names are inferred
  std::map<std::string, Design> designs;
  std::map<std::string, Connective> connectives;
  std::map<std::string, MultiDesign> multis;  // multi and anti definitions
  std::map<std::string, Sequence> sequences;
  std::map<std::string, BehaviourWorkbench> workbenches;
  std::vector<std::pair<DefKind, std::string>> order;

  // throw UnknownName
  const Design& design(const std::string& name) const;
  const Connective& connective(const std::string& name) const;  // falls back to the built-in library
  const MultiDesign& multi(const std::string& name) const;
  const Sequence& sequence(const std::string& name) const;
  const BehaviourWorkbench& workbench(const std::string& name) const;
  // a design as a multi-design, or a multi/anti definition
  MultiDesign as_multi(const std::string& name) const;
};

// errors carry "line L, column C" and the expected tokens
Session parse(const std::string& text);
Session parse_file(const std::string& path);

std::string render(const Session& s);
std::string render(const BehaviourWorkbench& w);

// equal up to alpha-equivalence, definition by definition
bool session_equivalent(const Session& a, const Session& b);

// JSON schema "ludics-trace/1"
std::string emit_trace_json(const Interaction& run);

}  // namespace ludics
