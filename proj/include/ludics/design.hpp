#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ludics/error.hpp"

namespace ludics {

using Var = std::string;
using Name = std::string;

enum class Polarity { Positive, Negative };

inline Polarity opposite(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

// x0 is the address of atomic designs.
inline const Var kAtomicAddress = "x0";

struct Signature {
  std::map<Name, std::size_t> arity;

  bool has(const Name& a) const { return arity.count(a) != 0; }
  std::size_t of(const Name& a) const;  // throws UnknownName
  void add(const Name& a, std::size_t n);  // throws ArityError on conflict
  Signature merged(const Signature& other) const;
};

namespace detail {
struct Node;
}

struct Branch;

class Design {
 public:
  enum class Kind { Daimon, Omega, App, Var, Sum };

  Design();  // Omega

  static Design daimon();
  static Design omega();
  static Design var(Var x);
  static Design app(Design head, Name a, std::vector<Design> args);
  static Design app(const Var& head, Name a, std::vector<Design> args);
  static Design sum(std::map<Name, Branch> branches);
  static Design sum();  // every branch is Omega

  Kind kind() const;
  Polarity polarity() const;
  bool positive() const { return polarity() == Polarity::Positive; }
  bool negative() const { return polarity() == Polarity::Negative; }
  bool is_daimon() const { return kind() == Kind::Daimon; }
  bool is_omega() const { return kind() == Kind::Omega; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_sum() const { return kind() == Kind::Sum; }

  const Var& var_name() const;
  const Design& head() const;
  const Name& name() const;
  const std::vector<Design>& args() const;
  const std::map<Name, Branch>& branches() const;
  // nullptr when the branch is absent (Omega)
  const Branch* branch(const Name& a) const;

  // raw structural equality, no renaming
  friend bool operator==(const Design& a, const Design& b);
  friend bool operator!=(const Design& a, const Design& b) { return !(a == b); }

  bool same_node(const Design& o) const { return node_ == o.node_; }

 private:
  explicit Design(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::Node> node_;
};

struct Branch {
  std::vector<Var> vars;
  Design body;
};

using Bindings = std::map<Var, Design>;

// --- terms

std::set<Var> free_vars(const Design& t);
// every variable name occurring in t, bound or free
std::set<Var> all_vars(const Design& t);

// Bound variables renamed v0, v1, ... in pre-order; names free in t are skipped.
Design canonicalize(const Design& t);
bool alpha_eq(const Design& a, const Design& b);
// text in the session-file syntax, names as stored
std::string to_text(const Design& t);
// text of the canonical form, used for loop detection and dedup
std::string fingerprint(const Design& t);

// Capture-avoiding simultaneous substitution. Result canonicalized.
Design substitute(const Design& t, const Bindings& b);
Design substitute(const Design& t, const Var& x, const Design& n);
// Variable-for-variable renaming of free occurrences.
Design rename_free(const Design& t, const std::map<Var, Var>& r);

// Arity / polarity check against a signature; throws MalformedDesign.
void validate(const Design& t, const Signature& sig);
// Names used by t, with the arities they are used at. Throws on inconsistency.
Signature signature_of(const Design& t);

std::size_t depth(const Design& t);
std::size_t size(const Design& t);

// Fresh "v<k>" names avoiding a given set.
class FreshNames {
 public:
  explicit FreshNames(std::set<Var> avoid = {}, std::string prefix = "v")
      : avoid_(std::move(avoid)), prefix_(std::move(prefix)) {}
  Var next();
  void avoid(const Var& x) { avoid_.insert(x); }
  void avoid(const std::set<Var>& xs) { avoid_.insert(xs.begin(), xs.end()); }

 private:
  std::set<Var> avoid_;
  std::string prefix_;
  std::size_t counter_ = 0;
};

// --- classification

struct ClassificationReport {
  bool cut_free = true;
  bool identity_free = true;
  bool total = true;
  bool linear = true;
  bool atomic = true;
  bool standard = true;
  // location of the first offending subterm, e.g. "root.arg1.b"
  std::optional<std::string> cut_witness;
  std::optional<std::string> identity_witness;
  std::optional<std::string> linear_witness;
  std::optional<std::string> atomic_witness;
};

ClassificationReport classify(const Design& t);
bool is_standard(const Design& t);
bool is_atomic(const Design& t);
bool is_cut_free(const Design& t);

// --- orderings

bool stable_leq(const Design& t, const Design& u);
bool obs_leq(const Design& t, const Design& u);
std::optional<Design> intersect(const Design& t, const Design& u);

}  // namespace ludics
