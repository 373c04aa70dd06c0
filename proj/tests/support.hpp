#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "ludics/frontend.hpp"
#include "ludics/interaction.hpp"
#include "ludics/orthogonality.hpp"

namespace ludics::testing {

// one design, names inferred
inline Design D(const std::string& text) { return parse("design T = " + text).design("T"); }
inline Sequence S(const std::string& text) { return parse("seq S = " + text).sequence("S"); }
inline MultiDesign M(const std::string& text) { return parse("multi T = " + text).multi("T"); }

inline Signature small_signature() {
  Signature s;
  s.add("a", 0);
  s.add("b", 1);
  s.add("c", 2);
  return s;
}

// Random finite designs over a/0 b/1 c/2. Not necessarily standard: cuts and identities occur.
class DesignGen {
 public:
  explicit DesignGen(std::uint32_t seed) : rng_(seed) {}

  Design positive(std::size_t depth, std::vector<Var> scope) {
    std::size_t r = pick(16);
    if (depth == 0 || r == 0) return Design::daimon();
    if (r == 1) return Design::omega();
    Name a = name();
    std::vector<Design> args;
    for (std::size_t i = 0; i < sig_.of(a); ++i) args.push_back(negative(depth - 1, scope));
    if (r <= 6 || scope.empty()) return Design::app(sum(depth - 1, scope), a, std::move(args));
    return Design::app(scope[pick(scope.size())], a, std::move(args));
  }

  Design negative(std::size_t depth, std::vector<Var> scope) {
    if (!scope.empty() && (depth == 0 || pick(5) == 0)) return Design::var(scope[pick(scope.size())]);
    return sum(depth, scope);
  }

  Design sum(std::size_t depth, const std::vector<Var>& scope) {
    std::map<Name, Branch> branches;
    for (const auto& [a, n] : sig_.arity) {
      if (pick(6) == 0) continue;
      Branch b;
      std::vector<Var> inner = scope;
      for (std::size_t i = 0; i < n; ++i) {
        b.vars.push_back("b" + std::to_string(counter_++));
        inner.push_back(b.vars.back());
      }
      b.body = depth == 0 ? Design::daimon() : positive(depth - 1, inner);
      branches.emplace(a, std::move(b));
    }
    return Design::sum(std::move(branches));
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  Name name() {
    auto it = sig_.arity.begin();
    std::advance(it, pick(sig_.arity.size()));
    return it->first;
  }

  std::mt19937 rng_;
  Signature sig_ = small_signature();
  std::size_t counter_ = 0;
};

// Random standard designs: cut-free, identity-free, linear. Negative designs are closed sums.
class StandardGen {
 public:
  explicit StandardGen(std::uint32_t seed) : rng_(seed) {}

  // positive with free variables among `free`, each used at most once along any App
  Design positive(std::size_t depth, std::vector<Var> free) {
    if (depth == 0 || free.empty() || pick(8) == 0) return Design::daimon();
    std::size_t i = pick(free.size());
    Var head = free[i];
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(i));
    Name a = name();
    std::size_t n = sig_.of(a);
    // split the remaining variables between the arguments
    std::vector<std::vector<Var>> parts(n);
    for (const Var& x : free)
      if (n > 0) parts[pick(n)].push_back(x);
    std::vector<Design> args;
    for (std::size_t k = 0; k < n; ++k) args.push_back(negative(depth - 1, parts[k]));
    return Design::app(head, a, std::move(args));
  }

  Design negative(std::size_t depth, const std::vector<Var>& free) {
    std::map<Name, Branch> branches;
    for (const auto& [a, n] : sig_.arity) {
      if (pick(6) == 0) continue;
      Branch b;
      std::vector<Var> inner = free;
      for (std::size_t i = 0; i < n; ++i) {
        b.vars.push_back("w" + std::to_string(counter_++));
        inner.push_back(b.vars.back());
      }
      b.body = depth == 0 ? Design::daimon() : positive(depth - 1, inner);
      branches.emplace(a, std::move(b));
    }
    return Design::sum(std::move(branches));
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

 private:
  // the nullary name ends a branch, so it is drawn less often
  Name name() {
    std::size_t r = pick(5);
    return r == 0 ? "a" : r <= 2 ? "b" : "c";
  }

  std::mt19937 rng_;
  Signature sig_ = small_signature();
  std::size_t counter_ = 0;
};

// Orthogonal pairs ({P}, [N1/x1, ...]) of standard designs, built by rejection.
struct OrthogonalPair {
  MultiDesign positive;
  MultiDesign negative;
};

inline std::vector<OrthogonalPair> orthogonal_pairs(std::uint32_t seed, std::size_t count) {
  StandardGen g(seed);
  std::vector<OrthogonalPair> out;
  std::size_t attempts = 0;
  while (out.size() < count && attempts++ < count * 200) {
    std::vector<Var> places = g.pick(3) == 0 ? std::vector<Var>{"x1", "x2"} : std::vector<Var>{kAtomicAddress};
    MultiDesign pos = MultiDesign::of(g.positive(5, places));
    MultiDesign neg;
    for (const Var& x : places) neg.bindings[x] = g.negative(4, {});
    if (!quasi_closed_compatible(pos, neg)) continue;
    if (msd_orthogonal(pos, neg) != Tri::True) continue;
    out.push_back({pos, neg});
  }
  return out;
}

}  // namespace ludics::testing
