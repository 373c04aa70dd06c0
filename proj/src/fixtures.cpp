#include "ludics/fixtures.hpp"

namespace ludics::fixtures {

Signature fig1_signature() {
  Signature s;
  s.add("a", 2);
  s.add("b", 1);
  s.add("c", 0);
  return s;
}

Design fig1_p() {
  auto side = [](const Var& x) { return Design::sum({{"b", Branch{{x}, Design::app(x, "c", {})}}}); };
  return Design::app(kAtomicAddress, "a", {side("x1"), side("x2")});
}

Design fig1_n() {
  Design inner = Design::sum({{"a", Branch{{"y5", "y6"}, Design::daimon()}}, {"c", Branch{{}, Design::daimon()}}});
  Design mid = Design::sum({{"c", Branch{{}, Design::app("y2", "b", {inner})}}});
  return Design::sum({{"a", Branch{{"y1", "y2"}, Design::app("y1", "b", {mid})}}});
}

Sequence path_fig1() {
  return {LocatedAction::pos("x0", "a", {"y1", "y2"}), LocatedAction::neg("y1", "b", {"x1"}),
          LocatedAction::pos("x1", "c", {}), LocatedAction::neg("y2", "b", {"x2"}), LocatedAction::pos("x2", "c", {})};
}

Sequence shuffle_left() {
  return {LocatedAction::pos("x1", "b", {"y1", "y2"}), LocatedAction::neg("y1", "a", {"y3"}),
          LocatedAction::pos("y3", "c", {})};
}

Sequence shuffle_right() {
  return {LocatedAction::pos("x1", "b", {"y1", "y2"}), LocatedAction::neg("y2", "a", {"y4"}),
          LocatedAction::pos("y4", "d", {})};
}

PathSet shuffle_expected() {
  auto head = LocatedAction::pos("x1", "b", {"y1", "y2"});
  auto l1 = LocatedAction::neg("y1", "a", {"y3"});
  auto l2 = LocatedAction::pos("y3", "c", {});
  auto r1 = LocatedAction::neg("y2", "a", {"y4"});
  auto r2 = LocatedAction::pos("y4", "d", {});
  return {canonical({head, l1, l2, r1, r2}), canonical({head, r1, r2, l1, l2})};
}

BehaviourWorkbench regular_negative(const std::string& label, const Name& step, const Name& stop) {
  Design n1 = Design::sum({{step, Branch{{"y"}, Design::app("y", stop, {})}}});
  Design n2 = Design::sum({{step, Branch{{"y"}, Design::daimon()}}});
  Design t = Design::app(kAtomicAddress, step, {Design::sum({{stop, Branch{{}, Design::daimon()}}})});
  return BehaviourWorkbench::of_designs(label, {n1, n2}, {Design::daimon(), t});
}

}  // namespace ludics::fixtures
