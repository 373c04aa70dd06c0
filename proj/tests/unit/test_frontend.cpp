#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ludics/fixtures.hpp"
#include "ludics/frontend.hpp"
#include "support.hpp"

using namespace ludics;
using namespace ludics::testing;
namespace fs = std::filesystem;

namespace {
std::vector<fs::path> corpus(const std::string& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fs::path(LUDICS_CORPUS) / dir))
    if (e.path().extension() == ".ludics") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

ErrorKind kind_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("parsed: " << text);
  return ErrorKind::SyntaxError;
}
}  // namespace

TEST_CASE("accepted corpus round-trips") {
  auto files = corpus("accept");
  REQUIRE(files.size() >= 8);
  for (const auto& f : files) {
    INFO(f.filename().string());
    Session s = parse_file(f.string());
    std::string text = render(s);
    Session back = parse(text);
    CHECK(session_equivalent(s, back));
    CHECK(render(back) == text);
  }
}

TEST_CASE("rejected corpus fails with a location") {
  auto files = corpus("reject");
  REQUIRE(files.size() >= 20);
  for (const auto& f : files) {
    INFO(f.filename().string());
    bool threw = false;
    try {
      parse_file(f.string());
    } catch (const Error& e) {
      threw = true;
      CHECK(std::string(e.what()).find("line ") != std::string::npos);
    }
    CHECK(threw);
  }
}

TEST_CASE("figure 1 session") {
  Session s = parse_file(std::string(LUDICS_CORPUS) + "/accept/fig1.ludics");
  CHECK(alpha_eq(s.design("P"), fixtures::fig1_p()));
  CHECK(alpha_eq(s.design("N"), fixtures::fig1_n()));
  CHECK(s.sequence("PathFig1") == fixtures::path_fig1());
  CHECK(s.declared_sig);
  CHECK(s.sig.of("a") == 2);
  MultiDesign n = s.as_multi("N");
  CHECK(n.bindings.count("x0"));
  CHECK(s.as_multi("NAt") == n);
  CHECK(s.workbench("Fig1Dual").polarity == Polarity::Negative);
  CHECK_THROWS_AS(s.design("Nope"), Error);
  CHECK(s.order.front().first == DefKind::Design);
}

TEST_CASE("library connectives are visible in sessions") {
  Session s = parse("conn W = dual With\n");
  CHECK(alpha_eq(s.connective("W"), library::with()));
  CHECK(alpha_eq(s.connective("Gamma"), library::gamma()));
}

TEST_CASE("error kinds") {
  CHECK(kind_of("design P = x0|a<") == ErrorKind::SyntaxError);
  CHECK(kind_of("sig { a/1 }\ndesign P = x0|b<>") == ErrorKind::UnknownName);
  CHECK(kind_of("sig { a/1 }\ndesign P = x0|a<>") == ErrorKind::ArityError);
  CHECK(kind_of("design P = @Q") == ErrorKind::UnknownName);
  CHECK(kind_of("design P = x|a<>\ndesign Q = x|a<{}>") == ErrorKind::ArityError);
}

TEST_CASE("error positions") {
  try {
    parse("design P = daimon\n\ndesign Q = x0|a<{b() => }>\n");
    FAIL("no error");
  } catch (const Error& e) {
    std::string m = e.what();
    CHECK(m.find("line 3") != std::string::npos);
    CHECK(m.find("expected") != std::string::npos);
  }
}

TEST_CASE("comments and whitespace") {
  Session a = parse("# c\ndesign   P=x0|a<{b(u)=>u|c<>}>  # trailing\n");
  Session b = parse("design P = x0|a<{b(w) => w|c<>}>");
  CHECK(session_equivalent(a, b));
}

TEST_CASE("sequence literals") {
  CHECK(S("eps").empty());
  CHECK(S("daimon") == Sequence{LocatedAction::daimon()});
  CHECK(S("a^x0(y1,y2) y1|b<x1>") ==
        Sequence{LocatedAction::neg("x0", "a", {"y1", "y2"}), LocatedAction::pos("y1", "b", {"x1"})});
}

TEST_CASE("rendered workbench") {
  auto w = BehaviourWorkbench::of_designs("W", {Design::daimon()}, {D("{a() => daimon}")});
  CHECK(render(w) == "workbench W { gen = daimon ; test = {a() => daimon} }");
}

TEST_CASE("trace json") {
  Interaction run = iseq(MultiDesign::of(fixtures::fig1_p()), MultiDesign::of(fixtures::fig1_n()));
  std::string a = emit_trace_json(run);
  std::string b = emit_trace_json(iseq(MultiDesign::of(fixtures::fig1_p()), MultiDesign::of(fixtures::fig1_n())));
  CHECK(a == b);
  CHECK(a.find("\"schema\": \"ludics-trace/1\"") != std::string::npos);
  CHECK(a.find("\"status\": \"converged\"") != std::string::npos);
  CHECK(a.find("\"steps\": 5") != std::string::npos);
}
