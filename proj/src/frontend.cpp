#include "ludics/frontend.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ludics {

const char* to_string(DefKind k) {
  switch (k) {
    case DefKind::Design: return "design";
    case DefKind::Connective: return "conn";
    case DefKind::Multi: return "multi";
    case DefKind::Anti: return "anti";
    case DefKind::Sequence: return "seq";
    case DefKind::Workbench: return "workbench";
  }
  return "?";
}

namespace {

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorKind::UnknownName, std::string("no ") + what + " named '" + name + "'");
  return it->second;
}

}  // namespace

const Design& Session::design(const std::string& name) const { return lookup(designs, name, "design"); }
const MultiDesign& Session::multi(const std::string& name) const { return lookup(multis, name, "multi-design"); }
const Sequence& Session::sequence(const std::string& name) const { return lookup(sequences, name, "sequence"); }
const BehaviourWorkbench& Session::workbench(const std::string& name) const {
  return lookup(workbenches, name, "workbench");
}

const Connective& Session::connective(const std::string& name) const {
  if (auto it = connectives.find(name); it != connectives.end()) return it->second;
  static const std::vector<Connective> lib = library::all();
  for (const auto& c : lib)
    if (c.label == name) return c;
  throw Error(ErrorKind::UnknownName, "no connective named '" + name + "'");
}

MultiDesign Session::as_multi(const std::string& name) const {
  if (auto it = multis.find(name); it != multis.end()) return it->second;
  if (auto it = designs.find(name); it != designs.end()) return MultiDesign::of(it->second);
  throw Error(ErrorKind::UnknownName, "no design or multi-design named '" + name + "'");
}

// --- lexer

namespace {

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    int l = line, c = col;
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, src.substr(i, j - i), l, c});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Int, src.substr(i, j - i), l, c});
      advance(j - i);
      continue;
    }
    if (ch == '=' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Token::Kind::Punct, "=>", l, c});
      advance(2);
      continue;
    }
    if (std::string("{}()<>[],;=|/^@").find(ch) != std::string::npos) {
      out.push_back({Token::Kind::Punct, std::string(1, ch), l, c});
      advance(1);
      continue;
    }
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(l) + ", column " + std::to_string(c) +
                                            ": unexpected character '" + std::string(1, ch) + "'");
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

const std::set<std::string> kKeywords{"sig", "design", "conn", "multi", "anti", "seq", "workbench",
                                      "daimon", "omega", "eps", "dual", "gen", "test"};

// --- parser

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Session run() {
    while (!at_end()) statement();
    return std::move(s_);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Session s_;

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }

  [[noreturn]] void fail(const std::string& expected, ErrorKind kind = ErrorKind::SyntaxError) const {
    const Token& t = peek();
    std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw Error(kind, "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": expected " +
                          expected + ", got " + got);
  }
  [[noreturn]] void fail_at(const Token& t, ErrorKind kind, const std::string& msg) const {
    throw Error(kind, "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": " + msg);
  }

  bool is(const std::string& p) const { return peek().kind != Token::Kind::End && peek().text == p && peek().kind != Token::Kind::Int; }
  bool accept(const std::string& p) {
    if (!is(p)) return false;
    ++pos_;
    return true;
  }
  void expect(const std::string& p) {
    if (!accept(p)) fail("'" + p + "'");
  }
  bool is_ident() const { return peek().kind == Token::Kind::Ident && !kKeywords.count(peek().text); }
  std::string ident(const std::string& what) {
    if (!is_ident()) fail(what);
    return toks_[pos_++].text;
  }

  void define(DefKind k, const std::string& name, const Token& at) {
    for (const auto& [kk, n] : s_.order)
      if (n == name) fail_at(at, ErrorKind::SyntaxError, "'" + name + "' is already defined");
    s_.order.emplace_back(k, name);
  }

  void use_name(const Name& a, std::size_t n, const Token& at) {
    if (s_.declared_sig) {
      if (!s_.sig.has(a)) fail_at(at, ErrorKind::UnknownName, "name '" + a + "' is not in the signature");
      if (s_.sig.arity.at(a) != n)
        fail_at(at, ErrorKind::ArityError,
                "'" + a + "' has arity " + std::to_string(s_.sig.arity.at(a)) + ", used with " + std::to_string(n));
      return;
    }
    auto it = s_.sig.arity.find(a);
    if (it != s_.sig.arity.end() && it->second != n)
      fail_at(at, ErrorKind::ArityError,
              "'" + a + "' used with arity " + std::to_string(it->second) + " and " + std::to_string(n));
    s_.sig.arity[a] = n;
  }

  void statement() {
    if (accept("sig")) return sig_block();
    if (accept("design")) return design_def();
    if (accept("conn")) return conn_def();
    if (is("multi") || is("anti")) return multi_def();
    if (accept("seq")) return seq_def();
    if (accept("workbench")) return workbench_def();
    fail("one of 'sig', 'design', 'conn', 'multi', 'anti', 'seq', 'workbench'");
  }

  void sig_block() {
    if (s_.declared_sig) fail_at(toks_[pos_ - 1], ErrorKind::SyntaxError, "second sig block");
    if (!s_.order.empty()) fail_at(toks_[pos_ - 1], ErrorKind::SyntaxError, "sig must come before definitions");
    expect("{");
    while (!accept("}")) {
      const Token& at = peek();
      Name a = ident("a name or '}'");
      expect("/");
      if (peek().kind != Token::Kind::Int) fail("an arity");
      std::size_t n = std::stoul(toks_[pos_++].text);
      if (s_.sig.has(a)) fail_at(at, ErrorKind::ArityError, "'" + a + "' declared twice");
      s_.sig.arity[a] = n;
      accept(",");
    }
    s_.declared_sig = true;
  }

  // --- designs

  Design design() {
    if (accept("daimon")) return Design::daimon();
    if (accept("omega")) return Design::omega();
    Design head = negative_atom();
    if (!accept("|")) return head;
    const Token& at = peek();
    Name a = ident("an action name");
    expect("<");
    std::vector<Design> args;
    if (!accept(">")) {
      do {
        args.push_back(design());
        if (!args.back().negative()) fail_at(at, ErrorKind::MalformedDesign, "argument of '" + a + "' is positive");
      } while (accept(","));
      expect(">");
    }
    use_name(a, args.size(), at);
    return Design::app(head, a, std::move(args));
  }

  Design negative_atom() {
    if (accept("@")) {
      const Token& at = peek();
      std::string n = ident("a design name");
      auto it = s_.designs.find(n);
      if (it == s_.designs.end()) fail_at(at, ErrorKind::UnknownName, "design '" + n + "' is not defined");
      return it->second;
    }
    if (accept("(")) {
      Design d = design();
      expect(")");
      return d;
    }
    if (accept("{")) {
      std::map<Name, Branch> br;
      if (!accept("}")) {
        do {
          const Token& at = peek();
          Name a = ident("a branch name");
          expect("(");
          std::vector<Var> vs = var_list(")");
          expect("=>");
          Design body = design();
          if (!body.positive()) fail_at(at, ErrorKind::MalformedDesign, "body of branch '" + a + "' is negative");
          std::set<Var> distinct(vs.begin(), vs.end());
          if (distinct.size() != vs.size()) fail_at(at, ErrorKind::MalformedDesign, "repeated variable in branch '" + a + "'");
          use_name(a, vs.size(), at);
          if (br.count(a)) fail_at(at, ErrorKind::MalformedDesign, "branch '" + a + "' given twice");
          br.emplace(a, Branch{vs, body});
        } while (accept(","));
        expect("}");
      }
      return Design::sum(std::move(br));
    }
    if (is_ident()) return Design::var(toks_[pos_++].text);
    fail("a design");
  }

  std::vector<Var> var_list(const std::string& close) {
    std::vector<Var> vs;
    if (accept(close)) return vs;
    do vs.push_back(ident("a variable"));
    while (accept(","));
    expect(close);
    return vs;
  }

  void design_def() {
    const Token& at = peek();
    std::string name = ident("a definition name");
    expect("=");
    Design d = design();
    define(DefKind::Design, name, at);
    s_.designs.emplace(name, d);
  }

  // --- connectives

  std::vector<NegAction> action_set() {
    expect("{");
    std::vector<NegAction> out;
    if (accept("}")) return out;
    do {
      const Token& at = peek();
      Name a = ident("an action name");
      expect("(");
      NegAction act{a, var_list(")")};
      use_name(a, act.vars.size(), at);
      out.push_back(std::move(act));
    } while (accept(","));
    expect("}");
    return out;
  }

  void conn_def() {
    const Token& at = peek();
    std::string name = ident("a connective name");
    expect("=");
    Connective c;
    if (accept("dual")) {
      const Token& rt = peek();
      std::string other = ident("a connective name");
      try {
        c = dual_connective(s_.connective(other));
      } catch (const Error&) {
        fail_at(rt, ErrorKind::UnknownName, "connective '" + other + "' is not defined");
      }
    } else {
      expect("(");
      if (!is(";")) {
        do c.z.push_back(ident("a variable"));
        while (accept(","));
      }
      expect(";");
      if (!accept("I")) fail("'I'");
      expect("=");
      c.intro = action_set();
      expect(";");
      if (!accept("E")) fail("'E'");
      expect("=");
      c.elim = action_set();
      expect(")");
    }
    c.label = name;
    auto rep = validate_connective(c, &s_.sig);
    if (!rep.valid) fail_at(at, ErrorKind::InvalidConnective, name + ": " + rep.violations.front());
    define(DefKind::Connective, name, at);
    s_.connectives.emplace(name, c);
  }

  // --- multi-designs

  MultiDesign multi_literal() {
    const Token& at = peek();
    expect("[");
    MultiDesign m;
    if (!accept("]")) {
      do {
        const Token& mt = peek();
        Design d = design();
        if (accept("/")) {
          Var x = ident("a variable");
          if (!d.negative()) fail_at(mt, ErrorKind::MalformedDesign, "positive design placed at " + x);
          if (m.bindings.count(x)) fail_at(mt, ErrorKind::MalformedDesign, "two designs placed at " + x);
          m.bindings.emplace(x, d);
        } else {
          if (!d.positive()) fail_at(mt, ErrorKind::MalformedDesign, "negative member without a place");
          if (m.positive) fail_at(mt, ErrorKind::MalformedDesign, "two positive members");
          m.positive = d;
        }
      } while (accept(","));
      expect("]");
    }
    if (auto v = multidesign_violation(m)) fail_at(at, ErrorKind::MalformedDesign, *v);
    return m;
  }

  void multi_def() {
    bool anti = peek().text == "anti";
    ++pos_;
    const Token& at = peek();
    std::string name = ident("a definition name");
    expect("=");
    MultiDesign m = multi_literal();
    if (anti && !is_anti_design(m)) fail_at(at, ErrorKind::MalformedDesign, name + " is not an anti-design");
    define(anti ? DefKind::Anti : DefKind::Multi, name, at);
    s_.multis.emplace(name, m);
  }

  // --- sequences

  bool action_ahead() const {
    if (is("daimon")) return true;
    return is_ident() && (peek(1).text == "|" || peek(1).text == "^");
  }

  void seq_def() {
    const Token& at = peek();
    std::string name = ident("a definition name");
    expect("=");
    Sequence s;
    if (!accept("eps")) {
      if (!action_ahead()) fail("a located action or 'eps'");
      while (action_ahead()) {
        if (accept("daimon")) {
          s.push_back(LocatedAction::daimon());
          continue;
        }
        const Token& t = peek();
        std::string first = ident("an address or name");
        if (accept("|")) {
          Name a = ident("an action name");
          expect("<");
          auto args = var_list(">");
          use_name(a, args.size(), t);
          s.push_back(LocatedAction::pos(first, a, args));
        } else {
          expect("^");
          Var x = ident("an address");
          expect("(");
          auto args = var_list(")");
          use_name(first, args.size(), t);
          s.push_back(LocatedAction::neg(x, first, args));
        }
      }
    }
    define(DefKind::Sequence, name, at);
    s_.sequences.emplace(name, s);
  }

  // --- workbenches

  MultiDesign member() {
    if (is("[")) return multi_literal();
    if (is("@") && peek(1).kind == Token::Kind::Ident) {
      auto it = s_.multis.find(peek(1).text);
      if (it != s_.multis.end()) {
        pos_ += 2;
        return it->second;
      }
    }
    Design d = design();
    return d.positive() ? MultiDesign::of(d) : MultiDesign::binding(kAtomicAddress, d);
  }

  std::vector<MultiDesign> member_list() {
    std::vector<MultiDesign> out;
    if (is(";") || is("}")) return out;
    do out.push_back(member());
    while (accept(","));
    return out;
  }

  void workbench_def() {
    const Token& at = peek();
    std::string name = ident("a workbench name");
    BehaviourWorkbench w;
    if (accept("=")) {
      expect("dual");
      expect("@");
      const Token& rt = peek();
      std::string other = ident("a workbench name");
      auto it = s_.workbenches.find(other);
      if (it == s_.workbenches.end()) fail_at(rt, ErrorKind::UnknownName, "workbench '" + other + "' is not defined");
      w = it->second.dual();
    } else {
      expect("{");
      if (!accept("gen")) fail("'gen'");
      expect("=");
      w.generators = member_list();
      expect(";");
      if (!accept("test")) fail("'test'");
      expect("=");
      w.testers = member_list();
      accept(";");
      expect("}");
      if (!w.generators.empty()) {
        w.polarity = w.generators.front().polarity();
      } else if (!w.testers.empty()) {
        w.polarity = opposite(w.testers.front().polarity());
      }
      w.atomic = true;
      auto single_atomic = [](const MultiDesign& m) {
        if (m.positive && m.bindings.empty()) return is_atomic(*m.positive);
        return !m.positive && m.bindings.size() == 1 && m.bindings.count(kAtomicAddress) && is_atomic(m.bindings.begin()->second);
      };
      for (const auto& g : w.generators) w.atomic = w.atomic && single_atomic(g);
      for (const auto& t : w.testers) w.atomic = w.atomic && single_atomic(t);
      for (const auto& g : w.generators)
        if (g.polarity() != w.polarity) fail_at(at, ErrorKind::PolarityMismatch, name + ": generators of mixed polarity");
      for (const auto& t : w.testers)
        if (t.polarity() == w.polarity) fail_at(at, ErrorKind::PolarityMismatch, name + ": tester of the generators' polarity");
    }
    w.label = name;
    define(DefKind::Workbench, name, at);
    s_.workbenches.emplace(name, w);
  }
};

std::string member_text(const MultiDesign& m) {
  if (m.positive && m.bindings.empty()) return to_text(*m.positive);
  if (!m.positive && m.bindings.size() == 1 && m.bindings.count(kAtomicAddress)) return to_text(m.bindings.begin()->second);
  return to_text(m);
}

std::string members_text(const std::vector<MultiDesign>& ms) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) out += (i ? ", " : "") + member_text(ms[i]);
  return out;
}

}  // namespace

Session parse(const std::string& text) { return Parser(text).run(); }

Session parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::UnknownName, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string render(const BehaviourWorkbench& w) {
  return "workbench " + w.label + " { gen = " + members_text(w.generators) + " ; test = " + members_text(w.testers) + " }";
}

std::string render(const Session& s) {
  std::string out;
  if (s.declared_sig) {
    out += "sig {";
    for (const auto& [a, n] : s.sig.arity) out += " " + a + "/" + std::to_string(n);
    out += " }\n";
  }
  for (const auto& [k, name] : s.order) {
    switch (k) {
      case DefKind::Design: out += "design " + name + " = " + to_text(s.designs.at(name)); break;
      case DefKind::Connective: out += "conn " + name + " = " + to_text(s.connectives.at(name)); break;
      case DefKind::Multi:
      case DefKind::Anti: out += std::string(to_string(k)) + " " + name + " = " + to_text(s.multis.at(name)); break;
      case DefKind::Sequence: out += "seq " + name + " = " + to_text(s.sequences.at(name)); break;
      case DefKind::Workbench: {
        auto w = s.workbenches.at(name);
        w.label = name;
        out += render(w);
        break;
      }
    }
    out += "\n";
  }
  return out;
}

bool session_equivalent(const Session& a, const Session& b) {
  if (a.order != b.order || a.declared_sig != b.declared_sig || a.sig.arity != b.sig.arity) return false;
  auto md_eq = [](const std::vector<MultiDesign>& x, const std::vector<MultiDesign>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!(x[i] == y[i])) return false;
    return true;
  };
  for (const auto& [k, name] : a.order) {
    switch (k) {
      case DefKind::Design:
        if (!alpha_eq(a.designs.at(name), b.designs.at(name))) return false;
        break;
      case DefKind::Connective:
        if (!alpha_eq(a.connectives.at(name), b.connectives.at(name))) return false;
        break;
      case DefKind::Multi:
      case DefKind::Anti:
        if (!(a.multis.at(name) == b.multis.at(name))) return false;
        break;
      case DefKind::Sequence:
        if (!seq_alpha_eq(a.sequences.at(name), b.sequences.at(name))) return false;
        break;
      case DefKind::Workbench: {
        const auto& x = a.workbenches.at(name);
        const auto& y = b.workbenches.at(name);
        if (x.polarity != y.polarity || !md_eq(x.generators, y.generators) || !md_eq(x.testers, y.testers)) return false;
        break;
      }
    }
  }
  return true;
}

std::string emit_trace_json(const Interaction& run) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = "ludics-trace/1";
  std::vector<std::optional<std::size_t>> just;
  if (!aj_violation(run.actions)) just = justifiers(run.actions);
  ordered_json actions = ordered_json::array();
  for (std::size_t i = 0; i < run.actions.size(); ++i) {
    const auto& k = run.actions[i];
    ordered_json a;
    a["polarity"] = k.polarity() == Polarity::Positive ? "positive" : "negative";
    a["kind"] = k.is_daimon() ? "daimon" : (k.kind == LocatedAction::Kind::Pos ? "pos" : "neg");
    a["address"] = k.is_daimon() ? ordered_json(nullptr) : ordered_json(k.address);
    a["name"] = k.is_daimon() ? ordered_json(nullptr) : ordered_json(k.name);
    a["args"] = k.args;
    a["justifier_index"] = i < just.size() && just[i] ? ordered_json(*just[i]) : ordered_json(nullptr);
    actions.push_back(std::move(a));
  }
  j["actions"] = std::move(actions);
  j["status"] = run.status == EvalOutcome::Status::Converged ? "converged"
                : run.status == EvalOutcome::Status::Omega   ? "omega"
                                                             : "fuel_exhausted";
  j["steps"] = run.steps;
  return j.dump(2) + "\n";
}

}  // namespace ludics
