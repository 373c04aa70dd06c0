// ludics: command-line front end for session files.
// Exit codes: 0 computed / check passed, 1 check failed, 2 inconclusive or out of fuel, 3 input error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ludics/decompose.hpp"
#include "ludics/frontend.hpp"

using namespace ludics;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInconclusive = 2, kInputError = 3 };

struct Common {
  std::string file;
  std::size_t fuel = kDefaultFuel;
  bool json = false;
};

int emit(const Common& c, const ordered_json& j, const std::string& text, int code) {
  if (c.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return code;
}

int verdict_code(Verdict v) {
  return v == Verdict::Pass ? kOk : v == Verdict::Fail ? kFailed : kInconclusive;
}

ordered_json records_json(const std::vector<InstanceRecord>& rs) {
  ordered_json a = ordered_json::array();
  for (const auto& r : rs)
    a.push_back({{"clause", r.clause}, {"input", r.input}, {"verdict", to_string(r.verdict)}, {"witness", r.witness}});
  return a;
}

ordered_json paths_json(const PathSet& ps) {
  ordered_json a = ordered_json::array();
  for (const auto& p : ps) a.push_back(to_text(p));
  return a;
}

std::string paths_text(const PathSet& ps) {
  std::string out;
  for (const auto& p : ps) out += to_text(p) + "\n";
  return out;
}

int cmd_normalize(const Common& c, const std::string& name) {
  Session s = parse_file(c.file);
  auto r = normalize(s.design(name), c.fuel);
  ordered_json j{{"design", name}, {"status", to_string(r.status)}, {"steps", r.steps}};
  std::string text;
  if (r.exhausted()) {
    text = "fuel exhausted after " + std::to_string(r.steps) + " steps\n";
    return emit(c, j, text, kInconclusive);
  }
  std::string v = r.converged() ? to_text(r.design) : "omega";
  j["result"] = v;
  return emit(c, j, v + "\n", kOk);
}

int cmd_orthogonal(const Common& c, const std::string& design, const std::string& anti) {
  Session s = parse_file(c.file);
  const Design& t = s.design(design);
  MultiDesign g = s.as_multi(anti);
  Tri r = orthogonal(t, g, c.fuel);
  ordered_json j{{"design", design}, {"anti", anti}, {"orthogonal", to_string(r)}};
  int code = r == Tri::True ? kOk : r == Tri::False ? kFailed : kInconclusive;
  return emit(c, j, std::string(to_string(r)) + "\n", code);
}

int cmd_interact(const Common& c, const std::string& left, const std::string& right, const std::string& out) {
  Session s = parse_file(c.file);
  auto run = iseq(s.as_multi(left), s.as_multi(right), c.fuel);
  std::string trace = emit_trace_json(run);
  if (!out.empty()) {
    if (out == "-") {
      std::cout << trace;
    } else {
      std::ofstream f(out);
      if (!f) throw Error(ErrorKind::UnknownName, "cannot write " + out);
      f << trace;
    }
  }
  int code = run.exhausted() ? kInconclusive : kOk;
  if (out != "-") std::cout << to_text(run.actions) << "\nstatus: " << to_string(run.status) << "\n";
  return code;
}

int cmd_harmony(const Common& c, const std::string& name) {
  Session s = parse_file(c.file);
  const Connective& k = s.connective(name);
  auto h = check_harmony(k);
  auto eta = eta_condition_check(k);
  auto beta = beta_pool_check(k);
  auto list = [](const std::vector<NegAction>& as) {
    ordered_json a = ordered_json::array();
    for (const auto& x : as) a.push_back(to_text(x));
    return a;
  };
  ordered_json j{{"connective", to_text(k)},     {"inversion", h.inversion},
                 {"recovery", h.recovery},       {"harmony", h.harmony},
                 {"missing_from_intro", list(h.missing_from_intro)},
                 {"missing_from_elim", list(h.missing_from_elim)},
                 {"overlap", list(h.overlap)},   {"beta", beta.holds},
                 {"eta", eta.holds}};
  std::string text = to_text(k) + "\ninversion: " + (h.inversion ? "true" : "false") +
                     ", recovery: " + (h.recovery ? "true" : "false") + ", harmony: " + (h.harmony ? "true" : "false") +
                     "\nbeta: " + (beta.holds ? "true" : "false") + " (" + std::to_string(beta.checked) +
                     " cuts), eta: " + (eta.holds ? "true" : "false") + "\n";
  for (const auto& a : h.missing_from_intro) text += "elim only: " + to_text(a) + "\n";
  for (const auto& a : h.missing_from_elim) text += "intro only: " + to_text(a) + "\n";
  for (const auto& a : h.overlap) text += "shared: " + to_text(a) + "\n";
  return emit(c, j, text, h.harmony ? kOk : kFailed);
}

std::vector<BehaviourWorkbench> expand(const Session& s, const std::vector<std::string>& names, std::size_t n) {
  std::vector<BehaviourWorkbench> out;
  for (const auto& x : names) out.push_back(s.workbench(x));
  if (out.size() == 1 && n > 1) out.assign(n, out.front());
  if (out.size() != n) throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(n) + " workbenches");
  return out;
}

int cmd_decompose(const Common& c, const std::string& name, const std::string& mode, std::size_t max_len,
                  const std::vector<std::string>& neg_names, const std::vector<std::string>& pos_names) {
  Session s = parse_file(c.file);
  const Connective& k = s.connective(name);
  auto neg = expand(s, neg_names, k.arity());
  std::vector<BehaviourWorkbench> pos;
  if (pos_names.empty()) {
    for (const auto& w : neg) pos.push_back(w.dual());
  } else {
    pos = expand(s, pos_names, k.arity());
  }
  CheckBounds b;
  b.fuel = c.fuel;
  b.max_len = max_len;
  DecompositionReport r = mode == "paths" ? check_dual_decomposability_paths(k, neg, pos, b)
                                          : check_dual_decomposability_connective(k, neg, pos, b);
  ordered_json j{{"connective", to_text(k)}, {"mode", mode},   {"verdict", to_string(r.verdict)},
                 {"scope", r.scope},        {"instances", records_json(r.instances)}};
  std::string text = to_text(k) + "\n" + mode + ": " + to_string(r.verdict) + "\nscope: " + r.scope + "\n";
  if (auto f = r.first_failure()) text += "witness: [" + f->clause + "] " + f->input + ": " + f->witness + "\n";
  return emit(c, j, text, verdict_code(r.verdict));
}

int cmd_paths(const Common& c, const std::string& name, std::size_t max_len) {
  Session s = parse_file(c.file);
  PathSet ps = s.designs.count(name) ? paths_of(s.design(name), max_len) : paths_of(s.multi(name), max_len);
  ordered_json j{{"design", name}, {"max_len", max_len}, {"paths", paths_json(ps)}};
  return emit(c, j, paths_text(ps), kOk);
}

int cmd_shuffle(const Common& c, const std::vector<std::string>& names) {
  Session s = parse_file(c.file);
  if (names.size() != 2) throw Error(ErrorKind::ArityMismatch, "shuffle takes two sequences");
  auto r = shuffle(s.sequence(names[0]), s.sequence(names[1]));
  if (!r) return emit(c, ordered_json{{"defined", false}}, "undefined\n", kFailed);
  PathSet ps = canonical_set(*r);
  return emit(c, ordered_json{{"defined", true}, {"paths", paths_json(ps)}}, paths_text(ps), kOk);
}

int cmd_regularity(const Common& c, const std::string& w, const std::string& d, std::size_t max_len) {
  Session s = parse_file(c.file);
  auto r = check_regularity(s.workbench(w), s.workbench(d), c.fuel, max_len);
  ordered_json j{{"workbench", w},
                 {"dual", d},
                 {"verdict", to_string(r.verdict)},
                 {"scope", r.scope},
                 {"clauses", records_json(r.clauses)},
                 {"visitable", paths_json(r.visitable)},
                 {"dual_visitable", paths_json(r.dual_visitable)}};
  std::string text = "regularity: " + to_string(r.verdict) + "\nscope: " + r.scope + "\n";
  for (const auto& cl : r.clauses)
    text += "  " + cl.clause + ": " + to_string(cl.verdict) + (cl.witness.empty() ? "" : " (" + cl.witness + ")") + "\n";
  return emit(c, j, text, verdict_code(r.verdict));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interaction engine for computational ludics"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool json_flag = true) {
    sub->add_option("file", common.file, "session file")->required()->check(CLI::ExistingFile);
    sub->add_option("--fuel", common.fuel, "reduction step budget");
    if (json_flag) sub->add_flag("--json", common.json, "machine-readable output");
  };

  std::string design, anti, left, right, out, conn, mode = "connective", workbench, dual;
  std::size_t max_len = 8;
  std::vector<std::string> seqs, neg, pos;

  auto* normalize_cmd = app.add_subcommand("normalize", "normal form of a design");
  add_common(normalize_cmd);
  normalize_cmd->add_option("--design", design)->required();

  auto* orth_cmd = app.add_subcommand("orthogonal", "orthogonality of a design and an anti-design");
  add_common(orth_cmd);
  orth_cmd->add_option("--design", design)->required();
  orth_cmd->add_option("--anti", anti)->required();

  auto* interact_cmd = app.add_subcommand("interact", "interaction sequence of two multi-designs");
  add_common(interact_cmd, false);
  interact_cmd->add_option("--left", left)->required();
  interact_cmd->add_option("--right", right)->required();
  interact_cmd->add_option("--json", out, "write the JSON trace here ('-' for stdout)");

  auto* harmony_cmd = app.add_subcommand("harmony", "harmony, beta and eta conditions of a connective");
  add_common(harmony_cmd);
  harmony_cmd->add_option("--conn", conn)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "dual decomposability on workbenches");
  add_common(decompose_cmd);
  decompose_cmd->add_option("--conn", conn)->required();
  decompose_cmd->add_option("--mode", mode)->check(CLI::IsMember({"connective", "paths"}));
  decompose_cmd->add_option("--max-len", max_len);
  decompose_cmd->add_option("--neg", neg, "negative workbench per variable (one is repeated)")->required();
  decompose_cmd->add_option("--pos", pos, "positive workbench per variable (default: duals of --neg)");

  auto* paths_cmd = app.add_subcommand("paths", "paths of a design up to a length");
  add_common(paths_cmd);
  paths_cmd->add_option("--design", design)->required();
  paths_cmd->add_option("--max-len", max_len);

  auto* shuffle_cmd = app.add_subcommand("shuffle", "shuffle of two paths");
  add_common(shuffle_cmd);
  shuffle_cmd->add_option("--seq", seqs)->required()->expected(2);

  auto* reg_cmd = app.add_subcommand("regularity", "regularity of a workbench and its dual");
  add_common(reg_cmd);
  reg_cmd->add_option("--workbench", workbench)->required();
  reg_cmd->add_option("--dual", dual)->required();
  reg_cmd->add_option("--max-len", max_len);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*normalize_cmd) return cmd_normalize(common, design);
    if (*orth_cmd) return cmd_orthogonal(common, design, anti);
    if (*interact_cmd) return cmd_interact(common, left, right, out);
    if (*harmony_cmd) return cmd_harmony(common, conn);
    if (*decompose_cmd) return cmd_decompose(common, conn, mode, max_len, neg, pos);
    if (*paths_cmd) return cmd_paths(common, design, max_len);
    if (*shuffle_cmd) return cmd_shuffle(common, seqs);
    if (*reg_cmd) return cmd_regularity(common, workbench, dual, max_len);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
