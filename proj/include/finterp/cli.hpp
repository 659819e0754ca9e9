#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finterp/combinators.hpp"
#include "finterp/eval.hpp"
#include "finterp/json_out.hpp"
#include "finterp/parse.hpp"
#include "finterp/witness.hpp"

namespace finterp {
namespace cli {

struct RunConfig {
  std::vector<std::string> files;
  bool json = false;
  bool liberal = false;
  bool trace = false;
  bool mr_mode = false;
  std::size_t max_steps = 1'000'000;
  std::string range = "0..10";
  std::string item;
  std::vector<std::string> use;
};

namespace detail {

inline const char* yesno(bool b) { return b ? "yes" : "no"; }

inline IntRange parse_range(const std::string& s) {
  auto sep = s.find("..");
  if (sep == std::string::npos)
    throw Error(ErrorKind::Syntax, "range must have the form a..b, got '" + s + "'");
  try {
    IntRange r{std::stol(s.substr(0, sep)), std::stol(s.substr(sep + 2))};
    if (r.lo > r.hi)
      throw Error(ErrorKind::Syntax, "range bounds are reversed in '" + s + "'");
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::Syntax, "range must have the form a..b, got '" + s + "'");
  } catch (const std::out_of_range&) {
    throw Error(ErrorKind::Syntax, "range bounds out of range in '" + s + "'");
  }
}

inline SourceText read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Syntax, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return SourceText{ss.str(), path};
}

struct ItemOutput {
  std::string item;
  Json result;  // null on error
  std::vector<std::string> diagnostics;
  int code = 0;
  std::vector<std::string> human;
};

class Session {
public:
  Session(const RunConfig& cfg, const std::string& subcommand, std::ostream& out,
          std::ostream& err)
      : cfg_(cfg), subcommand_(subcommand), out_(out), err_(err) {}

  int run() {
    Json json_items = Json::array();
    int code = 0;
    for (const std::string& path : cfg_.files) {
      std::vector<ItemOutput> outputs;
      try {
        ParsedFile file = parse_file(read_file(path));
        outputs = process_file(file);
      } catch (const Error& e) {
        ItemOutput bad;
        bad.item = path;
        bad.result = nullptr;
        bad.diagnostics.push_back(e.what());
        bad.code = static_cast<int>(e.category());
        outputs.push_back(std::move(bad));
      }
      for (ItemOutput& o : outputs) {
        if (code == 0 && o.code != 0) code = o.code;
        for (const std::string& d : o.diagnostics) err_ << d << "\n";
        if (cfg_.json) {
          json_items.push_back(Json{{"item", o.item},
                                    {"subcommand", subcommand_},
                                    {"mode", mode_name(mode())},
                                    {"result", o.result},
                                    {"diagnostics", o.diagnostics}});
        } else {
          for (const std::string& line : o.human) out_ << line << "\n";
        }
      }
    }
    if (cfg_.json) out_ << json_items.dump(2) << "\n";
    return code;
  }

private:
  const RunConfig& cfg_;
  std::string subcommand_;
  std::ostream& out_;
  std::ostream& err_;

  ClassifyMode mode() const {
    return cfg_.liberal ? ClassifyMode::Liberal : ClassifyMode::Strict;
  }

  EvalConfig eval_config() const { return EvalConfig{cfg_.max_steps, cfg_.trace}; }

  bool selected(const FileItem& item) const {
    return cfg_.item.empty() || cfg_.item == item.name;
  }

  std::vector<ItemOutput> process_file(const ParsedFile& file) {
    if (subcommand_ == "witness") return run_witness(file);
    const bool wants_terms = subcommand_ == "eval";
    const bool wants_formulas = subcommand_ != "eval";
    const bool wants_both = subcommand_ == "check";
    std::vector<ItemOutput> outputs;
    bool found = false;
    for (const FileItem& item : file.items) {
      if (!selected(item)) continue;
      bool is_formula = item.kind == FileItem::Kind::Formula;
      bool usable = wants_both || (is_formula ? wants_formulas : wants_terms);
      if (!usable) {
        if (cfg_.item.empty()) continue;  // off-kind items are skipped silently
        found = true;
        ItemOutput wrong;
        wrong.item = item.name;
        wrong.result = nullptr;
        wrong.diagnostics.push_back("Error: item '" + item.name + "' is a " +
                                    (is_formula ? "formula" : "term") + "; '" + subcommand_ +
                                    "' needs a " + (wants_terms ? "term" : "formula"));
        wrong.code = 1;
        outputs.push_back(std::move(wrong));
        continue;
      }
      found = true;
      outputs.push_back(process_item(file, item));
    }
    if (!found && !cfg_.item.empty()) {
      ItemOutput missing;
      missing.item = cfg_.item;
      missing.result = nullptr;
      missing.diagnostics.push_back("Error: no item named '" + cfg_.item + "' in input");
      missing.code = 1;
      outputs.push_back(std::move(missing));
    }
    return outputs;
  }

  ItemOutput process_item(const ParsedFile& file, const FileItem& item) {
    ItemOutput o;
    o.item = item.name;
    try {
      if (subcommand_ == "check") run_check(file, item, o);
      else if (subcommand_ == "classify") run_classify(item, o);
      else if (subcommand_ == "mr") run_mr(item, o);
      else if (subcommand_ == "mr-types") run_mr_types(item, o);
      else if (subcommand_ == "dialectica") run_dialectica(item, o);
      else if (subcommand_ == "d-types") run_d_types(item, o);
      else if (subcommand_ == "seq") run_seq(item, o);
      else if (subcommand_ == "report") run_report(item, o);
      else if (subcommand_ == "eval") run_eval(item, o);
      else if (subcommand_ == "decide") run_decide(item, o);
    } catch (const Error& e) {
      o.result = nullptr;
      o.diagnostics.push_back(e.what());
      o.code = static_cast<int>(e.category());
    }
    return o;
  }

  void run_check(const ParsedFile& file, const FileItem& item, ItemOutput& o) {
    if (item.kind == FileItem::Kind::Term) {
      Type t = infer_type(*item.term, file.decls);
      o.result = Json{{"kind", "term"}, {"type", to_string(t)}};
      o.human.push_back(item.name + ": term : " + to_string(t));
    } else {
      typecheck_formula(*item.formula, file.decls);
      o.result = Json{{"kind", "formula"}, {"ok", true}};
      o.human.push_back(item.name + ": formula ok");
    }
  }

  void run_classify(const FileItem& item, ItemOutput& o) {
    ClassificationReport r = classify(*item.formula, mode());
    o.result = to_json(r);
    o.human.push_back(item.name + ":");
    auto flag = [&](const char* name, bool value) {
      std::string line = "  " + std::string(name) + ": " + yesno(value);
      auto it = r.witness_paths.find(name);
      if (it != r.witness_paths.end()) line += " (at \"" + it->second + "\")";
      o.human.push_back(line);
    };
    flag("quantifier_free", r.quantifier_free);
    flag("exists_free", r.exists_free);
    flag("purely_universal", r.purely_universal);
    flag("in_gamma1", r.in_gamma1);
    flag("in_gamma2", r.in_gamma2);
    flag("negative", r.negative);
  }

  static std::string tuple_text(const VarTuple& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.vars.size(); ++i) {
      if (i) s += "; ";
      s += t.vars[i].first + " : " + to_string(t.vars[i].second);
    }
    return s + "]";
  }

  static std::string types_text(const std::vector<Type>& ts) {
    std::string s = "[";
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (i) s += ", ";
      s += to_string(ts[i]);
    }
    return s + "]";
  }

  void run_mr(const FileItem& item, ItemOutput& o) {
    MrResult r = mr_translate(*item.formula);
    o.result = to_json(r);
    o.human.push_back(item.name + ":");
    o.human.push_back("  realizers: " + tuple_text(r.realizers));
    o.human.push_back("  formula:   " + to_string(r.formula));
  }

  void run_mr_types(const FileItem& item, ItemOutput& o) {
    std::vector<Type> ts = mr_types(*item.formula);
    o.result = Json{{"realizer_types", types_to_json(ts)}};
    o.human.push_back(item.name + ": realizer types " + types_text(ts));
  }

  void run_dialectica(const FileItem& item, ItemOutput& o) {
    DResult r = d_translate(*item.formula);
    o.result = to_json(r);
    o.human.push_back(item.name + ":");
    o.human.push_back("  exists: " + tuple_text(r.exists_tuple));
    o.human.push_back("  forall: " + tuple_text(r.forall_tuple));
    o.human.push_back("  matrix: " + to_string(r.matrix));
  }

  void run_d_types(const FileItem& item, ItemOutput& o) {
    DTypes t = d_types(*item.formula);
    o.result = to_json(t);
    o.human.push_back(item.name + ": exists " + types_text(t.exists_types) + " forall " +
                      types_text(t.forall_types));
  }

  void run_seq(const FileItem& item, ItemOutput& o) {
    Formula s = sequentialize(*item.formula);
    o.result = Json{{"sequential_form", to_string(s)}};
    o.human.push_back(item.name + ": " + to_string(s));
  }

  void run_report(const FileItem& item, ItemOutput& o) {
    TheoremReport r = applicable_theorems(*item.formula, mode());
    o.result = to_json(r);
    o.human.push_back(item.name + ":");
    o.human.push_back("  gamma1: " + std::string(yesno(r.gamma1)));
    o.human.push_back("  gamma2: " + std::string(yesno(r.gamma2)));
    o.human.push_back("  second_order_fragment: " +
                      std::string(yesno(r.second_order_fragment)));
    o.human.push_back("  uses_full_recursors: " + std::string(yesno(r.uses_full_recursors)));
    std::string names;
    for (auto t : r.applicable) {
      if (!names.empty()) names += " ";
      names += theorem_label(t);
    }
    o.human.push_back("  applicable: " + (names.empty() ? "none" : names));
    o.human.push_back("  rca_replacement: " + std::string(yesno(r.rca_replacement)));
  }

  void run_eval(const FileItem& item, ItemOutput& o) {
    std::vector<Term> steps;
    EvalConfig cfg = eval_config();
    Term nf = normalize(*item.term, cfg, &steps);
    Json result{{"normal_form", to_string(nf)}};
    if (free_vars(*item.term).empty() && type_of(*item.term).is_nat()) {
      auto n = nf.as_numeral();
      if (n) result["value"] = *n;
    }
    if (cfg.trace) {
      Json tr = Json::array();
      for (const Term& s : steps) tr.push_back(to_string(s));
      result["trace"] = tr;
      result["steps"] = steps.empty() ? 0 : steps.size() - 1;
      o.human.push_back("== " + item.name);
      for (std::size_t i = 0; i < steps.size(); ++i)
        o.human.push_back((i == 0 ? "" : "--> ") + to_string(steps[i]));
    } else {
      o.human.push_back(item.name + ": " + to_string(nf));
    }
    o.result = std::move(result);
  }

  void run_decide(const FileItem& item, ItemOutput& o) {
    bool value = decide_qf(*item.formula, eval_config());
    o.result = Json{{"value", value}};
    o.human.push_back(item.name + ": " + (value ? "true" : "false"));
  }

  std::vector<ItemOutput> run_witness(const ParsedFile& file) {
    std::vector<ItemOutput> outputs;
    ItemOutput o;
    try {
      const FileItem* target = nullptr;
      for (const FileItem& item : file.items) {
        if (item.kind != FileItem::Kind::Formula) continue;
        if (!selected(item)) continue;
        if (target)
          throw Error(ErrorKind::ShapeUnsupported,
                      "multiple formula items; select one with --item");
        target = &item;
      }
      if (!target)
        throw Error(ErrorKind::ShapeUnsupported,
                    cfg_.item.empty() ? std::string("no formula item in input")
                                      : "no formula item named '" + cfg_.item + "'");
      o.item = target->name;
      if (cfg_.use.empty())
        throw Error(ErrorKind::ArityMismatch, "witness requires at least one --use TERM");
      std::vector<Term> terms;
      for (const std::string& name : cfg_.use) {
        const FileItem* found = nullptr;
        for (const FileItem& item : file.items)
          if (item.kind == FileItem::Kind::Term && item.name == name) found = &item;
        if (!found)
          throw Error(ErrorKind::ShapeUnsupported, "no term item named '" + name + "'");
        terms.push_back(*found->term);
      }
      IntRange range = parse_range(cfg_.range);
      WitnessReport report;
      if (cfg_.mr_mode) {
        report = check_mr_witness(*target->formula, terms, range, eval_config());
      } else {
        if (terms.size() != 1)
          throw Error(ErrorKind::ArityMismatch,
                      "plain witness checking takes exactly one --use TERM; pass --mr for "
                      "realizer tuples");
        report = check_witness(*target->formula, terms[0], range, eval_config());
      }
      o.result = to_json(report);
      o.human.push_back(o.item + ": " + report.verdict() + " (" +
                        std::to_string(report.checked) + " checked, range " + report.range +
                        ")");
      for (const auto& f : report.failures) {
        std::string row = "  at [";
        for (std::size_t i = 0; i < f.inputs.size(); ++i) {
          if (i) row += ", ";
          row += std::to_string(f.inputs[i]);
        }
        row += "]: " + to_string(f.instance) + " (false)";
        o.human.push_back(row);
      }
      if (!report.pass()) o.code = 1;
    } catch (const Error& e) {
      if (o.item.empty()) o.item = cfg_.item.empty() ? "witness" : cfg_.item;
      o.result = nullptr;
      o.diagnostics.push_back(e.what());
      o.code = static_cast<int>(e.category());
    }
    outputs.push_back(std::move(o));
    return outputs;
  }
};

}  // namespace detail

// Runs the command line given argv-style arguments (without the program
// name). Returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for proof interpretations over finite-type arithmetic"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<CLI::App*> subs;
  auto add_sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("files", cfg.files, "input files")->required()->expected(-1);
    cmd->add_flag("--json", cfg.json, "emit JSON on stdout");
    cmd->add_flag("--liberal-qf", cfg.liberal,
                  "treat quantifier-free subformulas as prime when testing "
                  "exists-freeness");
    cmd->add_option("--max-steps", cfg.max_steps, "reduction step budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--item", cfg.item, "process only the named item");
    subs.push_back(cmd);
    return cmd;
  };

  add_sub("check", "parse and typecheck all items");
  add_sub("classify", "syntactic class membership of formula items");
  add_sub("mr", "modified-realizability translation of formula items");
  add_sub("mr-types", "realizer tuple types of formula items");
  add_sub("dialectica", "Dialectica translation of formula items");
  add_sub("d-types", "Dialectica tuple types of formula items");
  add_sub("seq", "sequential form of forall-exists sentences");
  add_sub("report", "uniformization theorem applicability report");
  CLI::App* eval_cmd = add_sub("eval", "normalize term items");
  eval_cmd->add_flag("--trace", cfg.trace, "print one reduction step per line");
  add_sub("decide", "decide closed quantifier-free formula items");
  CLI::App* witness_cmd = add_sub("witness", "check witness terms over a numeric range");
  witness_cmd->add_option("--range", cfg.range, "inclusive sample range a..b");
  witness_cmd->add_option("--use", cfg.use, "term item supplying the witness (repeatable)");
  witness_cmd->add_flag("--mr", cfg.mr_mode, "check a realizer tuple against t mr A");

  std::string subcommand;
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
    for (CLI::App* s : subs)
      if (s->parsed()) subcommand = s->get_name();
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  return detail::Session(cfg, subcommand, out, err).run();
}

}  // namespace cli
}  // namespace finterp
