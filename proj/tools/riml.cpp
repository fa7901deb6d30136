// Command-line front end: evaluation, frame tools, the validity oracle,
// the proof checker and the metatheorem suites. Exit codes: 0 affirmative
// verdict or plain success, 1 negative verdict, 2 usage or input error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "riml/meta.hpp"

using namespace riml;

namespace {

/// Inline JSON when the argument starts with '{', else a file path.
Json document(const std::string& arg) {
  const std::size_t i = arg.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && arg[i] == '{') return load_json(arg);
  std::ifstream in(arg);
  if (!in) throw InputError("cannot open file: " + arg);
  std::stringstream text;
  text << in.rdbuf();
  return load_json(text.str());
}

void print_json(const Json& j) { std::cout << j.dump() << "\n"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int verdict(bool affirmative) { return affirmative ? 0 : 1; }

struct Options {
  bool json = false;
  std::string formula;
  std::string model;
  std::string world;
  std::string semantics = "ri";
  std::string frame_class = "all";
  bool mirror_closed = false;
  int max_worlds = kDefaultMaxWorlds;
  int meta_worlds = 0;  // 0 = per-suite default
  std::uint64_t budget = kDefaultStepLimit;
  int workers = 1;
  int max_depth = 3;
  std::string frame;
  std::string frame2;
  std::string map;
  std::string proof;
  std::string suite;
};

int run_eval(const Options& o) {
  const Model m = model_from_json(document(o.model));
  bool holds;
  if (o.semantics == "box") {
    holds = eval_box(m, o.world, parse_box(o.formula));
  } else {
    holds = eval_ri(m, o.world, parse_ri(o.formula));
  }
  if (o.json) {
    print_json(Json{{"holds", holds}});
  } else {
    std::cout << (holds ? "true" : "false") << "\n";
  }
  return verdict(holds);
}

int run_valid(const Options& o) {
  const ClassQuery q{FrameClass::parse(o.frame_class), o.mirror_closed,
                     o.max_worlds};
  StepBudget budget(o.budget);
  ValidityReport r;
  if (o.semantics == "box") {
    r = valid_over_class(parse_box(o.formula), q, budget, o.workers);
  } else {
    r = valid_over_class(parse_ri(o.formula), q, budget, o.workers);
  }
  if (o.json) {
    print_json(validity_report_to_json(r));
  } else if (r.valid) {
    std::cout << "valid up to " << o.max_worlds << " worlds ("
              << r.frames_checked << " frames checked)\n";
  } else {
    const Countermodel& cm = *r.countermodel;
    std::cout << "countermodel at world " << cm.world << " ("
              << r.frames_checked << " frames checked):\n"
              << model_to_json(Model(cm.frame, cm.valuation)).dump() << "\n";
  }
  return verdict(r.valid);
}

int run_translate(const Options& o) {
  const std::string out = print_ri(circ_translate(parse_box(o.formula)));
  if (o.json) {
    print_json(Json{{"formula", out}});
  } else {
    std::cout << out << "\n";
  }
  return 0;
}

int run_mirror(const Options& o) {
  const Frame f = frame_from_json(document(o.frame));
  Json out = Json::array();
  for (const Frame& r : mirror_reductions(f)) out.push_back(frame_to_json(r));
  if (o.json) {
    print_json(out);
  } else {
    for (const Json& j : out) std::cout << j.dump() << "\n";
  }
  return 0;
}

int run_closure(const Options& o) {
  print_json(frame_to_json(reflexive_closure(frame_from_json(document(o.frame)))));
  return 0;
}

int run_classes(const Options& o) {
  const Frame f = frame_from_json(document(o.frame));
  Json out;
  for (const char* name :
       {"all", "reflexive", "serial", "transitive", "symmetric", "euclidean",
        "final", "equivalence"}) {
    out[name] = class_member(f, FrameClass::parse(name));
  }
  if (o.json) {
    print_json(out);
  } else {
    for (const auto& [name, member] : out.items()) {
      std::cout << name << ": " << yes_no(member.get<bool>()) << "\n";
    }
  }
  return 0;
}

int run_robust(const Options& o) {
  StepBudget budget(o.budget);
  const RobustnessReport r = robust_under_reflexivity(
      FrameClass::parse(o.frame_class), o.max_worlds, budget);
  if (o.json) {
    Json out;
    out["robust"] = r.robust;
    if (r.witness) out["witness"] = frame_to_json(*r.witness);
    out["frames_checked"] = r.frames_checked;
    print_json(out);
  } else if (r.robust) {
    std::cout << "robust up to " << o.max_worlds << " worlds ("
              << r.frames_checked << " frames checked)\n";
  } else {
    std::cout << "not robust; witness member leaves the class under "
                 "reflexive closure:\n"
              << frame_to_json(*r.witness).dump() << "\n";
  }
  return verdict(r.robust);
}

int run_morphism(const Options& o) {
  const MorphismCheck c =
      check_morphism(frame_from_json(document(o.frame)),
                     frame_from_json(document(o.frame2)),
                     world_map_from_json(document(o.map)));
  if (o.json) {
    print_json(Json{{"forth", c.forth}, {"back", c.back},
                    {"bounded", c.bounded()}});
  } else {
    std::cout << "forth: " << yes_no(c.forth) << "\n"
              << "back: " << yes_no(c.back) << "\n"
              << "bounded: " << yes_no(c.bounded()) << "\n";
  }
  return verdict(c.bounded());
}

int run_prove(const Options& o) {
  const ProofDocument d = proof_from_json(document(o.proof));
  const CheckResult r = check_proof(d.proof, d.system);
  if (o.json) {
    print_json(check_result_to_json(r));
  } else if (r.ok) {
    std::cout << "ok: " << print_ri(*r.theorem) << "\n";
  } else {
    std::cout << "rejected at line " << r.error_line << ": " << r.reason
              << "\n";
  }
  return verdict(r.ok);
}

int run_meta(const Options& o) {
  const MetaResult r =
      run_meta_suite(o.suite, o.meta_worlds, o.workers, o.max_depth);
  if (o.json) {
    print_json(meta_result_to_json(r));
  } else {
    std::cout << r.name << ": " << (r.pass ? "pass" : "FAIL") << " ("
              << r.instances << " checks, " << r.violations
              << " violations)\n";
    for (const auto& note : r.notes) std::cout << "  " << note << "\n";
  }
  return verdict(r.pass);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  int code = 0;
  CLI::App app{"Reflexive-insensitive modal logic toolkit"};
  app.require_subcommand(1);

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "machine-readable JSON on stdout");
  };
  auto add_semantics = [&](CLI::App* sub) {
    sub->add_option("--semantics", o.semantics,
                    "formula language: ri (circle) or box")
        ->check(CLI::IsMember({"ri", "box"}))
        ->capture_default_str();
  };

  CLI::App* eval = app.add_subcommand(
      "eval", "truth of a formula at a world of a model");
  eval->add_option("formula", o.formula, "formula text")->required();
  eval->add_option("--model,-m", o.model, "model document (file or JSON)")
      ->required();
  eval->add_option("--world,-w", o.world, "world name")->required();
  add_semantics(eval);
  add_json(eval);
  eval->callback([&] { code = run_eval(o); });

  CLI::App* valid = app.add_subcommand(
      "valid", "search all frames of a bounded class for a countermodel");
  valid->add_option("formula", o.formula, "formula text")->required();
  add_semantics(valid);
  valid->add_option("--class", o.frame_class,
                    "frame class (all, reflexive, serial, transitive, "
                    "symmetric, euclidean, final, equivalence; join with +)")
      ->capture_default_str();
  valid->add_flag("--mirror-closed", o.mirror_closed,
                  "widen the class to all mirror-related frames");
  valid->add_option("--max-worlds", o.max_worlds, "frame size bound")
      ->capture_default_str();
  valid->add_option("--budget", o.budget, "evaluation step budget")
      ->envname("RIML_BUDGET")
      ->capture_default_str();
  valid->add_option("--workers", o.workers, "worker threads")
      ->capture_default_str();
  add_json(valid);
  valid->callback([&] { code = run_valid(o); });

  CLI::App* translate = app.add_subcommand(
      "translate", "circle translation of a box formula");
  translate->add_option("formula", o.formula, "box formula text")->required();
  add_json(translate);
  translate->callback([&] { code = run_translate(o); });

  CLI::App* mirror =
      app.add_subcommand("mirror", "all mirror reductions of a frame");
  mirror->add_option("frame", o.frame, "frame document (file or JSON)")
      ->required();
  add_json(mirror);
  mirror->callback([&] { code = run_mirror(o); });

  CLI::App* closure =
      app.add_subcommand("closure", "reflexive closure of a frame");
  closure->add_option("frame", o.frame, "frame document (file or JSON)")
      ->required();
  add_json(closure);
  closure->callback([&] { code = run_closure(o); });

  CLI::App* classes = app.add_subcommand(
      "classes", "membership of a frame in every named class");
  classes->add_option("frame", o.frame, "frame document (file or JSON)")
      ->required();
  add_json(classes);
  classes->callback([&] { code = run_classes(o); });

  CLI::App* robust = app.add_subcommand(
      "robust", "does reflexive closure keep a class's members inside it");
  robust->add_option("--class", o.frame_class, "frame class")->required();
  robust->add_option("--max-worlds", o.max_worlds, "frame size bound")
      ->capture_default_str();
  robust->add_option("--budget", o.budget, "evaluation step budget")
      ->envname("RIML_BUDGET")
      ->capture_default_str();
  add_json(robust);
  robust->callback([&] { code = run_robust(o); });

  CLI::App* morphism = app.add_subcommand(
      "morphism", "forth/back conditions of a world map between frames");
  morphism->add_option("source", o.frame, "source frame (file or JSON)")
      ->required();
  morphism->add_option("target", o.frame2, "target frame (file or JSON)")
      ->required();
  morphism->add_option("map", o.map, "world map document (file or JSON)")
      ->required();
  add_json(morphism);
  morphism->callback([&] { code = run_morphism(o); });

  CLI::App* prove =
      app.add_subcommand("prove", "check a Hilbert-style proof document");
  prove->add_option("proof", o.proof, "proof document (file or JSON)")
      ->required();
  add_json(prove);
  prove->callback([&] { code = run_prove(o); });

  CLI::App* meta = app.add_subcommand(
      "meta", "run a metatheorem suite and summarize");
  meta->add_option("suite", o.suite,
                   "mirror-invariance, bridge, compT or soundness")
      ->required();
  meta->add_option("--max-worlds", o.meta_worlds,
                   "frame size bound (0 = suite default)")
      ->capture_default_str();
  meta->add_option("--max-depth", o.max_depth, "corpus modal depth bound")
      ->capture_default_str();
  meta->add_option("--workers", o.workers, "worker threads")
      ->capture_default_str();
  add_json(meta);
  meta->callback([&] { code = run_meta(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
