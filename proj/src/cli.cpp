#include "flagclean/cli.hpp"

#include <algorithm>

#include <CLI11.hpp>

#include "flagclean/reports.hpp"

namespace flagclean {

namespace {

struct Options {
  std::string model_path;
  bool builtin = false;
  bool json = false;
  std::vector<std::string> set;
  bool witnesses = false;
  std::vector<std::string> mu;
  std::int64_t window = 16;
  std::int64_t denominator_bound = 4;
  std::int64_t range = 3;
  std::uint64_t max_cases = 5000;
  int precision = kDefaultPrecision;
};

ModelDocument load(const Options& o) {
  if (!o.model_path.empty() && o.builtin)
    throw Error(ErrorKind::InvalidArgument, "--model and --builtin are mutually exclusive");
  return o.model_path.empty() ? builtin_document() : load_model(o.model_path);
}

Assignment parse_assignment(const std::vector<std::string>& items, const ParamSpace& space) {
  Assignment a;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::InvalidArgument, "expected NAME=VALUE, got '" + item + "'");
    std::string name = item.substr(0, eq);
    if (!space.contains(name)) throw Error(ErrorKind::InvalidArgument, "unknown parameter '" + name + "'");
    if (a.count(name)) throw Error(ErrorKind::InvalidArgument, "parameter '" + name + "' set twice");
    a.emplace(std::move(name), parse_rational(item.substr(eq + 1)));
  }
  return a;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WindowTooSmall:
    case ErrorKind::NonInvertible:
    case ErrorKind::Disconnected:
    case ErrorKind::NonUnitDeterminant:
      return kExitPrecondition;
    default:
      return kExitInput;
  }
}

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : o_(o), out_(out) {}
  void operator()(const Json& report, const std::string& text) const {
    if (o_.json)
      out_ << report.dump(2) << '\n';
    else
      out_ << text;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cleanness criteria for rank-one local systems on toric-chart atlases", "flagclean"};
  app.require_subcommand(1);
  app.add_option("--model", o.model_path, "Model file")->check(CLI::ExistingFile);
  app.add_flag("--builtin", o.builtin, "Use the builtin SL2 affine-flag model (default)");
  app.add_flag("--json", o.json, "Machine-readable output");

  auto* derive = app.add_subcommand("derive", "Print the cleanness criterion");
  derive->add_option("--set", o.set, "Specialize parameters, NAME=RAT ...");
  derive->add_flag("--witnesses", o.witnesses, "Show the boundary divisors behind each form");
  auto* check = app.add_subcommand("check", "Decide cleanness at a parameter assignment");
  check->add_option("--set", o.set, "NAME=RAT ...")->required();
  auto* transitions = app.add_subcommand("transitions", "Print all total transition maps");
  auto* linebundle = app.add_subcommand("linebundle", "Derive the log-form cocycle and compare");
  auto* verify = app.add_subcommand("verify", "Cocycles, line bundle and loop-group fixtures");
  verify->add_option("--precision", o.precision, "Working t-adic precision")->check(CLI::PositiveNumber);

  auto* exporter = app.add_subcommand("export", "Print the model in model-file syntax");

  auto* oracle = app.add_subcommand("oracle", "Lattice-module oracle");
  oracle->require_subcommand(1);
  oracle->add_option("--window", o.window, "Lattice window half-width B")->check(CLI::PositiveNumber);
  auto* simple = oracle->add_subcommand("simple", "Simplicity of the direct image for exponents mu");
  simple->add_option("--mu", o.mu, "Exponents, comma separated (use --mu=-1/2,1/3 for a leading minus)")
      ->required()
      ->delimiter(',');
  auto* oclean = oracle->add_subcommand("clean", "Oracle versus criterion at one assignment");
  oclean->add_option("--set", o.set, "NAME=RAT ...")->required();
  auto* grid = oracle->add_subcommand("grid", "Oracle versus criterion over a rational grid");
  grid->add_option("--denominator-bound", o.denominator_bound)->check(CLI::PositiveNumber);
  grid->add_option("--range", o.range)->check(CLI::NonNegativeNumber);
  grid->add_option("--max-cases", o.max_cases)->check(CLI::PositiveNumber);
  for (auto* sub : {derive, check, transitions, linebundle, verify, exporter, oracle, simple, oclean, grid})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  const Emitter emit(o, out);
  try {
    if (*simple) {
      std::vector<Rational> mu;
      for (const auto& s : o.mu) mu.push_back(parse_rational(s));
      const bool ok = is_simple(mu, o.window);
      const Json r = oracle_simple_report(mu, o.window, ok);
      emit(r, render_oracle_simple(r));
      return ok ? kExitOk : kExitNegative;
    }

    const ModelDocument doc = load(o);
    const AtlasModel& model = doc.atlas;

    if (*derive) {
      Criterion crit = criterion(model);
      if (!o.set.empty()) crit = specialize(crit, parse_assignment(o.set, model.params));
      const Json r = derive_report(crit);
      emit(r, render_derive(r, o.witnesses));
      return kExitOk;
    }
    if (*check) {
      const Assignment a = parse_assignment(o.set, model.params);
      const Verdict v = evaluate_clean(model, a);
      const Json r = check_report(criterion(model), v);
      emit(r, render_check(r));
      return v.clean ? kExitOk : kExitNegative;
    }
    if (*exporter) {
      out << serialize(doc);
      return kExitOk;
    }
    if (*transitions) {
      const Json r = transitions_report(model);
      emit(r, render_transitions(r));
      return kExitOk;
    }
    if (*linebundle) {
      const LineBundleReport lb = check_linebundle(model);
      const Json r = linebundle_report(model, lb);
      emit(r, render_linebundle(r));
      return lb.ok() ? kExitOk : kExitNegative;
    }
    if (*verify) {
      const CocycleReport cr = verify_cocycles(model);
      const LineBundleReport lb = check_linebundle(model);
      const FixtureReport fr = verify_fixtures(doc.fixtures, o.precision);
      const Json r = verify_report(doc, cr, lb, fr);
      emit(r, render_verify(r));
      return r["ok"].get<bool>() ? kExitOk : kExitNegative;
    }
    if (*oclean) {
      const Assignment a = parse_assignment(o.set, model.params);
      const OracleAgreement ag = oracle_vs_criterion(model, a, o.window);
      const Json r = oracle_clean_report(model, a, o.window, ag);
      emit(r, render_oracle_clean(r));
      return ag.agree() && ag.oracle_clean ? kExitOk : kExitNegative;
    }
    if (*grid) {
      const GridReport gr = oracle_grid(model, o.denominator_bound, o.range, o.window, o.max_cases);
      const Json r = oracle_grid_report(model, o.denominator_bound, o.range, o.window, gr);
      emit(r, render_oracle_grid(r));
      return gr.ok() ? kExitOk : kExitNegative;
    }
  } catch (const ModelError& e) {
    err << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitInput;
}

}  // namespace flagclean
