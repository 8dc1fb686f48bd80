#include "vspin/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vspin/compiler.hpp"
#include "vspin/density.hpp"
#include "vspin/dj.hpp"
#include "vspin/gates.hpp"
#include "vspin/program.hpp"

namespace vspin::cli {

namespace {

using nlohmann::json;

json matrix_json(const Matrix4& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      rows.push_back({m.at(i, j).real(), m.at(i, j).imag()});
  return rows;
}

json phase_json(cd z) { return {z.real(), z.imag()}; }

json angle_json(const Angle& a) {
  if (a.is_pi_rational())
    return {{"kind", "pi_rational"}, {"num", a.num()}, {"den", a.den()},
            {"radians", a.value()}};
  return {{"kind", "radians"}, {"num", nullptr}, {"den", nullptr},
          {"radians", a.value()}};
}

json events_json(const PulseSequence& seq) {
  json evs = json::array();
  for (const auto& ev : seq.events) {
    if (const auto* p = std::get_if<PulseSpec>(&ev)) {
      evs.push_back({{"type", "pulse"},
                     {"axis", axis_name(p->axis)},
                     {"levels", {p->m, p->n}},
                     {"angle", angle_json(p->angle)},
                     {"phase", angle_json(p->phase)}});
    } else if (std::holds_alternative<GradientEvent>(ev)) {
      evs.push_back({{"type", "grad"}});
    } else {
      evs.push_back({{"type", "delay"},
                     {"seconds", std::get<DelayEvent>(ev).seconds}});
    }
  }
  return evs;
}

void print_matrix(std::ostream& os, const Matrix4& m) {
  os << std::setprecision(6);
  for (int i = 0; i < 4; ++i) {
    os << "  ";
    for (int j = 0; j < 4; ++j) {
      const cd z = m.at(i, j);
      std::ostringstream cell;
      cell << std::setprecision(6) << "(" << z.real() << "," << z.imag() << ")";
      os << std::setw(24) << std::left << cell.str();
    }
    os << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GateId parse_gate_name(const std::string& name) {
  if (const auto id = gate_from_name(name)) return *id;
  std::string names;
  for (GateId id : all_gate_ids()) names += gate_name(id) + " ";
  throw CLI::ValidationError("gate", "unknown gate '" + name +
                                         "' (names are case-sensitive): " + names);
}

// ---- system configuration ---------------------------------------------

struct SysConfig {
  SystemSpec sys = SystemSpec::defaults();
  double beta = 1e-3;
};

void apply_config_file(SysConfig& cfg, const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key=value");
    const std::string key = trimmed.substr(0, eq);
    const double value = std::stod(trimmed.substr(eq + 1));
    if (key == "eps0")
      cfg.sys.energies[0] = value;
    else if (key == "eps1")
      cfg.sys.energies[1] = value;
    else if (key == "eps2")
      cfg.sys.energies[2] = value;
    else if (key == "eps3")
      cfg.sys.energies[3] = value;
    else if (key == "omega0")
      cfg.sys.omega0 = value;
    else if (key == "omegaq")
      cfg.sys.omegaq = value;
    else if (key == "eta")
      cfg.sys.eta = value;
    else if (key == "beta")
      cfg.beta = value;
    else
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
  }
}

struct SysOptions {
  std::string file;
  std::vector<double> eps;
  double omega0 = 0, omegaq = 0, eta = 0, beta = 0;
  CLI::Option *o_eps = nullptr, *o_omega0 = nullptr, *o_omegaq = nullptr,
              *o_eta = nullptr, *o_beta = nullptr, *o_file = nullptr;

  void attach(CLI::App* sub) {
    o_file = sub->add_option("--system", file, "key=value system config file");
    o_eps = sub->add_option("--eps", eps, "level energies e0 e1 e2 e3 (rad/s)")
                ->expected(4);
    o_omega0 = sub->add_option("--omega0", omega0, "Larmor frequency (rad/s)");
    o_omegaq = sub->add_option("--omegaq", omegaq, "quadrupole shift (rad/s)");
    o_eta = sub->add_option("--eta", eta, "asymmetry parameter in [0,1]");
    o_beta = sub->add_option("--beta", beta, "inverse temperature ((rad/s)^-1)");
  }

  SysConfig resolve() const {
    SysConfig cfg;
    if (o_file && o_file->count()) apply_config_file(cfg, file);
    if (o_eps && o_eps->count())
      for (int k = 0; k < 4; ++k) cfg.sys.energies[k] = eps[k];
    if (o_omega0 && o_omega0->count()) cfg.sys.omega0 = omega0;
    if (o_omegaq && o_omegaq->count()) cfg.sys.omegaq = omegaq;
    if (o_eta && o_eta->count()) cfg.sys.eta = eta;
    if (o_beta && o_beta->count()) cfg.beta = beta;
    cfg.sys.validate();
    return cfg;
  }
};

// ---- subcommands --------------------------------------------------------

int cmd_catalog(bool json_out, std::ostream& out) {
  if (json_out) {
    json gates_j = json::array();
    for (GateId id : all_gate_ids()) {
      json entry = {{"name", gate_name(id)},
                    {"description", gate_description(id)},
                    {"matrix", matrix_json(gate(id))},
                    {"unitary", gate(id).is_unitary()},
                    {"factorization", nullptr},
                    {"conjugation_matrix", nullptr},
                    {"conjugation_distance", nullptr}};
      try {
        entry["factorization"] = factorization_str(virtual_factorization(id));
      } catch (const UnsupportedFactorizationError&) {
      }
      // for the collapsed-circuit operators, also report the conjugation
      // route and how far the realized form sits from it
      if (id == GateId::B00 || id == GateId::B01 || id == GateId::B10 ||
          id == GateId::B11) {
        const BoolFn2 f{id == GateId::B10 || id == GateId::B11,
                        id == GateId::B01 || id == GateId::B11};
        const Matrix4 b = b_operator(f);
        entry["conjugation_matrix"] = matrix_json(b);
        entry["conjugation_distance"] = phase_distance(gate(id), b);
      }
      gates_j.push_back(entry);
    }
    out << json{{"command", "catalog"}, {"gates", gates_j}}.dump(2) << "\n";
    return 0;
  }
  out << std::left << std::setw(10) << "NAME" << std::setw(50) << "DESCRIPTION"
      << "FACTORIZATION\n";
  for (GateId id : all_gate_ids()) {
    std::string fact = "-";
    try {
      fact = factorization_str(virtual_factorization(id));
    } catch (const UnsupportedFactorizationError&) {
    }
    out << std::left << std::setw(10) << gate_name(id) << std::setw(50)
        << gate_description(id) << fact << "\n";
  }
  return 0;
}

int cmd_compile(const std::string& gate_arg, int max_dm, const std::string& strategy,
                bool json_out, std::ostream& out, std::ostream& err) {
  const GateId id = parse_gate_name(gate_arg);
  PulseSequence seq = compile(id);
  if (max_dm != 0)
    seq = rewrite_delta_m(seq, max_dm,
                          strategy == "y" ? RewriteStrategy::YChain
                                          : RewriteStrategy::XChain);
  const CompilationResult res = verify(seq, id);
  if (json_out) {
    out << json{{"command", "compile"},
                {"gate", gate_name(id)},
                {"max_delta_m", max_dm == 0 ? json(nullptr) : json(max_dm)},
                {"strategy", strategy},
                {"program", serialize(seq)},
                {"events", events_json(seq)},
                {"pulse_count", seq.pulse_count()},
                {"distance", res.measured_distance},
                {"phase", phase_json(res.measured_phase)},
                {"phase_angle", std::arg(res.measured_phase)},
                {"success", res.success}}
               .dump(2)
        << "\n";
  } else {
    out << serialize(seq);
    err << "# " << gate_name(id) << ": " << seq.pulse_count() << " pulses, distance "
        << res.measured_distance << ", phase (" << res.measured_phase.real() << ","
        << res.measured_phase.imag() << ")\n";
  }
  return res.success ? 0 : 1;
}

int cmd_verify(const std::string& file, const std::string& gate_arg, double tol,
               bool json_out, std::ostream& out, std::ostream& err) {
  const GateId id = parse_gate_name(gate_arg);
  const PulseSequence seq = parse(read_file(file));
  const CompilationResult res = verify(seq, id, tol);
  const Matrix4 aligned =
      sequence_operator(seq) * res.measured_phase;  // phase-aligned achieved operator
  const Matrix4 diff = gate(id) - aligned;
  if (json_out) {
    out << json{{"command", "verify"},
                {"file", file},
                {"target", gate_name(id)},
                {"tolerance", tol},
                {"distance", res.measured_distance},
                {"phase", phase_json(res.measured_phase)},
                {"difference_max", diff.max_abs()},
                {"difference", matrix_json(diff)},
                {"success", res.success}}
               .dump(2)
        << "\n";
  } else {
    out << "target " << gate_name(id) << ": distance " << res.measured_distance
        << ", phase (" << res.measured_phase.real() << "," << res.measured_phase.imag()
        << ") -> " << (res.success ? "PASS" : "FAIL") << " (tolerance " << tol << ")\n";
    if (!res.success) {
      err << "operator difference (target - phase*achieved), max "
          << diff.max_abs() << ":\n";
      print_matrix(err, diff);
    }
  }
  return res.success ? 0 : 1;
}

int cmd_simulate(const std::string& file, const std::string& state,
                 const SysConfig& cfg, bool json_out, std::ostream& out,
                 std::ostream& err) {
  const PulseSequence seq = parse(read_file(file));
  DensityMatrix rho = DensityMatrix::maximally_mixed();
  json prep_j(nullptr);
  if (state.rfind("basis:", 0) == 0) {
    const int k = std::stoi(state.substr(6));
    rho = DensityMatrix::pure(Ket4::basis(k));
  } else if (state == "pseudo-pure") {
    const PseudoPureState prep = prepare_pseudo_pure(cfg.sys, cfg.beta);
    rho = prep.rho;
    prep_j = {{"distinguished_level", prep.distinguished_level},
              {"alpha", prep.alpha},
              {"common", prep.common},
              {"gradient_order", "pulses-first"}};
    err << "# pseudo-pure prep: gradient last, distinguished level "
        << prep.distinguished_level << ", alpha " << prep.alpha << "\n";
  } else if (state == "thermal") {
    rho = thermal_state(cfg.sys, cfg.beta, /*linearize=*/true);
  } else {
    throw CLI::ValidationError("--state",
                               "expected basis:<k>, pseudo-pure, or thermal");
  }
  const DensityMatrix final_rho = evolve(rho, seq, cfg.sys);
  const auto pops = final_rho.populations();
  if (json_out) {
    out << json{{"command", "simulate"},
                {"file", file},
                {"state", state},
                {"preparation", prep_j},
                {"final_matrix", matrix_json(final_rho.matrix())},
                {"populations", pops},
                {"trace", final_rho.matrix().trace().real()},
                {"fid_12", fid_amplitude(final_rho, 1, 2)}}
               .dump(2)
        << "\n";
  } else {
    out << "final state (initial " << state << ", " << seq.size() << " events):\n";
    print_matrix(out, final_rho.matrix());
    out << "populations:";
    for (double p : pops) out << " " << p;
    out << "\nfid(1,2): " << fid_amplitude(final_rho, 1, 2) << "\n";
  }
  return 0;
}

int cmd_run_dj(const std::string& oracle_arg, const std::string& mode_arg,
               const std::string& state_arg, const SysConfig& cfg, bool json_out,
               std::ostream& out) {
  if (oracle_arg.size() != 3 || oracle_arg[0] != 'f' ||
      (oracle_arg[1] != '0' && oracle_arg[1] != '1') ||
      (oracle_arg[2] != '0' && oracle_arg[2] != '1'))
    throw CLI::ValidationError("--oracle", "expected f00, f01, f10 or f11");
  const BoolFn2 f{oracle_arg[1] == '1', oracle_arg[2] == '1'};
  DjMode mode;
  if (mode_arg == "gate")
    mode = DjMode::GateCircuit;
  else if (mode_arg == "single")
    mode = DjMode::SingleOperator;
  else if (mode_arg == "pulses")
    mode = DjMode::CompiledPulses;
  else
    throw CLI::ValidationError("--mode", "expected gate, single or pulses");
  const StateModel model =
      state_arg == "pseudo-pure" ? StateModel::PseudoPure : StateModel::Pure;
  if (state_arg != "pure" && state_arg != "pseudo-pure")
    throw CLI::ValidationError("--state", "expected pure or pseudo-pure");

  const DjResult r = run_dj(f, mode, model, cfg.sys, cfg.beta);
  if (json_out) {
    out << json{{"command", "run_dj"},
                {"oracle", f.name()},
                {"mode", mode_arg},
                {"state_model", state_arg},
                {"classification", classification_name(r.classification)},
                {"output_phase", phase_json(r.output_phase)},
                {"fid_12", r.fid},
                {"level_weights", r.level_weights},
                {"oracle_applications", r.oracle_applications},
                {"prepared_level", r.prepared_level},
                {"alpha", r.alpha}}
               .dump(2)
        << "\n";
  } else {
    out << f.name() << " [" << mode_arg << ", " << state_arg
        << "]: " << classification_name(r.classification) << ", phase ("
        << r.output_phase.real() << "," << r.output_phase.imag() << "), fid "
        << r.fid << "\n";
    if (model == StateModel::PseudoPure)
      out << "prepared level " << r.prepared_level << ", alpha " << r.alpha << "\n";
  }
  return 0;
}

int cmd_cost(const std::string& file, double omega0, double omegaq, double eta,
             bool use_eta, bool json_out, std::ostream& out) {
  const PulseSequence seq = parse(read_file(file));
  SystemSpec sys = SystemSpec::defaults();
  sys.omega0 = omega0;
  sys.omegaq = omegaq;
  sys.eta = use_eta ? eta : 0.0;
  const double total = cost(seq, sys, use_eta);
  json pulses_j = json::array();
  for (const auto& ev : seq.events) {
    if (const auto* p = std::get_if<PulseSpec>(&ev)) {
      const double w = delta_m_weight(p->m, p->n, sys, use_eta);
      pulses_j.push_back({{"axis", axis_name(p->axis)},
                          {"levels", {p->m, p->n}},
                          {"angle", p->angle.str()},
                          {"delta_m", p->n - p->m},
                          {"weight", w},
                          {"contribution", std::abs(p->angle.value()) * w}});
    }
  }
  if (json_out) {
    out << json{{"command", "cost"},
                {"file", file},
                {"omega0", omega0},
                {"omegaq", omegaq},
                {"eta", use_eta ? json(eta) : json(nullptr)},
                {"pulses", pulses_j},
                {"cost", total}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& pj : pulses_j)
      out << pj["axis"].get<std::string>() << pj["levels"][0].get<int>()
          << pj["levels"][1].get<int>() << "(" << pj["angle"].get<std::string>()
          << "): dm=" << pj["delta_m"].get<int>() << " weight="
          << pj["weight"].get<double>() << " cost="
          << pj["contribution"].get<double>() << "\n";
    out << "total cost: " << total << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"virtual-spin pulse compiler and simulator for a four-level system"};
  app.name("pulsecli");
  bool json_out = false;
  app.add_flag("--json", json_out, "emit machine-readable JSON on stdout");
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "list the logical gate table");

  auto* compile_cmd = app.add_subcommand("compile", "lower a gate to a pulse program");
  std::string compile_gate, strategy = "x";
  int max_dm = 0;
  compile_cmd->add_option("gate", compile_gate, "gate name (case-sensitive)")->required();
  compile_cmd->add_option("--max-dm", max_dm, "rewrite pulses above this Δm (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  compile_cmd->add_option("--strategy", strategy, "Δm=3 lowering wings: x or y")
      ->check(CLI::IsMember({"x", "y"}));

  auto* verify_cmd =
      app.add_subcommand("verify", "check a pulse program against a catalog gate");
  std::string verify_file, verify_gate;
  double tol = kVerifyTol;
  verify_cmd->add_option("file", verify_file, "pulse program file")->required();
  verify_cmd->add_option("--target", verify_gate, "target gate name")->required();
  verify_cmd->add_option("--tol", tol, "phase-distance tolerance");

  auto* simulate_cmd =
      app.add_subcommand("simulate", "evolve a density matrix through a program");
  std::string sim_file, sim_state = "basis:0";
  simulate_cmd->add_option("file", sim_file, "pulse program file")->required();
  simulate_cmd->add_option("--state", sim_state,
                           "initial state: basis:<k>, pseudo-pure, or thermal");
  SysOptions sim_sys;
  sim_sys.attach(simulate_cmd);

  auto* dj_cmd = app.add_subcommand("run-dj", "run the Deutsch-Jozsa algorithm");
  std::string dj_oracle, dj_mode, dj_state = "pure";
  dj_cmd->add_option("--oracle", dj_oracle, "f00|f01|f10|f11")->required();
  dj_cmd->add_option("--mode", dj_mode, "gate|single|pulses")->required();
  dj_cmd->add_option("--state", dj_state, "pure|pseudo-pure");
  SysOptions dj_sys;
  dj_sys.attach(dj_cmd);

  auto* cost_cmd = app.add_subcommand("cost", "price a pulse program");
  std::string cost_file;
  double omega0 = 0, omegaq = 0, eta = 0;
  cost_cmd->add_option("file", cost_file, "pulse program file")->required();
  cost_cmd->add_option("--omega0", omega0, "Larmor frequency")->required();
  cost_cmd->add_option("--omegaq", omegaq, "quadrupole shift")->required();
  auto* eta_opt = cost_cmd->add_option("--eta", eta, "asymmetry parameter");

  std::vector<const char*> argv;
  argv.push_back("pulsecli");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (app.got_subcommand(catalog)) return cmd_catalog(json_out, out);
    if (app.got_subcommand(compile_cmd))
      return cmd_compile(compile_gate, max_dm, strategy, json_out, out, err);
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(verify_file, verify_gate, tol, json_out, out, err);
    if (app.got_subcommand(simulate_cmd))
      return cmd_simulate(sim_file, sim_state, sim_sys.resolve(), json_out, out, err);
    if (app.got_subcommand(dj_cmd))
      return cmd_run_dj(dj_oracle, dj_mode, dj_state, dj_sys.resolve(), json_out, out);
    if (app.got_subcommand(cost_cmd))
      return cmd_cost(cost_file, omega0, omegaq, eta, eta_opt->count() > 0, json_out,
                      out);
    err << "no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreparationError& e) {
    err << "preparation failed: " << e.what() << "\ndiagonal:";
    for (double d : e.diagonal) err << " " << d;
    err << "\n";
    return 1;
  } catch (const ClassificationError& e) {
    err << "classification failed: " << e.what() << "\nweights:";
    for (double w : e.weights) err << " " << w;
    err << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace vspin::cli
