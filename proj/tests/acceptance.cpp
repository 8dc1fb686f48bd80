// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "vspin/cli.hpp"
#include "vspin/compiler.hpp"
#include "vspin/density.hpp"
#include "vspin/dj.hpp"
#include "vspin/gates.hpp"
#include "vspin/program.hpp"

using namespace vspin;
using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;
int g_failures = 0;

struct Criterion {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& why) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += why;
    }
  }
  void note(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
};

void run_criterion(int num, const std::string& name,
                   const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.note(std::string("exception: ") + e.what());
  }
  std::printf("[%s] %2d. %s%s%s\n", c.ok ? "PASS" : "FAIL", num, name.c_str(),
              c.detail.empty() ? "" : " -- ", c.detail.c_str());
  if (!c.ok) ++g_failures;
}

std::string fmt_phase(cd z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f%+.3fi", z.real(), z.imag());
  return buf;
}

PulseSpec random_pulse(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> lev(0, 3);
  std::uniform_int_distribution<int> ax(0, 1);
  std::uniform_real_distribution<double> ang(-4 * kPi, 4 * kPi);
  int m = lev(rng), n = lev(rng);
  while (m == n) n = lev(rng);
  if (m > n) std::swap(m, n);
  return PulseSpec(ax(rng) ? Axis::X : Axis::Y, m, n, Angle::radians(ang(rng)),
                   Angle::radians(ang(rng) / 4));
}

const std::vector<BoolFn2> kAllFns = {
    {false, false}, {false, true}, {true, false}, {true, true}};

}  // namespace

int main() {
  run_criterion(1, "projector algebra: I_kl*I_mn = delta_lm*I_kn, all 256 combinations",
                [](Criterion& c) {
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
          for (int n = 0; n < 4; ++n) {
            const Matrix4 lhs = projector(k, l) * projector(m, n);
            const Matrix4 rhs = l == m ? projector(k, n) : Matrix4::zero();
            c.require(lhs == rhs, "projector product mismatch");
          }
  });

  run_criterion(2, "gate table matches the virtual-spin factorizations (1e-12)",
                [](Criterion& c) {
    const GateId factored[] = {GateId::E,       GateId::NOT1,    GateId::NOT2,
                               GateId::NOT,     GateId::SWAP,    GateId::CNOT12,
                               GateId::CNOT21,  GateId::ICNOT12, GateId::ICNOT21,
                               GateId::H1R,     GateId::H1S,     GateId::h1R,
                               GateId::h1S,     GateId::H2,      GateId::h2};
    for (GateId id : factored)
      c.require(evaluate(virtual_factorization(id)).max_abs_diff(gate(id)) <= 1e-12,
                gate_name(id) + " factorization mismatch");
    for (int m = 0; m < 4; ++m) {
      const GateId pim = static_cast<GateId>(static_cast<int>(GateId::PI0) + m);
      const Matrix4 expect = Matrix4::identity() - projector(m, m) * cd(2, 0);
      c.require(gate(pim).max_abs_diff(expect) <= 1e-12, gate_name(pim) + " mismatch");
    }
    c.require(gate(GateId::D00).max_abs_diff(gate(GateId::E)) <= 1e-12, "D00 != E");
    c.require(gate(GateId::D01).max_abs_diff(gate(GateId::CNOT12)) <= 1e-12,
              "D01 != CNOT12");
    c.require(gate(GateId::D10).max_abs_diff(gate(GateId::ICNOT12)) <= 1e-12,
              "D10 != ICNOT12");
    c.require(gate(GateId::D11).max_abs_diff(gate(GateId::NOT2)) <= 1e-12,
              "D11 != NOT2");
  });

  run_criterion(3,
                "compilation audit P2-P9: distance <= 1e-10, prefactors i / e^{-i pi/2}",
                [](Criterion& c) {
    const std::map<GateId, cd> nominal = {
        {GateId::NOT1, cd(0, 1)},    {GateId::NOT2, cd(0, 1)},
        {GateId::NOT, cd(0, 1)},     {GateId::SWAP, cd(0, -1)},
        {GateId::CNOT12, cd(0, -1)}, {GateId::CNOT21, cd(0, -1)},
        {GateId::ICNOT12, cd(0, -1)}, {GateId::ICNOT21, cd(0, -1)}};
    for (const auto& [id, prefactor] : nominal) {
      const CompilationResult res = verify(compile(id), id, 1e-10);
      c.require(res.measured_distance <= 1e-10, gate_name(id) + " distance");
      if (std::abs(res.measured_phase - prefactor) > 1e-10)
        c.require(false, gate_name(id) + " phase: measured " +
                             fmt_phase(res.measured_phase) + ", nominal " +
                             fmt_phase(prefactor));
    }
  });

  run_criterion(4, "sign-flip realizations: distance <= 1e-10, prefactor e^{-i pi/2}",
                [](Criterion& c) {
    for (int m = 0; m < 4; ++m) {
      const GateId pim = static_cast<GateId>(static_cast<int>(GateId::PI0) + m);
      const CompilationResult res = verify(compile(pim), pim, 1e-10);
      c.require(res.measured_distance <= 1e-10, gate_name(pim) + " distance");
      if (std::abs(res.measured_phase - cd(0, -1)) > 1e-10)
        c.require(false, gate_name(pim) + " phase: measured " +
                             fmt_phase(res.measured_phase) + ", nominal " +
                             fmt_phase(cd(0, -1)));
    }
  });

  run_criterion(5, "Hadamard family: pulse forms reproduce the catalog matrices",
                [](Criterion& c) {
    for (GateId id : {GateId::h1R, GateId::h1S, GateId::h2}) {
      const CompilationResult res = verify(compile(id), id, 1e-12);
      c.require(res.measured_distance <= 1e-12, gate_name(id) + " distance");
      c.require(std::abs(res.measured_phase - cd(1, 0)) <= 1e-12,
                gate_name(id) + " phase != 1");
    }
    const CompilationResult h2full = verify(compile(GateId::H2), GateId::H2, 1e-12);
    c.require(h2full.measured_distance <= 1e-12, "H2 distance");
    c.note("H2 phase " + fmt_phase(h2full.measured_phase));
  });

  run_criterion(6, "delta-m decomposition identities: bridge exact, three forms agree",
                [](Criterion& c) {
    for (int k = 0; k < 20; ++k) {
      const double phi = -2 * kPi + 4 * kPi * k / 19.0;
      PulseSequence direct;
      direct << PulseSpec(Axis::X, 0, 3, Angle::radians(phi));
      c.require(sequence_operator(rewrite_delta_m(direct, 2))
                        .max_abs_diff(sequence_operator(direct)) <= 1e-12,
                "bridge mismatch at phi=" + std::to_string(phi));
    }
    PulseSequence direct;
    direct << PulseSpec(Axis::X, 0, 3, Angle::radians(1.1));
    const Matrix4 bridge = sequence_operator(rewrite_delta_m(direct, 2));
    const Matrix4 xchain =
        sequence_operator(rewrite_delta_m(direct, 1, RewriteStrategy::XChain));
    const Matrix4 ychain =
        sequence_operator(rewrite_delta_m(direct, 1, RewriteStrategy::YChain));
    c.require(phase_distance(bridge, xchain) <= 1e-12, "x-chain not phase-equivalent");
    c.require(phase_distance(bridge, ychain) <= 1e-12, "y-chain not phase-equivalent");
    c.note("relative phases bridge/x-chain " + fmt_phase(global_phase(bridge, xchain)) +
           ", bridge/y-chain " + fmt_phase(global_phase(bridge, ychain)));
  });

  run_criterion(7, "Deutsch-Jozsa 4x3x2 matrix classifies by parity; pulse phases -/+i",
                [](Criterion& c) {
    for (const BoolFn2 f : kAllFns)
      for (const DjMode mode :
           {DjMode::GateCircuit, DjMode::SingleOperator, DjMode::CompiledPulses})
        for (const StateModel model : {StateModel::Pure, StateModel::PseudoPure}) {
          const DjResult r = run_dj(f, mode, model);
          c.require((r.classification == Classification::Balanced) == f.balanced(),
                    f.name() + " misclassified in mode " + dj_mode_name(mode));
        }
    const cd p01 =
        run_dj({false, true}, DjMode::CompiledPulses, StateModel::Pure).output_phase;
    const cd p10 =
        run_dj({true, false}, DjMode::CompiledPulses, StateModel::Pure).output_phase;
    c.require(std::abs(p01 - cd(0, -1)) <= 1e-10,
              "f01 pulse phase " + fmt_phase(p01) + " != -i");
    c.require(std::abs(p10 - cd(0, 1)) <= 1e-10,
              "f10 pulse phase " + fmt_phase(p10) + " != +i");
  });

  run_criterion(8, "pseudo-pure preparation: 3 equal + 1 distinct, pipeline classifies",
                [](Criterion& c) {
    const PseudoPureState prep = prepare_pseudo_pure(SystemSpec::defaults(), 1e-3);
    const auto pops = prep.rho.populations();
    std::vector<double> rest;
    for (int m = 0; m < 4; ++m)
      if (m != prep.distinguished_level) rest.push_back(pops[m]);
    c.require(std::abs(rest[0] - rest[1]) <= 1e-10 &&
                  std::abs(rest[0] - rest[2]) <= 1e-10,
              "three populations not equal");
    c.require(std::abs(pops[prep.distinguished_level] - rest[0]) > 1e-10,
              "no distinct level");
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j)
          c.require(std::abs(prep.rho.matrix().at(i, j)) <= 1e-12, "not diagonal");
    c.note("distinguished level " + std::to_string(prep.distinguished_level) +
           ", alpha " + std::to_string(prep.alpha));
    for (const BoolFn2 f : kAllFns)
      for (const DjMode mode :
           {DjMode::GateCircuit, DjMode::SingleOperator, DjMode::CompiledPulses}) {
        const DjResult r = run_dj(f, mode, StateModel::PseudoPure);
        c.require((r.classification == Classification::Balanced) == f.balanced(),
                  f.name() + " misclassified on the pseudo-pure state");
      }
  });

  run_criterion(9, "FID readout separates the classes with margin >= |alpha|/4",
                [](Criterion& c) {
    double min_constant = 1.0, max_balanced = 0.0, alpha = 0.0;
    for (const BoolFn2 f : kAllFns)
      for (const DjMode mode :
           {DjMode::GateCircuit, DjMode::SingleOperator, DjMode::CompiledPulses}) {
        const DjResult r = run_dj(f, mode, StateModel::PseudoPure);
        alpha = r.alpha;
        if (f.balanced())
          max_balanced = std::max(max_balanced, r.fid);
        else
          min_constant = std::min(min_constant, r.fid);
      }
    c.require(min_constant - max_balanced >= std::abs(alpha) / 4,
              "margin " + std::to_string(min_constant - max_balanced) + " < " +
                  std::to_string(std::abs(alpha) / 4));
  });

  run_criterion(10, "unitarity sweep: 1000 pulse specs, 500 sequences, 1e-12",
                [](Criterion& c) {
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 1000; ++t) {
      const Matrix4 u = propagator(random_pulse(rng));
      c.require((u.adjoint() * u).max_abs_diff(Matrix4::identity()) <= 1e-12,
                "single propagator drifted");
    }
    std::uniform_int_distribution<int> len(1, 12);
    std::uniform_real_distribution<double> dt(0.0, 1.0);
    for (int t = 0; t < 500; ++t) {
      PulseSequence seq;
      const int n = len(rng);
      for (int k = 0; k < n; ++k) {
        if (k % 5 == 4)
          seq << DelayEvent{dt(rng)};
        else
          seq << random_pulse(rng);
      }
      const Matrix4 u = sequence_operator(seq);
      c.require((u.adjoint() * u).max_abs_diff(Matrix4::identity()) <= 1e-12,
                "sequence operator drifted");
    }
  });

  run_criterion(11,
                "CLI round-trip: serialized programs re-verify identically; JSON stable",
                [](Criterion& c) {
    const auto tmp = std::filesystem::temp_directory_path() / "vspin_acceptance.pp";
    for (GateId id : all_gate_ids()) {
      if (id == GateId::H1R || id == GateId::H1S) continue;
      const PulseSequence seq = compile(id);
      std::ofstream(tmp) << serialize(seq);
      std::ostringstream out, err;
      const int rc = cli::run(
          {"--json", "verify", tmp.string(), "--target", gate_name(id)}, out, err);
      c.require(rc == 0, gate_name(id) + " CLI verify failed");
      const double cli_distance = json::parse(out.str())["distance"].get<double>();
      const double lib_distance = verify(seq, id).measured_distance;
      c.require(std::abs(cli_distance - lib_distance) <= 1e-12,
                gate_name(id) + " distance differs between CLI and library");
    }
    // schema stability over the command matrix
    const auto keys = [](const std::vector<std::string>& args) {
      std::ostringstream out, err;
      if (cli::run(args, out, err) > 1) throw std::runtime_error("cli usage error");
      std::set<std::string> ks;
      const json doc = json::parse(out.str());
      for (auto it = doc.begin(); it != doc.end(); ++it) ks.insert(it.key());
      return ks;
    };
    const auto prog = std::filesystem::temp_directory_path() / "vspin_schema.pp";
    std::ofstream(prog) << "pulse X 0 2 angle=pi\ngrad\ndelay 0.1\n";
    const auto unitary_prog =
        std::filesystem::temp_directory_path() / "vspin_schema_unitary.pp";
    std::ofstream(unitary_prog) << "pulse X 0 2 angle=pi\n";
    c.require(keys({"--json", "compile", "NOT"}) ==
                  keys({"--json", "compile", "SWAP", "--max-dm", "1"}),
              "compile schema unstable");
    c.require(keys({"--json", "verify", unitary_prog.string(), "--target", "E"}) ==
                  keys({"--json", "verify", unitary_prog.string(), "--target",
                        "SWAP"}),
              "verify schema unstable");
    c.require(keys({"--json", "simulate", prog.string()}) ==
                  keys({"--json", "simulate", prog.string(), "--state",
                        "pseudo-pure"}),
              "simulate schema unstable");
    c.require(keys({"--json", "run-dj", "--oracle", "f00", "--mode", "gate"}) ==
                  keys({"--json", "run-dj", "--oracle", "f01", "--mode", "pulses",
                        "--state", "pseudo-pure"}),
              "run-dj schema unstable");
    c.require(keys({"--json", "cost", prog.string(), "--omega0", "1", "--omegaq",
                    "0.1"}) ==
                  keys({"--json", "cost", prog.string(), "--omega0", "2", "--omegaq",
                        "0.4", "--eta", "0.7"}),
              "cost schema unstable");
    c.require(keys({"--json", "catalog"}) == keys({"--json", "catalog"}),
              "catalog schema unstable");
  });

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
