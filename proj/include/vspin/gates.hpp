#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vspin/matrix4.hpp"

namespace vspin {

// The logical operator table. Names follow the two-virtual-qubit reading:
// qubit 1 is spin R (high bit of the level index), qubit 2 is spin S.
// H* are true Hadamards, h* pseudo-Hadamards; PIm flips the sign of |Ψm⟩;
// Dxy are the two-point-function oracles; Bxy the collapsed whole-circuit
// operators as realized by single pulses; STAR_P* the simplified processors
// whose off-diagonals carry a factor -i.
enum class GateId : std::uint8_t {
  E, NOT1, NOT2, NOT, SWAP, CNOT12, CNOT21, ICNOT12, ICNOT21,
  H1R, H1S, h1R, h1S, H2, h2,
  PI0, PI1, PI2, PI3,
  D00, D01, D10, D11,
  B00, B01, B10, B11,
  STAR_P5, STAR_P6, STAR_P7, STAR_P8, STAR_P9,
};

std::vector<GateId> all_gate_ids();
std::string gate_name(GateId id);
std::string gate_description(GateId id);
std::optional<GateId> gate_from_name(const std::string& name);  // case-sensitive

// The catalog matrix (exact projector expansion; unitary).
Matrix4 gate(GateId id);

// z-state labels of the two virtual spins; level index = 2ξ + ζ.
struct VirtualLabel {
  int xi = 0;    // spin R
  int zeta = 0;  // spin S
  bool operator==(const VirtualLabel&) const = default;
};

int encode(VirtualLabel label);
VirtualLabel decode(int level);

// Two-point Boolean function f: {0,1} -> {0,1}.
struct BoolFn2 {
  bool f0 = false;
  bool f1 = false;
  bool balanced() const { return f0 != f1; }
  std::string name() const;  // "f01" etc.
  bool operator==(const BoolFn2&) const = default;
};

struct OracleGate {
  GateId id;
  Matrix4 matrix;
};

// D_{f0 f1}: phase-free oracle of f (D00=E, D01=CNOT12, D10=ICNOT12, D11=NOT2).
OracleGate oracle(BoolFn2 f);

// Whole-circuit operator computed by conjugating the oracle with the
// two-qubit pseudo-Hadamard: B_f = h2^{-1} · D_f · h2 (h2 applied first).
// Diagonal-or-antidiagonal on the {1,3} pair, {0,2} fixed up to sign.
Matrix4 b_operator(BoolFn2 f);

// Symbolic tensor factorization over the two virtual-spin spaces.
enum class Factor : std::uint8_t { e, x, y, z, p00, p01, p10, p11 };

struct FactorTerm {
  cd coeff;
  Factor r;  // spin-R slot (high bit)
  Factor s;  // spin-S slot (low bit)
};

using Factorization = std::vector<FactorTerm>;

struct UnsupportedFactorizationError : std::domain_error {
  explicit UnsupportedFactorizationError(const std::string& what)
      : std::domain_error(what) {}
};

// Throws UnsupportedFactorizationError for gates without a listed
// factorization (PI*, D*, B*, STAR_P*).
Factorization virtual_factorization(GateId id);

// Kronecker evaluation in the 2ξ+ζ basis order; reproduces gate(id) exactly.
Matrix4 evaluate(const Factorization& f);
std::string factorization_str(const Factorization& f);

}  // namespace vspin
