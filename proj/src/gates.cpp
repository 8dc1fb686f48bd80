#include "vspin/gates.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "vspin/pulse.hpp"

namespace vspin {

namespace {

constexpr double kHalfSqrt2 = 0.70710678118654752440;  // 1/sqrt(2)
constexpr double kPi = 3.14159265358979323846;

Matrix4 I(int m, int n) { return Matrix4::unit(m, n); }

Matrix4 scaled_sum(double coef, std::initializer_list<std::array<int, 3>> terms) {
  Matrix4 r;
  for (const auto& [m, n, sign] : terms) r = r + I(m, n) * cd(sign, 0);
  return r * cd(coef, 0);
}

struct Entry {
  const char* name;
  const char* description;
};

const std::unordered_map<GateId, Entry> kEntries = {
    {GateId::E, {"E", "identity"}},
    {GateId::NOT1, {"NOT1", "negation of virtual spin R"}},
    {GateId::NOT2, {"NOT2", "negation of virtual spin S"}},
    {GateId::NOT, {"NOT", "negation of both virtual spins"}},
    {GateId::SWAP, {"SWAP", "exchange of the virtual spin states"}},
    {GateId::CNOT12, {"CNOT12", "negation of S controlled by R=1"}},
    {GateId::CNOT21, {"CNOT21", "negation of R controlled by S=1"}},
    {GateId::ICNOT12, {"ICNOT12", "negation of S controlled by R=0"}},
    {GateId::ICNOT21, {"ICNOT21", "negation of R controlled by S=0"}},
    {GateId::H1R, {"H1R", "one-qubit Hadamard, first register"}},
    {GateId::H1S, {"H1S", "one-qubit Hadamard, second register"}},
    {GateId::h1R, {"h1R", "one-qubit pseudo-Hadamard, first register"}},
    {GateId::h1S, {"h1S", "one-qubit pseudo-Hadamard, second register"}},
    {GateId::H2, {"H2", "two-qubit Hadamard"}},
    {GateId::h2, {"h2", "two-qubit pseudo-Hadamard"}},
    {GateId::PI0, {"PI0", "sign flip of level 0"}},
    {GateId::PI1, {"PI1", "sign flip of level 1"}},
    {GateId::PI2, {"PI2", "sign flip of level 2"}},
    {GateId::PI3, {"PI3", "sign flip of level 3"}},
    {GateId::D00, {"D00", "oracle of the constant function f=(0,0)"}},
    {GateId::D01, {"D01", "oracle of the balanced function f=(0,1)"}},
    {GateId::D10, {"D10", "oracle of the balanced function f=(1,0)"}},
    {GateId::D11, {"D11", "oracle of the constant function f=(1,1)"}},
    {GateId::B00, {"B00", "collapsed circuit operator, f=(0,0), as realized"}},
    {GateId::B01, {"B01", "collapsed circuit operator, f=(0,1), as realized"}},
    {GateId::B10, {"B10", "collapsed circuit operator, f=(1,0), as realized"}},
    {GateId::B11, {"B11", "collapsed circuit operator, f=(1,1), as realized"}},
    {GateId::STAR_P5, {"STAR_P5", "simplified SWAP (off-diagonals times -i)"}},
    {GateId::STAR_P6, {"STAR_P6", "simplified CNOT12 (off-diagonals times -i)"}},
    {GateId::STAR_P7, {"STAR_P7", "simplified CNOT21 (off-diagonals times -i)"}},
    {GateId::STAR_P8, {"STAR_P8", "simplified ICNOT12 (off-diagonals times -i)"}},
    {GateId::STAR_P9, {"STAR_P9", "simplified ICNOT21 (off-diagonals times -i)"}},
};

}  // namespace

std::vector<GateId> all_gate_ids() {
  std::vector<GateId> ids;
  for (int k = 0; k <= static_cast<int>(GateId::STAR_P9); ++k)
    ids.push_back(static_cast<GateId>(k));
  return ids;
}

std::string gate_name(GateId id) { return kEntries.at(id).name; }
std::string gate_description(GateId id) { return kEntries.at(id).description; }

std::optional<GateId> gate_from_name(const std::string& name) {
  for (const auto& [id, entry] : kEntries)
    if (name == entry.name) return id;
  return std::nullopt;
}

Matrix4 gate(GateId id) {
  switch (id) {
    case GateId::E:
    case GateId::D00:
    case GateId::B00:
      return Matrix4::identity();
    case GateId::NOT1:
      return I(0, 2) + I(1, 3) + I(2, 0) + I(3, 1);
    case GateId::NOT2:
    case GateId::D11:
      return I(0, 1) + I(1, 0) + I(2, 3) + I(3, 2);
    case GateId::NOT:
      return I(0, 3) + I(1, 2) + I(2, 1) + I(3, 0);
    case GateId::SWAP:
      return I(0, 0) + I(1, 2) + I(2, 1) + I(3, 3);
    case GateId::CNOT12:
    case GateId::D01:
      return I(0, 0) + I(1, 1) + I(2, 3) + I(3, 2);
    case GateId::CNOT21:
      return I(0, 0) + I(1, 3) + I(2, 2) + I(3, 1);
    case GateId::ICNOT12:
    case GateId::D10:
      return I(0, 1) + I(1, 0) + I(2, 2) + I(3, 3);
    case GateId::ICNOT21:
      return I(0, 2) + I(1, 1) + I(2, 0) + I(3, 3);
    case GateId::H1R:
      return scaled_sum(kHalfSqrt2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, -1},
                                     {2, 2, 1}, {2, 3, 1}, {3, 2, 1}, {3, 3, -1}});
    case GateId::H1S:
      return scaled_sum(kHalfSqrt2, {{0, 0, 1}, {0, 2, 1}, {1, 1, 1}, {1, 3, 1},
                                     {2, 0, 1}, {2, 2, -1}, {3, 1, 1}, {3, 3, -1}});
    case GateId::h1R:
      return scaled_sum(kHalfSqrt2, {{0, 0, 1}, {0, 1, -1}, {1, 0, 1}, {1, 1, 1},
                                     {2, 2, 1}, {2, 3, -1}, {3, 2, 1}, {3, 3, 1}});
    case GateId::h1S:
      return scaled_sum(kHalfSqrt2, {{0, 0, 1}, {0, 2, -1}, {1, 1, 1}, {1, 3, -1},
                                     {2, 0, 1}, {2, 2, 1}, {3, 1, 1}, {3, 3, 1}});
    case GateId::H2:
      return scaled_sum(0.5, {{0, 0, 1}, {0, 1, 1}, {0, 2, 1}, {0, 3, 1},
                              {1, 0, 1}, {1, 1, -1}, {1, 2, 1}, {1, 3, -1},
                              {2, 0, 1}, {2, 1, 1}, {2, 2, -1}, {2, 3, -1},
                              {3, 0, 1}, {3, 1, -1}, {3, 2, -1}, {3, 3, 1}});
    case GateId::h2:
      return scaled_sum(0.5, {{0, 0, 1}, {0, 1, -1}, {0, 2, -1}, {0, 3, 1},
                              {1, 0, 1}, {1, 1, 1}, {1, 2, -1}, {1, 3, -1},
                              {2, 0, 1}, {2, 1, -1}, {2, 2, 1}, {2, 3, -1},
                              {3, 0, 1}, {3, 1, 1}, {3, 2, 1}, {3, 3, 1}});
    case GateId::PI0:
    case GateId::PI1:
    case GateId::PI2:
    case GateId::PI3: {
      const int m = static_cast<int>(id) - static_cast<int>(GateId::PI0);
      return Matrix4::identity() - I(m, m) * cd(2, 0);
    }
    case GateId::B01:
      return propagator(Axis::X, 1, 3, kPi);
    case GateId::B10:
      return propagator(Axis::X, 1, 3, -kPi);
    case GateId::B11:
      return propagator(Axis::X, 1, 3, 2 * kPi);
    case GateId::STAR_P5:
      return propagator(Axis::X, 1, 2, kPi);
    case GateId::STAR_P6:
      return propagator(Axis::X, 2, 3, kPi);
    case GateId::STAR_P7:
      return propagator(Axis::X, 1, 3, kPi);
    case GateId::STAR_P8:
      return propagator(Axis::X, 0, 1, kPi);
    case GateId::STAR_P9:
      return propagator(Axis::X, 0, 2, kPi);
  }
  throw std::domain_error("unknown gate id");
}

int encode(VirtualLabel label) {
  if ((label.xi & ~1) || (label.zeta & ~1))
    throw std::domain_error("virtual spin labels must be 0 or 1");
  return 2 * label.xi + label.zeta;
}

VirtualLabel decode(int level) {
  if (level < 0 || level > 3) throw std::domain_error("level index out of range 0..3");
  return VirtualLabel{level >> 1, level & 1};
}

std::string BoolFn2::name() const {
  return std::string("f") + (f0 ? "1" : "0") + (f1 ? "1" : "0");
}

OracleGate oracle(BoolFn2 f) {
  GateId id;
  if (!f.f0 && !f.f1)
    id = GateId::D00;
  else if (!f.f0 && f.f1)
    id = GateId::D01;
  else if (f.f0 && !f.f1)
    id = GateId::D10;
  else
    id = GateId::D11;
  return OracleGate{id, gate(id)};
}

Matrix4 b_operator(BoolFn2 f) {
  const Matrix4 h = gate(GateId::h2);
  return h.adjoint() * oracle(f).matrix * h;
}

namespace {

Matrix4 kron(const std::array<cd, 4>& r, const std::array<cd, 4>& s) {
  Matrix4 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          out.at(2 * a + c, 2 * b + d) = r[2 * a + b] * s[2 * c + d];
  return out;
}

std::array<cd, 4> factor_matrix(Factor f) {
  switch (f) {
    case Factor::e:   return {1, 0, 0, 1};
    case Factor::x:   return {0, 1, 1, 0};
    case Factor::y:   return {0, cd(0, -1), cd(0, 1), 0};
    case Factor::z:   return {1, 0, 0, -1};
    case Factor::p00: return {1, 0, 0, 0};
    case Factor::p01: return {0, 1, 0, 0};
    case Factor::p10: return {0, 0, 1, 0};
    case Factor::p11: return {0, 0, 0, 1};
  }
  throw std::domain_error("unknown factor");
}

const char* factor_name(Factor f) {
  switch (f) {
    case Factor::e:   return "e";
    case Factor::x:   return "x";
    case Factor::y:   return "y";
    case Factor::z:   return "z";
    case Factor::p00: return "p00";
    case Factor::p01: return "p01";
    case Factor::p10: return "p10";
    case Factor::p11: return "p11";
  }
  return "?";
}

// ±1/√2 over the four projector units of one spin, identity on the other
Factorization split_hadamard(bool on_r, std::array<int, 4> signs) {
  const Factor units[4] = {Factor::p00, Factor::p01, Factor::p10, Factor::p11};
  Factorization f;
  for (int k = 0; k < 4; ++k) {
    const cd c = cd(signs[k] * kHalfSqrt2, 0);
    if (on_r)
      f.push_back({c, units[k], Factor::e});
    else
      f.push_back({c, Factor::e, units[k]});
  }
  return f;
}

}  // namespace

Factorization virtual_factorization(GateId id) {
  const cd one(1, 0), half(0.5, 0), mihalf(0, -0.5);
  switch (id) {
    case GateId::E:
      return {{one, Factor::e, Factor::e}};
    case GateId::NOT1:
      return {{one, Factor::x, Factor::e}};
    case GateId::NOT2:
      return {{one, Factor::e, Factor::x}};
    case GateId::NOT:
      return {{one, Factor::x, Factor::x}};
    case GateId::SWAP:
      return {{half, Factor::e, Factor::e},
              {half, Factor::x, Factor::x},
              {half, Factor::y, Factor::y},
              {half, Factor::z, Factor::z}};
    case GateId::CNOT12:
      return {{one, Factor::p00, Factor::e}, {one, Factor::p11, Factor::x}};
    case GateId::CNOT21:
      return {{one, Factor::e, Factor::p00}, {one, Factor::x, Factor::p11}};
    case GateId::ICNOT12:
      return {{one, Factor::p00, Factor::x}, {one, Factor::p11, Factor::e}};
    case GateId::ICNOT21:
      return {{one, Factor::x, Factor::p00}, {one, Factor::e, Factor::p11}};
    // The blockwise Hadamards act on the S slot, the interleaved ones on R;
    // slot assignment follows the catalog matrices and the pulse
    // realizations (h1R = equal rotations on the 01 and 23 transitions).
    case GateId::H1R:
      return split_hadamard(false, {1, 1, 1, -1});
    case GateId::H1S:
      return split_hadamard(true, {1, 1, 1, -1});
    case GateId::h1R:
      return split_hadamard(false, {1, -1, 1, 1});
    case GateId::h1S:
      return split_hadamard(true, {1, -1, 1, 1});
    case GateId::H2:  // (x+z)/sqrt2 on each slot
      return {{half, Factor::x, Factor::x},
              {half, Factor::x, Factor::z},
              {half, Factor::z, Factor::x},
              {half, Factor::z, Factor::z}};
    case GateId::h2:  // (e-iy)/sqrt2 on each slot
      return {{half, Factor::e, Factor::e},
              {mihalf, Factor::e, Factor::y},
              {mihalf, Factor::y, Factor::e},
              {cd(-0.5, 0), Factor::y, Factor::y}};
    default:
      throw UnsupportedFactorizationError("no listed virtual-spin factorization for " +
                                          gate_name(id));
  }
}

Matrix4 evaluate(const Factorization& f) {
  Matrix4 sum;
  for (const auto& term : f)
    sum = sum + kron(factor_matrix(term.r), factor_matrix(term.s)) * term.coeff;
  return sum;
}

std::string factorization_str(const Factorization& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& term : f) {
    cd c = term.coeff;
    bool neg = false;
    if (c.imag() == 0.0 && c.real() < 0) {
      neg = true;
      c = -c;
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (c == cd(0.5, 0))
      os << "(1/2)";
    else if (c == cd(0, -0.5))
      os << "(-i/2)";
    else if (c == cd(0, 0.5))
      os << "(i/2)";
    else if (std::abs(c - cd(kHalfSqrt2, 0)) < 1e-15)
      os << "(1/sqrt2)";
    else if (c != cd(1, 0))
      os << c.real() << (c.imag() >= 0 ? "+" : "") << c.imag() << "i ";
    os << factor_name(term.r) << "(x)" << factor_name(term.s);
  }
  return os.str();
}

}  // namespace vspin
