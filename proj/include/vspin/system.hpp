#pragma once

#include <array>
#include <stdexcept>

namespace vspin {

// Level energies and the cost-model parameters of the four-level system.
// Energies are angular frequencies (rad/s, ħ absorbed); levels are ordered
// by increasing energy and the level index doubles as the Zeeman label for
// the Δm cost model.
struct SystemSpec {
  std::array<double, 4> energies;  // ε0 < ε1 < ε2 < ε3, rad/s
  double omega0 = 1.0;             // Larmor frequency, rad/s
  double omegaq = 0.1;             // quadrupole shift, rad/s
  double eta = 0.0;                // crystalline-field asymmetry, in [0,1]

  void validate() const {
    if (!(energies[0] < energies[1] && energies[1] < energies[2] &&
          energies[2] < energies[3]))
      throw std::domain_error("level energies must be strictly increasing");
    if (!(omega0 > 0.0)) throw std::domain_error("omega0 must be positive");
    if (eta < 0.0 || eta > 1.0) throw std::domain_error("eta must lie in [0,1]");
  }

  // Arbitrary desk-scale defaults: equally spaced Zeeman-like levels.
  static SystemSpec defaults() {
    return SystemSpec{{-1.5, -0.5, 0.5, 1.5}, 1.0, 0.1, 0.0};
  }
};

}  // namespace vspin
