#pragma once

#include "zeno/qstate.hpp"
#include "zeno/spinboson.hpp"

namespace zeno {

enum class Family { phi, psi };

// Bell-like initial state: amp is the first real coefficient (a for the phi
// family, c for psi); the second is sqrt(1 - amp^2).
struct InitialState {
  Family family = Family::phi;
  double amp = 0.70710678118654752;
};

enum class Partition { qubit_qubit, reservoir_reservoir };

// Qubit-qubit reduced state of the decayed phi state
// a|00> + b|11> -> outer-coherence X form.
XState evolve_phi(double a, const SurvivalPair& s1, const SurvivalPair& s2);

// Qubit-qubit reduced state of the decayed psi state
// c|01> + d|10> -> inner-coherence X form.
XState evolve_psi(double c, const SurvivalPair& s1, const SurvivalPair& s2);

// Reduced state of the chosen partition. The reservoir-reservoir state is
// the qubit-qubit state with each (u, v) swapped.
XState partition_state(const InitialState& init, const SurvivalPair& s1,
                       const SurvivalPair& s2, Partition part);

}  // namespace zeno
