#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "dimjump/circuit.hpp"
#include "dimjump/f2_linalg.hpp"

namespace dimjump {

/// X/Z support pair describing a Pauli operator (phases over F2 only).
struct PauliOperator {
  BitVector x, z;

  static PauliOperator x_on(std::size_t n, const BitVector& support);
  static PauliOperator z_on(std::size_t n, const BitVector& support);
};

/// Stabilizer state on n qubits in the destabilizer/stabilizer tableau
/// form. Row i < n is the i-th destabilizer, row n + i the i-th stabilizer.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(std::size_t n, std::uint64_t seed = 0);

  std::size_t num_qubits() const { return n_; }

  void apply_cnot(std::size_t control, std::size_t target);
  void apply_h(std::size_t q);
  void apply_x(std::size_t q);
  void apply_z(std::size_t q);
  void apply_pauli(const PauliOperator& p);

  struct Outcome {
    bool value = false;
    bool deterministic = false;
  };
  Outcome measure_z(std::size_t q);
  Outcome measure_x(std::size_t q);
  void reset_z(std::size_t q);  // project onto |0>
  void reset_plus(std::size_t q);

  /// Expectation of a Pauli observable: +1, -1, or 0 when the outcome would
  /// be random.
  int expectation(const PauliOperator& p) const;

 private:
  std::size_t pivot_stabilizer(std::size_t q) const;
  void row_mult(std::size_t dst, std::size_t src);  // row dst *= row src
  int phase_exponent(std::size_t dst, std::size_t src) const;

  std::size_t n_;
  std::vector<BitVector> x_, z_;
  std::vector<bool> sign_;
  mutable std::mt19937_64 rng_;
};

struct TableauRunResult {
  std::vector<bool> record;
  std::vector<bool> deterministic;
  StabilizerTableau tableau;
};

/// Executes a circuit exactly. `injections` maps a layer index to Pauli
/// errors applied after that layer ('X', 'Y' or 'Z' per qubit).
TableauRunResult tableau_run(
    const CliffordCircuit& circuit, std::uint64_t seed,
    const std::map<std::size_t, std::vector<std::pair<std::size_t, char>>>& injections = {});

}  // namespace dimjump
