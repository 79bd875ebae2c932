#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimjump/f2_linalg.hpp"

namespace dimjump {

enum class LayerKind { InitPlus, InitZero, Cnot, MeasureZ, MeasureX, Feedback, Noise };

/// Classically controlled Pauli: applied when the parity of the listed
/// measurement outcomes is odd.
struct FeedbackRule {
  char pauli = 'X';  // 'X' or 'Z'
  BitVector support;
  std::vector<std::size_t> controls;  // measurement indices
};

/// Marks an error-injection site for the phenomenological and code-capacity
/// noise models.
struct NoiseMarker {
  std::string tag;  // "data_x" or "data_z"
  std::vector<std::size_t> qubits;
};

struct Layer {
  LayerKind kind;
  std::vector<std::size_t> qubits;
  std::vector<std::pair<std::size_t, std::size_t>> cnots;  // (control, target)
  std::optional<FeedbackRule> feedback;
  std::optional<NoiseMarker> noise;
};

/// Layered Clifford circuit. Measurement indices are assigned in execution
/// order, following the qubit order inside each measurement layer.
struct CliffordCircuit {
  std::size_t n_qubits = 0;
  std::vector<Layer> layers;
  std::size_t num_measurements = 0;

  void append_init_plus(std::vector<std::size_t> qubits);
  void append_init_zero(std::vector<std::size_t> qubits);
  /// CNOT pairs must be disjoint within one layer.
  void append_cnot_layer(std::vector<std::pair<std::size_t, std::size_t>> pairs);
  /// Returns the measurement index of the first listed qubit.
  std::size_t append_measure_z(std::vector<std::size_t> qubits);
  std::size_t append_measure_x(std::vector<std::size_t> qubits);
  void append_feedback(FeedbackRule rule);
  void append_noise(NoiseMarker marker);

  void validate() const;
};

}  // namespace dimjump
