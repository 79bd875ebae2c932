#include "dimjump/circuit.hpp"

#include <stdexcept>

namespace dimjump {

void CliffordCircuit::append_init_plus(std::vector<std::size_t> qubits) {
  layers.push_back({LayerKind::InitPlus, std::move(qubits), {}, {}, {}});
}

void CliffordCircuit::append_init_zero(std::vector<std::size_t> qubits) {
  layers.push_back({LayerKind::InitZero, std::move(qubits), {}, {}, {}});
}

void CliffordCircuit::append_cnot_layer(std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  layers.push_back({LayerKind::Cnot, {}, std::move(pairs), {}, {}});
}

std::size_t CliffordCircuit::append_measure_z(std::vector<std::size_t> qubits) {
  std::size_t first = num_measurements;
  num_measurements += qubits.size();
  layers.push_back({LayerKind::MeasureZ, std::move(qubits), {}, {}, {}});
  return first;
}

std::size_t CliffordCircuit::append_measure_x(std::vector<std::size_t> qubits) {
  std::size_t first = num_measurements;
  num_measurements += qubits.size();
  layers.push_back({LayerKind::MeasureX, std::move(qubits), {}, {}, {}});
  return first;
}

void CliffordCircuit::append_feedback(FeedbackRule rule) {
  layers.push_back({LayerKind::Feedback, {}, {}, std::move(rule), {}});
}

void CliffordCircuit::append_noise(NoiseMarker marker) {
  layers.push_back({LayerKind::Noise, {}, {}, {}, std::move(marker)});
}

void CliffordCircuit::validate() const {
  std::size_t measured = 0;
  for (const Layer& layer : layers) {
    for (std::size_t q : layer.qubits)
      if (q >= n_qubits) throw std::invalid_argument("qubit index out of range");
    if (layer.kind == LayerKind::Cnot) {
      std::vector<bool> used(n_qubits, false);
      for (auto [c, t] : layer.cnots) {
        if (c >= n_qubits || t >= n_qubits)
          throw std::invalid_argument("CNOT qubit out of range");
        if (c == t || used[c] || used[t])
          throw std::invalid_argument("CNOT pairs must be disjoint within a layer");
        used[c] = used[t] = true;
      }
    }
    if (layer.kind == LayerKind::MeasureZ || layer.kind == LayerKind::MeasureX)
      measured += layer.qubits.size();
    if (layer.kind == LayerKind::Feedback) {
      if (layer.feedback->support.size() != n_qubits)
        throw std::invalid_argument("feedback support size mismatch");
      for (std::size_t m : layer.feedback->controls)
        if (m >= measured) throw std::invalid_argument("feedback reads a future measurement");
    }
  }
  if (measured != num_measurements) throw std::logic_error("measurement count mismatch");
}

}  // namespace dimjump
