#include "dimjump/tableau.hpp"

#include <bit>
#include <stdexcept>

namespace dimjump {

PauliOperator PauliOperator::x_on(std::size_t n, const BitVector& support) {
  PauliOperator p{BitVector(n), BitVector(n)};
  p.x = support;
  return p;
}

PauliOperator PauliOperator::z_on(std::size_t n, const BitVector& support) {
  PauliOperator p{BitVector(n), BitVector(n)};
  p.z = support;
  return p;
}

StabilizerTableau::StabilizerTableau(std::size_t n, std::uint64_t seed)
    : n_(n), x_(2 * n, BitVector(n)), z_(2 * n, BitVector(n)), sign_(2 * n, false), rng_(seed) {
  for (std::size_t i = 0; i < n; ++i) {
    x_[i].set(i, true);       // destabilizer X_i
    z_[n + i].set(i, true);   // stabilizer Z_i: state |0...0>
  }
}

void StabilizerTableau::apply_cnot(std::size_t c, std::size_t t) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    bool xc = x_[i].get(c), zc = z_[i].get(c);
    bool xt = x_[i].get(t), zt = z_[i].get(t);
    if (xc && zt && (xt == zc)) sign_[i] = !sign_[i];
    x_[i].set(t, xt ^ xc);
    z_[i].set(c, zc ^ zt);
  }
}

void StabilizerTableau::apply_h(std::size_t q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    bool xq = x_[i].get(q), zq = z_[i].get(q);
    if (xq && zq) sign_[i] = !sign_[i];
    x_[i].set(q, zq);
    z_[i].set(q, xq);
  }
}

void StabilizerTableau::apply_x(std::size_t q) {
  for (std::size_t i = 0; i < 2 * n_; ++i)
    if (z_[i].get(q)) sign_[i] = !sign_[i];
}

void StabilizerTableau::apply_z(std::size_t q) {
  for (std::size_t i = 0; i < 2 * n_; ++i)
    if (x_[i].get(q)) sign_[i] = !sign_[i];
}

void StabilizerTableau::apply_pauli(const PauliOperator& p) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < x_[i].words().size(); ++w)
      acc ^= (x_[i].words()[w] & p.z.words()[w]) ^ (z_[i].words()[w] & p.x.words()[w]);
    if (std::popcount(acc) & 1) sign_[i] = !sign_[i];
  }
}

namespace {

// CHP phase function: exponent of i contributed by multiplying single-qubit
// Paulis (x1, z1) * (x2, z2).
inline int phase_g(bool x1, bool z1, bool x2, bool z2) {
  if (!x1 && !z1) return 0;
  if (x1 && z1) return static_cast<int>(z2) - static_cast<int>(x2);  // Y
  if (x1) return z2 ? (x2 ? 1 : -1) : 0;                            // X: z2 (2 x2 - 1)
  return x2 ? (z2 ? -1 : 1) : 0;                                    // Z: x2 (1 - 2 z2)
}

}  // namespace

int StabilizerTableau::phase_exponent(std::size_t dst, std::size_t src) const {
  int sum = 0;
  for (std::size_t q = 0; q < n_; ++q)
    sum += phase_g(x_[src].get(q), z_[src].get(q), x_[dst].get(q), z_[dst].get(q));
  return sum;
}

void StabilizerTableau::row_mult(std::size_t dst, std::size_t src) {
  int phase = 2 * (sign_[dst] ? 1 : 0) + 2 * (sign_[src] ? 1 : 0) + phase_exponent(dst, src);
  phase = ((phase % 4) + 4) % 4;
  if (phase != 0 && phase != 2) throw std::logic_error("imaginary phase in row product");
  sign_[dst] = phase == 2;
  x_[dst].xor_with(x_[src]);
  z_[dst].xor_with(z_[src]);
}

std::size_t StabilizerTableau::pivot_stabilizer(std::size_t q) const {
  for (std::size_t i = n_; i < 2 * n_; ++i)
    if (x_[i].get(q)) return i;
  return 2 * n_;
}

StabilizerTableau::Outcome StabilizerTableau::measure_z(std::size_t q) {
  std::size_t p = pivot_stabilizer(q);
  if (p < 2 * n_) {
    for (std::size_t i = 0; i < 2 * n_; ++i)
      if (i != p && x_[i].get(q)) row_mult(i, p);
    x_[p - n_] = x_[p];
    z_[p - n_] = z_[p];
    sign_[p - n_] = sign_[p];
    x_[p] = BitVector(n_);
    z_[p] = BitVector(n_);
    z_[p].set(q, true);
    bool value = rng_() & 1;
    sign_[p] = value;
    return {value, false};
  }
  // Deterministic: accumulate the product of stabilizers flagged by the
  // destabilizers that touch q.
  BitVector xs(n_), zs(n_);
  int phase = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!x_[i].get(q)) continue;
    std::size_t s = n_ + i;
    int g = 0;
    for (std::size_t k = 0; k < n_; ++k)
      g += phase_g(x_[s].get(k), z_[s].get(k), xs.get(k), zs.get(k));
    phase += 2 * (sign_[s] ? 1 : 0) + g;
    xs.xor_with(x_[s]);
    zs.xor_with(z_[s]);
  }
  phase = ((phase % 4) + 4) % 4;
  if (phase != 0 && phase != 2) throw std::logic_error("imaginary phase in measurement");
  return {phase == 2, true};
}

StabilizerTableau::Outcome StabilizerTableau::measure_x(std::size_t q) {
  apply_h(q);
  Outcome out = measure_z(q);
  apply_h(q);
  return out;
}

void StabilizerTableau::reset_z(std::size_t q) {
  Outcome out = measure_z(q);
  if (out.value) apply_x(q);
}

void StabilizerTableau::reset_plus(std::size_t q) {
  reset_z(q);
  apply_h(q);
}

int StabilizerTableau::expectation(const PauliOperator& p) const {
  auto anticommutes = [&](std::size_t row) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < x_[row].words().size(); ++w)
      acc ^= (x_[row].words()[w] & p.z.words()[w]) ^ (z_[row].words()[w] & p.x.words()[w]);
    return (std::popcount(acc) & 1) != 0;
  };
  for (std::size_t i = n_; i < 2 * n_; ++i)
    if (anticommutes(i)) return 0;

  BitVector xs(n_), zs(n_);
  int phase = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!anticommutes(i)) continue;
    std::size_t s = n_ + i;
    int g = 0;
    for (std::size_t k = 0; k < n_; ++k)
      g += phase_g(x_[s].get(k), z_[s].get(k), xs.get(k), zs.get(k));
    phase += 2 * (sign_[s] ? 1 : 0) + g;
    xs.xor_with(x_[s]);
    zs.xor_with(z_[s]);
  }
  if (!(xs == p.x) || !(zs == p.z))
    throw std::logic_error("operator is not in the stabilizer group");
  phase = ((phase % 4) + 4) % 4;
  if (phase != 0 && phase != 2) throw std::logic_error("imaginary expectation phase");
  return phase == 0 ? 1 : -1;
}

TableauRunResult tableau_run(
    const CliffordCircuit& circuit, std::uint64_t seed,
    const std::map<std::size_t, std::vector<std::pair<std::size_t, char>>>& injections) {
  circuit.validate();
  StabilizerTableau tableau(circuit.n_qubits, seed);
  std::vector<bool> record, deterministic;

  for (std::size_t li = 0; li < circuit.layers.size(); ++li) {
    const Layer& layer = circuit.layers[li];
    switch (layer.kind) {
      case LayerKind::InitZero:
        for (std::size_t q : layer.qubits) tableau.reset_z(q);
        break;
      case LayerKind::InitPlus:
        for (std::size_t q : layer.qubits) tableau.reset_plus(q);
        break;
      case LayerKind::Cnot:
        for (auto [c, t] : layer.cnots) tableau.apply_cnot(c, t);
        break;
      case LayerKind::MeasureZ:
        for (std::size_t q : layer.qubits) {
          auto out = tableau.measure_z(q);
          record.push_back(out.value);
          deterministic.push_back(out.deterministic);
        }
        break;
      case LayerKind::MeasureX:
        for (std::size_t q : layer.qubits) {
          auto out = tableau.measure_x(q);
          record.push_back(out.value);
          deterministic.push_back(out.deterministic);
        }
        break;
      case LayerKind::Feedback: {
        bool parity = false;
        for (std::size_t m : layer.feedback->controls) parity ^= record.at(m);
        if (parity) {
          PauliOperator p = layer.feedback->pauli == 'X'
                                ? PauliOperator::x_on(circuit.n_qubits, layer.feedback->support)
                                : PauliOperator::z_on(circuit.n_qubits, layer.feedback->support);
          tableau.apply_pauli(p);
        }
        break;
      }
      case LayerKind::Noise:
        break;
    }
    auto it = injections.find(li);
    if (it != injections.end()) {
      for (auto [q, pauli] : it->second) {
        if (pauli == 'X' || pauli == 'Y') tableau.apply_x(q);
        if (pauli == 'Z' || pauli == 'Y') tableau.apply_z(q);
      }
    }
  }
  return {std::move(record), std::move(deterministic), std::move(tableau)};
}

}  // namespace dimjump
