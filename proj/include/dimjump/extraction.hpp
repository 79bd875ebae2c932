#pragma once

#include <vector>

#include "dimjump/circuit.hpp"
#include "dimjump/codes.hpp"

namespace dimjump {

/// Proper edge coloring of the bipartite Tanner graph of `checks` using
/// exactly max-degree colors (Koenig). Color c holds the (check, qubit)
/// pairs scheduled in step c.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tanner_edge_coloring(
    const BitMatrix& checks);

struct ExtractionSchedule {
  std::size_t ancillas = 0;
  std::size_t cnot_depth = 0;
  // per CNOT step, (check index, data qubit) pairs
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> steps;
};

/// Coloration syndrome-extraction schedule for one basis: one ancilla per
/// check, CNOT depth equal to the Tanner-graph degree.
ExtractionSchedule build_syndrome_extraction(const BitMatrix& checks);

/// Appends one extraction round to the circuit. Ancilla qubits start at
/// `ancilla_offset` (one per check row). Returns the first measurement
/// index. X basis: ancilla |+>, CNOTs ancilla -> data, measure X.
/// Z basis: ancilla |0>, CNOTs data -> ancilla, measure Z.
std::size_t append_extraction_round(CliffordCircuit& circuit, const BitMatrix& checks,
                                    PauliBasis basis, std::size_t data_offset,
                                    std::size_t ancilla_offset);

}  // namespace dimjump
