//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qicsel/circuit.hpp"
#include "qicsel/coupling.hpp"
#include "qicsel/noise.hpp"
#include "qicsel/partition.hpp"
#include "qicsel/qic.hpp"
#include "qicsel/select.hpp"
#include "qicsel/sim.hpp"

namespace qicsel {

enum class CircuitFormat { Json, Qasm2 };

/// Detects OpenQASM 2 sources by their header; everything else is JSON.
CircuitFormat sniff_circuit_format(std::string_view text);

/// Parses a circuit from JSON or the OpenQASM 2 subset. Errors carry a
/// position for syntax problems and name unsupported constructs explicitly.
UserCircuit parse_circuit(std::string_view text, CircuitFormat format);

std::string circuit_to_json(const UserCircuit& circuit);

std::string qic_to_json(const Qic& qic);
Qic qic_from_json(std::string_view text);

std::string coupling_to_json(const CouplingMap& map);
CouplingMap coupling_from_json(std::string_view text);

std::string layouts_to_json(const std::vector<Layout>& layouts);
std::vector<Layout> layouts_from_json(std::string_view text);

std::string noise_to_json(const NoiseSnapshot& noise);
NoiseSnapshot noise_from_json(std::string_view text);

std::string drift_to_json(const DriftSchedule& schedule);
DriftSchedule drift_from_json(std::string_view text);

std::string counts_to_json(const ShotCounts& counts);
ShotCounts counts_from_json(std::string_view text);

std::string plan_to_json(const PartitionPlan& plan);
PartitionPlan plan_from_json(std::string_view text);

std::string selection_to_json(const SelectionReport& report);
std::string selection_to_csv(const SelectionReport& report);

std::string resource_to_json(const ResourceReport& report);
std::string resource_to_csv(const ResourceReport& report);

}  // namespace qicsel
