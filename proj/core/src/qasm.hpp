//
// This file is part of the qicsel library released under the Apache-2.0 license.
// See README.md for more information.
//

#pragma once

#include <string_view>

#include "qicsel/circuit.hpp"

namespace qicsel {

/// OpenQASM 2 subset parser: one qreg, optional cregs, gates from the
/// supported set, whole-register measure. Anything else is rejected with a
/// position-annotated ParseError naming the construct.
UserCircuit parse_qasm2(std::string_view source);

}  // namespace qicsel
