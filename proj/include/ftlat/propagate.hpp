#pragma once

#include "ftlat/location.hpp"
#include "ftlat/pauli.hpp"
#include "ftlat/schedule.hpp"

#include <map>
#include <string>
#include <vector>

namespace ftlat {

struct PropagationResult {
    // Residual Pauli over the data qubits, indexed by the number in their
    // label (d3 -> qubit 3). With no faults this is the entering error.
    PauliString residual;
    // One entry per measurement in the schedule: true iff the outcome is
    // flipped relative to the fault-free run.
    std::map<std::string, bool> flips;
};

// Walks the schedule once, conjugating the Pauli frame through every
// operation and injecting each fault right after its location's ideal op.
// `entering` optionally places a data error before step 1.
PropagationResult propagate(const Schedule& s, const std::vector<LocatedFault>& faults,
                            const PauliString* entering = nullptr);

// Parity of the flip-adjusted outcomes per syndrome bit. Requires the
// schedule to carry a syndrome map.
Syndrome extract_syndrome(const Schedule& s, const std::map<std::string, bool>& flips);

// Frame-corrected residual: residual times the decoded correction. No
// physical operations are implied. Single 9-qubit block schedules only.
PauliString apply_frame_correction(const PropagationResult& r, const Schedule& s,
                                   const CodeDefinition& code);

// Names of acceptance parity checks whose outcome product is flipped.
std::vector<std::string> violated_checks(const Schedule& s,
                                         const std::map<std::string, bool>& flips);

}  // namespace ftlat
