#pragma once

#include "ftlat/schedule.hpp"

#include <cstdint>

namespace ftlat {

// The seven fault location types. Numbering is part of the reporting
// format: 1 plus-state prep, 2 zero-state prep, 3 memory, 4 SWAP,
// 5 Z measurement, 6 X measurement, 7 CNOT.
enum class LocType : int {
    PrepPlus = 1,
    PrepZero = 2,
    Memory = 3,
    Swap = 4,
    MeasZ = 5,
    MeasX = 6,
    Cnot = 7,
};

const char* to_string(LocType t);

struct Location {
    int id = 0;
    LocType type = LocType::Memory;
    int step = 0;      // 1-based time step
    Site a;
    Site b{};          // two-site types only
    bool two_site = false;
};

// Every fault location of a schedule: one per operation plus one memory
// location per live-but-idle qubit per step. Sites carry locations only
// while a qubit lives there. Schedules containing Hadamard ops are not
// enumerable (the taxonomy has no slot for them).
std::vector<Location> enumerate_locations(const Schedule& s);

// Adversarial fault set sizes per type: preps and measurements have a
// single failure mode, memories three, two-qubit gates fifteen.
int fault_value_count(LocType t);

// One fault value. For Pauli faults, bits 0/1 are X/Z on the first site and
// bits 2/3 X/Z on the second; measurement faults flip the outcome instead.
struct Fault {
    uint8_t pauli = 0;
    bool flip = false;
};

// The v-th fault value (0-based) at a location of the given type.
Fault fault_value(LocType t, int v);

struct LocatedFault {
    Location loc;
    Fault fault;
};

}  // namespace ftlat
