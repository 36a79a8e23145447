#pragma once

#include "ftlat/schedule.hpp"

namespace ftlat {

// Built-in schedules: ec, prep0, prep_plus, cnot_encoded, swap_encoded,
// hadamard_encoded, meas_transversal. Throws on unknown names.
Schedule builtin(const std::string& name);

std::vector<std::string> builtin_names();

// Two error-correction rounds side by side on the 7x14 grid; the right
// block's data are d10..d18 and its ancillas carry the given prefix.
Schedule ec_pair(const std::string& right_prefix = "r.");

// Standard 1-Rec compositions used by the latency report.
Schedule one_rec_cnot();
Schedule one_rec_swap();
Schedule one_rec_prep0();
Schedule one_rec_prep_plus();
Schedule one_rec_measurement();

}  // namespace ftlat
