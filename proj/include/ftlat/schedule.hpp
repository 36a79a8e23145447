#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftlat {

struct Site {
    int row = 0;
    int col = 0;

    auto operator<=>(const Site&) const = default;
};

inline bool adjacent(Site a, Site b) {
    int dr = a.row - b.row, dc = a.col - b.col;
    return (dr < 0 ? -dr : dr) + (dc < 0 ? -dc : dc) == 1;
}

enum class OpKind { PrepX, PrepZ, Hadamard, Cnot, Swap, MeasX, MeasZ };

inline bool is_two_site(OpKind k) { return k == OpKind::Cnot || k == OpKind::Swap; }
inline bool is_prep(OpKind k) { return k == OpKind::PrepX || k == OpKind::PrepZ; }
inline bool is_meas(OpKind k) { return k == OpKind::MeasX || k == OpKind::MeasZ; }

// One lattice operation. Two-site ops store the control first (CNOT) or an
// unordered pair (SWAP). Preps carry the label of the qubit they create.
struct LatticeOp {
    OpKind kind;
    Site a;
    Site b{};          // second site, two-site ops only
    std::string label; // prep label; empty otherwise
};

struct TimeStep {
    std::vector<LatticeOp> ops;
};

// Named parity check over measurement labels; the product of the flagged
// outcomes is +1 on a fault-free run.
struct ParityCheck {
    std::string name;
    std::vector<std::string> labels;
};

struct Schedule {
    std::string name;
    int rows = 7;
    int cols = 7;
    std::vector<TimeStep> steps;                       // steps[t-1] is time step t
    std::map<std::string, Site> data_home;             // d labels -> home site
    std::array<std::vector<std::string>, 4> syndrome_map;  // s1..s4 -> measurement labels
    std::vector<ParityCheck> checks;                   // acceptance parity checks

    bool has_syndrome_map() const {
        for (const auto& v : syndrome_map)
            if (!v.empty()) return true;
        return false;
    }
};

struct Violation {
    int step = 0;  // 0 = global rule
    std::string rule;
    std::string description;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
};

Schedule parse_schedule(const std::string& text);
std::string print_schedule(const Schedule& s);

ValidationReport validate(const Schedule& s);

inline int latency(const Schedule& s) { return static_cast<int>(s.steps.size()); }

// Occupancy map right after time step `step` (step 0 = initial layout).
// Keys are occupied sites, values the resident qubit labels.
std::map<Site, std::string> occupancy_after(const Schedule& s, int step);

// Labels that exist before step 1: every data_home label not created by a
// prep op inside the schedule.
std::vector<std::string> preexisting_labels(const Schedule& s);

// Copy of s with every non-data label prefixed; syndrome map and checks are
// rewritten to match. Use before composing two schedules that reuse ancilla
// names.
Schedule relabeled(const Schedule& s, const std::string& prefix);

// Side-by-side merge on a shared timeline; part b is translated by
// (row_offset, col_offset) and its labels rewritten via relabel (applied to
// every label, data home key, syndrome entry and check entry).
Schedule parallel_merge(const Schedule& a, const Schedule& b, int row_offset, int col_offset,
                        const std::string& merged_name,
                        const std::map<std::string, std::string>& relabel_b);

// Sequential concatenation; latency adds up. Parts must share the grid size
// and agree on the homes of the data labels they have in common.
Schedule compose(const std::vector<Schedule>& parts, const std::string& name);

// Text grid for the state right after `step` with that step's operations
// drawn; step 0 shows the idle starting layout.
std::string render(const Schedule& s, int step);

}  // namespace ftlat
