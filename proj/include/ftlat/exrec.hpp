#pragma once

#include "ftlat/location.hpp"
#include "ftlat/pauli.hpp"
#include "ftlat/schedule.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ftlat {

struct LocatedFault;

// Malignant pair counts by location type, lower triangular (i >= j, both
// 1-based in type order).
struct AlphaMatrix {
    std::array<std::array<long long, 7>, 7> counts{};

    long long& entry(int i, int j);
    long long entry(int i, int j) const;
    long long total() const;

    std::string to_csv() const;
    static AlphaMatrix from_csv(const std::string& text);

    bool operator==(const AlphaMatrix&) const = default;
};

// The published reference counts, identical to data/alpha_paper.csv.
const AlphaMatrix& reference_alpha();

std::string alpha_json(const AlphaMatrix& alpha, const std::array<long long, 7>* census,
                       long long total_locations);

// One error-correction round inside an extended rectangle: which block it
// serves, whether it leads or trails the gate, and its measurement labels
// per syndrome bit.
struct EcInstance {
    std::string prefix;
    int block = 0;
    bool leading = true;
    std::array<std::vector<std::string>, 4> syndrome_labels;
};

struct ExRec {
    Schedule schedule;
    std::vector<Location> locations;
    std::vector<EcInstance> ecs;
    bool gadget_cnot = true;  // transversal CNOT, left block controls
    // Data boundary: labels d1..d9 are the left block, d10..d18 the right;
    // both enter and leave on the standard home sites.

    std::array<long long, 7> census() const;
};

// Leading EC on both blocks, the encoded CNOT, trailing EC on both blocks,
// all on the 7x14 grid.
ExRec build_cnot_exrec();

// Shortened rectangle for the engine cross-check: one leading EC on the
// left block only, the encoded CNOT, one trailing EC on the right block
// only. The uncorrected block's data idle as memory locations.
ExRec build_truncated_exrec();

// Reference malignancy route: full re-propagation per fault assignment and
// the PauliString decode pipeline. Slow and obviously correct.
std::pair<LogicalClass, LogicalClass> decoded_output_reference(
    const ExRec& x, const std::vector<LocatedFault>& faults);
bool is_malignant_reference(const ExRec& x, int i, int j);
bool single_is_malignant_reference(const ExRec& x, int loc);

// Optimized engine. Propagation through Clifford circuits is linear over
// GF(2), so every single-fault effect is precomputed once and pairs are
// evaluated by XOR plus the decode pipeline on dense bit masks.
class PairSweep {
  public:
    explicit PairSweep(const ExRec& x);

    bool is_malignant(int i, int j) const;
    bool single_is_malignant(int loc) const;
    long long count_malignant_singles() const;

    // Exhaustive sweep over unordered location pairs. Deterministic for any
    // worker count; workers own private accumulators merged by summation.
    AlphaMatrix malignant_matrix(int jobs = 0, bool progress = false) const;

  private:
    struct Effect {
        std::array<uint64_t, 2> flips{};
        uint32_t rx = 0, rz = 0;
    };

    bool evaluate(const Effect& e) const;  // true iff decoded output != (I, I)

    const ExRec* x_;
    int n_meas_ = 0;
    std::vector<std::vector<Effect>> effects_;        // [location][fault value]
    struct InstanceMasks {
        int block;
        bool leading;
        std::array<std::array<uint64_t, 2>, 4> mask;
    };
    std::vector<InstanceMasks> instances_;
    std::array<uint32_t, 16> corr_x_{}, corr_z_{};    // decode table over 9 qubits
    std::array<uint32_t, 4> stab_x_{}, stab_z_{};
    uint32_t lx_x_ = 0, lx_z_ = 0, lz_x_ = 0, lz_z_ = 0;
};

bool is_malignant(const ExRec& x, int i, int j);
AlphaMatrix malignant_matrix(const ExRec& x, int jobs = 0, bool progress = false);
std::array<long long, 7> locations_by_type(const ExRec& x);

}  // namespace ftlat
