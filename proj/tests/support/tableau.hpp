#pragma once

// Test-only stabilizer tableau simulator (destabilizer/stabilizer rows with
// phase tracking). Independent oracle for the Pauli-frame propagation
// engine: it simulates the actual 49- or 98-qubit stabilizer state of a
// schedule, resolves random measurement outcomes from an injected bit
// stream, and lets tests diff faulted against clean runs bit by bit.

#include "ftlat/location.hpp"
#include "ftlat/pauli.hpp"
#include "ftlat/schedule.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ftlat::testing {

class Tableau {
  public:
    explicit Tableau(int n);

    void h(int q);
    void cnot(int c, int t);
    void swap(int a, int b);
    void apply_x(int q);
    void apply_z(int q);
    void apply_y(int q);

    // Measurements take the next bit of `bits` when the outcome is random.
    // Returns 1 for the -1 eigenvalue.
    int measure_z(int q, std::vector<int>& bits, size_t& cursor);
    int measure_x(int q, std::vector<int>& bits, size_t& cursor);

    void prep_z(int q, std::vector<int>& bits, size_t& cursor);
    void prep_x(int q, std::vector<int>& bits, size_t& cursor);

    // +1 / -1 if the phaseless Pauli (over the given qubit subset) is a
    // stabilizer of the current state with that sign, 0 if indeterminate.
    int expectation(const std::vector<int>& qubits, uint32_t x_mask, uint32_t z_mask) const;

  private:
    int n_;
    // Row-major bit matrices, rows 0..n-1 destabilizers, n..2n-1 stabilizers.
    std::vector<std::vector<uint8_t>> x_, z_;
    std::vector<uint8_t> r_;

    void rowmult(std::vector<uint8_t>& xa, std::vector<uint8_t>& za, uint8_t& ra,
                 const std::vector<uint8_t>& xb, const std::vector<uint8_t>& zb, uint8_t rb) const;
    void rowmult(int a, int b);
};

struct TableauRun {
    std::map<std::string, int> outcomes;  // measurement label -> 0/1
};

// Executes the schedule on a tableau over rows*cols qubits, injecting the
// given faults after their locations' ideal ops. The bit stream feeds
// every random measurement and preparation collapse in program order.
TableauRun run_schedule_tableau(const Schedule& s, const std::vector<LocatedFault>& faults,
                                std::vector<int> bits, const PauliString* entering = nullptr);

// Flip pattern of a faulted run relative to the clean run on the same
// deterministic bit stream.
std::map<std::string, bool> tableau_flips(const Schedule& s,
                                          const std::vector<LocatedFault>& faults,
                                          unsigned seed = 7,
                                          const PauliString* entering = nullptr);

// Runs the schedule cleanly and reports the expectation of a phaseless
// Pauli over the data qubits d1..d9 (code index k lives on data_home of dk).
int data_expectation_after(const Schedule& s, const PauliString& p, unsigned seed = 7);

std::vector<int> pseudorandom_bits(size_t count, unsigned seed);

}  // namespace ftlat::testing
