#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ftlat {

// Phaseless Pauli operator on n qubits. Bit i of x_mask/z_mask is set iff
// X/Z acts on qubit i+1 (qubits are 1-indexed everywhere in the API).
// Y on a qubit means both bits set. Only error equivalence classes matter,
// so the global phase is not tracked.
struct PauliString {
    int n = 0;
    uint32_t x_mask = 0;
    uint32_t z_mask = 0;

    static PauliString identity(int n) { return PauliString{n, 0, 0}; }
    static PauliString single(int n, int qubit, char axis);

    bool is_identity() const { return x_mask == 0 && z_mask == 0; }
    int weight() const;

    bool operator==(const PauliString&) const = default;
};

PauliString multiply(const PauliString& p, const PauliString& q);
bool commutes(const PauliString& p, const PauliString& q);

// Textual literal format: "X1.Z5.Y9" (dot separated, 1-indexed), "I" for
// the identity. parse_pauli and to_string round-trip.
PauliString parse_pauli(const std::string& text, int n);
std::string to_string(const PauliString& p);

enum class LogicalClass { I, X, Z, Y };
const char* to_string(LogicalClass c);

// Eigenvalue pattern of the four stabilizer generators; bit k-1 set iff
// S_k reads -1. Trivial iff all four read +1.
struct Syndrome {
    uint8_t bits = 0;

    bool trivial() const { return bits == 0; }
    int sign(int k) const { return ((bits >> (k - 1)) & 1) ? -1 : +1; }
    static Syndrome from_signs(int s1, int s2, int s3, int s4);

    bool operator==(const Syndrome&) const = default;
};

// The 9-qubit subsystem code on a 3x3 grid, row major: qubits 1,2,3 are the
// top row, 1,4,7 the left column.
struct CodeDefinition {
    static constexpr int n = 9;
    std::array<PauliString, 4> stabilizer_generators;
    PauliString logical_x;
    PauliString logical_z;
    std::array<PauliString, 12> gauge_generators;

    std::pair<int, int> grid_position(int k) const {
        return {(k - 1) / 3 + 1, (k - 1) % 3 + 1};
    }
    int qubit_at(int row, int col) const { return (row - 1) * 3 + col; }

    static const CodeDefinition& bacon_shor_9();
};

Syndrome syndrome_of(const PauliString& error, const CodeDefinition& code);

// Canonical correction: X on the top qubit of the flagged column, Z on the
// left qubit of the flagged row.
PauliString decode(const Syndrome& s, const CodeDefinition& code);

// Coset of a trivial-syndrome residual in the group generated by
// stabilizers, gauge operators and logicals. Throws if the syndrome is
// nontrivial; decode first.
LogicalClass logical_class(const PauliString& residual, const CodeDefinition& code);

// True iff p is a product of stabilizer and gauge generators.
bool in_gauge_stabilizer_span(const PauliString& p, const CodeDefinition& code);

// Nine independent commuting generators of the encoded-zero stabilizer
// group: S1..S4, Z_L and the column X pairs that fix the gauge.
std::vector<PauliString> encoded_zero_stabilizers(const CodeDefinition& code);

}  // namespace ftlat
