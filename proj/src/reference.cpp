#include "ftlat/exrec.hpp"
#include "ftlat/propagate.hpp"

#include <stdexcept>

namespace ftlat {

// Serial reference route for malignancy decisions: one full propagation per
// fault assignment and the PauliString decode pipeline, sharing nothing
// with PairSweep's dense masks. Kept for the engine cross-check and the
// benchmark.

namespace {

Syndrome instance_syndrome(const EcInstance& inst, const std::map<std::string, bool>& flips) {
    Syndrome s;
    for (int k = 0; k < 4; ++k) {
        bool parity = false;
        for (const auto& label : inst.syndrome_labels[k]) {
            auto it = flips.find(label);
            if (it != flips.end() && it->second) parity = !parity;
        }
        if (parity) s.bits |= uint8_t(1u << k);
    }
    return s;
}

PauliString block_pauli(const PauliString& both, int block) {
    PauliString p = PauliString::identity(9);
    p.x_mask = (both.x_mask >> (9 * block)) & 0x1FFu;
    p.z_mask = (both.z_mask >> (9 * block)) & 0x1FFu;
    return p;
}

}  // namespace

std::pair<LogicalClass, LogicalClass> decoded_output_reference(
    const ExRec& x, const std::vector<LocatedFault>& faults) {
    const CodeDefinition& code = CodeDefinition::bacon_shor_9();
    PropagationResult pr = propagate(x.schedule, faults);

    PauliString lead[2] = {PauliString::identity(9), PauliString::identity(9)};
    PauliString trail[2] = {PauliString::identity(9), PauliString::identity(9)};
    for (const auto& inst : x.ecs) {
        PauliString corr = decode(instance_syndrome(inst, pr.flips), code);
        auto& slot = inst.leading ? lead[inst.block] : trail[inst.block];
        slot = multiply(slot, corr);
    }
    if (x.gadget_cnot) {
        // Transversal CNOT, left block controls: X frames copy left to
        // right, Z frames copy right to left.
        lead[1].x_mask ^= lead[0].x_mask;
        lead[0].z_mask ^= lead[1].z_mask;
    }

    LogicalClass cls[2];
    for (int b = 0; b < 2; ++b) {
        PauliString resid = block_pauli(pr.residual, b);
        resid = multiply(resid, multiply(lead[b], trail[b]));
        resid = multiply(resid, decode(syndrome_of(resid, code), code));
        cls[b] = logical_class(resid, code);
    }
    return {cls[0], cls[1]};
}

bool single_is_malignant_reference(const ExRec& x, int loc) {
    const Location& l = x.locations.at(loc);
    for (int v = 0; v < fault_value_count(l.type); ++v) {
        auto out = decoded_output_reference(x, {{l, fault_value(l.type, v)}});
        if (out.first != LogicalClass::I || out.second != LogicalClass::I) return true;
    }
    return false;
}

bool is_malignant_reference(const ExRec& x, int i, int j) {
    if (i == j) throw std::invalid_argument("pair needs two distinct locations");
    const Location& li = x.locations.at(i);
    const Location& lj = x.locations.at(j);
    for (int vi = 0; vi < fault_value_count(li.type); ++vi) {
        for (int vj = 0; vj < fault_value_count(lj.type); ++vj) {
            auto out = decoded_output_reference(
                x, {{li, fault_value(li.type, vi)}, {lj, fault_value(lj.type, vj)}});
            if (out.first != LogicalClass::I || out.second != LogicalClass::I) return true;
        }
    }
    return false;
}

}  // namespace ftlat
