#include "ftlat/propagate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ftlat {

const char* to_string(LocType t) {
    switch (t) {
        case LocType::PrepPlus: return "prep_plus";
        case LocType::PrepZero: return "prep_zero";
        case LocType::Memory: return "memory";
        case LocType::Swap: return "swap";
        case LocType::MeasZ: return "meas_z";
        case LocType::MeasX: return "meas_x";
        case LocType::Cnot: return "cnot";
    }
    return "?";
}

int fault_value_count(LocType t) {
    switch (t) {
        case LocType::PrepPlus:
        case LocType::PrepZero:
        case LocType::MeasZ:
        case LocType::MeasX:
            return 1;
        case LocType::Memory:
            return 3;
        case LocType::Swap:
        case LocType::Cnot:
            return 15;
    }
    return 0;
}

Fault fault_value(LocType t, int v) {
    if (v < 0 || v >= fault_value_count(t)) throw std::out_of_range("fault value index");
    switch (t) {
        case LocType::PrepPlus: return Fault{0b10, false};  // lands in the orthogonal X eigenstate
        case LocType::PrepZero: return Fault{0b01, false};
        case LocType::MeasZ:
        case LocType::MeasX: return Fault{0, true};
        case LocType::Memory: return Fault{uint8_t(v + 1), false};      // X, Z, Y
        case LocType::Swap:
        case LocType::Cnot: return Fault{uint8_t(v + 1), false};        // 15 two-qubit Paulis
    }
    return {};
}

std::vector<Location> enumerate_locations(const Schedule& s) {
    std::vector<Location> out;
    std::map<Site, std::string> live;
    for (const auto& label : preexisting_labels(s)) live[s.data_home.at(label)] = label;

    for (int t = 1; t <= latency(s); ++t) {
        std::set<Site> touched;
        for (const auto& op : s.steps[t - 1].ops) {
            touched.insert(op.a);
            if (is_two_site(op.kind)) touched.insert(op.b);
            Location loc;
            loc.step = t;
            loc.a = op.a;
            loc.b = op.b;
            loc.two_site = is_two_site(op.kind);
            switch (op.kind) {
                case OpKind::PrepX: loc.type = LocType::PrepPlus; break;
                case OpKind::PrepZ: loc.type = LocType::PrepZero; break;
                case OpKind::Swap: loc.type = LocType::Swap; break;
                case OpKind::MeasZ: loc.type = LocType::MeasZ; break;
                case OpKind::MeasX: loc.type = LocType::MeasX; break;
                case OpKind::Cnot: loc.type = LocType::Cnot; break;
                case OpKind::Hadamard:
                    throw std::invalid_argument("no location type covers Hadamard ops");
            }
            out.push_back(loc);
        }
        // Live qubits nothing touched this step wait in place.
        for (const auto& [site, label] : live) {
            if (touched.count(site)) continue;
            Location loc;
            loc.step = t;
            loc.type = LocType::Memory;
            loc.a = site;
            out.push_back(loc);
        }
        // Advance occupancy.
        for (const auto& op : s.steps[t - 1].ops) {
            if (is_prep(op.kind)) live[op.a] = op.label;
            else if (is_meas(op.kind)) live.erase(op.a);
            else if (op.kind == OpKind::Swap) {
                auto ia = live.find(op.a), ib = live.find(op.b);
                std::string la = ia == live.end() ? "" : ia->second;
                std::string lb = ib == live.end() ? "" : ib->second;
                live.erase(op.a);
                live.erase(op.b);
                if (!lb.empty()) live[op.a] = lb;
                if (!la.empty()) live[op.b] = la;
            }
        }
    }
    for (size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
    return out;
}

namespace {

struct Frame {
    int rows, cols;
    std::vector<uint8_t> x, z;
    std::map<Site, std::string> live;

    explicit Frame(const Schedule& s)
        : rows(s.rows), cols(s.cols), x(rows * cols, 0), z(rows * cols, 0) {}

    int idx(Site p) const { return (p.row - 1) * cols + (p.col - 1); }
    void clear(Site p) { x[idx(p)] = z[idx(p)] = 0; }
    void apply(Site p, uint8_t pauli) {
        x[idx(p)] ^= pauli & 1;
        z[idx(p)] ^= (pauli >> 1) & 1;
    }
};

bool same_location(const Location& loc, const LatticeOp& op) {
    if (loc.two_site != is_two_site(op.kind)) return false;
    if (!(loc.a == op.a)) return false;
    if (loc.two_site && !(loc.b == op.b)) return false;
    switch (op.kind) {
        case OpKind::PrepX: return loc.type == LocType::PrepPlus;
        case OpKind::PrepZ: return loc.type == LocType::PrepZero;
        case OpKind::Swap: return loc.type == LocType::Swap;
        case OpKind::MeasZ: return loc.type == LocType::MeasZ;
        case OpKind::MeasX: return loc.type == LocType::MeasX;
        case OpKind::Cnot: return loc.type == LocType::Cnot;
        default: return false;
    }
}

}  // namespace

PropagationResult propagate(const Schedule& s, const std::vector<LocatedFault>& faults,
                            const PauliString* entering) {
    int n_data = static_cast<int>(s.data_home.size());
    Frame f(s);
    for (const auto& label : preexisting_labels(s)) f.live[s.data_home.at(label)] = label;

    PropagationResult result;
    result.residual = PauliString::identity(n_data);

    if (entering) {
        if (entering->n != n_data) throw std::invalid_argument("entering error size mismatch");
        for (const auto& [label, home] : s.data_home) {
            int q = std::stoi(label.substr(1));
            uint32_t bit = 1u << (q - 1);
            uint8_t pauli = uint8_t(((entering->x_mask & bit) ? 1 : 0) |
                                    ((entering->z_mask & bit) ? 2 : 0));
            if (pauli && !f.live.count(home)) {
                throw std::invalid_argument("entering error on data qubit that does not preexist");
            }
            f.apply(home, pauli);
        }
    }

    std::vector<std::vector<const LocatedFault*>> by_step(latency(s) + 1);
    for (const auto& lf : faults) {
        if (lf.loc.step < 1 || lf.loc.step > latency(s)) {
            throw std::invalid_argument("fault location step outside schedule");
        }
        by_step[lf.loc.step].push_back(&lf);
    }

    for (int t = 1; t <= latency(s); ++t) {
        std::map<Site, std::string> measured_here;
        for (const auto& op : s.steps[t - 1].ops) {
            switch (op.kind) {
                case OpKind::PrepX:
                case OpKind::PrepZ:
                    f.clear(op.a);
                    f.live[op.a] = op.label;
                    break;
                case OpKind::Hadamard:
                    std::swap(f.x[f.idx(op.a)], f.z[f.idx(op.a)]);
                    break;
                case OpKind::Cnot:
                    f.x[f.idx(op.b)] ^= f.x[f.idx(op.a)];
                    f.z[f.idx(op.a)] ^= f.z[f.idx(op.b)];
                    break;
                case OpKind::Swap: {
                    std::swap(f.x[f.idx(op.a)], f.x[f.idx(op.b)]);
                    std::swap(f.z[f.idx(op.a)], f.z[f.idx(op.b)]);
                    auto ia = f.live.find(op.a), ib = f.live.find(op.b);
                    std::string la = ia == f.live.end() ? "" : ia->second;
                    std::string lb = ib == f.live.end() ? "" : ib->second;
                    f.live.erase(op.a);
                    f.live.erase(op.b);
                    if (!lb.empty()) f.live[op.a] = lb;
                    else f.clear(op.a);
                    if (!la.empty()) f.live[op.b] = la;
                    else f.clear(op.b);
                    break;
                }
                case OpKind::MeasX:
                case OpKind::MeasZ: {
                    auto it = f.live.find(op.a);
                    if (it == f.live.end()) throw std::invalid_argument("measurement of empty site");
                    bool flip = op.kind == OpKind::MeasX ? f.z[f.idx(op.a)] : f.x[f.idx(op.a)];
                    result.flips[it->second] = flip;
                    measured_here[op.a] = it->second;
                    f.live.erase(it);
                    f.clear(op.a);
                    break;
                }
            }
        }
        // Faults land after the ideal operation of their location.
        for (const LocatedFault* lf : by_step[t]) {
            const Location& loc = lf->loc;
            if (loc.type == LocType::Memory) {
                if (!f.live.count(loc.a)) throw std::invalid_argument("memory fault on empty site");
                f.apply(loc.a, lf->fault.pauli & 3);
                continue;
            }
            bool found = false;
            for (const auto& op : s.steps[t - 1].ops) {
                if (!same_location(loc, op)) continue;
                found = true;
                if (is_meas(op.kind)) {
                    if (lf->fault.flip) {
                        const std::string& label = measured_here.at(loc.a);
                        result.flips[label] = !result.flips[label];
                    }
                } else {
                    f.apply(loc.a, lf->fault.pauli & 3);
                    if (loc.two_site) f.apply(loc.b, (lf->fault.pauli >> 2) & 3);
                    if (op.kind == OpKind::Swap) {
                        if (!f.live.count(loc.a)) f.clear(loc.a);
                        if (!f.live.count(loc.b)) f.clear(loc.b);
                    }
                }
                break;
            }
            if (!found) throw std::invalid_argument("fault location not found in schedule");
        }
    }

    for (const auto& [site, label] : f.live) {
        if (!s.data_home.count(label)) continue;
        int q = std::stoi(label.substr(1));
        uint32_t bit = 1u << (q - 1);
        if (f.x[f.idx(site)]) result.residual.x_mask |= bit;
        if (f.z[f.idx(site)]) result.residual.z_mask |= bit;
    }
    return result;
}

Syndrome extract_syndrome(const Schedule& s, const std::map<std::string, bool>& flips) {
    if (!s.has_syndrome_map()) throw std::invalid_argument("schedule has no syndrome map");
    Syndrome out;
    for (int k = 0; k < 4; ++k) {
        bool parity = false;
        for (const auto& label : s.syndrome_map[k]) {
            auto it = flips.find(label);
            if (it != flips.end() && it->second) parity = !parity;
        }
        if (parity) out.bits |= uint8_t(1u << k);
    }
    return out;
}

PauliString apply_frame_correction(const PropagationResult& r, const Schedule& s,
                                   const CodeDefinition& code) {
    return multiply(r.residual, decode(extract_syndrome(s, r.flips), code));
}

std::vector<std::string> violated_checks(const Schedule& s,
                                         const std::map<std::string, bool>& flips) {
    std::vector<std::string> out;
    for (const auto& check : s.checks) {
        bool parity = false;
        for (const auto& label : check.labels) {
            auto it = flips.find(label);
            if (it != flips.end() && it->second) parity = !parity;
        }
        if (parity) out.push_back(check.name);
    }
    return out;
}

}  // namespace ftlat
