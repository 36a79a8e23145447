#include "ftlat/builtins.hpp"

#include <stdexcept>

namespace ftlat {

namespace {

class Builder {
  public:
    Builder(std::string name, int rows, int cols) {
        s_.name = std::move(name);
        s_.rows = rows;
        s_.cols = cols;
    }

    Builder& step() {
        s_.steps.emplace_back();
        return *this;
    }
    Builder& px(int r, int c, const std::string& label) { return op({OpKind::PrepX, {r, c}, {}, label}); }
    Builder& pz(int r, int c, const std::string& label) { return op({OpKind::PrepZ, {r, c}, {}, label}); }
    Builder& h(int r, int c) { return op({OpKind::Hadamard, {r, c}}); }
    Builder& cnot(int r1, int c1, int r2, int c2) { return op({OpKind::Cnot, {r1, c1}, {r2, c2}}); }
    Builder& swap(int r1, int c1, int r2, int c2) { return op({OpKind::Swap, {r1, c1}, {r2, c2}}); }
    Builder& mx(int r, int c) { return op({OpKind::MeasX, {r, c}}); }
    Builder& mz(int r, int c) { return op({OpKind::MeasZ, {r, c}}); }

    Builder& data(const std::string& label, int r, int c) {
        s_.data_home[label] = {r, c};
        return *this;
    }
    Builder& syndrome(int k, std::vector<std::string> labels) {
        s_.syndrome_map[k - 1] = std::move(labels);
        return *this;
    }
    Builder& check(const std::string& name, std::vector<std::string> labels) {
        s_.checks.push_back({name, std::move(labels)});
        return *this;
    }

    Schedule take() { return std::move(s_); }

  private:
    Builder& op(LatticeOp o) {
        s_.steps.back().ops.push_back(std::move(o));
        return *this;
    }
    Schedule s_;
};

void add_standard_homes(Builder& b, int first_index, int col_base) {
    for (int k = 0; k < 9; ++k) {
        int row = 2 * (k / 3) + 2;
        int col = col_base + 2 * (k % 3);
        b.data("d" + std::to_string(first_index + k), row, col);
    }
}

// Error correction on one 7x7 block, seven steps. Three cat states in the
// computational basis couple to the data rows (measured in Z, feeding s3/s4)
// and three in the rotated basis couple to the columns (measured in X,
// feeding s1/s2). Ancilla numbering follows the step-by-step grids.
Schedule make_ec() {
    Builder b("ec", 7, 7);
    add_standard_homes(b, 1, 2);
    b.syndrome(1, {"a10", "a11", "a13", "a14", "a16", "a17"});
    b.syndrome(2, {"a11", "a12", "a14", "a15", "a17", "a18"});
    b.syndrome(3, {"a1", "a2", "a4", "a5", "a7", "a8"});
    b.syndrome(4, {"a2", "a3", "a5", "a6", "a8", "a9"});

    b.step()
        .pz(1, 3, "a1").px(1, 4, "a2")
        .pz(3, 3, "a4").px(3, 4, "a5").px(3, 7, "a16")
        .pz(4, 1, "a11").pz(4, 7, "a17")
        .px(5, 1, "a12").pz(5, 3, "a14")
        .px(6, 3, "a15")
        .px(7, 4, "a8").pz(7, 5, "a9");
    b.step()
        .cnot(1, 4, 1, 3).pz(1, 5, "a3")
        .px(3, 1, "a10").cnot(3, 4, 3, 3).pz(3, 5, "a6").cnot(3, 7, 4, 7)
        .px(4, 3, "a13").cnot(5, 1, 4, 1).px(5, 7, "a18")
        .cnot(6, 3, 5, 3)
        .pz(7, 3, "a7").cnot(7, 4, 7, 5);
    b.step()
        .swap(1, 2, 1, 3).cnot(1, 4, 1, 5)
        .swap(2, 7, 3, 7)
        .swap(3, 2, 3, 3).cnot(3, 4, 3, 5).cnot(3, 1, 4, 1)
        .cnot(4, 3, 5, 3).cnot(5, 7, 4, 7)
        .swap(5, 1, 6, 1).cnot(6, 3, 6, 4)
        .cnot(7, 4, 7, 3).swap(7, 5, 7, 6);
    b.step()
        .cnot(2, 2, 1, 2).cnot(2, 4, 1, 4).swap(1, 5, 1, 6)
        .swap(2, 1, 3, 1).cnot(2, 7, 2, 6)
        .swap(3, 3, 4, 3).swap(3, 5, 3, 6)
        .cnot(4, 2, 3, 2).cnot(4, 4, 3, 4).cnot(4, 7, 4, 6)
        .swap(5, 3, 5, 4).swap(5, 7, 6, 7)
        .cnot(6, 1, 6, 2).mx(6, 3).cnot(6, 4, 7, 4).cnot(6, 6, 7, 6)
        .swap(7, 2, 7, 3);
    b.step()
        .mz(1, 2).mz(1, 4).cnot(2, 6, 1, 6)
        .cnot(2, 1, 2, 2).swap(2, 3, 3, 3).mx(2, 7)
        .mz(3, 2).mz(3, 4).cnot(4, 6, 3, 6)
        .cnot(4, 1, 4, 2).mx(4, 7).cnot(5, 4, 4, 4)
        .mx(6, 1).cnot(6, 7, 6, 6).cnot(6, 2, 7, 2)
        .mz(7, 4).mz(7, 6);
    b.step()
        .mz(1, 6).mx(2, 1).cnot(2, 3, 2, 4)
        .mz(3, 6).mx(4, 1).mx(5, 4).mx(6, 7).mz(7, 2);
    b.step()
        .mx(2, 3);
    return b.take();
}

// Encoded-zero preparation, nine steps. Four copies are built as three
// rotated-basis cats per column; two copies verify the other two through
// transversal CNOTs and are measured out, then the surviving ancilla copy
// checks the data copy after the interleaving transport. The v* parity
// checks list the outcome sets that are deterministic on a clean run;
// rejection means any check reads -1.
Schedule make_prep0() {
    Builder b("prep0", 7, 7);
    add_standard_homes(b, 1, 2);
    b.check("v1", {"a1", "a4"}).check("v2", {"a4", "a7"});
    b.check("v3", {"a2", "a5"}).check("v4", {"a5", "a8"});
    b.check("v5", {"a3", "a6"}).check("v6", {"a6", "a9"});
    b.check("v7", {"a19", "a22"}).check("v8", {"a22", "a25"});
    b.check("v9", {"a20", "a23"}).check("v10", {"a23", "a26"});
    b.check("v11", {"a21", "a24"}).check("v12", {"a24", "a27"});
    b.check("v13", {"a10", "a13", "a16"});
    b.check("v14", {"a11", "a14", "a17"});
    b.check("v15", {"a12", "a15", "a18"});

    const char* row2[] = {"a4", "a13", "a5", "a14", "a6", "a15"};
    const char* row3[] = {"a7", "a16", "a8", "a17", "a9", "a18"};
    const char* row4[] = {"d1", "a19", "d2", "a20", "d3", "a21"};
    const char* row5[] = {"d4", "a22", "d5", "a23", "d6", "a24"};
    const char* row1[] = {"a1", "a10", "a2", "a11", "a3", "a12"};
    const char* row6[] = {"d7", "a25", "d8", "a26", "d9", "a27"};

    b.step();
    for (int c = 2; c <= 7; ++c) b.pz(2, c, row2[c - 2]);
    for (int c = 2; c <= 7; ++c) b.px(3, c, row3[c - 2]);
    for (int c = 2; c <= 7; ++c) b.px(4, c, row4[c - 2]);
    for (int c = 2; c <= 7; ++c) b.pz(5, c, row5[c - 2]);

    b.step();
    for (int c = 2; c <= 7; ++c) b.px(1, c, row1[c - 2]);
    for (int c = 2; c <= 7; ++c) b.cnot(3, c, 2, c);
    for (int c = 2; c <= 7; ++c) b.cnot(4, c, 5, c);
    for (int c = 2; c <= 7; ++c) b.px(6, c, row6[c - 2]);

    b.step();
    for (int c = 2; c <= 7; ++c) b.cnot(1, c, 2, c);
    b.cnot(3, 2, 3, 3).cnot(3, 4, 3, 5).cnot(3, 6, 3, 7);
    b.cnot(4, 3, 4, 2).cnot(4, 5, 4, 4).cnot(4, 7, 4, 6);
    for (int c = 2; c <= 7; ++c) b.cnot(6, c, 5, c);

    b.step();
    b.cnot(1, 2, 1, 3).cnot(1, 4, 1, 5).cnot(1, 6, 1, 7);
    b.cnot(2, 2, 2, 3).cnot(2, 4, 2, 5).cnot(2, 6, 2, 7);
    b.mx(3, 2).mx(3, 4).mx(3, 6);
    b.mx(4, 3).mx(4, 5).mx(4, 7);
    b.cnot(5, 3, 5, 2).cnot(5, 5, 5, 4).cnot(5, 7, 5, 6);
    b.cnot(6, 3, 6, 2).cnot(6, 5, 6, 4).cnot(6, 7, 6, 6);

    b.step();
    b.mx(1, 2).mx(1, 4).mx(1, 6);
    b.mx(2, 2).mx(2, 4).mx(2, 6);
    for (int c = 2; c <= 7; ++c) b.swap(3, c, 4, c);
    b.mx(5, 3).mx(5, 5).mx(5, 7);
    b.mx(6, 3).mx(6, 5).mx(6, 7);

    b.step();
    for (int c = 2; c <= 7; ++c) b.swap(2, c, 3, c);
    for (int c = 2; c <= 7; ++c) b.swap(4, c, 5, c);

    b.step();
    for (int c = 3; c <= 7; c += 2) b.swap(1, c, 2, c);
    for (int c = 3; c <= 7; c += 2) b.swap(3, c, 4, c);
    for (int c = 3; c <= 7; c += 2) b.swap(5, c, 6, c);

    b.step();
    b.cnot(2, 2, 2, 3).cnot(2, 4, 2, 5).cnot(2, 6, 2, 7);
    b.cnot(4, 2, 4, 3).cnot(4, 4, 4, 5).cnot(4, 6, 4, 7);
    b.cnot(6, 2, 6, 3).cnot(6, 4, 6, 5).cnot(6, 6, 6, 7);

    b.step();
    b.mz(2, 3).mz(2, 5).mz(2, 7);
    b.mz(4, 3).mz(4, 5).mz(4, 7);
    b.mz(6, 3).mz(6, 5).mz(6, 7);
    return b.take();
}

// Encoded-plus preparation: the transpose of prep0 with the X and Z roles
// exchanged (cats run along rows in the computational basis). Data labels
// are remapped so each ends on its own home site.
Schedule make_prep_plus() {
    Schedule src = make_prep0();
    const std::map<std::string, std::string> data_map = {
        {"d1", "d1"}, {"d2", "d4"}, {"d3", "d7"},
        {"d4", "d2"}, {"d5", "d5"}, {"d6", "d8"},
        {"d7", "d3"}, {"d8", "d6"}, {"d9", "d9"},
    };
    auto map_label = [&](const std::string& l) {
        auto it = data_map.find(l);
        return it == data_map.end() ? l : it->second;
    };
    auto transpose = [](Site p) { return Site{p.col, p.row}; };

    Schedule out;
    out.name = "prep_plus";
    out.rows = src.cols;
    out.cols = src.rows;
    for (const auto& [label, site] : src.data_home) out.data_home[map_label(label)] = transpose(site);
    for (const auto& c : src.checks) {
        ParityCheck nc{c.name, {}};
        for (const auto& l : c.labels) nc.labels.push_back(map_label(l));
        out.checks.push_back(std::move(nc));
    }
    for (const auto& step : src.steps) {
        out.steps.emplace_back();
        for (const auto& op : step.ops) {
            LatticeOp n;
            n.label = map_label(op.label);
            switch (op.kind) {
                case OpKind::PrepX: n.kind = OpKind::PrepZ; break;
                case OpKind::PrepZ: n.kind = OpKind::PrepX; break;
                case OpKind::MeasX: n.kind = OpKind::MeasZ; break;
                case OpKind::MeasZ: n.kind = OpKind::MeasX; break;
                default: n.kind = op.kind; break;
            }
            if (op.kind == OpKind::Cnot) {
                // Exchanging X and Z reverses control and target.
                n.a = transpose(op.b);
                n.b = transpose(op.a);
            } else {
                n.a = transpose(op.a);
                if (is_two_site(op.kind)) n.b = transpose(op.b);
            }
            out.steps.back().ops.push_back(std::move(n));
        }
    }
    return out;
}

// Transversal CNOT between two horizontally adjacent blocks in nine steps.
// The control block slides right four columns inside the data rows while the
// target block's qubits step into the free row above and slide left to hover
// over their partners; the CNOT fires vertically and everything retraces.
// No SWAP ever touches two live qubits and nobody idles during transport.
Schedule make_cnot_encoded() {
    Builder b("cnot_encoded", 7, 14);
    add_standard_homes(b, 1, 2);
    add_standard_homes(b, 10, 9);

    const int rows[3] = {2, 4, 6};
    auto move_out = [&](int phase) {
        for (int r : rows) {
            if (phase == 1) {
                b.swap(r, 2, r, 3).swap(r, 4, r, 5).swap(r, 6, r, 7);
                b.swap(r, 9, r - 1, 9).swap(r, 11, r - 1, 11).swap(r, 13, r - 1, 13);
            } else {
                int base = 3 + (phase - 2);  // control qubits at base, base+2, base+4
                b.swap(r, base, r, base + 1)
                    .swap(r, base + 2, r, base + 3)
                    .swap(r, base + 4, r, base + 5);
                int tb = 9 - (phase - 2);  // target-block columns slide left in the row above
                b.swap(r - 1, tb - 1, r - 1, tb)
                    .swap(r - 1, tb + 1, r - 1, tb + 2)
                    .swap(r - 1, tb + 3, r - 1, tb + 4);
            }
        }
    };
    for (int phase = 1; phase <= 4; ++phase) {
        b.step();
        move_out(phase);
    }
    b.step();
    for (int r : rows) b.cnot(r, 6, r - 1, 6).cnot(r, 8, r - 1, 8).cnot(r, 10, r - 1, 10);
    for (int phase = 4; phase >= 1; --phase) {
        b.step();
        move_out(phase);
    }
    return b.take();
}

// Encoded SWAP: the two blocks' data pass through each other along their
// rows in seven steps; opposite movers advance together whenever they cross.
Schedule make_swap_encoded() {
    Builder b("swap_encoded", 7, 14);
    add_standard_homes(b, 1, 2);
    add_standard_homes(b, 10, 9);

    const std::vector<std::vector<int>> pair_starts = {
        {2, 4, 6, 8, 10, 12},
        {3, 5, 7, 9, 11},
        {4, 6, 8, 10},
        {5, 7, 9},
        {4, 6, 8, 10},
        {3, 5, 7, 9, 11},
        {2, 4, 6, 8, 10, 12},
    };
    for (const auto& cols : pair_starts) {
        b.step();
        for (int r : {2, 4, 6})
            for (int c : cols) b.swap(r, c, r, c + 1);
    }
    return b.take();
}

// Encoded Hadamard: transversal H, then the eight perimeter data qubits ride
// one quarter turn clockwise around the perimeter track in four steps.
Schedule make_hadamard_encoded() {
    Builder b("hadamard_encoded", 7, 7);
    add_standard_homes(b, 1, 2);

    const Site track[16] = {
        {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 6}, {4, 6}, {5, 6},
        {6, 6}, {6, 5}, {6, 4}, {6, 3}, {6, 2}, {5, 2}, {4, 2}, {3, 2},
    };
    b.step();
    for (int k = 0; k < 9; ++k) {
        int row = 2 * (k / 3) + 2, col = 2 * (k % 3) + 2;
        b.h(row, col);
    }
    for (int t = 0; t < 4; ++t) {
        b.step();
        int offset = t % 2;  // qubits alternate between even and odd track slots
        for (int i = 0; i < 8; ++i) {
            Site from = track[(2 * i + offset) % 16];
            Site to = track[(2 * i + offset + 1) % 16];
            b.swap(from.row, from.col, to.row, to.col);
        }
    }
    return b.take();
}

Schedule make_meas_transversal() {
    Builder b("meas_transversal", 7, 7);
    add_standard_homes(b, 1, 2);
    b.step();
    for (int k = 0; k < 9; ++k) {
        int row = 2 * (k / 3) + 2, col = 2 * (k % 3) + 2;
        b.mz(row, col);
    }
    return b.take();
}

}  // namespace

Schedule builtin(const std::string& name) {
    if (name == "ec") return make_ec();
    if (name == "prep0") return make_prep0();
    if (name == "prep_plus") return make_prep_plus();
    if (name == "cnot_encoded") return make_cnot_encoded();
    if (name == "swap_encoded") return make_swap_encoded();
    if (name == "hadamard_encoded") return make_hadamard_encoded();
    if (name == "meas_transversal") return make_meas_transversal();
    throw std::invalid_argument("unknown builtin schedule: " + name);
}

std::vector<std::string> builtin_names() {
    return {"ec",           "prep0",       "prep_plus",        "cnot_encoded",
            "swap_encoded", "hadamard_encoded", "meas_transversal"};
}

Schedule ec_pair(const std::string& right_prefix) {
    Schedule left = builtin("ec");
    Schedule right = builtin("ec");
    std::map<std::string, std::string> relabel;
    for (int k = 1; k <= 9; ++k) relabel["d" + std::to_string(k)] = "d" + std::to_string(k + 9);
    for (int k = 1; k <= 18; ++k) relabel["a" + std::to_string(k)] = right_prefix + "a" + std::to_string(k);
    return parallel_merge(left, right, 0, 7, "ec_pair", relabel);
}

Schedule one_rec_cnot() {
    return compose({builtin("cnot_encoded"), ec_pair()}, "one_rec_cnot");
}

Schedule one_rec_swap() {
    return compose({builtin("swap_encoded"), ec_pair()}, "one_rec_swap");
}

Schedule one_rec_prep0() {
    return compose({builtin("prep0"), relabeled(builtin("ec"), "t.")}, "one_rec_prep0");
}

Schedule one_rec_prep_plus() {
    return compose({builtin("prep_plus"), relabeled(builtin("ec"), "t.")}, "one_rec_prep_plus");
}

Schedule one_rec_measurement() {
    return builtin("meas_transversal");
}

}  // namespace ftlat
