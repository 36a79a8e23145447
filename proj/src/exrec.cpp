#include "ftlat/exrec.hpp"

#include "ftlat/builtins.hpp"
#include "ftlat/propagate.hpp"
#include "ftlat/version.hpp"

#include <bit>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace ftlat {

long long& AlphaMatrix::entry(int i, int j) {
    if (i < 1 || i > 7 || j < 1 || j > i) throw std::out_of_range("alpha entry");
    return counts[i - 1][j - 1];
}

long long AlphaMatrix::entry(int i, int j) const {
    if (i < 1 || i > 7 || j < 1 || j > i) throw std::out_of_range("alpha entry");
    return counts[i - 1][j - 1];
}

long long AlphaMatrix::total() const {
    long long t = 0;
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= i; ++j) t += entry(i, j);
    return t;
}

std::string AlphaMatrix::to_csv() const {
    std::ostringstream out;
    for (int i = 1; i <= 7; ++i) {
        for (int j = 1; j <= 7; ++j) {
            if (j > 1) out << ',';
            if (j <= i) out << entry(i, j);
        }
        out << '\n';
    }
    return out.str();
}

AlphaMatrix AlphaMatrix::from_csv(const std::string& text) {
    AlphaMatrix m;
    std::istringstream stream(text);
    std::string line;
    int i = 0;
    while (std::getline(stream, line)) {
        if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
        ++i;
        if (i > 7) throw std::invalid_argument("alpha csv has more than 7 rows");
        std::istringstream ls(line);
        std::string field;
        int j = 0;
        while (std::getline(ls, field, ',')) {
            ++j;
            while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
            if (field.empty()) continue;
            if (j > i) throw std::invalid_argument("alpha csv has entries above the diagonal");
            m.entry(i, j) = std::stoll(field);
        }
    }
    if (i != 7) throw std::invalid_argument("alpha csv needs 7 rows");
    return m;
}

const AlphaMatrix& reference_alpha() {
    static const AlphaMatrix m = [] {
        const long long rows[7][7] = {
            {114, 0, 0, 0, 0, 0, 0},
            {0, 160, 0, 0, 0, 0, 0},
            {1112, 1362, 3027, 0, 0, 0, 0},
            {2302, 2483, 11160, 11040, 0, 0, 0},
            {0, 402, 3132, 1422, 216, 0, 0},
            {300, 0, 3126, 1416, 0, 216, 0},
            {1186, 1501, 7962, 14626, 1740, 1410, 4465},
        };
        AlphaMatrix a;
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= i; ++j) a.entry(i, j) = rows[i - 1][j - 1];
        return a;
    }();
    return m;
}

std::string alpha_json(const AlphaMatrix& alpha, const std::array<long long, 7>* census,
                       long long total_locations) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["tool_version"] = FTLAT_VERSION;
    j["type_order"] = {"prep_plus", "prep_zero", "memory", "swap", "meas_z", "meas_x", "cnot"};
    auto rows = nlohmann::ordered_json::array();
    for (int i = 1; i <= 7; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int k = 1; k <= i; ++k) row.push_back(alpha.entry(i, k));
        rows.push_back(row);
    }
    j["malignant_pairs"] = rows;
    j["total_malignant_pairs"] = alpha.total();
    if (census) {
        nlohmann::ordered_json c;
        const char* names[7] = {"prep_plus", "prep_zero", "memory", "swap", "meas_z", "meas_x", "cnot"};
        for (int t = 0; t < 7; ++t) c[names[t]] = (*census)[t];
        j["location_counts"] = c;
        j["total_locations"] = total_locations;
    }
    return j.dump(2) + "\n";
}

std::array<long long, 7> ExRec::census() const {
    std::array<long long, 7> out{};
    for (const auto& loc : locations) out[static_cast<int>(loc.type) - 1]++;
    return out;
}

std::array<long long, 7> locations_by_type(const ExRec& x) {
    return x.census();
}

namespace {

Schedule data_only_block(int first_index) {
    Schedule s;
    s.name = "idle_block";
    s.rows = 7;
    s.cols = 7;
    for (int k = 0; k < 9; ++k) {
        int row = 2 * (k / 3) + 2, col = 2 * (k % 3) + 2;
        s.data_home["d" + std::to_string(first_index + k)] = {row, col};
    }
    s.steps.resize(7);
    return s;
}

std::map<std::string, std::string> right_block_data_map() {
    std::map<std::string, std::string> m;
    for (int k = 1; k <= 9; ++k) m["d" + std::to_string(k)] = "d" + std::to_string(k + 9);
    return m;
}

EcInstance make_instance(const std::string& prefix, int block, bool leading) {
    EcInstance inst;
    inst.prefix = prefix;
    inst.block = block;
    inst.leading = leading;
    Schedule ec = builtin("ec");
    for (int k = 0; k < 4; ++k)
        for (const auto& l : ec.syndrome_map[k]) inst.syndrome_labels[k].push_back(prefix + l);
    return inst;
}

}  // namespace

ExRec build_cnot_exrec() {
    ExRec x;
    Schedule lead = parallel_merge(relabeled(builtin("ec"), "e0."), relabeled(builtin("ec"), "e1."),
                                   0, 7, "lead_ec_pair", right_block_data_map());
    Schedule trail = parallel_merge(relabeled(builtin("ec"), "e2."), relabeled(builtin("ec"), "e3."),
                                    0, 7, "trail_ec_pair", right_block_data_map());
    x.schedule = compose({lead, builtin("cnot_encoded"), trail}, "cnot_exrec");
    x.schedule.syndrome_map = {};
    x.locations = enumerate_locations(x.schedule);
    x.ecs = {make_instance("e0.", 0, true), make_instance("e1.", 1, true),
             make_instance("e2.", 0, false), make_instance("e3.", 1, false)};
    return x;
}

ExRec build_truncated_exrec() {
    ExRec x;
    Schedule lead = parallel_merge(relabeled(builtin("ec"), "e0."), data_only_block(1), 0, 7,
                                   "lead_left", right_block_data_map());
    Schedule trail = parallel_merge(data_only_block(1), relabeled(builtin("ec"), "e2."), 0, 7,
                                    "trail_right", right_block_data_map());
    x.schedule = compose({lead, builtin("cnot_encoded"), trail}, "cnot_exrec_truncated");
    x.schedule.syndrome_map = {};
    x.locations = enumerate_locations(x.schedule);
    x.ecs = {make_instance("e0.", 0, true), make_instance("e2.", 1, false)};
    return x;
}

PairSweep::PairSweep(const ExRec& x) : x_(&x) {
    const CodeDefinition& code = CodeDefinition::bacon_shor_9();

    // Dense measurement label indexing, in schedule order.
    std::map<std::string, int> meas_index;
    {
        std::map<Site, std::string> live;
        for (const auto& label : preexisting_labels(x.schedule))
            live[x.schedule.data_home.at(label)] = label;
        for (const auto& step : x.schedule.steps) {
            for (const auto& op : step.ops) {
                if (is_prep(op.kind)) live[op.a] = op.label;
                else if (is_meas(op.kind)) {
                    meas_index.emplace(live.at(op.a), n_meas_++);
                    live.erase(op.a);
                } else if (op.kind == OpKind::Swap) {
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
    }
    if (n_meas_ > 128) throw std::logic_error("flip mask too small for this schedule");

    for (const auto& inst : x.ecs) {
        InstanceMasks m;
        m.block = inst.block;
        m.leading = inst.leading;
        for (int k = 0; k < 4; ++k) {
            m.mask[k] = {0, 0};
            for (const auto& label : inst.syndrome_labels[k]) {
                int idx = meas_index.at(label);
                m.mask[k][idx / 64] |= uint64_t(1) << (idx % 64);
            }
        }
        instances_.push_back(m);
    }

    for (int sig = 0; sig < 16; ++sig) {
        PauliString corr = decode(Syndrome{uint8_t(sig)}, code);
        corr_x_[sig] = corr.x_mask;
        corr_z_[sig] = corr.z_mask;
    }
    for (int k = 0; k < 4; ++k) {
        stab_x_[k] = code.stabilizer_generators[k].x_mask;
        stab_z_[k] = code.stabilizer_generators[k].z_mask;
    }
    lx_x_ = code.logical_x.x_mask;
    lx_z_ = code.logical_x.z_mask;
    lz_x_ = code.logical_z.x_mask;
    lz_z_ = code.logical_z.z_mask;

    // Single-fault effects via one propagation each; pairs are XORs of these.
    effects_.resize(x.locations.size());
    for (size_t i = 0; i < x.locations.size(); ++i) {
        const Location& loc = x.locations[i];
        int nv = fault_value_count(loc.type);
        effects_[i].resize(nv);
        for (int v = 0; v < nv; ++v) {
            PropagationResult pr = propagate(x.schedule, {{loc, fault_value(loc.type, v)}});
            Effect e;
            for (const auto& [label, flipped] : pr.flips) {
                if (!flipped) continue;
                int idx = meas_index.at(label);
                e.flips[idx / 64] |= uint64_t(1) << (idx % 64);
            }
            e.rx = pr.residual.x_mask;
            e.rz = pr.residual.z_mask;
            effects_[i][v] = e;
        }
    }
}

bool PairSweep::evaluate(const Effect& e) const {
    uint32_t fx[2] = {0, 0}, fz[2] = {0, 0};
    for (const auto& inst : instances_) {
        if (!inst.leading) continue;
        int sig = 0;
        for (int k = 0; k < 4; ++k) {
            int par = (std::popcount(e.flips[0] & inst.mask[k][0]) +
                       std::popcount(e.flips[1] & inst.mask[k][1])) & 1;
            sig |= par << k;
        }
        fx[inst.block] ^= corr_x_[sig];
        fz[inst.block] ^= corr_z_[sig];
    }
    if (x_->gadget_cnot) {
        fx[1] ^= fx[0];
        fz[0] ^= fz[1];
    }
    for (const auto& inst : instances_) {
        if (inst.leading) continue;
        int sig = 0;
        for (int k = 0; k < 4; ++k) {
            int par = (std::popcount(e.flips[0] & inst.mask[k][0]) +
                       std::popcount(e.flips[1] & inst.mask[k][1])) & 1;
            sig |= par << k;
        }
        fx[inst.block] ^= corr_x_[sig];
        fz[inst.block] ^= corr_z_[sig];
    }
    for (int b = 0; b < 2; ++b) {
        uint32_t rx = ((e.rx >> (9 * b)) & 0x1FFu) ^ fx[b];
        uint32_t rz = ((e.rz >> (9 * b)) & 0x1FFu) ^ fz[b];
        int sig = 0;
        for (int k = 0; k < 4; ++k) {
            int par = (std::popcount(rx & stab_z_[k]) + std::popcount(rz & stab_x_[k])) & 1;
            sig |= par << k;
        }
        rx ^= corr_x_[sig];
        rz ^= corr_z_[sig];
        bool anti_zl = ((std::popcount(rx & lz_z_) + std::popcount(rz & lz_x_)) & 1) != 0;
        bool anti_xl = ((std::popcount(rx & lx_z_) + std::popcount(rz & lx_x_)) & 1) != 0;
        if (anti_zl || anti_xl) return true;
    }
    return false;
}

bool PairSweep::single_is_malignant(int loc) const {
    for (const auto& e : effects_[loc])
        if (evaluate(e)) return true;
    return false;
}

long long PairSweep::count_malignant_singles() const {
    long long n = 0;
    for (size_t i = 0; i < effects_.size(); ++i)
        if (single_is_malignant(static_cast<int>(i))) ++n;
    return n;
}

bool PairSweep::is_malignant(int i, int j) const {
    if (i == j) throw std::invalid_argument("pair needs two distinct locations");
    for (const auto& ei : effects_[i]) {
        for (const auto& ej : effects_[j]) {
            Effect e;
            e.flips = {ei.flips[0] ^ ej.flips[0], ei.flips[1] ^ ej.flips[1]};
            e.rx = ei.rx ^ ej.rx;
            e.rz = ei.rz ^ ej.rz;
            if (evaluate(e)) return true;
        }
    }
    return false;
}

AlphaMatrix PairSweep::malignant_matrix(int jobs, bool progress) const {
    const int n = static_cast<int>(x_->locations.size());
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
    AlphaMatrix alpha;
    long long done_rows = 0;
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        AlphaMatrix local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 4)
#endif
        for (int i = 0; i < n; ++i) {
            int ti = static_cast<int>(x_->locations[i].type);
            for (int j = i + 1; j < n; ++j) {
                if (is_malignant(i, j)) {
                    int tj = static_cast<int>(x_->locations[j].type);
                    local.entry(std::max(ti, tj), std::min(ti, tj))++;
                }
            }
            if (progress) {
#ifdef _OPENMP
#pragma omp critical(ftlat_progress)
#endif
                {
                    ++done_rows;
                    if (done_rows % 64 == 0 || done_rows == n) {
                        std::fprintf(stderr, "\rsweep: %lld/%d location rows", done_rows, n);
                        std::fflush(stderr);
                    }
                }
            }
        }
#ifdef _OPENMP
#pragma omp critical(ftlat_merge)
#endif
        {
            for (int i = 1; i <= 7; ++i)
                for (int j = 1; j <= i; ++j) alpha.entry(i, j) += local.entry(i, j);
        }
    }
    if (progress) std::fprintf(stderr, "\n");
    return alpha;
}

bool is_malignant(const ExRec& x, int i, int j) {
    PairSweep sweep(x);
    return sweep.is_malignant(i, j);
}

AlphaMatrix malignant_matrix(const ExRec& x, int jobs, bool progress) {
    PairSweep sweep(x);
    return sweep.malignant_matrix(jobs, progress);
}

}  // namespace ftlat
