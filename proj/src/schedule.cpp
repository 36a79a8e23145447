#include "ftlat/schedule.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ftlat {

namespace {

const char* kind_token(OpKind k) {
    switch (k) {
        case OpKind::PrepX: return "PX";
        case OpKind::PrepZ: return "PZ";
        case OpKind::Hadamard: return "H";
        case OpKind::Cnot: return "CNOT";
        case OpKind::Swap: return "SWAP";
        case OpKind::MeasX: return "MX";
        case OpKind::MeasZ: return "MZ";
    }
    return "?";
}

bool in_grid(const Schedule& s, Site p) {
    return p.row >= 1 && p.row <= s.rows && p.col >= 1 && p.col <= s.cols;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int to_int(const std::string& tok, int line_no) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected integer, got '" + tok + "'");
    }
}

}  // namespace

Schedule parse_schedule(const std::string& text) {
    Schedule s;
    bool have_header = false;
    int current_step = 0;
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto tok = split_ws(raw);
        if (tok.empty()) continue;
        const std::string& head = tok[0];

        if (head == "SCHEDULE") {
            if (tok.size() != 4) throw ParseError(line_no, "SCHEDULE needs <name> <rows> <cols>");
            s.name = tok[1];
            s.rows = to_int(tok[2], line_no);
            s.cols = to_int(tok[3], line_no);
            if (s.rows < 1 || s.cols < 1) throw ParseError(line_no, "grid must be positive");
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, "SCHEDULE header must come first");

        if (head == "DATA") {
            if (tok.size() != 4) throw ParseError(line_no, "DATA needs <label> <row> <col>");
            Site p{to_int(tok[2], line_no), to_int(tok[3], line_no)};
            if (!in_grid(s, p)) throw ParseError(line_no, "site out of range");
            s.data_home[tok[1]] = p;
            continue;
        }
        if (head == "SYNDROME") {
            if (tok.size() < 2 || tok[1].size() != 2 || tok[1][0] != 's' ||
                tok[1][1] < '1' || tok[1][1] > '4') {
                throw ParseError(line_no, "SYNDROME needs s1..s4 then labels");
            }
            int k = tok[1][1] - '1';
            s.syndrome_map[k].assign(tok.begin() + 2, tok.end());
            continue;
        }
        if (head == "CHECK") {
            if (tok.size() < 3) throw ParseError(line_no, "CHECK needs a name and labels");
            ParityCheck c;
            c.name = tok[1];
            c.labels.assign(tok.begin() + 2, tok.end());
            s.checks.push_back(std::move(c));
            continue;
        }
        if (head == "STEP") {
            if (tok.size() != 2) throw ParseError(line_no, "STEP needs an index");
            int t = to_int(tok[1], line_no);
            if (t != current_step + 1) throw ParseError(line_no, "steps must be numbered consecutively from 1");
            current_step = t;
            s.steps.emplace_back();
            continue;
        }

        if (current_step == 0) throw ParseError(line_no, "operation before first STEP");
        LatticeOp op;
        if (head == "PX" || head == "PZ") {
            if (tok.size() != 4) throw ParseError(line_no, head + " needs <row> <col> <label>");
            op.kind = head == "PX" ? OpKind::PrepX : OpKind::PrepZ;
            op.a = {to_int(tok[1], line_no), to_int(tok[2], line_no)};
            op.label = tok[3];
        } else if (head == "H" || head == "MX" || head == "MZ") {
            if (tok.size() != 3) throw ParseError(line_no, head + " needs <row> <col>");
            op.kind = head == "H" ? OpKind::Hadamard : (head == "MX" ? OpKind::MeasX : OpKind::MeasZ);
            op.a = {to_int(tok[1], line_no), to_int(tok[2], line_no)};
        } else if (head == "CNOT" || head == "SWAP") {
            if (tok.size() != 5) throw ParseError(line_no, head + " needs <r1> <c1> <r2> <c2>");
            op.kind = head == "CNOT" ? OpKind::Cnot : OpKind::Swap;
            op.a = {to_int(tok[1], line_no), to_int(tok[2], line_no)};
            op.b = {to_int(tok[3], line_no), to_int(tok[4], line_no)};
            if (!adjacent(op.a, op.b)) throw ParseError(line_no, "non-adjacent sites");
        } else {
            throw ParseError(line_no, "unknown op kind '" + head + "'");
        }
        if (!in_grid(s, op.a) || (is_two_site(op.kind) && !in_grid(s, op.b))) {
            throw ParseError(line_no, "site out of range");
        }
        s.steps.back().ops.push_back(std::move(op));
    }
    if (!have_header) throw ParseError(line_no, "missing SCHEDULE header");
    return s;
}

std::string print_schedule(const Schedule& s) {
    std::ostringstream out;
    out << "SCHEDULE " << s.name << ' ' << s.rows << ' ' << s.cols << '\n';
    for (const auto& [label, site] : s.data_home) {
        out << "DATA " << label << ' ' << site.row << ' ' << site.col << '\n';
    }
    for (int k = 0; k < 4; ++k) {
        if (s.syndrome_map[k].empty()) continue;
        out << "SYNDROME s" << (k + 1);
        for (const auto& l : s.syndrome_map[k]) out << ' ' << l;
        out << '\n';
    }
    for (const auto& c : s.checks) {
        out << "CHECK " << c.name;
        for (const auto& l : c.labels) out << ' ' << l;
        out << '\n';
    }
    for (size_t t = 0; t < s.steps.size(); ++t) {
        out << "STEP " << (t + 1) << '\n';
        auto ops = s.steps[t].ops;
        for (auto& op : ops) {
            if (op.kind == OpKind::Swap && op.b < op.a) std::swap(op.a, op.b);
        }
        std::sort(ops.begin(), ops.end(), [](const LatticeOp& l, const LatticeOp& r) {
            return std::tie(l.a, l.b, l.kind, l.label) < std::tie(r.a, r.b, r.kind, r.label);
        });
        for (const auto& op : ops) {
            out << kind_token(op.kind) << ' ' << op.a.row << ' ' << op.a.col;
            if (is_two_site(op.kind)) out << ' ' << op.b.row << ' ' << op.b.col;
            if (is_prep(op.kind)) out << ' ' << op.label;
            out << '\n';
        }
    }
    return out.str();
}

std::vector<std::string> preexisting_labels(const Schedule& s) {
    std::set<std::string> prepped;
    for (const auto& step : s.steps)
        for (const auto& op : step.ops)
            if (is_prep(op.kind)) prepped.insert(op.label);
    std::vector<std::string> out;
    for (const auto& [label, site] : s.data_home)
        if (!prepped.count(label)) out.push_back(label);
    return out;
}

std::map<Site, std::string> occupancy_after(const Schedule& s, int step) {
    if (step < 0 || step > latency(s)) throw std::out_of_range("step out of range");
    std::map<Site, std::string> live;
    for (const auto& label : preexisting_labels(s)) live[s.data_home.at(label)] = label;
    for (int t = 0; t < step; ++t) {
        for (const auto& op : s.steps[t].ops) {
            switch (op.kind) {
                case OpKind::PrepX:
                case OpKind::PrepZ:
                    live[op.a] = op.label;
                    break;
                case OpKind::MeasX:
                case OpKind::MeasZ:
                    live.erase(op.a);
                    break;
                case OpKind::Swap: {
                    auto ia = live.find(op.a), ib = live.find(op.b);
                    std::string la = ia == live.end() ? "" : ia->second;
                    std::string lb = ib == live.end() ? "" : ib->second;
                    live.erase(op.a);
                    live.erase(op.b);
                    if (!lb.empty()) live[op.a] = lb;
                    if (!la.empty()) live[op.b] = la;
                    break;
                }
                default:
                    break;
            }
        }
    }
    return live;
}

ValidationReport validate(const Schedule& s) {
    ValidationReport report;
    auto flag = [&](int step, const std::string& rule, const std::string& what) {
        report.ok = false;
        report.violations.push_back({step, rule, what});
    };
    auto site_str = [](Site p) {
        return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
    };

    std::map<Site, std::string> live;
    for (const auto& label : preexisting_labels(s)) {
        Site home = s.data_home.at(label);
        if (!in_grid(s, home)) flag(0, "range", "data home out of range for " + label);
        live[home] = label;
    }

    std::set<std::string> prepped, measured;
    for (int t = 1; t <= latency(s); ++t) {
        const auto& step = s.steps[t - 1];
        std::set<Site> used;
        auto claim = [&](Site p) {
            if (!in_grid(s, p)) flag(t, "range", "site " + site_str(p) + " out of range");
            if (used.count(p)) flag(t, "collision", "site " + site_str(p) + " used twice");
            used.insert(p);
        };
        for (const auto& op : step.ops) {
            claim(op.a);
            if (is_two_site(op.kind)) {
                claim(op.b);
                if (!adjacent(op.a, op.b)) {
                    flag(t, "adjacency", std::string(kind_token(op.kind)) + " on non-adjacent sites " +
                                             site_str(op.a) + " " + site_str(op.b));
                }
            }
            switch (op.kind) {
                case OpKind::PrepX:
                case OpKind::PrepZ:
                    if (live.count(op.a)) {
                        flag(t, "prep-live", "prep of " + op.label + " over live qubit " +
                                                 live[op.a] + " at " + site_str(op.a));
                    }
                    if (prepped.count(op.label)) {
                        flag(t, "label-reuse", "label " + op.label + " prepared twice");
                    }
                    prepped.insert(op.label);
                    live[op.a] = op.label;
                    break;
                case OpKind::MeasX:
                case OpKind::MeasZ:
                    if (!live.count(op.a)) {
                        flag(t, "meas-dead", "measurement of empty site " + site_str(op.a));
                    } else {
                        measured.insert(live[op.a]);
                        live.erase(op.a);
                    }
                    break;
                case OpKind::Hadamard:
                    if (!live.count(op.a)) flag(t, "gate-dead", "H on empty site " + site_str(op.a));
                    break;
                case OpKind::Cnot:
                    if (!live.count(op.a) || !live.count(op.b)) {
                        flag(t, "gate-dead", "CNOT touching empty site at " + site_str(op.a) +
                                                 " " + site_str(op.b));
                    }
                    break;
                case OpKind::Swap: {
                    auto ia = live.find(op.a), ib = live.find(op.b);
                    if (ia == live.end() && ib == live.end()) {
                        flag(t, "gate-dead", "SWAP of two empty sites " + site_str(op.a) + " " +
                                                 site_str(op.b));
                    }
                    std::string la = ia == live.end() ? "" : ia->second;
                    std::string lb = ib == live.end() ? "" : ib->second;
                    live.erase(op.a);
                    live.erase(op.b);
                    if (!lb.empty()) live[op.a] = lb;
                    if (!la.empty()) live[op.b] = la;
                    break;
                }
            }
        }
    }

    std::set<Site> home_sites;
    for (const auto& [label, site] : s.data_home) home_sites.insert(site);
    for (const auto& [site, label] : live) {
        bool is_data = s.data_home.count(label) > 0;
        if (is_data) {
            if (!home_sites.count(site)) {
                flag(0, "data-home", "data qubit " + label + " ends off-home at " + site_str(site));
            }
        } else {
            flag(0, "ancilla-unmeasured", "ancilla " + label + " still live at the end");
        }
    }
    for (const auto& label : prepped) {
        if (s.data_home.count(label)) continue;
        if (!measured.count(label)) {
            // Already flagged as still-live unless it was overwritten.
            bool still_live = false;
            for (const auto& [site, l] : live) still_live |= (l == label);
            if (!still_live) flag(0, "ancilla-unmeasured", "ancilla " + label + " never measured");
        }
    }
    return report;
}

Schedule relabeled(const Schedule& s, const std::string& prefix) {
    auto map_label = [&](const std::string& l) {
        return s.data_home.count(l) ? l : prefix + l;
    };
    Schedule out = s;
    for (auto& step : out.steps)
        for (auto& op : step.ops)
            if (!op.label.empty()) op.label = map_label(op.label);
    for (auto& v : out.syndrome_map)
        for (auto& l : v) l = map_label(l);
    for (auto& c : out.checks) {
        c.name = prefix + c.name;
        for (auto& l : c.labels) l = map_label(l);
    }
    return out;
}

Schedule parallel_merge(const Schedule& a, const Schedule& b, int row_offset, int col_offset,
                        const std::string& merged_name,
                        const std::map<std::string, std::string>& relabel_b) {
    Schedule out = a;
    out.name = merged_name;
    out.rows = std::max(a.rows, b.rows + row_offset);
    out.cols = std::max(a.cols, b.cols + col_offset);
    out.steps.resize(std::max(a.steps.size(), b.steps.size()));

    auto map_label = [&](const std::string& l) {
        auto it = relabel_b.find(l);
        return it == relabel_b.end() ? l : it->second;
    };
    auto shift = [&](Site p) { return Site{p.row + row_offset, p.col + col_offset}; };

    for (const auto& [label, site] : b.data_home) {
        std::string nl = map_label(label);
        if (out.data_home.count(nl)) throw std::invalid_argument("data label collision: " + nl);
        out.data_home[nl] = shift(site);
    }
    for (size_t t = 0; t < b.steps.size(); ++t) {
        for (LatticeOp op : b.steps[t].ops) {
            op.a = shift(op.a);
            if (is_two_site(op.kind)) op.b = shift(op.b);
            if (!op.label.empty()) op.label = map_label(op.label);
            out.steps[t].ops.push_back(std::move(op));
        }
    }
    if (a.has_syndrome_map() && b.has_syndrome_map()) {
        out.syndrome_map = {};  // one block per map; keep per-instance maps outside
    } else {
        for (int k = 0; k < 4; ++k) {
            for (const auto& l : b.syndrome_map[k]) out.syndrome_map[k].push_back(map_label(l));
        }
    }
    for (const auto& c : b.checks) {
        ParityCheck nc;
        nc.name = c.name;
        for (const auto& l : c.labels) nc.labels.push_back(map_label(l));
        out.checks.push_back(std::move(nc));
    }
    return out;
}

Schedule compose(const std::vector<Schedule>& parts, const std::string& name) {
    if (parts.empty()) throw std::invalid_argument("compose needs at least one part");
    Schedule out;
    out.name = name;
    out.rows = parts[0].rows;
    out.cols = parts[0].cols;
    int n_with_syndrome = 0;
    std::set<std::string> prep_labels;
    for (const auto& part : parts) {
        if (part.rows != out.rows || part.cols != out.cols) {
            throw std::invalid_argument("compose parts must share the grid size");
        }
        for (const auto& [label, site] : part.data_home) {
            auto it = out.data_home.find(label);
            if (it != out.data_home.end() && !(it->second == site)) {
                throw std::invalid_argument("incompatible data home for " + label);
            }
            out.data_home[label] = site;
        }
        for (const auto& step : part.steps) {
            for (const auto& op : step.ops) {
                if (is_prep(op.kind) && !part.data_home.count(op.label)) {
                    if (!prep_labels.insert(op.label).second) {
                        throw std::invalid_argument("ancilla label reused across parts: " + op.label +
                                                    " (relabel before composing)");
                    }
                }
            }
            out.steps.push_back(step);
        }
        if (part.has_syndrome_map()) {
            ++n_with_syndrome;
            out.syndrome_map = part.syndrome_map;
        }
        for (const auto& c : part.checks) out.checks.push_back(c);
    }
    if (n_with_syndrome > 1) out.syndrome_map = {};
    return out;
}

}  // namespace ftlat
