#include "ftlat/schedule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ftlat {

namespace {

std::string cell_prefix(OpKind k) {
    switch (k) {
        case OpKind::PrepX: return "PX";
        case OpKind::PrepZ: return "PZ";
        case OpKind::MeasX: return "MX";
        case OpKind::MeasZ: return "MZ";
        case OpKind::Hadamard: return "H";
        default: return "";
    }
}

}  // namespace

// Layout mirrors the step-by-step grids: one line of cells per lattice row
// with horizontal gate marks in the gaps, and an interleaved line carrying
// vertical gate marks. CNOT marks point from control to target (-->, <--,
// v, ^); SWAPs are <=> and ^v. Cells show the qubit resting on the site
// after the step, or the prep/measurement acting there during it.
std::string render(const Schedule& s, int step) {
    if (step < 0 || step > latency(s)) throw std::out_of_range("step out of range");

    auto occ_before = occupancy_after(s, step == 0 ? 0 : step - 1);
    auto occ = occupancy_after(s, step);

    std::vector<std::vector<std::string>> cells(s.rows + 1, std::vector<std::string>(s.cols + 1));
    for (int r = 1; r <= s.rows; ++r)
        for (int c = 1; c <= s.cols; ++c) {
            auto it = occ.find({r, c});
            cells[r][c] = it == occ.end() ? "O" : it->second;
        }

    // horiz[r][c]: mark between (r,c) and (r,c+1); vert[r][c]: between rows r, r+1.
    std::vector<std::vector<std::string>> horiz(s.rows + 1, std::vector<std::string>(s.cols + 1));
    std::vector<std::vector<std::string>> vert(s.rows + 1, std::vector<std::string>(s.cols + 1));

    if (step > 0) {
        for (const auto& op : s.steps[step - 1].ops) {
            if (is_prep(op.kind) || is_meas(op.kind) || op.kind == OpKind::Hadamard) {
                std::string label = is_prep(op.kind) ? op.label : occ_before.at(op.a);
                cells[op.a.row][op.a.col] = cell_prefix(op.kind) + "(" + label + ")";
                continue;
            }
            Site lo = op.a, hi = op.b;
            bool row_op = lo.row == hi.row;
            bool reversed = hi < lo;
            if (reversed) std::swap(lo, hi);
            std::string mark;
            if (op.kind == OpKind::Swap) {
                mark = row_op ? "<=>" : "^v";
            } else if (row_op) {
                mark = reversed ? "<--" : "-->";
            } else {
                mark = reversed ? "^" : "v";
            }
            if (row_op) horiz[lo.row][lo.col] = mark;
            else vert[lo.row][lo.col] = mark;
        }
    }

    size_t width = 4;
    for (int r = 1; r <= s.rows; ++r)
        for (int c = 1; c <= s.cols; ++c) width = std::max(width, cells[r][c].size() + 1);
    const size_t gap = 5;

    std::ostringstream out;
    out << "Time step: " << step << "\n\n";
    auto emit = [&](std::string line) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    };
    for (int r = 1; r <= s.rows; ++r) {
        std::string line;
        for (int c = 1; c <= s.cols; ++c) {
            std::string cell = cells[r][c];
            cell.resize(width, ' ');
            line += cell;
            if (c < s.cols) {
                std::string g = horiz[r][c];
                g.resize(gap, ' ');
                line += g;
            }
        }
        emit(line);
        if (r < s.rows) {
            std::string between;
            for (int c = 1; c <= s.cols; ++c) {
                std::string g = vert[r][c];
                g.resize(width + (c < s.cols ? gap : 0), ' ');
                between += g;
            }
            emit(between);
        }
    }
    return out.str();
}

}  // namespace ftlat
