#include "ftlat/pauli.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ftlat {

namespace {

void check_same_size(const PauliString& p, const PauliString& q) {
    if (p.n != q.n) {
        throw std::invalid_argument("pauli size mismatch: " + std::to_string(p.n) +
                                    " vs " + std::to_string(q.n));
    }
}

}  // namespace

PauliString PauliString::single(int n, int qubit, char axis) {
    if (qubit < 1 || qubit > n) throw std::invalid_argument("qubit index out of range");
    uint32_t bit = 1u << (qubit - 1);
    switch (axis) {
        case 'X': return PauliString{n, bit, 0};
        case 'Z': return PauliString{n, 0, bit};
        case 'Y': return PauliString{n, bit, bit};
        default: throw std::invalid_argument("axis must be X, Y or Z");
    }
}

int PauliString::weight() const {
    return std::popcount(x_mask | z_mask);
}

PauliString multiply(const PauliString& p, const PauliString& q) {
    check_same_size(p, q);
    return PauliString{p.n, p.x_mask ^ q.x_mask, p.z_mask ^ q.z_mask};
}

bool commutes(const PauliString& p, const PauliString& q) {
    check_same_size(p, q);
    int parity = std::popcount(p.x_mask & q.z_mask) + std::popcount(p.z_mask & q.x_mask);
    return (parity & 1) == 0;
}

PauliString parse_pauli(const std::string& text, int n) {
    PauliString out = PauliString::identity(n);
    if (text == "I" || text.empty()) return out;
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, '.')) {
        if (term.size() < 2) throw std::invalid_argument("bad pauli term: '" + term + "'");
        char axis = term[0];
        int qubit = 0;
        try {
            qubit = std::stoi(term.substr(1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad pauli term: '" + term + "'");
        }
        out = multiply(out, PauliString::single(n, qubit, axis));
    }
    return out;
}

std::string to_string(const PauliString& p) {
    std::string out;
    for (int q = 1; q <= p.n; ++q) {
        uint32_t bit = 1u << (q - 1);
        bool x = p.x_mask & bit, z = p.z_mask & bit;
        if (!x && !z) continue;
        if (!out.empty()) out += '.';
        out += x ? (z ? 'Y' : 'X') : 'Z';
        out += std::to_string(q);
    }
    return out.empty() ? "I" : out;
}

const char* to_string(LogicalClass c) {
    switch (c) {
        case LogicalClass::I: return "I";
        case LogicalClass::X: return "X";
        case LogicalClass::Z: return "Z";
        case LogicalClass::Y: return "Y";
    }
    return "?";
}

Syndrome Syndrome::from_signs(int s1, int s2, int s3, int s4) {
    Syndrome s;
    const int signs[4] = {s1, s2, s3, s4};
    for (int k = 0; k < 4; ++k) {
        if (signs[k] == -1) s.bits |= uint8_t(1u << k);
        else if (signs[k] != 1) throw std::invalid_argument("syndrome signs must be +1 or -1");
    }
    return s;
}

const CodeDefinition& CodeDefinition::bacon_shor_9() {
    static const CodeDefinition code = [] {
        CodeDefinition c;
        auto p = [](const std::string& s) { return parse_pauli(s, 9); };
        c.stabilizer_generators = {
            p("X1.X2.X3.X4.X5.X6"),
            p("X4.X5.X6.X7.X8.X9"),
            p("Z1.Z2.Z4.Z5.Z7.Z8"),
            p("Z2.Z3.Z5.Z6.Z8.Z9"),
        };
        c.logical_x = p("X1.X2.X3");
        c.logical_z = p("Z1.Z4.Z7");
        c.gauge_generators = {
            p("X1.X4"), p("X4.X7"), p("X2.X5"), p("X5.X8"), p("X3.X6"), p("X6.X9"),
            p("Z1.Z2"), p("Z2.Z3"), p("Z4.Z5"), p("Z5.Z6"), p("Z7.Z8"), p("Z8.Z9"),
        };
        return c;
    }();
    return code;
}

Syndrome syndrome_of(const PauliString& error, const CodeDefinition& code) {
    if (error.n != code.n) throw std::invalid_argument("error must act on 9 qubits");
    Syndrome s;
    for (int k = 0; k < 4; ++k) {
        if (!commutes(error, code.stabilizer_generators[k])) s.bits |= uint8_t(1u << k);
    }
    return s;
}

PauliString decode(const Syndrome& s, const CodeDefinition& code) {
    PauliString corr = PauliString::identity(code.n);
    // (s3, s4) identifies the column holding an X-type error: -+ col 1,
    // -- col 2, +- col 3. Correction is X on that column's top qubit.
    int s3 = s.sign(3), s4 = s.sign(4);
    if (s3 == -1 && s4 == +1) corr = multiply(corr, PauliString::single(9, 1, 'X'));
    if (s3 == -1 && s4 == -1) corr = multiply(corr, PauliString::single(9, 2, 'X'));
    if (s3 == +1 && s4 == -1) corr = multiply(corr, PauliString::single(9, 3, 'X'));
    // (s1, s2) identifies the row holding a Z-type error; correction is Z on
    // that row's left qubit.
    int s1 = s.sign(1), s2 = s.sign(2);
    if (s1 == -1 && s2 == +1) corr = multiply(corr, PauliString::single(9, 1, 'Z'));
    if (s1 == -1 && s2 == -1) corr = multiply(corr, PauliString::single(9, 4, 'Z'));
    if (s1 == +1 && s2 == -1) corr = multiply(corr, PauliString::single(9, 7, 'Z'));
    return corr;
}

namespace {

// Reduced GF(2) basis for the span of the 12 gauge generators (the four
// stabilizers are products of gauge pairs, so the span already contains
// them). Symplectic vectors are packed as x_mask | z_mask << 9.
struct GaugeSpan {
    std::vector<uint32_t> basis;  // reduced, each with a unique pivot

    explicit GaugeSpan(const CodeDefinition& code) {
        auto add = [&](uint32_t v) {
            for (uint32_t b : basis) v = std::min(v, v ^ b);
            if (v) {
                for (uint32_t& b : basis) b = std::min(b, b ^ v);
                basis.push_back(v);
            }
        };
        for (const auto& g : code.gauge_generators) {
            add(g.x_mask | (g.z_mask << 9));
        }
        for (const auto& s : code.stabilizer_generators) {
            add(s.x_mask | (s.z_mask << 9));
        }
    }

    bool contains(uint32_t v) const {
        for (uint32_t b : basis) v = std::min(v, v ^ b);
        return v == 0;
    }
};

}  // namespace

bool in_gauge_stabilizer_span(const PauliString& p, const CodeDefinition& code) {
    static const GaugeSpan span(CodeDefinition::bacon_shor_9());
    if (p.n != code.n) throw std::invalid_argument("pauli must act on 9 qubits");
    return span.contains(p.x_mask | (p.z_mask << 9));
}

LogicalClass logical_class(const PauliString& residual, const CodeDefinition& code) {
    if (!syndrome_of(residual, code).trivial()) {
        throw std::invalid_argument("logical_class requires a trivial syndrome; decode first");
    }
    bool has_x = !commutes(residual, code.logical_z);
    bool has_z = !commutes(residual, code.logical_x);
    if (!has_x && !has_z) {
        // Trivial-syndrome residuals commuting with both logicals must lie in
        // the gauge-stabilizer span.
        if (!in_gauge_stabilizer_span(residual, code)) {
            throw std::logic_error("trivial-syndrome residual outside gauge span");
        }
        return LogicalClass::I;
    }
    if (has_x && has_z) return LogicalClass::Y;
    return has_x ? LogicalClass::X : LogicalClass::Z;
}

std::vector<PauliString> encoded_zero_stabilizers(const CodeDefinition& code) {
    std::vector<PauliString> gens;
    for (const auto& s : code.stabilizer_generators) gens.push_back(s);
    gens.push_back(code.logical_z);
    auto p = [](const std::string& s) { return parse_pauli(s, 9); };
    gens.push_back(p("X1.X4"));
    gens.push_back(p("X4.X7"));
    gens.push_back(p("X2.X5"));
    gens.push_back(p("X5.X8"));
    return gens;
}

}  // namespace ftlat
