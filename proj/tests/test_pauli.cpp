#include "doctest.h"

#include "ftlat/pauli.hpp"

#include <random>
#include <stdexcept>
#include <set>
#include <vector>

using namespace ftlat;

namespace {

const CodeDefinition& code() { return CodeDefinition::bacon_shor_9(); }

PauliString p9(const std::string& s) { return parse_pauli(s, 9); }

// Test-side GF(2) span oracle, independent of the library's reduction.
struct Gf2Span {
    std::vector<uint32_t> rows;
    void add(const PauliString& p) { add_vec(p.x_mask | (p.z_mask << 9)); }
    void add_vec(uint32_t v) {
        for (uint32_t r : rows) v = std::min(v, v ^ r);
        if (v) rows.push_back(v);
    }
    bool contains(const PauliString& p) const {
        uint32_t v = p.x_mask | (p.z_mask << 9);
        for (uint32_t r : rows) v = std::min(v, v ^ r);
        return v == 0;
    }
    size_t rank() const { return rows.size(); }
};

// Enumerate all Pauli strings of weight <= w on 9 qubits.
std::vector<PauliString> all_up_to_weight(int w) {
    std::vector<PauliString> out = {PauliString::identity(9)};
    const char axes[3] = {'X', 'Y', 'Z'};
    if (w >= 1) {
        for (int q = 1; q <= 9; ++q)
            for (char a : axes) out.push_back(PauliString::single(9, q, a));
    }
    if (w >= 2) {
        for (int q1 = 1; q1 <= 9; ++q1)
            for (int q2 = q1 + 1; q2 <= 9; ++q2)
                for (char a1 : axes)
                    for (char a2 : axes)
                        out.push_back(multiply(PauliString::single(9, q1, a1),
                                               PauliString::single(9, q2, a2)));
    }
    return out;
}

}  // namespace

TEST_CASE("multiply basics") {
    auto x1 = p9("X1");
    CHECK(multiply(x1, x1).is_identity());
    CHECK(multiply(p9("X1"), p9("Z1")) == p9("Y1"));
    CHECK(multiply(p9("X1.X2.X3"), p9("X1")) == p9("X2.X3"));
    CHECK(multiply(PauliString::identity(9), p9("Z5")) == p9("Z5"));
    CHECK_THROWS_AS(multiply(PauliString::identity(4), p9("X1")), std::invalid_argument);
}

TEST_CASE("multiply is associative and self-inverse over random triples") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<uint32_t> mask(0, (1u << 9) - 1);
    for (int it = 0; it < 200; ++it) {
        PauliString a{9, mask(rng), mask(rng)};
        PauliString b{9, mask(rng), mask(rng)};
        PauliString c{9, mask(rng), mask(rng)};
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(a, a).is_identity());
        CHECK(multiply(a, PauliString::identity(9)) == a);
    }
}

TEST_CASE("commutes") {
    CHECK_FALSE(commutes(p9("X1"), p9("Z1")));
    CHECK(commutes(p9("X1"), p9("Z2")));
    // X1 against S3 = Z1 Z2 Z4 Z5 Z7 Z8
    CHECK_FALSE(commutes(p9("X1"), code().stabilizer_generators[2]));
}

TEST_CASE("pauli literal format round-trips") {
    CHECK(to_string(p9("X1.Z5.Y9")) == "X1.Z5.Y9");
    CHECK(to_string(PauliString::identity(9)) == "I");
    CHECK(parse_pauli("I", 9).is_identity());
    CHECK_THROWS_AS(parse_pauli("Q1", 9), std::invalid_argument);
    CHECK_THROWS_AS(parse_pauli("X10", 9), std::invalid_argument);

    std::mt19937 rng(99);
    std::uniform_int_distribution<uint32_t> mask(0, (1u << 9) - 1);
    for (int it = 0; it < 500; ++it) {
        PauliString p{9, mask(rng), mask(rng)};
        CHECK(parse_pauli(to_string(p), 9) == p);
    }
}

TEST_CASE("code group structure") {
    const auto& c = code();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(commutes(c.stabilizer_generators[i], c.stabilizer_generators[j]));
    for (const auto& g : c.gauge_generators) {
        for (const auto& s : c.stabilizer_generators) CHECK(commutes(g, s));
        CHECK(commutes(g, c.logical_x));
        CHECK(commutes(g, c.logical_z));
    }
    for (const auto& s : c.stabilizer_generators) {
        CHECK(commutes(c.logical_x, s));
        CHECK(commutes(c.logical_z, s));
    }
    CHECK_FALSE(commutes(c.logical_x, c.logical_z));
}

TEST_CASE("syndrome_of examples") {
    CHECK(syndrome_of(PauliString::identity(9), code()).trivial());
    CHECK(syndrome_of(p9("X1"), code()) == Syndrome::from_signs(+1, +1, -1, +1));
    CHECK(syndrome_of(p9("Z2"), code()) == Syndrome::from_signs(-1, +1, +1, +1));
}

TEST_CASE("decode examples") {
    CHECK(decode(Syndrome{}, code()).is_identity());
    CHECK(decode(Syndrome::from_signs(+1, +1, -1, +1), code()) == p9("X1"));
    CHECK(decode(Syndrome::from_signs(-1, -1, -1, -1), code()) == p9("X2.Z4"));
}

TEST_CASE("correction soundness for every weight-1 error") {
    const char axes[3] = {'X', 'Y', 'Z'};
    for (int q = 1; q <= 9; ++q) {
        for (char a : axes) {
            PauliString e = PauliString::single(9, q, a);
            PauliString resid = multiply(e, decode(syndrome_of(e, code()), code()));
            CHECK(syndrome_of(resid, code()).trivial());
            CHECK(logical_class(resid, code()) == LogicalClass::I);
        }
    }
}

TEST_CASE("gauge absorption: corrections ignore gauge dressing") {
    const char axes[3] = {'X', 'Y', 'Z'};
    for (const auto& g : code().gauge_generators) {
        for (int q = 1; q <= 9; ++q) {
            for (char a : axes) {
                PauliString e = multiply(PauliString::single(9, q, a), g);
                PauliString resid = multiply(e, decode(syndrome_of(e, code()), code()));
                CHECK(syndrome_of(resid, code()).trivial());
                CHECK(logical_class(resid, code()) == LogicalClass::I);
            }
        }
    }
}

TEST_CASE("logical_class examples") {
    CHECK(logical_class(p9("X1.X4"), code()) == LogicalClass::I);
    CHECK(logical_class(p9("X1.X2.X3"), code()) == LogicalClass::X);
    // logical Z dressed with two gauge factors
    PauliString dressed = multiply(multiply(p9("Z1.Z4.Z7"), p9("Z1.Z2")), p9("Z2.Z3"));
    CHECK(logical_class(dressed, code()) == LogicalClass::Z);
    CHECK(logical_class(multiply(p9("X1.X2.X3"), p9("Z1.Z4.Z7")), code()) == LogicalClass::Y);
    CHECK_THROWS_AS(logical_class(p9("X1"), code()), std::invalid_argument);
}

TEST_CASE("distance: no nontrivial class below weight 3") {
    for (const auto& e : all_up_to_weight(2)) {
        if (!syndrome_of(e, code()).trivial()) continue;
        CHECK(logical_class(e, code()) == LogicalClass::I);
    }
    CHECK(syndrome_of(p9("X1.X2.X3"), code()).trivial());
    CHECK(logical_class(p9("X1.X2.X3"), code()) == LogicalClass::X);
}

TEST_CASE("encoded zero stabilizer group") {
    auto gens = encoded_zero_stabilizers(code());
    REQUIRE(gens.size() == 9);
    Gf2Span span;
    for (const auto& g : gens) {
        for (const auto& h : gens) CHECK(commutes(g, h));
        span.add(g);
    }
    CHECK(span.rank() == 9);

    CHECK(span.contains(p9("Z1.Z4.Z7")));
    CHECK(span.contains(p9("X1.X4")));

    // Same span as one rotated-basis cat per column.
    Gf2Span cats;
    for (int col = 1; col <= 3; ++col) {
        int a = col, b = col + 3, c = col + 6;
        auto q = [&](int i, char ax) { return PauliString::single(9, i, ax); };
        cats.add(multiply(q(a, 'X'), q(b, 'X')));
        cats.add(multiply(q(b, 'X'), q(c, 'X')));
        cats.add(multiply(multiply(q(a, 'Z'), q(b, 'Z')), q(c, 'Z')));
    }
    CHECK(cats.rank() == 9);
    for (const auto& g : gens) CHECK(cats.contains(g));
}

TEST_CASE("gauge span membership") {
    CHECK(in_gauge_stabilizer_span(p9("X1.X4"), code()));
    CHECK(in_gauge_stabilizer_span(code().stabilizer_generators[0], code()));
    CHECK_FALSE(in_gauge_stabilizer_span(p9("X1.X2.X3"), code()));
    CHECK_FALSE(in_gauge_stabilizer_span(p9("X1"), code()));
}
