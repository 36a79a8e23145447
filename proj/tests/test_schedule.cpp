#include "doctest.h"

#include "ftlat/builtins.hpp"
#include "ftlat/schedule.hpp"

#include <map>
#include <set>
#include <stdexcept>

using namespace ftlat;

namespace {

bool has_rule(const ValidationReport& r, const std::string& rule) {
    for (const auto& v : r.violations)
        if (v.rule == rule) return true;
    return false;
}

}  // namespace

TEST_CASE("builtin latencies") {
    CHECK(latency(builtin("ec")) == 7);
    CHECK(latency(builtin("prep0")) == 9);
    CHECK(latency(builtin("prep_plus")) == 9);
    CHECK(latency(builtin("cnot_encoded")) == 9);
    CHECK(latency(builtin("swap_encoded")) == 7);
    CHECK(latency(builtin("hadamard_encoded")) == 5);
    CHECK(latency(builtin("meas_transversal")) == 1);
    CHECK_THROWS_AS(builtin("nope"), std::invalid_argument);
}

TEST_CASE("all builtins validate cleanly") {
    for (const auto& name : builtin_names()) {
        auto report = validate(builtin(name));
        INFO(name);
        for (const auto& v : report.violations) {
            INFO("step " << v.step << " [" << v.rule << "] " << v.description);
            CHECK(v.description.empty());
        }
        CHECK(report.ok);
    }
    CHECK(validate(ec_pair()).ok);
}

TEST_CASE("one-rec latencies") {
    CHECK(latency(one_rec_cnot()) == 16);
    CHECK(latency(one_rec_swap()) == 14);
    CHECK(latency(one_rec_prep0()) == 16);
    CHECK(latency(one_rec_prep_plus()) == 16);
    CHECK(latency(one_rec_measurement()) == 1);
    CHECK(validate(one_rec_cnot()).ok);
    CHECK(validate(one_rec_swap()).ok);
    CHECK(validate(one_rec_prep0()).ok);
    CHECK(validate(one_rec_prep_plus()).ok);
}

TEST_CASE("parse of print is the identity on every builtin") {
    for (const auto& name : builtin_names()) {
        Schedule s = builtin(name);
        std::string text = print_schedule(s);
        Schedule back = parse_schedule(text);
        CHECK(print_schedule(back) == text);
        CHECK(latency(back) == latency(s));
        CHECK(back.data_home == s.data_home);
        CHECK(back.syndrome_map == s.syndrome_map);
        CHECK(validate(back).ok);
    }
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_schedule("SCHEDULE x 7 7\nSTEP 1\nCNOT 1 1 3 3\n"), ParseError);
    CHECK_THROWS_AS(parse_schedule("SCHEDULE x 7 7\nSTEP 1\nFROB 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_schedule("SCHEDULE x 7 7\nSTEP 1\nMX 8 1\n"), ParseError);
    CHECK_THROWS_AS(parse_schedule("STEP 1\n"), ParseError);
    CHECK_THROWS_AS(parse_schedule("SCHEDULE x 7 7\nSTEP 2\n"), ParseError);
    try {
        parse_schedule("SCHEDULE x 7 7\nSTEP 1\nCNOT 1 1 3 3\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("non-adjacent") != std::string::npos);
    }
}

TEST_CASE("empty schedule is vacuously valid") {
    Schedule s = parse_schedule("SCHEDULE empty 7 7\n");
    CHECK(latency(s) == 0);
    CHECK(validate(s).ok);
    CHECK(parse_schedule(print_schedule(s)).name == "empty");
}

TEST_CASE("validate flags adjacency breaks") {
    Schedule s = builtin("ec");
    bool redirected = false;
    for (auto& op : s.steps[3].ops) {
        if (op.kind == OpKind::Cnot && op.a == Site{2, 2} && !redirected) {
            op.a = {2, 1};  // now diagonal to the target at (1,2)
            redirected = true;
        }
    }
    REQUIRE(redirected);
    auto report = validate(s);
    CHECK_FALSE(report.ok);
    CHECK(has_rule(report, "adjacency"));
}

TEST_CASE("validate flags prep over a live qubit and dead measurements") {
    Schedule s = parse_schedule(
        "SCHEDULE bad 7 7\n"
        "DATA d1 2 2\n"
        "STEP 1\n"
        "PX 2 2 a1\n"
        "MZ 5 5\n");
    auto report = validate(s);
    CHECK_FALSE(report.ok);
    CHECK(has_rule(report, "prep-live"));
    CHECK(has_rule(report, "meas-dead"));
    CHECK(has_rule(report, "ancilla-unmeasured"));
}

TEST_CASE("validate tracks data back to home") {
    Schedule s = parse_schedule(
        "SCHEDULE stray 7 7\n"
        "DATA d1 2 2\n"
        "STEP 1\n"
        "SWAP 2 2 2 3\n");
    auto report = validate(s);
    CHECK_FALSE(report.ok);
    CHECK(has_rule(report, "data-home"));
}

TEST_CASE("ec has the structural phases in order") {
    Schedule s = builtin("ec");
    int first_prep = 0, first_entangle = 0, first_data_touch = 0, first_meas = 0;
    std::set<Site> data_sites;
    for (const auto& [label, site] : s.data_home) data_sites.insert(site);
    for (int t = 1; t <= latency(s); ++t) {
        for (const auto& op : s.steps[t - 1].ops) {
            if (is_prep(op.kind) && !first_prep) first_prep = t;
            if (op.kind == OpKind::Cnot && !first_entangle) first_entangle = t;
            if (op.kind == OpKind::Cnot && (data_sites.count(op.a) || data_sites.count(op.b)) &&
                !first_data_touch) {
                first_data_touch = t;
            }
            if (is_meas(op.kind) && !first_meas) first_meas = t;
        }
    }
    CHECK(first_prep == 1);
    CHECK(first_prep < first_entangle);
    CHECK(first_entangle < first_data_touch);
    CHECK(first_data_touch < first_meas);
    CHECK(latency(s) >= 4);
}

TEST_CASE("hadamard rotation has order four and fixes the center") {
    Schedule s = builtin("hadamard_encoded");
    auto once = occupancy_after(s, latency(s));
    std::map<std::string, Site> pos1;
    for (const auto& [site, label] : once) pos1[label] = site;
    CHECK(pos1.at("d5") == Site{4, 4});

    std::map<std::string, std::string> perm;  // label -> label whose home it now holds
    std::map<Site, std::string> home_of;
    for (const auto& [label, site] : s.data_home) home_of[site] = label;
    for (const auto& [label, site] : pos1) perm[label] = home_of.at(site);

    CHECK(perm.at("d1") != "d1");
    for (const auto& [label, home] : s.data_home) {
        std::string l = label;
        for (int k = 0; k < 4; ++k) l = perm.at(l);
        CHECK(l == label);
    }
}

TEST_CASE("swap_encoded exchanges the two blocks") {
    Schedule s = builtin("swap_encoded");
    auto occ = occupancy_after(s, latency(s));
    std::map<std::string, Site> pos;
    for (const auto& [site, label] : occ) pos[label] = site;
    for (int k = 1; k <= 9; ++k) {
        CHECK(pos.at("d" + std::to_string(k)) == s.data_home.at("d" + std::to_string(k + 9)));
        CHECK(pos.at("d" + std::to_string(k + 9)) == s.data_home.at("d" + std::to_string(k)));
    }
}

TEST_CASE("cnot_encoded returns both blocks home") {
    Schedule s = builtin("cnot_encoded");
    auto occ = occupancy_after(s, latency(s));
    for (const auto& [label, home] : s.data_home) {
        CHECK(occ.at(home) == label);
    }
}

TEST_CASE("compose rejects incompatible parts") {
    CHECK_THROWS_AS(compose({}, "x"), std::invalid_argument);
    CHECK_THROWS_AS(compose({builtin("ec"), builtin("cnot_encoded")}, "x"), std::invalid_argument);
    CHECK_THROWS_AS(compose({builtin("ec"), builtin("ec")}, "x"), std::invalid_argument);
    Schedule ok = compose({builtin("ec"), relabeled(builtin("ec"), "n.")}, "ec_twice");
    CHECK(latency(ok) == 14);
    CHECK(validate(ok).ok);
}
