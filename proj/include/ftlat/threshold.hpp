#pragma once

#include "ftlat/exrec.hpp"

#include <array>
#include <string>
#include <vector>

namespace ftlat {

// Exact rational weights so the weighted pair sums stay integer-precise;
// floating point enters only at the final root extraction.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long num, long long den = 1);
    static Rational parse_decimal(const std::string& text);  // "0.1" -> 1/10

    Rational operator+(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational&) const = default;

    double value() const { return double(num) / double(den); }
};

// Exact binomial C(location_count, 3); throws below 3.
long long b_coefficient(long long location_count);

// Sum over i >= j of alpha_ij * w_i * w_j, exact.
Rational a_total(const AlphaMatrix& alpha, const std::array<Rational, 7>& weights);

// (A/2)(1 + sqrt(1 + 4B/A^2)); throws for nonpositive A.
double a_prime(double a, double b);

// Largest eps with A e^2 + B e^3 <= e, i.e. the positive root of
// a_tot * e + B * e^2 = 1. Equals 1/A' when a_tot > 0 and handles a_tot = 0.
double threshold_from(double a_tot, double b);

double threshold_equal(const AlphaMatrix& alpha, long long location_count);
double threshold_weighted(const AlphaMatrix& alpha, const std::array<Rational, 7>& weights,
                          long long location_count);

std::array<Rational, 7> unit_weights();
// Weight 1 everywhere except the memory type.
std::array<Rational, 7> memory_weights(const Rational& memory_ratio);

// eps_L = eps0 * (eps_phys / eps0)^(2^k)
double logical_rate(double eps_phys, double eps0, int k);

struct GateLatencyRow {
    std::string gate;
    int nine_qubit;
    int seven_qubit;
};

struct LatencyReport {
    int levels = 0;
    std::vector<GateLatencyRow> one_rec;       // computed from the built-ins
    std::vector<double> cnot_ratio;            // (16/35)^k for k = 0..levels
    std::vector<double> ec_blowup;             // 7^k
};

LatencyReport latency_report(int levels);

struct ThresholdReport {
    long long a_unit = 0;        // unit-weight malignant pair total
    long long b = 0;
    double a_prime_value = 0;
    double threshold_equal_value = 0;
    std::array<Rational, 7> weights{};
    double weighted_a_total = 0;
    double threshold_weighted_value = 0;
    LatencyReport latency;
    std::vector<double> level_rates;  // eps_L per level at eps_phys
    double eps_phys = 0;
};

// Full report for one alpha source. eps_phys defaults to a tenth of the
// equal-rate threshold when not positive.
ThresholdReport make_threshold_report(const AlphaMatrix& alpha, long long location_count,
                                      const Rational& memory_ratio, int levels,
                                      double eps_phys = 0);

}  // namespace ftlat
