#include "ftlat/threshold.hpp"

#include "ftlat/builtins.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ftlat {

namespace {

long long checked_narrow(__int128 v, const char* what) {
    if (v > __int128(9223372036854775807LL) || v < -__int128(9223372036854775807LL)) {
        throw std::overflow_error(what);
    }
    return static_cast<long long>(v);
}

}  // namespace

Rational Rational::of(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

Rational Rational::parse_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty ratio");
    auto dot = text.find('.');
    std::string digits = text;
    long long den = 1;
    if (dot != std::string::npos) {
        digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t places = text.size() - dot - 1;
        if (places > 12) throw std::invalid_argument("ratio has too many decimal places");
        for (size_t i = 0; i < places; ++i) den *= 10;
    }
    if (digits == "-" || digits.empty()) throw std::invalid_argument("bad ratio: " + text);
    long long num = std::stoll(digits);
    return Rational::of(num, den);
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = __int128(num) * o.den + __int128(o.num) * den;
    __int128 d = __int128(den) * o.den;
    return Rational::of(checked_narrow(n, "rational overflow"), checked_narrow(d, "rational overflow"));
}

Rational Rational::operator*(const Rational& o) const {
    Rational a = Rational::of(num, o.den);
    Rational b = Rational::of(o.num, den);
    __int128 n = __int128(a.num) * b.num;
    __int128 d = __int128(a.den) * b.den;
    return Rational::of(checked_narrow(n, "rational overflow"), checked_narrow(d, "rational overflow"));
}

long long b_coefficient(long long location_count) {
    if (location_count < 3) throw std::invalid_argument("binomial needs at least 3 locations");
    __int128 v = __int128(location_count) * (location_count - 1) * (location_count - 2) / 6;
    return checked_narrow(v, "binomial overflow");
}

Rational a_total(const AlphaMatrix& alpha, const std::array<Rational, 7>& weights) {
    Rational sum = Rational::of(0);
    for (int i = 1; i <= 7; ++i) {
        for (int j = 1; j <= i; ++j) {
            if (weights[i - 1].num < 0 || weights[j - 1].num < 0) {
                throw std::invalid_argument("weights must be nonnegative");
            }
            Rational term = Rational::of(alpha.entry(i, j)) * weights[i - 1] * weights[j - 1];
            sum = sum + term;
        }
    }
    return sum;
}

double a_prime(double a, double b) {
    if (a <= 0) throw std::invalid_argument("a_prime needs a positive pair total");
    return (a / 2.0) * (1.0 + std::sqrt(1.0 + 4.0 * b / (a * a)));
}

double threshold_from(double a_tot, double b) {
    if (a_tot < 0 || b < 0) throw std::invalid_argument("negative coefficient");
    if (b == 0) {
        if (a_tot == 0) throw std::invalid_argument("no quadratic or cubic term");
        return 1.0 / a_tot;
    }
    // Positive root of b e^2 + a e - 1 = 0; identical to 1/a_prime(a, b)
    // when a > 0 and well defined in the a -> 0 limit.
    return (-a_tot + std::sqrt(a_tot * a_tot + 4.0 * b)) / (2.0 * b);
}

std::array<Rational, 7> unit_weights() {
    std::array<Rational, 7> w;
    w.fill(Rational::of(1));
    return w;
}

std::array<Rational, 7> memory_weights(const Rational& memory_ratio) {
    auto w = unit_weights();
    w[static_cast<int>(LocType::Memory) - 1] = memory_ratio;
    return w;
}

double threshold_equal(const AlphaMatrix& alpha, long long location_count) {
    return threshold_from(a_total(alpha, unit_weights()).value(),
                          double(b_coefficient(location_count)));
}

double threshold_weighted(const AlphaMatrix& alpha, const std::array<Rational, 7>& weights,
                          long long location_count) {
    return threshold_from(a_total(alpha, weights).value(), double(b_coefficient(location_count)));
}

double logical_rate(double eps_phys, double eps0, int k) {
    if (eps0 <= 0) throw std::invalid_argument("eps0 must be positive");
    if (k < 0) throw std::invalid_argument("level must be nonnegative");
    return eps0 * std::pow(eps_phys / eps0, std::pow(2.0, k));
}

LatencyReport latency_report(int levels) {
    if (levels < 0) throw std::invalid_argument("levels must be nonnegative");
    LatencyReport r;
    r.levels = levels;
    r.one_rec = {
        {"cnot", latency(one_rec_cnot()), 35},
        {"swap", latency(one_rec_swap()), 35},
        {"prep0", latency(one_rec_prep0()), 41},
        {"prep_plus", latency(one_rec_prep_plus()), 41},
        {"measurement", latency(one_rec_measurement()), 1},
    };
    double cnot_ratio = double(r.one_rec[0].nine_qubit) / double(r.one_rec[0].seven_qubit);
    int ec_depth = latency(builtin("ec"));
    for (int k = 0; k <= levels; ++k) {
        r.cnot_ratio.push_back(std::pow(cnot_ratio, k));
        r.ec_blowup.push_back(std::pow(double(ec_depth), k));
    }
    return r;
}

ThresholdReport make_threshold_report(const AlphaMatrix& alpha, long long location_count,
                                      const Rational& memory_ratio, int levels,
                                      double eps_phys) {
    ThresholdReport rep;
    Rational unit_total = a_total(alpha, unit_weights());
    if (unit_total.den != 1) throw std::logic_error("unit-weight total must be integral");
    rep.a_unit = unit_total.num;
    rep.b = b_coefficient(location_count);
    rep.a_prime_value = a_prime(double(rep.a_unit), double(rep.b));
    rep.threshold_equal_value = threshold_equal(alpha, location_count);
    rep.weights = memory_weights(memory_ratio);
    Rational wa = a_total(alpha, rep.weights);
    rep.weighted_a_total = wa.value();
    rep.threshold_weighted_value = threshold_from(rep.weighted_a_total, double(rep.b));
    rep.latency = latency_report(levels);
    rep.eps_phys = eps_phys > 0 ? eps_phys : rep.threshold_equal_value / 10.0;
    for (int k = 0; k <= levels; ++k) {
        rep.level_rates.push_back(logical_rate(rep.eps_phys, rep.threshold_equal_value, k));
    }
    return rep;
}

}  // namespace ftlat
