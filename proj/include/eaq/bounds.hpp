#ifndef EAQ_BOUNDS_HPP
#define EAQ_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eaq/errors.hpp"
#include "eaq/protocol.hpp"

namespace eaq {

/// Exact rational number on int64, always kept in lowest terms with a
/// positive denominator. Used for the asymptotic frontier so crossings and
/// endpoints are exact.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    // Exact decimal expansion when it terminates (denominator 2^a 5^b),
    // otherwise 17 significant digits.
    std::string decimal_string() const;
};

// Quantum Singleton bound 2d <= n - k + 2: max d.
int q_singleton(int n, int k);

// Entanglement-assisted Singleton bound 2d <= n - k + 2 + c: max d.
// Proven only for d <= (n+2)/2; the caveat is reported, never enforced.
int ea_singleton(int n, int k, int c);

// Classical-Singleton absolute bound d <= n - k + 1.
int absolute_bound(int n, int k);

// Bound for the teleportation-based scheme: d <= n - 2k + 1 (needs 2k <= n).
int our_bound(int n, int k);

// Specialization of the EA Singleton bound at k = c: d <= n/2 + 1.
int ea_singleton_kc(int n);

enum class BoundStatus { Satisfies, Meets, Violates };

struct BoundEntry {
    int max_d = 0;
    BoundStatus status = BoundStatus::Satisfies;
};

struct BoundReport {
    SchemeParams params;
    std::map<std::string, BoundEntry> per_bound; // qSingleton, eaSingleton, absolute, ourBound, eaSingletonKC
    std::vector<std::string> notes;
};

BoundReport classify(const SchemeParams& params);

std::string to_string(BoundStatus s);

enum class FrontierVariant { Absolute, Qecc, EaHalf, EaKC, Ours };

struct FrontierPoint {
    Rational rate;  // R = k/n
    Rational delta; // d/n
    FrontierVariant variant;
};

// Asymptotic frontier line delta(R), sampled on an even grid over the
// variant's domain:
//   absolute: delta = 1 - R            on [0, 1]
//   qecc:     delta = (1 - R)/2        on [0, 1]
//   eaHalf:   delta = 3(1 - R)/4       on [0, 1]   (c = (n-k)/2)
//   eaKC:     delta = 1/2              on [0, 1/2] (c = k)
//   ours:     delta = 1 - 2R           on [0, 1/2]
std::vector<FrontierPoint> frontier(FrontierVariant variant, int grid_points);

// Exact line value, defined on the variant's domain.
Rational frontier_delta(FrontierVariant variant, const Rational& rate);

FrontierVariant parse_variant(const std::string& name);
std::string to_string(FrontierVariant v);

} // namespace eaq

#endif
