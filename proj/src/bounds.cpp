#include "eaq/bounds.hpp"

#include <numeric>
#include <sstream>

namespace eaq {

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw ValidationError("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational Rational::operator+(const Rational& o) const { return Rational(num * o.den + o.num * den, den * o.den); }
Rational Rational::operator-(const Rational& o) const { return Rational(num * o.den - o.num * den, den * o.den); }
Rational Rational::operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string Rational::decimal_string() const {
    std::int64_t d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) {
        std::ostringstream os;
        os.precision(17);
        os << value();
        return os.str();
    }
    std::int64_t n = num < 0 ? -num : num;
    int digits = twos > fives ? twos : fives;
    for (int i = 0; i < digits; ++i) n *= 10;
    n /= den;
    std::string body = std::to_string(n);
    std::string out;
    if (digits > 0) {
        while (static_cast<int>(body.size()) <= digits) body.insert(body.begin(), '0');
        body.insert(body.end() - digits, '.');
        while (body.back() == '0') body.pop_back();
        if (body.back() == '.') body.pop_back();
    }
    out = body;
    if (num < 0) out.insert(out.begin(), '-');
    return out;
}

int q_singleton(int n, int k) {
    if (k < 0 || k > n) throw ValidationError("need 0 <= k <= n");
    return (n - k + 2) / 2;
}

int ea_singleton(int n, int k, int c) {
    if (k < 0 || k > n || c < 0) throw ValidationError("need 0 <= k <= n and c >= 0");
    return (n - k + 2 + c) / 2;
}

int absolute_bound(int n, int k) {
    if (k < 0 || k > n) throw ValidationError("need 0 <= k <= n");
    return n - k + 1;
}

int our_bound(int n, int k) {
    if (2 * k > n) throw KTooLargeError("our_bound needs 2k <= n");
    return n - 2 * k + 1;
}

int ea_singleton_kc(int n) {
    if (n < 1) throw ValidationError("need n >= 1");
    return n / 2 + 1;
}

std::string to_string(BoundStatus s) {
    switch (s) {
    case BoundStatus::Satisfies:
        return "satisfies";
    case BoundStatus::Meets:
        return "meets";
    case BoundStatus::Violates:
        return "violates";
    }
    return "satisfies";
}

namespace {
BoundEntry entry_for(int d, int max_d) {
    BoundEntry e;
    e.max_d = max_d;
    e.status = d < max_d ? BoundStatus::Satisfies : d == max_d ? BoundStatus::Meets : BoundStatus::Violates;
    return e;
}
} // namespace

BoundReport classify(const SchemeParams& p) {
    if (p.k < 0 || p.k > p.n || p.c < 0 || p.d < 1 || p.n < 1)
        throw ValidationError("invalid scheme parameters");
    BoundReport rep;
    rep.params = p;
    rep.per_bound["qSingleton"] = entry_for(p.d, q_singleton(p.n, p.k));
    rep.per_bound["eaSingleton"] = entry_for(p.d, ea_singleton(p.n, p.k, p.c));
    rep.per_bound["absolute"] = entry_for(p.d, absolute_bound(p.n, p.k));
    if (2 * p.k <= p.n)
        rep.per_bound["ourBound"] = entry_for(p.d, our_bound(p.n, p.k));
    else
        rep.notes.push_back("ourBound not applicable (2k > n)");
    rep.per_bound["eaSingletonKC"] = entry_for(p.d, ea_singleton_kc(p.n));
    if (p.k != p.c) rep.notes.push_back("eaSingletonKC assumes k = c; here k != c");

    if (2 * p.d > p.n + 2)
        rep.notes.push_back("eaSingleton proven only for d <= (n+2)/2; these parameters lie outside the proven regime");
    if (rep.per_bound["eaSingleton"].status == BoundStatus::Violates) {
        // Violating the EA Singleton bound requires c >= k; flag it and check.
        if (p.c < p.k)
            rep.notes.push_back("WARNING: eaSingleton violated with c < k, which should be impossible");
        else
            rep.notes.push_back("eaSingleton violated; consistent with the c >= k requirement");
    }
    return rep;
}

FrontierVariant parse_variant(const std::string& name) {
    if (name == "absolute") return FrontierVariant::Absolute;
    if (name == "qecc") return FrontierVariant::Qecc;
    if (name == "eaHalf") return FrontierVariant::EaHalf;
    if (name == "eaKC") return FrontierVariant::EaKC;
    if (name == "ours") return FrontierVariant::Ours;
    throw UnknownVariantError("unknown frontier variant: " + name);
}

std::string to_string(FrontierVariant v) {
    switch (v) {
    case FrontierVariant::Absolute:
        return "absolute";
    case FrontierVariant::Qecc:
        return "qecc";
    case FrontierVariant::EaHalf:
        return "eaHalf";
    case FrontierVariant::EaKC:
        return "eaKC";
    case FrontierVariant::Ours:
        return "ours";
    }
    return "absolute";
}

Rational frontier_delta(FrontierVariant variant, const Rational& rate) {
    Rational one(1), half(1, 2);
    if (rate < Rational(0) || Rational(1) < rate) throw ValidationError("rate outside [0, 1]");
    switch (variant) {
    case FrontierVariant::Absolute:
        return one - rate;
    case FrontierVariant::Qecc:
        return (one - rate) * half;
    case FrontierVariant::EaHalf:
        return (one - rate) * Rational(3, 4);
    case FrontierVariant::EaKC:
        if (half < rate) throw ValidationError("eaKC frontier is defined for R <= 1/2");
        return half;
    case FrontierVariant::Ours:
        if (half < rate) throw ValidationError("ours frontier is defined for R <= 1/2");
        return one - Rational(2) * rate;
    }
    return Rational(0);
}

std::vector<FrontierPoint> frontier(FrontierVariant variant, int grid_points) {
    if (grid_points < 2) throw ValidationError("grid needs at least 2 points");
    bool half_domain = variant == FrontierVariant::EaKC || variant == FrontierVariant::Ours;
    Rational max_rate = half_domain ? Rational(1, 2) : Rational(1);
    std::vector<FrontierPoint> points;
    points.reserve(grid_points);
    for (int i = 0; i < grid_points; ++i) {
        Rational rate = max_rate * Rational(i, grid_points - 1);
        points.push_back(FrontierPoint{rate, frontier_delta(variant, rate), variant});
    }
    return points;
}

} // namespace eaq
