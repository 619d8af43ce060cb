#include "eaq/field.hpp"

#include <algorithm>
#include <sstream>

namespace eaq {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Remainder of a mod b over Z_p, coefficients ascending degree.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    while (db > 0 && b[db] == 0) --db;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        if (a[i] == 0) continue;
        // b is used monic here; scale factor is a[i] * inv(lead) with lead = 1.
        int f = a[i];
        for (int j = 0; j <= db; ++j) {
            int k = i - db + j;
            a[k] = ((a[k] - f * b[j]) % p + p * p) % p;
        }
    }
    a.resize(std::max(db, 1));
    return a;
}

std::vector<int> digits_of(int value, int p, int len) {
    std::vector<int> d(len);
    for (int i = 0; i < len; ++i) {
        d[i] = value % p;
        value /= p;
    }
    return d;
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

bool is_irreducible(int p, const std::vector<int>& poly) {
    int m = static_cast<int>(poly.size()) - 1;
    if (m < 1 || poly[m] != 1) return false;
    if (m == 1) return true;
    // Trial division by all monic polynomials of degree 1..m/2.
    for (int deg = 1; 2 * deg <= m; ++deg) {
        int count = ipow(p, deg);
        for (int v = 0; v < count; ++v) {
            std::vector<int> div = digits_of(v, p, deg);
            div.push_back(1);
            std::vector<int> r = poly_mod(poly, div, p);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
        }
    }
    return true;
}

Field::Field(int p, int m, std::vector<int> poly) {
    if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw ValidationError("extension degree m must be >= 1");
    long long q64 = 1;
    for (int i = 0; i < m; ++i) q64 *= p;
    if (q64 > 256) throw UnsupportedSizeError("q = p^m exceeds 256");
    int q = static_cast<int>(q64);
    if (static_cast<int>(poly.size()) != m + 1 || poly[m] != 1)
        throw ValidationError("defining polynomial must be monic of degree m");
    for (int& c : poly) c = ((c % p) + p) % p;
    if (poly[m] != 1) throw ValidationError("defining polynomial must be monic of degree m");
    if (!is_irreducible(p, poly))
        throw NotIrreducibleError("defining polynomial is reducible over Z_p");

    auto data = std::make_shared<Data>();
    data->p = p;
    data->m = m;
    data->q = q;
    data->poly = poly;
    data->add_tab.resize(static_cast<std::size_t>(q) * q);
    data->mul_tab.resize(static_cast<std::size_t>(q) * q);
    data->neg_tab.resize(q);
    data->inv_tab.assign(q, 0);

    for (int a = 0; a < q; ++a) {
        std::vector<int> da = digits_of(a, p, m);
        std::vector<int> neg(m);
        for (int i = 0; i < m; ++i) neg[i] = (p - da[i]) % p;
        int nidx = 0;
        for (int i = m - 1; i >= 0; --i) nidx = nidx * p + neg[i];
        data->neg_tab[a] = nidx;
        for (int b = 0; b < q; ++b) {
            std::vector<int> db = digits_of(b, p, m);
            std::vector<int> sum(m);
            for (int i = 0; i < m; ++i) sum[i] = (da[i] + db[i]) % p;
            int sidx = 0;
            for (int i = m - 1; i >= 0; --i) sidx = sidx * p + sum[i];
            data->add_tab[static_cast<std::size_t>(a) * q + b] = sidx;

            std::vector<int> prod(2 * m - 1, 0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            std::vector<int> red = poly_mod(prod, poly, p);
            red.resize(m, 0);
            int pidx = 0;
            for (int i = m - 1; i >= 0; --i) pidx = pidx * p + red[i];
            data->mul_tab[static_cast<std::size_t>(a) * q + b] = pidx;
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (data->mul_tab[static_cast<std::size_t>(a) * q + b] == 1) data->inv_tab[a] = b;

    data_ = std::move(data);
}

Field Field::with_auto_poly(int p, int m) {
    if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw ValidationError("extension degree m must be >= 1");
    if (m == 1) return Field(p, 1, {0, 1});
    int count = ipow(p, m);
    for (int v = 0; v < count; ++v) {
        std::vector<int> poly = digits_of(v, p, m);
        poly.push_back(1);
        if (is_irreducible(p, poly)) return Field(p, m, poly);
    }
    throw NotIrreducibleError("no irreducible polynomial found"); // unreachable for prime p
}

Field Field::parse(const std::string& spec) {
    int p = -1, m = -1;
    std::string poly_str;
    // poly's own commas are kept together by scanning keys explicitly.
    auto ppos = spec.find("p=");
    auto mpos = spec.find("m=");
    auto polypos = spec.find("poly=");
    if (ppos == std::string::npos || mpos == std::string::npos || polypos == std::string::npos)
        throw ValidationError("field spec must be p=<int>,m=<int>,poly=...");
    try {
        p = std::stoi(spec.substr(ppos + 2));
        m = std::stoi(spec.substr(mpos + 2));
    } catch (const std::exception&) {
        throw ValidationError("bad integer in field spec");
    }
    poly_str = spec.substr(polypos + 5);
    if (poly_str == "auto") return with_auto_poly(p, m);
    std::vector<int> poly;
    std::stringstream ps(poly_str);
    std::string c;
    while (std::getline(ps, c, ',')) {
        try {
            poly.push_back(std::stoi(c));
        } catch (const std::exception&) {
            throw ValidationError("bad polynomial coefficient in field spec");
        }
    }
    return Field(p, m, poly);
}

std::string Field::spec_string() const {
    std::ostringstream os;
    os << "p=" << p() << ",m=" << m() << ",poly=";
    for (std::size_t i = 0; i < poly().size(); ++i) {
        if (i) os << ',';
        os << poly()[i];
    }
    return os.str();
}

bool Field::operator==(const Field& other) const {
    if (data_ == other.data_) return true;
    return p() == other.p() && m() == other.m() && poly() == other.poly();
}

int Field::inv(int a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero");
    return data_->inv_tab[a];
}

int Field::pow(int a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<int> Field::coeffs(int a) const { return digits_of(a, p(), m()); }

int Field::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) != m()) throw ValidationError("coefficient vector length != m");
    int idx = 0;
    for (int i = m() - 1; i >= 0; --i) {
        if (c[i] < 0 || c[i] >= p()) throw OutOfRangeError("coefficient out of Z_p");
        idx = idx * p() + c[i];
    }
    return idx;
}

FieldElement Field::element(int index) const { return FieldElement(*this, index); }
FieldElement Field::zero() const { return element(0); }
FieldElement Field::one() const { return element(1); }

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q());
    for (int i = 0; i < q(); ++i) out.push_back(element(i));
    return out;
}

} // namespace eaq
