#ifndef EAQ_FIELD_HPP
#define EAQ_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "eaq/errors.hpp"

namespace eaq {

class FieldElement;

/// Exact arithmetic in GF(p^m), p prime, q = p^m <= 256.
///
/// Elements are represented by their index in {0, ..., q-1}: the base-p
/// digit value of the coefficient vector of the polynomial representation,
/// ascending degree. Index 0 is the zero element, index 1 the one element.
/// Prime fields thus enumerate as ascending residues. Add/mul/inv tables are
/// precomputed at construction; a Field value is a cheap shared handle.
class Field {
  public:
    // poly: length m+1 coefficients over Z_p, ascending degree, monic.
    // Irreducibility is verified exhaustively (trial division).
    Field(int p, int m, std::vector<int> poly);

    // Selects the built-in defining polynomial for (p, m): the first monic
    // irreducible of degree m in ascending base-p digit order. Deterministic,
    // so serialized codes are reproducible across runs.
    static Field with_auto_poly(int p, int m);

    // Parses "p=<int>,m=<int>,poly=<c0>,<c1>,...,<cm>" or "poly=auto".
    static Field parse(const std::string& spec);
    std::string spec_string() const;

    int p() const { return data_->p; }
    int m() const { return data_->m; }
    int q() const { return data_->q; }
    const std::vector<int>& poly() const { return data_->poly; }

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    // Index-based arithmetic. Indices must be in [0, q).
    int add(int a, int b) const { return data_->add_tab[a * data_->q + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const { return data_->neg_tab[a]; }
    int mul(int a, int b) const { return data_->mul_tab[a * data_->q + b]; }
    int inv(int a) const;
    int pow(int a, long long e) const;

    // Base-p digits of an element index, ascending degree, length m.
    std::vector<int> coeffs(int a) const;
    int from_coeffs(const std::vector<int>& c) const;

    FieldElement element(int index) const;
    FieldElement zero() const;
    FieldElement one() const;
    std::vector<FieldElement> elements() const;

  private:
    struct Data {
        int p, m, q;
        std::vector<int> poly;
        std::vector<int> add_tab, mul_tab, neg_tab, inv_tab;
    };
    std::shared_ptr<const Data> data_;
};

/// A field element tied to its Field; checked operator arithmetic.
class FieldElement {
  public:
    FieldElement(Field field, int index) : field_(std::move(field)), index_(index) {
        if (index < 0 || index >= field_.q()) throw OutOfRangeError("element index out of range");
    }

    int index() const { return index_; }
    const Field& field() const { return field_; }
    std::vector<int> coeffs() const { return field_.coeffs(index_); }

    FieldElement operator+(const FieldElement& o) const { return make(field_.add(index_, check(o))); }
    FieldElement operator-(const FieldElement& o) const { return make(field_.sub(index_, check(o))); }
    FieldElement operator*(const FieldElement& o) const { return make(field_.mul(index_, check(o))); }
    FieldElement operator-() const { return make(field_.neg(index_)); }
    FieldElement inverse() const { return make(field_.inv(index_)); }
    FieldElement pow(long long e) const { return make(field_.pow(index_, e)); }

    bool operator==(const FieldElement& o) const { return field_ == o.field_ && index_ == o.index_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    int check(const FieldElement& o) const {
        if (field_ != o.field_) throw FieldMismatchError("elements of different fields");
        return o.index_;
    }
    FieldElement make(int idx) const { return FieldElement(field_, idx); }

    Field field_;
    int index_;
};

bool is_prime(int n);

// Monic polynomial irreducibility over Z_p by exhaustive trial division.
bool is_irreducible(int p, const std::vector<int>& poly);

} // namespace eaq

#endif
