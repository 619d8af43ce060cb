#ifndef EAQ_LINEAR_CODE_HPP
#define EAQ_LINEAR_CODE_HPP

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "eaq/field.hpp"

namespace eaq {

using SymbolVec = Eigen::VectorXi; // entries are field element indices
using SymbolMat = Eigen::MatrixXi;

// Exhaustive enumeration limit: codes with q^kappa beyond this are rejected
// by the distance/decoding oracles.
inline constexpr long long kEnumerationLimit = 1LL << 20;

/// A linear [n, kappa, d]_q code given by a full-rank generator matrix.
/// The minimum distance is memoized once computed; instances are immutable
/// apart from that idempotent write.
class LinearCode {
  public:
    LinearCode(Field field, SymbolMat gen, std::optional<int> d = std::nullopt);

    const Field& field() const { return field_; }
    int n() const { return static_cast<int>(gen_.cols()); }
    int kappa() const { return static_cast<int>(gen_.rows()); }
    const SymbolMat& gen() const { return gen_; }
    std::optional<int> distance() const { return d_; }
    void set_distance(int d) const { d_ = d; }

    long long codeword_count() const;

  private:
    Field field_;
    SymbolMat gen_;
    mutable std::optional<int> d_;
};

// Reed-Solomon code of length n <= q over the first n evaluation points of
// the field's element order; n = q+1 appends the extended coordinate (top
// message coefficient). MDS: d = n - kappa + 1.
LinearCode rs_code(const Field& field, int n, int kappa);

// ell-fold horizontal repetition: [ell*n, kappa, ell*d].
LinearCode repeat_code(const LinearCode& code, int ell);

SymbolVec encode(const LinearCode& code, const SymbolVec& msg);

// Exact minimum Hamming weight by enumeration of all q^kappa - 1 nonzero
// codewords. Memoizes on the code.
int min_distance(const LinearCode& code);

struct DecodeResult {
    SymbolVec msg;
    SymbolVec codeword;
    int corrections = 0;
};

// Nearest-codeword decoding within radius t = floor((d-1)/2); anything
// farther is a failure, never a guess.
std::optional<DecodeResult> decode_bounded(const LinearCode& code, const SymbolVec& received);

// Unique codeword agreeing with `received` on all non-erased positions;
// nullopt if none or not unique.
std::optional<DecodeResult> decode_erasures(const LinearCode& code, const SymbolVec& received,
                                            const std::vector<int>& erased);

inline int singleton_bound_classical(int n, int kappa) { return n - kappa + 1; }

// Minimal length of a linear [n, kappa, d]_q code: sum of ceil(d/q^i).
long long griesmer_bound(long long q, int kappa, int d);

// Enumerate messages in the fixed mixed-radix order (index i varies slowest).
SymbolVec message_at(const Field& field, int kappa, long long index);

} // namespace eaq

#endif
