#include "eaq/linear_code.hpp"

#include <cmath>

namespace eaq {

namespace {

int rank_gf(const Field& f, SymbolMat a) {
    int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        a.row(rank).swap(a.row(pivot));
        int inv = f.inv(a(rank, col));
        for (int c = col; c < cols; ++c) a(rank, c) = f.mul(a(rank, c), inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a(r, col) == 0) continue;
            int factor = a(r, col);
            for (int c = col; c < cols; ++c)
                a(r, c) = f.sub(a(r, c), f.mul(factor, a(rank, c)));
        }
        ++rank;
    }
    return rank;
}

} // namespace

LinearCode::LinearCode(Field field, SymbolMat gen, std::optional<int> d)
    : field_(std::move(field)), gen_(std::move(gen)), d_(d) {
    int n = static_cast<int>(gen_.cols());
    int kappa = static_cast<int>(gen_.rows());
    if (kappa < 1 || kappa > n) throw ValidationError("need 1 <= kappa <= n");
    for (int r = 0; r < kappa; ++r)
        for (int c = 0; c < n; ++c)
            if (gen_(r, c) < 0 || gen_(r, c) >= field_.q())
                throw OutOfRangeError("generator entry outside field");
    if (rank_gf(field_, gen_) != kappa)
        throw ValidationError("generator matrix is not full rank over GF(q)");
}

long long LinearCode::codeword_count() const {
    long long count = 1;
    for (int i = 0; i < kappa(); ++i) {
        count *= field_.q();
        if (count > kEnumerationLimit) return count;
    }
    return count;
}

LinearCode rs_code(const Field& field, int n, int kappa) {
    int q = field.q();
    if (n > q + 1 || n < kappa) throw LengthOutOfRangeError("RS code needs kappa <= n <= q+1");
    SymbolMat gen(kappa, n);
    int plain = std::min(n, q); // evaluation points; n = q+1 adds the extended column
    for (int c = 0; c < plain; ++c) {
        int x = c; // c-th element in the deterministic order
        for (int r = 0; r < kappa; ++r) gen(r, c) = field.pow(x, r);
    }
    if (n == q + 1)
        for (int r = 0; r < kappa; ++r) gen(r, q) = (r == kappa - 1) ? 1 : 0;
    return LinearCode(field, std::move(gen), n - kappa + 1);
}

LinearCode repeat_code(const LinearCode& code, int ell) {
    if (ell < 1) throw ValidationError("repetition multiplicity must be >= 1");
    SymbolMat gen(code.kappa(), static_cast<Eigen::Index>(code.n()) * ell);
    for (int i = 0; i < ell; ++i) gen.middleCols(static_cast<Eigen::Index>(i) * code.n(), code.n()) = code.gen();
    std::optional<int> d;
    if (code.distance()) d = *code.distance() * ell;
    return LinearCode(code.field(), std::move(gen), d);
}

SymbolVec encode(const LinearCode& code, const SymbolVec& msg) {
    if (msg.size() != code.kappa()) throw LengthMismatchError("message length != kappa");
    const Field& f = code.field();
    SymbolVec out = SymbolVec::Zero(code.n());
    for (int r = 0; r < code.kappa(); ++r) {
        int s = msg(r);
        if (s < 0 || s >= f.q()) throw FieldMismatchError("message symbol outside field");
        if (s == 0) continue;
        for (int c = 0; c < code.n(); ++c)
            out(c) = f.add(out(c), f.mul(s, code.gen()(r, c)));
    }
    return out;
}

SymbolVec message_at(const Field& field, int kappa, long long index) {
    SymbolVec msg(kappa);
    for (int i = kappa - 1; i >= 0; --i) {
        msg(i) = static_cast<int>(index % field.q());
        index /= field.q();
    }
    return msg;
}

int min_distance(const LinearCode& code) {
    if (code.distance()) return *code.distance();
    long long count = code.codeword_count();
    if (count > kEnumerationLimit) throw TooLargeError("q^kappa exceeds the exhaustive limit");
    int best = code.n() + 1;
    for (long long i = 1; i < count; ++i) {
        SymbolVec cw = encode(code, message_at(code.field(), code.kappa(), i));
        int w = static_cast<int>((cw.array() != 0).count());
        best = std::min(best, w);
    }
    code.set_distance(best);
    return best;
}

std::optional<DecodeResult> decode_bounded(const LinearCode& code, const SymbolVec& received) {
    if (received.size() != code.n()) throw LengthMismatchError("received length != n");
    long long count = code.codeword_count();
    if (count > kEnumerationLimit) throw TooLargeError("q^kappa exceeds the exhaustive limit");
    int d = min_distance(code);
    int t = (d - 1) / 2;
    int best_dist = code.n() + 1;
    SymbolVec best_msg, best_cw;
    for (long long i = 0; i < count; ++i) {
        SymbolVec msg = message_at(code.field(), code.kappa(), i);
        SymbolVec cw = encode(code, msg);
        int dist = static_cast<int>((cw.array() != received.array()).count());
        if (dist < best_dist) {
            best_dist = dist;
            best_msg = msg;
            best_cw = cw;
        }
    }
    if (best_dist > t) return std::nullopt;
    return DecodeResult{std::move(best_msg), std::move(best_cw), best_dist};
}

std::optional<DecodeResult> decode_erasures(const LinearCode& code, const SymbolVec& received,
                                            const std::vector<int>& erased) {
    if (received.size() != code.n()) throw LengthMismatchError("received length != n");
    std::vector<bool> is_erased(code.n(), false);
    for (int pos : erased) {
        if (pos < 0 || pos >= code.n()) throw OutOfRangeError("erasure position outside block");
        is_erased[pos] = true;
    }
    long long count = code.codeword_count();
    if (count > kEnumerationLimit) throw TooLargeError("q^kappa exceeds the exhaustive limit");
    std::optional<DecodeResult> found;
    for (long long i = 0; i < count; ++i) {
        SymbolVec msg = message_at(code.field(), code.kappa(), i);
        SymbolVec cw = encode(code, msg);
        bool agrees = true;
        int fills = 0;
        for (int c = 0; c < code.n() && agrees; ++c) {
            if (is_erased[c])
                fills += (cw(c) != received(c));
            else
                agrees = (cw(c) == received(c));
        }
        if (!agrees) continue;
        if (found) return std::nullopt; // ambiguous
        found = DecodeResult{std::move(msg), std::move(cw), fills};
    }
    return found;
}

long long griesmer_bound(long long q, int kappa, int d) {
    if (kappa < 1 || d < 1) throw ValidationError("griesmer_bound needs kappa >= 1 and d >= 1");
    long long sum = 0;
    long long qi = 1;
    for (int i = 0; i < kappa; ++i) {
        sum += (d + qi - 1) / qi;
        qi *= q;
    }
    return sum;
}

} // namespace eaq
