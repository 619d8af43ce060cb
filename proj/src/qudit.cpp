#include "eaq/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace eaq {

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Complex root_of_unity(int dim, long long k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(((k % dim) + dim) % dim) / dim;
    return {std::cos(angle), std::sin(angle)};
}

void decompose(long long index, int dim, int count, std::vector<int>& digits) {
    for (int i = count - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(index % dim);
        index /= dim;
    }
}

} // namespace

QuditState::QuditState(int dim, std::vector<std::string> labels, AmpVec amps)
    : dim_(dim), labels_(std::move(labels)), amps_(std::move(amps)) {
    if (dim < 2) throw ValidationError("qudit dimension must be >= 2");
    long long expected = pow_ll(dim, static_cast<int>(labels_.size()));
    if (expected > kMaxAmplitudes) throw RegisterTooLargeError("register exceeds 2^22 amplitudes");
    if (amps_.size() != expected) throw ValidationError("amplitude vector length != dim^#labels");
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j]) throw ValidationError("duplicate subsystem label");
}

int QuditState::label_pos(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw UnknownLabelError("unknown subsystem label: " + label);
    return static_cast<int>(it - labels_.begin());
}

QuditState QuditState::renamed(const std::string& from, const std::string& to) const {
    std::vector<std::string> labels = labels_;
    labels[label_pos(from)] = to;
    return QuditState(dim_, std::move(labels), amps_);
}

QuditState QuditState::with_labels(std::vector<std::string> labels) const {
    return QuditState(dim_, std::move(labels), amps_);
}

QuditState basis_state(int dim, std::vector<std::string> labels, const std::vector<int>& symbols) {
    if (labels.size() != symbols.size()) throw LengthMismatchError("labels/symbols length mismatch");
    long long index = 0;
    for (int s : symbols) {
        if (s < 0 || s >= dim) throw OutOfRangeError("basis symbol out of range");
        index = index * dim + s;
    }
    AmpVec amps = AmpVec::Zero(pow_ll(dim, static_cast<int>(labels.size())));
    amps(index) = 1.0;
    return QuditState(dim, std::move(labels), std::move(amps));
}

QuditState max_entangled(int dim, const std::string& label_s, const std::string& label_r) {
    AmpVec amps = AmpVec::Zero(static_cast<long long>(dim) * dim);
    double a = 1.0 / std::sqrt(static_cast<double>(dim));
    for (int i = 0; i < dim; ++i) amps(static_cast<long long>(i) * dim + i) = a;
    return QuditState(dim, {label_s, label_r}, std::move(amps));
}

QuditState tensor(const QuditState& lhs, const QuditState& rhs) {
    if (lhs.dim() != rhs.dim()) throw ValidationError("tensor of mismatched dimensions");
    std::vector<std::string> labels = lhs.labels();
    labels.insert(labels.end(), rhs.labels().begin(), rhs.labels().end());
    AmpVec amps(lhs.amps().size() * rhs.amps().size());
    for (long long i = 0; i < lhs.amps().size(); ++i)
        amps.segment(i * rhs.amps().size(), rhs.amps().size()) = lhs.amps()(i) * rhs.amps();
    return QuditState(lhs.dim(), std::move(labels), std::move(amps));
}

QuditState apply_pauli(const QuditState& state, const std::string& label, int a, int b) {
    int q = state.dim();
    int pos = state.label_pos(label);
    a = ((a % q) + q) % q;
    b = ((b % q) + q) % q;
    long long stride = pow_ll(q, state.num_qudits() - 1 - pos);
    AmpVec out = AmpVec::Zero(state.amps().size());
    for (long long idx = 0; idx < state.amps().size(); ++idx) {
        Complex amp = state.amps()(idx);
        if (amp == Complex{0.0, 0.0}) continue;
        int j = static_cast<int>((idx / stride) % q);
        int jp = (j + a) % q;
        long long nidx = idx + static_cast<long long>(jp - j) * stride;
        out(nidx) += root_of_unity(q, static_cast<long long>(b) * j) * amp;
    }
    return QuditState(q, state.labels(), std::move(out));
}

std::vector<QuditState> bell_basis(int dim) {
    std::vector<QuditState> basis;
    basis.reserve(static_cast<std::size_t>(dim) * dim);
    QuditState phi = max_entangled(dim, "s", "r");
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) basis.push_back(apply_pauli(phi, "r", a, b));
    return basis;
}

std::pair<double, QuditState> bell_project(const QuditState& state, const std::string& l1,
                                           const std::string& l2, int a, int b) {
    int q = state.dim();
    int p1 = state.label_pos(l1);
    int p2 = state.label_pos(l2);
    if (p1 == p2) throw ValidationError("bell_project needs two distinct labels");
    int count = state.num_qudits();
    double inv_sqrt_q = 1.0 / std::sqrt(static_cast<double>(q));

    std::vector<std::string> rest_labels;
    for (int i = 0; i < count; ++i)
        if (i != p1 && i != p2) rest_labels.push_back(state.labels()[i]);
    AmpVec out = AmpVec::Zero(pow_ll(q, count - 2));

    // <Phi^{a,b}| has support on pairs (i, i+a) with phase omega^{-b i}.
    std::vector<int> digits(count);
    for (long long idx = 0; idx < state.amps().size(); ++idx) {
        Complex amp = state.amps()(idx);
        if (amp == Complex{0.0, 0.0}) continue;
        decompose(idx, q, count, digits);
        int i = digits[p1];
        if (digits[p2] != (i + a) % q) continue;
        long long rest = 0;
        for (int k = 0; k < count; ++k)
            if (k != p1 && k != p2) rest = rest * q + digits[k];
        out(rest) += inv_sqrt_q * root_of_unity(q, -static_cast<long long>(b) * i) * amp;
    }
    double prob = out.squaredNorm();
    if (prob > 0) out /= std::sqrt(prob);
    return {prob, QuditState(q, std::move(rest_labels), std::move(out))};
}

std::pair<PauliLabel, QuditState> bell_measure(const QuditState& state, const std::string& l1,
                                               const std::string& l2, Rng& rng) {
    int q = state.dim();
    std::vector<double> probs;
    probs.reserve(static_cast<std::size_t>(q) * q);
    double total = 0;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            double pr = bell_project(state, l1, l2, a, b).first;
            probs.push_back(pr);
            total += pr;
        }
    if (total < 1e-12) throw ZeroNormError("measurement on zero-norm state");
    double u = rng.next_double() * total;
    int outcome = static_cast<int>(probs.size()) - 1;
    double acc = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        if (u < acc) {
            outcome = static_cast<int>(i);
            break;
        }
    }
    PauliLabel label{outcome / q, outcome % q};
    auto [pr, collapsed] = bell_project(state, l1, l2, label.a, label.b);
    if (pr <= 0) throw ZeroNormError("collapsed onto zero-probability outcome");
    return {label, std::move(collapsed)};
}

std::pair<int, QuditState> measure_computational(const QuditState& state, const std::string& label,
                                                 Rng& rng) {
    int q = state.dim();
    int pos = state.label_pos(label);
    long long stride = pow_ll(q, state.num_qudits() - 1 - pos);
    std::vector<double> probs(q, 0.0);
    for (long long idx = 0; idx < state.amps().size(); ++idx)
        probs[(idx / stride) % q] += std::norm(state.amps()(idx));
    double total = 0;
    for (double pr : probs) total += pr;
    if (total < 1e-12) throw ZeroNormError("measurement on zero-norm state");
    double u = rng.next_double() * total;
    int outcome = q - 1;
    double acc = 0;
    for (int s = 0; s < q; ++s) {
        acc += probs[s];
        if (u < acc) {
            outcome = s;
            break;
        }
    }
    std::vector<std::string> rest_labels = state.labels();
    rest_labels.erase(rest_labels.begin() + pos);
    AmpVec out = AmpVec::Zero(state.amps().size() / q);
    for (long long idx = 0; idx < state.amps().size(); ++idx) {
        if (static_cast<int>((idx / stride) % q) != outcome) continue;
        long long hi = idx / (stride * q);
        long long lo = idx % stride;
        out(hi * stride + lo) = state.amps()(idx);
    }
    out /= std::sqrt(probs[outcome]);
    return {outcome, QuditState(q, std::move(rest_labels), std::move(out))};
}

QuditState apply_diagonal(const QuditState& state, const std::string& label, const AmpVec& phases) {
    int q = state.dim();
    if (phases.size() != q) throw LengthMismatchError("diagonal needs exactly q phases");
    for (int j = 0; j < q; ++j)
        if (std::abs(std::abs(phases(j)) - 1.0) > 1e-9)
            throw ValidationError("diagonal entries must have unit modulus");
    int pos = state.label_pos(label);
    long long stride = pow_ll(q, state.num_qudits() - 1 - pos);
    AmpVec out = state.amps();
    for (long long idx = 0; idx < out.size(); ++idx) out(idx) *= phases((idx / stride) % q);
    return QuditState(q, state.labels(), std::move(out));
}

QuditState bell_transform(const QuditState& state, const std::string& l1, const std::string& l2,
                          const std::string& out_a, const std::string& out_b) {
    int q = state.dim();
    int p1 = state.label_pos(l1);
    int p2 = state.label_pos(l2);
    if (p1 == p2) throw ValidationError("bell_transform needs two distinct labels");
    int count = state.num_qudits();
    double inv_sqrt_q = 1.0 / std::sqrt(static_cast<double>(q));
    long long s1 = pow_ll(q, count - 1 - p1);
    long long s2 = pow_ll(q, count - 1 - p2);

    std::vector<std::string> labels = state.labels();
    labels[p1] = out_a;
    labels[p2] = out_b;
    AmpVec out = AmpVec::Zero(state.amps().size());
    // |i>_{l1} |j>_{l2} contributes to branch (a, b) = (j - i, b) with weight
    // (1/sqrt q) omega^{-b i} for every b.
    std::vector<int> digits(count);
    for (long long idx = 0; idx < state.amps().size(); ++idx) {
        Complex amp = state.amps()(idx);
        if (amp == Complex{0.0, 0.0}) continue;
        decompose(idx, q, count, digits);
        int i = digits[p1];
        int j = digits[p2];
        int a = (j - i + q) % q;
        long long base = idx + static_cast<long long>(a - i) * s1 - static_cast<long long>(j)* s2;
        for (int b = 0; b < q; ++b)
            out(base + static_cast<long long>(b) * s2) +=
                inv_sqrt_q * root_of_unity(q, -static_cast<long long>(b) * i) * amp;
    }
    return QuditState(q, std::move(labels), std::move(out));
}

QuditState permute_labels(const QuditState& state, const std::vector<std::string>& order) {
    if (order.size() != state.labels().size()) throw LabelMismatchError("label sets differ");
    int count = state.num_qudits();
    std::vector<int> src_pos(count);
    for (int i = 0; i < count; ++i) src_pos[i] = state.label_pos(order[i]);
    int q = state.dim();
    AmpVec out(state.amps().size());
    std::vector<int> digits(count), perm(count);
    for (long long idx = 0; idx < state.amps().size(); ++idx) {
        decompose(idx, q, count, digits);
        long long nidx = 0;
        for (int i = 0; i < count; ++i) nidx = nidx * q + digits[src_pos[i]];
        out(nidx) = state.amps()(idx);
    }
    return QuditState(q, order, std::move(out));
}

double fidelity(const QuditState& s1, const QuditState& s2) {
    if (s1.dim() != s2.dim()) throw LabelMismatchError("dimension mismatch");
    std::vector<std::string> sorted1 = s1.labels(), sorted2 = s2.labels();
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (sorted1 != sorted2) throw LabelMismatchError("label sets differ");
    const QuditState* rhs = &s2;
    QuditState permuted = s2;
    if (s1.labels() != s2.labels()) {
        permuted = permute_labels(s2, s1.labels());
        rhs = &permuted;
    }
    Complex overlap = s1.amps().dot(rhs->amps());
    return std::norm(overlap);
}

} // namespace eaq
