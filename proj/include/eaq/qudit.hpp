#ifndef EAQ_QUDIT_HPP
#define EAQ_QUDIT_HPP

#include <Eigen/Core>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "eaq/errors.hpp"
#include "eaq/rng.hpp"

namespace eaq {

using Complex = std::complex<double>;
using AmpVec = Eigen::VectorXcd;

// Register size guard: at most 2^22 amplitudes.
inline constexpr long long kMaxAmplitudes = 1LL << 22;

struct PauliLabel {
    int a = 0; // X exponent in Z_q
    int b = 0; // Z exponent in Z_q
    bool operator==(const PauliLabel&) const = default;
};

/// Dense state vector over a labeled register of q-dimensional systems.
/// Index encoding is big-endian in the label order: the first label is the
/// most significant digit. States are immutable values; operations return
/// new states.
class QuditState {
  public:
    QuditState(int dim, std::vector<std::string> labels, AmpVec amps);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const AmpVec& amps() const { return amps_; }
    int num_qudits() const { return static_cast<int>(labels_.size()); }

    int label_pos(const std::string& label) const; // throws UnknownLabelError
    double norm() const { return amps_.norm(); }

    QuditState renamed(const std::string& from, const std::string& to) const;
    QuditState with_labels(std::vector<std::string> labels) const;

  private:
    int dim_;
    std::vector<std::string> labels_;
    AmpVec amps_;
};

QuditState basis_state(int dim, std::vector<std::string> labels, const std::vector<int>& symbols);

// (1/sqrt(dim)) sum_i |i>|i> on the two given labels.
QuditState max_entangled(int dim, const std::string& label_s, const std::string& label_r);

QuditState tensor(const QuditState& lhs, const QuditState& rhs);

// Applies X^a Z^b on one subsystem: |j> -> omega^(b j) |j + a mod q>.
QuditState apply_pauli(const QuditState& state, const std::string& label, int a, int b);

// The q^2 generalized Bell states (I (x) X^a Z^b)|Phi>, indexed by a*q + b,
// on labels {"s", "r"} with the operator acting on the second label.
std::vector<QuditState> bell_basis(int dim);

// Projects the (l1, l2) pair onto the Bell state (a, b); returns the Born
// probability and the renormalized state with the pair removed. Probability
// zero yields an empty (unnormalized zero) state.
std::pair<double, QuditState> bell_project(const QuditState& state, const std::string& l1,
                                           const std::string& l2, int a, int b);

// Samples a Bell outcome on the pair with Born probabilities and collapses.
std::pair<PauliLabel, QuditState> bell_measure(const QuditState& state, const std::string& l1,
                                               const std::string& l2, Rng& rng);

// Measures one subsystem in the computational basis; returns the symbol and
// the collapsed state with that label removed.
std::pair<int, QuditState> measure_computational(const QuditState& state, const std::string& label,
                                                 Rng& rng);

// Applies an arbitrary diagonal unitary on one subsystem: |j> -> phases[j]|j>.
QuditState apply_diagonal(const QuditState& state, const std::string& label, const AmpVec& phases);

// Basis change mapping the generalized Bell basis of the (l1, l2) pair to the
// standard basis: |Phi^{a,b}> -> |a>|b>, with |a> at l1's slot relabeled
// `out_a` and |b> at l2's slot relabeled `out_b`.
QuditState bell_transform(const QuditState& state, const std::string& l1, const std::string& l2,
                          const std::string& out_a, const std::string& out_b);

// |<s1|s2>|^2, insensitive to global phase. Labels must agree as sets; the
// second state is permuted to the first one's order if needed.
double fidelity(const QuditState& s1, const QuditState& s2);

// Reorders subsystems into the given label order (same label set).
QuditState permute_labels(const QuditState& state, const std::vector<std::string>& order);

} // namespace eaq

#endif
