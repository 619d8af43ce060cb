#ifndef EAQ_PROTOCOL_HPP
#define EAQ_PROTOCOL_HPP

#include <optional>
#include <string>
#include <vector>

#include "eaq/linear_code.hpp"
#include "eaq/qudit.hpp"

namespace eaq {

/// Parameters [[n, k, d; c]]_q of an entanglement-assisted scheme.
struct SchemeParams {
    int n = 0; // channel uses
    int k = 0; // payload qudits
    int d = 0; // minimum distance
    int c = 0; // maximally entangled pairs
    int q = 0; // alphabet / qudit dimension
    bool operator==(const SchemeParams&) const = default;
};

struct ChannelModel {
    enum class Kind { None, Substitution, Phase, Random, Erasure };

    struct Substitution {
        int pos = 0;
        bool is_offset = false; // offset: new = old + value (mod q); else new = value
        int value = 0;
    };

    Kind kind = Kind::None;
    std::vector<Substitution> substitutions;               // Kind::Substitution
    std::vector<std::pair<int, AmpVec>> phases;            // Kind::Phase, explicit (pos, q phases)
    bool random_phases = false;                            // Kind::Phase, all positions, drawn from rng
    double eps = 0.0;                                      // Kind::Random
    std::vector<int> erasures;                             // Kind::Erasure

    // `none | subst:pos=v,... | subst:pos+=v,... | phase:random | rand:eps=<float> | erase:pos,pos,...`
    static ChannelModel parse(const std::string& spec);
    std::string spec_string() const;
};

struct Transcript {
    std::vector<PauliLabel> bell_outcomes;       // k pairs (a_i, b_i)
    std::vector<int> sent;                       // n symbols
    std::vector<int> received;                   // n symbols
    std::vector<int> erased_positions;
    bool decode_ok = false;
    std::optional<std::vector<int>> corrected;   // codeword when decode_ok
    std::vector<PauliLabel> applied_corrections; // k labels
    double output_fidelity = 0.0;
};

// Plain teleportation of a k-qudit payload through k maximally entangled
// pairs. Forced outcomes, when given, replace Bell sampling by projection
// (the projection probability is then ignored for the transcript).
std::pair<QuditState, Transcript> teleport(const QuditState& payload, Rng& rng,
                                           const std::vector<PauliLabel>* forced_outcomes = nullptr);

// [[n, kappa/2, d; kappa/2]]_q from a classical [n, kappa, d]_q code.
SchemeParams scheme_from_code(const LinearCode& code);

// The teleportation-based scheme: Bell-measure k pairs, protect the 2k-symbol
// record (a_1..a_k, b_1..b_k) with the classical code, carry the codeword as
// a basis state through the channel, decode, correct. On decode failure the
// uncorrected state is returned and the verdict recorded.
std::pair<QuditState, Transcript> ea_send(const QuditState& payload, const LinearCode& code,
                                          const ChannelModel& channel, Rng& rng,
                                          const std::vector<PauliLabel>* forced_outcomes = nullptr);

// Fully-quantum variant: Bell transform instead of measurement, encoding
// isometry, unitary channel noise, computational-basis measurement at the
// receiver. Statistically identical to ea_send; used as a cross-check oracle.
std::pair<QuditState, Transcript> ea_send_fully_quantum(const QuditState& payload,
                                                        const LinearCode& code,
                                                        const ChannelModel& channel, Rng& rng);

struct MonteCarloSummary {
    long long trials = 0;
    long long successes = 0;
    double mean_fidelity = 0.0;
    double failure_rate = 0.0;
};

// Independent ea_send trials over the symmetric random channel. Payloads are
// drawn uniformly from the probe set {q basis states, uniform superposition,
// one random-phase state}; per-trial seeds derive from masterSeed.
MonteCarloSummary monte_carlo(const LinearCode& code, const ChannelModel& channel,
                              long long trials, std::uint64_t master_seed);

// Probe payloads used by exhaustive correctability checks: all q basis
// states, the uniform superposition, and one random-phase state per seed.
std::vector<QuditState> probe_payloads(int dim, const std::vector<std::string>& labels,
                                       std::uint64_t seed);

} // namespace eaq

#endif
