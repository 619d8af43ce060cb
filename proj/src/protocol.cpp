#include "eaq/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace eaq {

namespace {

std::string pair_label(const char* prefix, int i) { return std::string("__") + prefix + std::to_string(i); }

// Receiver-side correction completing teleportation after Bell outcome (a, b)
// on the sender pair: X^{-a} Z^{b} up to a global phase.
PauliLabel correction_for(int a, int b, int q) { return PauliLabel{(q - a % q) % q, b % q}; }

AmpVec random_phases_vec(int q, Rng& rng) {
    AmpVec phases(q);
    for (int j = 0; j < q; ++j) {
        double angle = 2.0 * std::numbers::pi * rng.next_double();
        phases(j) = Complex{std::cos(angle), std::sin(angle)};
    }
    return phases;
}

std::vector<int> apply_channel_classical(const std::vector<int>& sent, const ChannelModel& ch,
                                         int q, Rng& rng, std::vector<int>& erased_out) {
    std::vector<int> recv = sent;
    int n = static_cast<int>(sent.size());
    switch (ch.kind) {
    case ChannelModel::Kind::None:
    case ChannelModel::Kind::Phase:
        // Phases act on basis-state branches only; the receiver's
        // computational-basis measurement discards them.
        break;
    case ChannelModel::Kind::Substitution:
        for (const auto& s : ch.substitutions) {
            if (s.pos < 0 || s.pos >= n) throw OutOfRangeError("substitution position outside block");
            recv[s.pos] = s.is_offset ? (recv[s.pos] + s.value % q + q) % q : s.value;
            if (recv[s.pos] < 0 || recv[s.pos] >= q) throw OutOfRangeError("substituted symbol outside alphabet");
        }
        break;
    case ChannelModel::Kind::Random:
        for (int i = 0; i < n; ++i)
            if (rng.next_double() < ch.eps) {
                int offset = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(q - 1)));
                recv[i] = (recv[i] + offset) % q;
            }
        break;
    case ChannelModel::Kind::Erasure:
        for (int pos : ch.erasures) {
            if (pos < 0 || pos >= n) throw OutOfRangeError("erasure position outside block");
            recv[pos] = 0;
            erased_out.push_back(pos);
        }
        std::sort(erased_out.begin(), erased_out.end());
        erased_out.erase(std::unique(erased_out.begin(), erased_out.end()), erased_out.end());
        break;
    }
    return recv;
}

} // namespace

ChannelModel ChannelModel::parse(const std::string& spec) {
    ChannelModel ch;
    if (spec == "none" || spec.empty()) return ch;
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "subst") {
        ch.kind = Kind::Substitution;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) throw ValidationError("bad substitution entry: " + item);
            Substitution s;
            if (item[eq - 1] == '+') {
                s.is_offset = true;
                s.pos = std::stoi(item.substr(0, eq - 1));
            } else {
                s.pos = std::stoi(item.substr(0, eq));
            }
            s.value = std::stoi(item.substr(eq + 1));
            ch.substitutions.push_back(s);
        }
        if (ch.substitutions.empty()) throw ValidationError("empty substitution list");
    } else if (kind == "phase") {
        ch.kind = Kind::Phase;
        if (rest != "random") throw ValidationError("phase channel spec must be phase:random");
        ch.random_phases = true;
    } else if (kind == "rand") {
        ch.kind = Kind::Random;
        if (rest.rfind("eps=", 0) != 0) throw ValidationError("random channel spec must be rand:eps=<float>");
        ch.eps = std::stod(rest.substr(4));
        if (ch.eps < 0.0 || ch.eps > 1.0) throw ValidationError("eps must be in [0, 1]");
    } else if (kind == "erase") {
        ch.kind = Kind::Erasure;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) ch.erasures.push_back(std::stoi(item));
        if (ch.erasures.empty()) throw ValidationError("empty erasure list");
    } else {
        throw ValidationError("unknown channel kind: " + kind);
    }
    return ch;
}

std::string ChannelModel::spec_string() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::None:
        return "none";
    case Kind::Substitution:
        os << "subst:";
        for (std::size_t i = 0; i < substitutions.size(); ++i) {
            if (i) os << ',';
            os << substitutions[i].pos << (substitutions[i].is_offset ? "+=" : "=") << substitutions[i].value;
        }
        return os.str();
    case Kind::Phase:
        return "phase:random";
    case Kind::Random:
        os << "rand:eps=" << eps;
        return os.str();
    case Kind::Erasure:
        os << "erase:";
        for (std::size_t i = 0; i < erasures.size(); ++i) {
            if (i) os << ',';
            os << erasures[i];
        }
        return os.str();
    }
    return "none";
}

std::pair<QuditState, Transcript> teleport(const QuditState& payload, Rng& rng,
                                           const std::vector<PauliLabel>* forced_outcomes) {
    int q = payload.dim();
    std::vector<std::string> moved = payload.labels();
    int k = static_cast<int>(moved.size());
    if (forced_outcomes && static_cast<int>(forced_outcomes->size()) != k)
        throw LengthMismatchError("forced outcome count != payload size");

    Transcript tr;
    QuditState state = payload;
    for (int i = 0; i < k; ++i) {
        std::string s = pair_label("S", i), r = pair_label("R", i);
        state = tensor(state, max_entangled(q, s, r));
        PauliLabel out;
        if (forced_outcomes) {
            out = (*forced_outcomes)[i];
            auto [pr, collapsed] = bell_project(state, moved[i], s, out.a, out.b);
            if (pr <= 0) throw ZeroNormError("forced outcome has zero probability");
            state = std::move(collapsed);
        } else {
            auto [sampled, collapsed] = bell_measure(state, moved[i], s, rng);
            out = sampled;
            state = std::move(collapsed);
        }
        tr.bell_outcomes.push_back(out);
        PauliLabel corr = correction_for(out.a, out.b, q);
        tr.applied_corrections.push_back(corr);
        state = apply_pauli(state, r, corr.a, corr.b);
        state = state.renamed(r, moved[i]);
    }
    state = permute_labels(state, payload.labels());
    tr.decode_ok = true;
    tr.output_fidelity = fidelity(payload, state);
    return {std::move(state), std::move(tr)};
}

SchemeParams scheme_from_code(const LinearCode& code) {
    if (code.kappa() % 2 != 0) throw OddKappaError("scheme needs even code dimension");
    int d = min_distance(code);
    int k = code.kappa() / 2;
    return SchemeParams{code.n(), k, d, k, code.field().q()};
}

std::pair<QuditState, Transcript> ea_send(const QuditState& payload, const LinearCode& code,
                                          const ChannelModel& channel, Rng& rng,
                                          const std::vector<PauliLabel>* forced_outcomes) {
    int q = payload.dim();
    if (q != code.field().q()) throw FieldMismatchError("payload dimension != code alphabet");
    int k = payload.num_qudits();
    if (code.kappa() != 2 * k) throw LengthMismatchError("code dimension must equal 2k");
    if (forced_outcomes && static_cast<int>(forced_outcomes->size()) != k)
        throw LengthMismatchError("forced outcome count != payload size");

    Transcript tr;
    const std::vector<std::string> moved = payload.labels();
    QuditState state = payload;
    for (int i = 0; i < k; ++i) {
        std::string s = pair_label("S", i), r = pair_label("R", i);
        state = tensor(state, max_entangled(q, s, r));
        PauliLabel out;
        if (forced_outcomes) {
            out = (*forced_outcomes)[i];
            auto [pr, collapsed] = bell_project(state, moved[i], s, out.a, out.b);
            if (pr <= 0) throw ZeroNormError("forced outcome has zero probability");
            state = std::move(collapsed);
        } else {
            auto [sampled, collapsed] = bell_measure(state, moved[i], s, rng);
            out = sampled;
            state = std::move(collapsed);
        }
        tr.bell_outcomes.push_back(out);
    }

    // Message packing: a_1..a_k then b_1..b_k; Pauli exponents map to field
    // symbols through the element index bijection.
    SymbolVec msg(2 * k);
    for (int i = 0; i < k; ++i) {
        msg(i) = tr.bell_outcomes[i].a;
        msg(k + i) = tr.bell_outcomes[i].b;
    }
    SymbolVec sent = encode(code, msg);
    tr.sent.assign(sent.data(), sent.data() + sent.size());

    tr.received = apply_channel_classical(tr.sent, channel, q, rng, tr.erased_positions);
    SymbolVec recv = Eigen::Map<const SymbolVec>(tr.received.data(), static_cast<Eigen::Index>(tr.received.size()));

    std::optional<DecodeResult> dec;
    if (!tr.erased_positions.empty())
        dec = decode_erasures(code, recv, tr.erased_positions);
    else
        dec = decode_bounded(code, recv);

    if (dec) {
        tr.decode_ok = true;
        tr.corrected = std::vector<int>(dec->codeword.data(), dec->codeword.data() + dec->codeword.size());
        for (int i = 0; i < k; ++i) {
            PauliLabel corr = correction_for(dec->msg(i), dec->msg(k + i), q);
            tr.applied_corrections.push_back(corr);
            state = apply_pauli(state, pair_label("R", i), corr.a, corr.b);
        }
    }
    for (int i = 0; i < k; ++i) state = state.renamed(pair_label("R", i), moved[i]);
    state = permute_labels(state, payload.labels());
    tr.output_fidelity = fidelity(payload, state);
    return {std::move(state), std::move(tr)};
}

std::pair<QuditState, Transcript> ea_send_fully_quantum(const QuditState& payload,
                                                        const LinearCode& code,
                                                        const ChannelModel& channel, Rng& rng) {
    int q = payload.dim();
    if (q != code.field().q()) throw FieldMismatchError("payload dimension != code alphabet");
    int k = payload.num_qudits();
    int n = code.n();
    if (code.kappa() != 2 * k) throw LengthMismatchError("code dimension must equal 2k");

    Transcript tr;
    const std::vector<std::string> moved = payload.labels();
    QuditState state = payload;
    for (int i = 0; i < k; ++i)
        state = tensor(state, max_entangled(q, pair_label("S", i), pair_label("R", i)));
    for (int i = 0; i < k; ++i)
        state = bell_transform(state, moved[i], pair_label("S", i), pair_label("A", i), pair_label("B", i));

    // Encoding isometry: |a_1..a_k b_1..b_k> -> |encode(a||b)> on n channel
    // qudits, receiver halves carried along.
    std::vector<std::string> msg_order;
    for (int i = 0; i < k; ++i) msg_order.push_back(pair_label("A", i));
    for (int i = 0; i < k; ++i) msg_order.push_back(pair_label("B", i));
    std::vector<std::string> full_order = msg_order;
    for (int i = 0; i < k; ++i) full_order.push_back(pair_label("R", i));
    state = permute_labels(state, full_order);

    long long rest_size = 1;
    for (int i = 0; i < k; ++i) rest_size *= q;
    long long msg_count = 1;
    for (int i = 0; i < 2 * k; ++i) msg_count *= q;
    long long out_size = rest_size;
    for (int i = 0; i < n; ++i) {
        out_size *= q;
        if (out_size > kMaxAmplitudes) throw RegisterTooLargeError("encoded register exceeds 2^22 amplitudes");
    }
    std::vector<std::string> enc_labels;
    for (int i = 0; i < n; ++i) enc_labels.push_back(pair_label("C", i));
    for (int i = 0; i < k; ++i) enc_labels.push_back(pair_label("R", i));
    AmpVec enc = AmpVec::Zero(out_size);
    for (long long m = 0; m < msg_count; ++m) {
        SymbolVec msg = message_at(code.field(), 2 * k, m);
        SymbolVec cw = encode(code, msg);
        long long cw_index = 0;
        for (int i = 0; i < n; ++i) cw_index = cw_index * q + cw(i);
        enc.segment(cw_index * rest_size, rest_size) = state.amps().segment(m * rest_size, rest_size);
    }
    state = QuditState(q, enc_labels, std::move(enc));

    // Channel noise as unitaries on the n channel qudits.
    switch (channel.kind) {
    case ChannelModel::Kind::None:
        break;
    case ChannelModel::Kind::Substitution:
        for (const auto& s : channel.substitutions) {
            if (!s.is_offset)
                throw ValidationError("absolute substitutions are not unitary; use offsets in the fully-quantum variant");
            if (s.pos < 0 || s.pos >= n) throw OutOfRangeError("substitution position outside block");
            state = apply_pauli(state, pair_label("C", s.pos), s.value, 0);
        }
        break;
    case ChannelModel::Kind::Phase:
        for (int i = 0; i < n; ++i) {
            AmpVec phases = channel.random_phases ? random_phases_vec(q, rng) : AmpVec();
            if (!channel.random_phases) {
                auto it = std::find_if(channel.phases.begin(), channel.phases.end(),
                                       [i](const auto& p) { return p.first == i; });
                if (it == channel.phases.end()) continue;
                phases = it->second;
            }
            state = apply_diagonal(state, pair_label("C", i), phases);
        }
        break;
    case ChannelModel::Kind::Random:
        for (int i = 0; i < n; ++i)
            if (rng.next_double() < channel.eps) {
                int offset = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(q - 1)));
                state = apply_pauli(state, pair_label("C", i), offset, 0);
            }
        break;
    case ChannelModel::Kind::Erasure:
        throw ValidationError("erasure channel is not supported in the fully-quantum variant");
    }

    // Receiver: computational-basis measurement of the channel register.
    tr.received.resize(n);
    for (int i = 0; i < n; ++i) {
        auto [sym, collapsed] = measure_computational(state, pair_label("C", i), rng);
        tr.received[i] = sym;
        state = std::move(collapsed);
    }
    SymbolVec recv = Eigen::Map<const SymbolVec>(tr.received.data(), n);
    auto dec = decode_bounded(code, recv);
    if (dec) {
        tr.decode_ok = true;
        tr.corrected = std::vector<int>(dec->codeword.data(), dec->codeword.data() + dec->codeword.size());
        for (int i = 0; i < k; ++i) {
            tr.bell_outcomes.push_back(PauliLabel{dec->msg(i), dec->msg(k + i)});
            PauliLabel corr = correction_for(dec->msg(i), dec->msg(k + i), q);
            tr.applied_corrections.push_back(corr);
            state = apply_pauli(state, pair_label("R", i), corr.a, corr.b);
        }
    }
    for (int i = 0; i < k; ++i) state = state.renamed(pair_label("R", i), moved[i]);
    state = permute_labels(state, payload.labels());
    tr.output_fidelity = fidelity(payload, state);
    return {std::move(state), std::move(tr)};
}

std::vector<QuditState> probe_payloads(int dim, const std::vector<std::string>& labels,
                                       std::uint64_t seed) {
    int k = static_cast<int>(labels.size());
    long long size = 1;
    for (int i = 0; i < k; ++i) size *= dim;

    std::vector<QuditState> probes;
    std::vector<int> symbols(k, 0);
    for (long long idx = 0; idx < size; ++idx) {
        long long v = idx;
        for (int i = k - 1; i >= 0; --i) {
            symbols[i] = static_cast<int>(v % dim);
            v /= dim;
        }
        probes.push_back(basis_state(dim, labels, symbols));
    }
    AmpVec uniform = AmpVec::Constant(size, Complex{1.0 / std::sqrt(static_cast<double>(size)), 0.0});
    probes.emplace_back(dim, labels, std::move(uniform));

    Rng rng(seed);
    AmpVec random(size);
    for (long long i = 0; i < size; ++i) {
        double angle = 2.0 * std::numbers::pi * rng.next_double();
        random(i) = Complex{std::cos(angle), std::sin(angle)} / std::sqrt(static_cast<double>(size));
    }
    probes.emplace_back(dim, labels, std::move(random));
    return probes;
}

MonteCarloSummary monte_carlo(const LinearCode& code, const ChannelModel& channel,
                              long long trials, std::uint64_t master_seed) {
    if (trials < 1) throw ValidationError("trials must be >= 1");
    if (code.kappa() % 2 != 0) throw OddKappaError("scheme needs even code dimension");
    int k = code.kappa() / 2;
    int q = code.field().q();
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("p" + std::to_string(i));

    MonteCarloSummary sum;
    sum.trials = trials;
    double fid_total = 0.0;
    for (long long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive_seed(master_seed, static_cast<std::uint64_t>(t)));
        std::vector<QuditState> probes = probe_payloads(q, labels, rng.next_u64());
        const QuditState& payload = probes[rng.next_below(probes.size())];
        auto [state, tr] = ea_send(payload, code, channel, rng);
        fid_total += tr.output_fidelity;
        if (tr.decode_ok && tr.output_fidelity >= 1.0 - 1e-9) ++sum.successes;
    }
    sum.mean_fidelity = fid_total / static_cast<double>(trials);
    sum.failure_rate = 1.0 - static_cast<double>(sum.successes) / static_cast<double>(trials);
    return sum;
}

} // namespace eaq
