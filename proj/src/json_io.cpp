#include "eaq/json_io.hpp"

namespace eaq {

Json code_to_json(const LinearCode& code) {
    Json j;
    j["field"] = code.field().spec_string();
    j["n"] = code.n();
    j["kappa"] = code.kappa();
    Json gen = Json::array();
    for (int r = 0; r < code.kappa(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < code.n(); ++c) row.push_back(code.gen()(r, c));
        gen.push_back(std::move(row));
    }
    j["gen"] = std::move(gen);
    if (code.distance())
        j["d"] = *code.distance();
    else
        j["d"] = nullptr;
    return j;
}

LinearCode code_from_json(const Json& j) {
    Field field = Field::parse(j.at("field").get<std::string>());
    int n = j.at("n").get<int>();
    int kappa = j.at("kappa").get<int>();
    const Json& gen = j.at("gen");
    if (static_cast<int>(gen.size()) != kappa) throw ValidationError("gen row count != kappa");
    SymbolMat m(kappa, n);
    for (int r = 0; r < kappa; ++r) {
        if (static_cast<int>(gen[r].size()) != n) throw ValidationError("gen column count != n");
        for (int c = 0; c < n; ++c) m(r, c) = gen[r][c].get<int>();
    }
    std::optional<int> d;
    if (j.contains("d") && !j["d"].is_null()) d = j["d"].get<int>();
    return LinearCode(field, std::move(m), d);
}

Json transcript_to_json(const Transcript& tr) {
    Json j;
    Json bell = Json::array();
    for (const PauliLabel& o : tr.bell_outcomes) bell.push_back(Json::array({o.a, o.b}));
    j["bell"] = std::move(bell);
    j["sent"] = tr.sent;
    j["recv"] = tr.received;
    if (!tr.erased_positions.empty()) j["erased"] = tr.erased_positions;
    j["verdict"] = tr.decode_ok ? "ok" : "fail";
    if (tr.corrected) j["corrected"] = *tr.corrected;
    Json corr = Json::array();
    for (const PauliLabel& o : tr.applied_corrections) corr.push_back(Json::array({o.a, o.b}));
    j["corr"] = std::move(corr);
    j["fidelity"] = tr.output_fidelity;
    return j;
}

Json state_to_json(const QuditState& state) {
    Json j;
    j["dim"] = state.dim();
    j["labels"] = state.labels();
    Json amps = Json::array();
    for (long long i = 0; i < state.amps().size(); ++i) {
        amps.push_back(state.amps()(i).real());
        amps.push_back(state.amps()(i).imag());
    }
    j["amps"] = std::move(amps);
    return j;
}

Json report_to_json(const BoundReport& rep) {
    Json j;
    j["params"] = {{"n", rep.params.n},
                   {"k", rep.params.k},
                   {"d", rep.params.d},
                   {"c", rep.params.c},
                   {"q", rep.params.q}};
    Json bounds;
    for (const auto& [name, entry] : rep.per_bound)
        bounds[name] = {{"maxD", entry.max_d}, {"status", to_string(entry.status)}};
    j["bounds"] = std::move(bounds);
    j["notes"] = rep.notes;
    return j;
}

Json summary_to_json(const MonteCarloSummary& s) {
    Json j;
    j["trials"] = s.trials;
    j["successes"] = s.successes;
    j["meanFidelity"] = s.mean_fidelity;
    j["failureRate"] = s.failure_rate;
    return j;
}

} // namespace eaq
