#include "symdyn/recon.hpp"

#include <algorithm>
#include <set>

#include "symdyn/error.hpp"

namespace symdyn {

ReconResult reconstruct(const TimeSeriesData& x, std::optional<std::size_t> order_opt) {
    auto violations = validate_tsd(x);
    if (!violations.empty())
        throw Error(ErrorCode::InvalidTsd, violations.front().describe());

    std::size_t order = 0;
    if (order_opt) {
        order = *order_opt;
        if (order > x.horizon())
            throw Error(ErrorCode::OrderTooLarge,
                        "order " + std::to_string(order) + " exceeds horizon " +
                            std::to_string(x.horizon()));
    } else {
        for (std::size_t i = 0; i < x.levels.size(); ++i)
            if (!x.levels[i].empty()) order = i;
    }

    ReconResult res;
    res.order = order;

    static const WordSet no_blocks;
    const WordSet& blocks = order < x.levels.size() ? x.levels[order] : no_blocks;
    std::vector<VertexId> vertices;
    std::map<VertexId, Word> by_name;
    for (const Word& w : blocks) {
        VertexId name = w.str();
        vertices.push_back(name);
        by_name.emplace(std::move(name), w);
    }

    std::set<PresEdge> edges;
    for (const Word& w : blocks)
        for (const Word& v : blocks)
            if (w.drop_first() == v.drop_last())
                edges.insert({w.str(), v.str(), w.symbols.front()});

    res.presentation = make_presentation(std::move(vertices), std::move(edges), x.alphabet);

    for (const auto& v : res.presentation.vertices)
        res.state_words.emplace(v, by_name.at(v));

    res.empty_data = res.presentation.empty();

    // Deterministic iff every surviving vertex has exactly one outgoing edge.
    std::map<VertexId, std::size_t> out_degree;
    std::map<VertexId, VertexId> successor;
    for (const auto& v : res.presentation.vertices) out_degree[v] = 0;
    for (const auto& e : res.presentation.edges) {
        out_degree[e.from]++;
        successor[e.from] = e.to;
    }
    bool deterministic = true;
    for (const auto& [_, deg] : out_degree)
        if (deg != 1) deterministic = false;

    if (deterministic) {
        FiniteDynSys sys;
        Measurement meas;
        meas.alphabet = x.alphabet;
        std::vector<StateId> initial;
        for (const auto& v : res.presentation.vertices) {
            sys.step[v] = successor.at(v);
            meas.phi[v] = res.state_words.at(v).symbols.front();
            initial.push_back(v);
        }
        res.system = ObservedSystem{std::move(sys), std::move(meas), std::move(initial)};
    }
    return res;
}

ConsistencyReport consistency_check(const FiniteDynSys& sys) {
    ConsistencyReport report;
    ObservedSystem full = identity_observation(sys);
    ReconResult r = reconstruct(data_functor(full, 1, 1), 1);
    if (!r.system) {
        report.note = "reconstruction is nondeterministic";
        return report;
    }
    auto bijection = find_conjugacy(r.system->sys, sys);
    if (!bijection) {
        report.note = "reconstructed system is not conjugate to the original";
        return report;
    }
    report.pass = true;
    report.bijection = std::move(bijection);
    return report;
}

InducedReconMorphism induced_recon_morphism(const TsdMorphism& m, const TimeSeriesData& x,
                                            const TimeSeriesData& y, std::size_t order) {
    if (m.jump != 0)
        throw Error(ErrorCode::InvalidTsdMorphism, "induced morphism needs jump 0");

    if (!check_tsd_morphism(m, x, y))
        return {std::nullopt, "morphism is not valid between the two datasets"};

    ReconResult rx = reconstruct(x, order);
    ReconResult ry = reconstruct(y, order);
    if (!rx.system || !ry.system)
        throw Error(ErrorCode::NondeterministicReconstruction,
                    "reconstruction at order " + std::to_string(order) +
                        " is not deterministic");

    DynMorphism dm;
    dm.source = rx.system->sys;
    dm.target = ry.system->sys;
    for (const auto& [state, w] : rx.state_words) {
        Word img = extend_tsd_morphism(m, order, w);
        VertexId img_state = img.str();
        if (!ry.system->sys.contains(img_state))
            return {std::nullopt, "image word '" + img.str() +
                                      "' is not a state of the target reconstruction"};
        dm.map[state] = std::move(img_state);
    }
    if (!check_semiconjugacy(dm))
        return {std::nullopt, "induced state map is not a semiconjugacy"};
    return {std::move(dm), ""};
}

DynMorphism semiconjugacy_from_tsd_morphism(const TsdMorphism& m, const ObservedSystem& src,
                                            const FiniteDynSys& tgt_sys, std::size_t dt) {
    if (m.jump != 0)
        throw Error(ErrorCode::InvalidTsdMorphism, "extraction needs a jump-0 morphism");

    TimeSeriesData source_data = data_functor(src, dt, 1);
    TimeSeriesData target_data = data_functor(identity_observation(tgt_sys), 1, 1);
    try {
        if (!check_tsd_morphism(m, source_data, target_data))
            throw Error(ErrorCode::InvalidTsdMorphism,
                        "morphism is not valid into the fully observed data");
    } catch (const Error& e) {
        if (e.code() == ErrorCode::UnknownWord)
            throw Error(ErrorCode::InvalidTsdMorphism, e.what());
        throw;
    }

    ObservedSystem orbit = orbit_system(src, dt);
    DynMorphism dm;
    dm.source = orbit.sys;
    dm.target = tgt_sys;
    for (const auto& [s, _] : orbit.sys.step) {
        const Symbol& img = m.gen.at(word_of(orbit.meas.at(s)));
        dm.map[s] = img.atom();
    }
    return dm;
}

TsdMorphism jump_reduction(const TsdMorphism& m, const ObservedSystem& src, std::size_t dt,
                           std::size_t horizon) {
    if (m.jump == 0)
        throw Error(ErrorCode::NothingToReduce, "morphism already has jump 0");
    if (m.jump > horizon)
        throw Error(ErrorCode::OrderTooLarge, "jump exceeds the data horizon");

    // One (jump+1)-coordinate tuple pins down exactly one generator key.
    ObservedSystem embedded = delay_embed(src, m.jump + 1, dt);
    ObservedSystem reachable = orbit_system(embedded, dt);

    TsdMorphism out;
    out.jump = 0;
    out.target_alphabet = m.target_alphabet;
    std::set<Symbol> attained;
    for (const auto& [s, _] : reachable.sys.step) {
        const Symbol& tuple = reachable.meas.at(s);
        if (!attained.insert(tuple).second) continue;
        Word window(tuple.parts());
        auto it = m.gen.find(window);
        if (it == m.gen.end())
            throw Error(ErrorCode::UnknownWord,
                        "generator undefined on window '" + window.str() + "'");
        out.gen[word_of(tuple)] = it->second;
    }
    out.source_alphabet.assign(attained.begin(), attained.end());
    return out;
}

} // namespace symdyn
