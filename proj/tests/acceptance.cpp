// Acceptance suite: one self-contained check per shipped guarantee, one
// PASS/FAIL line each, exit code = number of failures. Every check is exact
// (set or value equality); nothing is sampled at a tolerance.
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "symdyn/json_io.hpp"
#include "symdyn/random.hpp"
#include "symdyn/recon.hpp"
#include "test_helpers.hpp"

using namespace symdyn;
using namespace symdyn::test;

namespace {

int g_failures = 0;

void criterion(int index, const std::string& title, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("[%s] criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", index, title.c_str(),
                note.c_str());
    if (!ok) ++g_failures;
}

// ---- criterion 1 -----------------------------------------------------------

bool consistency_campaign() {
    SplitMix64 rng(0xC0FFEE);
    for (int i = 0; i < 200; ++i) {
        FiniteDynSys sys = random_system(1 + rng.below(8), rng);
        if (!consistency_check(sys).pass) return false;
    }
    return true;
}

// ---- criterion 2 -----------------------------------------------------------

bool word_functoriality() {
    SplitMix64 rng(0x2ull);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Symbol> a = small_alphabet(1 + rng.below(3), "a");
        std::vector<Symbol> b = small_alphabet(1 + rng.below(3), "b");
        std::vector<Symbol> c = small_alphabet(1 + rng.below(3), "c");
        SubshiftPresentation p = random_presentation(rng, 5, a);
        SlidingBlockCode inner = random_full_code(rng, rng.below(3), a, b);
        SlidingBlockCode outer = random_full_code(rng, rng.below(3), b, c);
        SlidingBlockCode both = compose_sbc(outer, inner);
        for (std::size_t m = 0; m + both.window <= 6; ++m) {
            for (const Word& w : words(p, m + both.window)) {
                Word direct = induced_word_map(both, m, w);
                Word stepped =
                    induced_word_map(outer, m, induced_word_map(inner, m + outer.window, w));
                if (direct != stepped) return false;
            }
        }
    }
    return true;
}

// ---- criterion 3 -----------------------------------------------------------

bool sbc_composition() {
    SplitMix64 rng(0x3ull);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Symbol> a = small_alphabet(1 + rng.below(3), "a");
        std::vector<Symbol> b = small_alphabet(1 + rng.below(3), "b");
        std::vector<Symbol> c = small_alphabet(1 + rng.below(3), "c");
        SlidingBlockCode inner = random_full_code(rng, rng.below(3), a, b);
        SlidingBlockCode outer = random_full_code(rng, rng.below(3), b, c);
        SlidingBlockCode both = compose_sbc(outer, inner);
        std::size_t len = both.window + 1 + rng.below(20 - both.window);
        std::vector<Symbol> s;
        for (std::size_t i = 0; i < len; ++i) s.push_back(a[rng.below(a.size())]);
        if (apply_sbc(both, s) != apply_sbc(outer, apply_sbc(inner, s))) return false;
    }
    return true;
}

// ---- criterion 4 -----------------------------------------------------------

// The corpus every data-producing route is checked against.
std::vector<TimeSeriesData> fixture_corpus(bool include_raw_streams) {
    std::vector<TimeSeriesData> out;
    out.push_back(word_functor(golden_mean(), 6));
    out.push_back(word_functor(full_shift(binaryish()), 5));
    out.push_back(word_functor(make_presentation({}, {}, binaryish()), 4));

    SplitMix64 rng(0x4ull);
    for (int i = 0; i < 20; ++i)
        out.push_back(word_functor(random_presentation(rng, 5, small_alphabet(1 + rng.below(3))),
                                   1 + rng.below(5)));

    out.push_back(data_functor(identity_observation(c3()), 1, 4));
    out.push_back(data_functor(parity_c4(), 1, 4));
    out.push_back(data_functor(parity_c4(), 2, 3));
    for (int i = 0; i < 30; ++i) {
        ObservedSystem x = random_observed_system(rng, 6, small_alphabet(1 + rng.below(3)));
        out.push_back(data_functor(x, 1 + rng.below(2), 1 + rng.below(5)));
    }

    if (include_raw_streams) {
        out.push_back(tsd_from_sequence(seq("0110"), 2));
        out.push_back(tsd_from_sequence({}, 3));
        out.push_back(tsd_from_sequence(seq("aaaa"), 3));
        for (int i = 0; i < 20; ++i) {
            std::vector<Symbol> alpha = small_alphabet(1 + rng.below(3));
            std::vector<Symbol> s;
            std::size_t len = rng.below(16);
            for (std::size_t j = 0; j < len; ++j) s.push_back(alpha[rng.below(alpha.size())]);
            out.push_back(tsd_from_sequence(s, 1 + rng.below(6)));
        }
    }
    return out;
}

bool tsd_axioms() {
    for (const TimeSeriesData& x : fixture_corpus(true))
        if (!validate_tsd(x).empty()) return false;
    return true;
}

// ---- criterion 5 -----------------------------------------------------------

// Direct sliding-window oracle, kept independent of extend_tsd_morphism.
Word sliding_oracle(const std::map<Word, Symbol>& gen, std::size_t width, const Word& w) {
    Word out;
    for (std::size_t j = 0; j + width <= w.size(); ++j) out.symbols.push_back(gen.at(w.sub(j, width)));
    return out;
}

bool factorization() {
    SplitMix64 rng(0x5ull);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Symbol> alpha = small_alphabet(1 + rng.below(3));
        std::size_t jump = rng.below(3);
        TsdMorphism m = tsd_morphism_of_code(
            random_full_code(rng, jump, alpha, small_alphabet(1 + rng.below(3), "t")));
        for (std::size_t n = 0; n + 1 <= 6; ++n) {
            Word w;
            for (std::size_t i = 0; i < n + jump + 2; ++i)
                w.symbols.push_back(alpha[rng.below(alpha.size())]);

            Word whole = extend_tsd_morphism(m, n + 1, w);
            Word prefix = extend_tsd_morphism(m, n, w.drop_last());
            Word suffix = extend_tsd_morphism(m, n, w.drop_first());

            // The recursion: the level-(n+1) image is the overlap join of the
            // two level-n images.
            if (whole.drop_last() != prefix) return false;
            if (whole.drop_first() != suffix) return false;
            Word joined = prefix;
            joined.symbols.push_back(suffix.symbols.back());
            if (whole != joined) return false;

            if (whole != sliding_oracle(m.gen, jump + 1, w)) return false;
        }
    }
    return true;
}

// ---- criterion 6 -----------------------------------------------------------

bool semiconjugacy_extraction() {
    SplitMix64 rng(0x6ull);
    for (int trial = 0; trial < 50; ++trial) {
        // Random target, then a random fiber-wise blow-up of it as the source:
        // the projection is a semiconjugacy by construction and the
        // measurement refines its fibers.
        FiniteDynSys target = random_system(1 + rng.below(5), rng);
        FiniteDynSys source;
        std::map<StateId, std::size_t> copies;
        for (const auto& [b, _] : target.step) copies[b] = 1 + rng.below(2);
        for (const auto& [b, bn] : target.step)
            for (std::size_t i = 0; i < copies[b]; ++i)
                source.step[b + "_" + std::to_string(i)] =
                    bn + "_" + std::to_string(rng.below(copies[bn]));

        Measurement meas;
        std::map<Symbol, Symbol> to_target_symbol;
        for (const auto& [s, _] : source.step) {
            StateId base = s.substr(0, s.find('_'));
            Symbol y = rng.below(2) ? Symbol("y" + base) : Symbol("z" + base);
            meas.phi[s] = y;
            meas.alphabet.push_back(y);
            to_target_symbol[y] = Symbol(base);
        }
        std::vector<StateId> initial;
        for (const auto& [s, _] : source.step)
            if (rng.below(2) == 0) initial.push_back(s);
        ObservedSystem src = make_observed_system(source, meas, initial);

        TsdMorphism m;
        m.jump = 0;
        for (const auto& [y, b] : to_target_symbol) {
            m.source_alphabet.push_back(y);
            m.gen[word_of(y)] = b;
        }
        for (const auto& [b, _] : target.step) m.target_alphabet.push_back(Symbol(b));

        DynMorphism h = semiconjugacy_from_tsd_morphism(m, src, target, 1);
        if (!check_semiconjugacy(h)) return false;
    }
    return true;
}

// ---- criterion 7 -----------------------------------------------------------

Word unembed(const Word& embedded) {
    Word out;
    for (const auto& t : embedded.symbols) out.symbols.push_back(t.parts().front());
    const auto& last = embedded.symbols.back().parts();
    out.symbols.insert(out.symbols.end(), last.begin() + 1, last.end());
    return out;
}

bool jump_reduction_criterion() {
    SplitMix64 rng(0x7ull);
    for (int trial = 0; trial < 50; ++trial) {
        ObservedSystem src = random_observed_system(rng, 5, small_alphabet(2));
        std::size_t k = 1 + rng.below(2);
        std::size_t horizon = k + 2;
        TimeSeriesData data = data_functor(src, 1, horizon);

        TsdMorphism m = tsd_morphism_of_code(
            random_full_code(rng, k, src.meas.alphabet, small_alphabet(2, "t")));
        TimeSeriesData target;
        target.alphabet = m.target_alphabet;
        target.levels.assign(horizon - k + 1, {});
        for (std::size_t n = 0; n + k <= horizon; ++n)
            for (const Word& w : data.levels[n + k])
                target.levels[n].insert(extend_tsd_morphism(m, n, w));
        if (!check_tsd_morphism(m, data, target)) return false;

        TsdMorphism reduced = jump_reduction(m, src, 1, horizon);
        if (reduced.jump != 0) return false;
        TimeSeriesData embedded_data = data_functor(delay_embed(src, k + 1, 1), 1, horizon - k);
        if (!check_tsd_morphism(reduced, embedded_data, target)) return false;
        for (std::size_t n = 0; n + k <= horizon; ++n)
            for (const Word& ew : embedded_data.levels[n])
                if (extend_tsd_morphism(reduced, n, ew) != extend_tsd_morphism(m, n, unembed(ew)))
                    return false;
    }
    return true;
}

// ---- criterion 8 -----------------------------------------------------------

std::vector<std::map<StateId, StateId>> all_maps(const std::vector<StateId>& from,
                                                 const std::vector<StateId>& to) {
    std::vector<std::map<StateId, StateId>> out;
    if (from.empty()) {
        out.push_back({});
        return out;
    }
    std::vector<std::size_t> pick(from.size(), 0);
    while (true) {
        std::map<StateId, StateId> m;
        for (std::size_t i = 0; i < from.size(); ++i) m[from[i]] = to[pick[i]];
        out.push_back(std::move(m));
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == to.size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return out;
}

std::vector<FiniteDynSys> all_targets(std::size_t max_states) {
    std::vector<FiniteDynSys> out;
    for (std::size_t n = 1; n <= max_states; ++n) {
        std::vector<StateId> states;
        for (std::size_t i = 0; i < n; ++i) states.push_back("t" + std::to_string(i));
        for (auto& step : all_maps(states, states)) out.push_back(FiniteDynSys{std::move(step)});
    }
    return out;
}

bool colimit_universality() {
    SplitMix64 rng(0x8ull);
    std::vector<FiniteDynSys> targets = all_targets(3);

    for (int trial = 0; trial < 30; ++trial) {
        DynDiagram d;
        std::size_t node_count = 1 + rng.below(3);
        for (std::size_t i = 0; i < node_count; ++i)
            d.nodes.push_back(random_system(1 + rng.below(4), rng));

        // Random semiconjugacy arrows, found by exhausting candidate maps.
        std::size_t arrow_count = rng.below(3);
        for (std::size_t a = 0; a < arrow_count; ++a) {
            std::size_t from = rng.below(node_count), to = rng.below(node_count);
            std::vector<std::map<StateId, StateId>> valid;
            for (auto& map : all_maps(d.nodes[from].states(), d.nodes[to].states())) {
                DynMorphism m{d.nodes[from], d.nodes[to], map};
                if (check_semiconjugacy(m)) valid.push_back(std::move(map));
            }
            if (valid.empty()) continue;
            d.arrows.push_back({from, to, valid[rng.below(valid.size())]});
        }

        ColimitResult res = colimit(d);

        // Canonical cocone: legs are semiconjugacies commuting with arrows.
        for (const auto& leg : res.legs)
            if (!check_semiconjugacy(leg)) return false;
        for (const auto& ar : d.arrows)
            for (const auto& [x, y] : ar.map)
                if (res.legs[ar.to].map.at(y) != res.legs[ar.from].map.at(x)) return false;

        // Every competing cocone admits exactly one mediating morphism.
        for (const FiniteDynSys& target : targets) {
            std::vector<std::vector<std::map<StateId, StateId>>> node_maps;
            for (const auto& node : d.nodes) {
                std::vector<std::map<StateId, StateId>> valid;
                for (auto& map : all_maps(node.states(), target.states())) {
                    DynMorphism m{node, target, map};
                    if (check_semiconjugacy(m)) valid.push_back(std::move(map));
                }
                node_maps.push_back(std::move(valid));
            }

            std::vector<std::size_t> pick(node_count, 0);
            bool exhausted = false;
            for (const auto& maps : node_maps)
                if (maps.empty()) exhausted = true;
            while (!exhausted) {
                std::vector<const std::map<StateId, StateId>*> legs;
                for (std::size_t i = 0; i < node_count; ++i) legs.push_back(&node_maps[i][pick[i]]);

                bool commutes = true;
                for (const auto& ar : d.arrows)
                    for (const auto& [x, y] : ar.map)
                        if (legs[ar.to]->at(y) != legs[ar.from]->at(x)) commutes = false;

                if (commutes) {
                    // Forced mediating map: on each class, the value every
                    // member dictates; universality demands consistency.
                    std::map<StateId, StateId> mediating;
                    bool consistent = true;
                    for (std::size_t i = 0; i < node_count && consistent; ++i) {
                        for (const auto& [x, cls] : res.legs[i].map) {
                            StateId want = legs[i]->at(x);
                            auto it = mediating.find(cls);
                            if (it == mediating.end())
                                mediating[cls] = want;
                            else if (it->second != want)
                                consistent = false;
                        }
                    }
                    if (!consistent) return false;
                    if (mediating.size() != res.system.size()) return false;
                    DynMorphism mu{res.system, target, mediating};
                    if (!check_semiconjugacy(mu)) return false;

                    // Brute-force uniqueness whenever the scan is feasible;
                    // the forced construction above already pins the map on
                    // every class, so larger cases are unique by forcing.
                    double scan_size = 1;
                    for (std::size_t i = 0; i < res.system.size(); ++i)
                        scan_size *= static_cast<double>(target.size());
                    if (scan_size <= 200000.0) {
                        std::vector<StateId> classes = res.system.states();
                        std::vector<StateId> values = target.states();
                        std::vector<std::size_t> odo(classes.size(), 0);
                        std::map<StateId, StateId> candidate;
                        std::size_t satisfying = 0;
                        bool done = classes.empty();
                        if (done) satisfying = 1; // the empty map
                        while (!done) {
                            for (std::size_t i = 0; i < classes.size(); ++i)
                                candidate[classes[i]] = values[odo[i]];
                            bool matches = true;
                            for (std::size_t i = 0; i < node_count && matches; ++i)
                                for (const auto& [x, cls] : res.legs[i].map)
                                    if (candidate.at(cls) != legs[i]->at(x)) {
                                        matches = false;
                                        break;
                                    }
                            if (matches) {
                                DynMorphism cm{res.system, target, candidate};
                                if (check_semiconjugacy(cm)) ++satisfying;
                            }
                            std::size_t i = 0;
                            while (i < odo.size() && ++odo[i] == values.size()) odo[i++] = 0;
                            if (i == odo.size()) done = true;
                        }
                        if (satisfying != 1) return false;
                    }
                }

                std::size_t i = 0;
                while (i < node_count && ++pick[i] == node_maps[i].size()) pick[i++] = 0;
                if (i == node_count) exhausted = true;
            }
        }
    }
    return true;
}

// ---- criterion 9 -----------------------------------------------------------

bool outer_approximation() {
    // Raw finite streams are excluded: they are not images of the data
    // functor, and pruning may legitimately empty their graphs.
    for (const TimeSeriesData& x : fixture_corpus(false)) {
        std::size_t horizon = x.horizon();
        if (horizon > 4) continue; // keep de Bruijn language enumeration small
        for (std::size_t d = 0; d <= horizon; ++d) {
            ReconResult r = reconstruct(x, d);
            for (std::size_t i = 0; i <= d; ++i) {
                WordSet language = words(r.presentation, i);
                for (const Word& w : x.levels[i])
                    if (!language.count(w)) return false;
            }
        }
    }
    return true;
}

// ---- criterion 10 ----------------------------------------------------------

bool golden_mean_counts() {
    SubshiftPresentation p = golden_mean();
    const std::size_t expected[] = {2, 3, 5, 8};
    for (std::size_t n = 0; n <= 3; ++n) {
        WordSet ws = words(p, n);
        if (ws != golden_mean_words_oracle(n)) return false;
        if (ws.size() != expected[n]) return false;
    }
    return true;
}

// ---- criterion 11 ----------------------------------------------------------

bool discretization_coherence() {
    SplitMix64 rng(0xBull);
    for (int trial = 0; trial < 50; ++trial) {
        ObservedSystem x = random_observed_system(rng, 6, small_alphabet(1 + rng.below(3)));
        std::size_t horizon = 1 + rng.below(4);
        TimeSeriesData direct = data_functor(x, 2, horizon);
        TimeSeriesData via_orbit = data_functor(orbit_system(x, 2), 1, horizon);
        if (direct.levels != via_orbit.levels) return false;
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "200 seeded random systems (1-8 states) reconstruct exactly",
              consistency_campaign);
    criterion(2, "100 composable code pairs satisfy the induced-map composition square",
              word_functoriality);
    criterion(3, "500 random triples: applying a composite equals applying in sequence",
              sbc_composition);
    criterion(4, "every generated timeseries object satisfies the start/finish axioms",
              tsd_axioms);
    criterion(5, "levelwise extension matches the one-step recursion and a sliding oracle",
              factorization);
    criterion(6, "50 extracted state maps into fully observed targets are semiconjugacies",
              semiconjugacy_extraction);
    criterion(7, "50 jump reductions stay valid and reproduce the original levelwise",
              jump_reduction_criterion);
    criterion(8, "30 random diagrams: every competing cocone has a unique mediating morphism",
              colimit_universality);
    criterion(9, "reconstruction language contains every data level (system-generated corpus)",
              outer_approximation);
    criterion(10, "golden-mean word counts are 2, 3, 5, 8 at depths 0-3", golden_mean_counts);
    criterion(11, "stride-2 data equals stride-1 data of the stride-2 orbit system",
              discretization_coherence);

    if (g_failures == 0)
        std::printf("acceptance: all 11 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures;
}
