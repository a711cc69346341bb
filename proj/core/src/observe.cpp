#include "symdyn/observe.hpp"

#include <algorithm>
#include <set>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

std::set<StateId> orbit_closure(const FiniteDynSys& sys, const std::vector<StateId>& seeds,
                                std::size_t dt) {
    std::set<StateId> closed;
    std::vector<StateId> frontier;
    for (const auto& s : seeds) {
        if (!sys.contains(s))
            throw Error(ErrorCode::StateNotFound, "initial state '" + s + "' not in system");
        if (closed.insert(s).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        StateId s = frontier.back();
        frontier.pop_back();
        StateId t = iterate(sys, s, dt);
        if (closed.insert(t).second) frontier.push_back(std::move(t));
    }
    return closed;
}

} // namespace

const Symbol& Measurement::at(const StateId& s) const {
    auto it = phi.find(s);
    if (it == phi.end())
        throw Error(ErrorCode::StateNotFound, "state '" + s + "' not measured");
    return it->second;
}

ObservedSystem make_observed_system(FiniteDynSys sys, Measurement meas,
                                    std::vector<StateId> initial) {
    std::sort(meas.alphabet.begin(), meas.alphabet.end());
    meas.alphabet.erase(std::unique(meas.alphabet.begin(), meas.alphabet.end()),
                        meas.alphabet.end());
    std::set<Symbol> alpha(meas.alphabet.begin(), meas.alphabet.end());

    for (const auto& [s, _] : sys.step)
        if (!meas.phi.count(s))
            throw Error(ErrorCode::DomainMismatch, "state '" + s + "' has no measurement");
    for (const auto& [s, y] : meas.phi) {
        if (!sys.contains(s))
            throw Error(ErrorCode::DomainMismatch,
                        "measured state '" + s + "' is not a system state");
        if (!alpha.count(y))
            throw Error(ErrorCode::AlphabetMismatch,
                        "measurement value '" + y.str() + "' not in alphabet");
    }

    std::vector<StateId> init;
    std::set<StateId> seen;
    for (const auto& s : initial) {
        if (!sys.contains(s))
            throw Error(ErrorCode::StateNotFound, "initial state '" + s + "' not in system");
        if (seen.insert(s).second) init.push_back(s);
    }
    return ObservedSystem{std::move(sys), std::move(meas), std::move(init)};
}

ObsCheckReport check_obs_morphism_report(const ObsMorphism& m, const ObservedSystem& x,
                                         const ObservedSystem& y) {
    for (const auto& [s, _] : x.sys.step)
        if (!m.h.count(s))
            throw Error(ErrorCode::MapNotTotal, "state map has no image for '" + s + "'");
    for (const auto& [_, sym] : x.meas.phi)
        if (!m.A.count(sym))
            throw Error(ErrorCode::MapNotTotal,
                        "symbol map has no image for '" + sym.str() + "'");

    DynMorphism dm{x.sys, y.sys, m.h};
    if (!check_semiconjugacy(dm)) return {false, "state map is not a semiconjugacy"};

    for (const auto& [s, sym] : x.meas.phi) {
        const Symbol& lhs = m.A.at(sym);
        const Symbol& rhs = y.meas.at(m.h.at(s));
        if (lhs != rhs)
            return {false, "measurement square fails at state '" + s + "': A(phi(s)) = '" +
                               lhs.str() + "' but phi'(h(s)) = '" + rhs.str() + "'"};
    }

    std::set<StateId> target_initial(y.initial.begin(), y.initial.end());
    for (const auto& s : x.initial)
        if (!target_initial.count(m.h.at(s)))
            return {false, "initial point '" + s + "' maps to '" + m.h.at(s) +
                               "' which is not initial in the target"};
    return {};
}

bool check_obs_morphism(const ObsMorphism& m, const ObservedSystem& x,
                        const ObservedSystem& y) {
    return check_obs_morphism_report(m, x, y).ok;
}

std::vector<Symbol> observe_orbit(const ObservedSystem& x, const StateId& s,
                                  std::size_t len, std::size_t dt) {
    if (dt == 0) throw Error(ErrorCode::InvalidStride, "stride must be positive");
    if (!x.sys.contains(s))
        throw Error(ErrorCode::StateNotFound, "state '" + s + "' not in system");
    std::vector<Symbol> out;
    out.reserve(len);
    StateId cur = s;
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(x.meas.at(cur));
        cur = iterate(x.sys, cur, dt);
    }
    return out;
}

SubshiftPresentation generate_subshift(const ObservedSystem& x, std::size_t dt) {
    if (dt == 0) throw Error(ErrorCode::InvalidStride, "stride must be positive");
    std::set<StateId> closed = orbit_closure(x.sys, x.initial, dt);
    std::vector<VertexId> vertices(closed.begin(), closed.end());
    std::set<PresEdge> edges;
    for (const auto& v : closed) edges.insert({v, iterate(x.sys, v, dt), x.meas.at(v)});
    return make_presentation(std::move(vertices), std::move(edges), x.meas.alphabet);
}

ObservedSystem orbit_system(const ObservedSystem& x, std::size_t dt) {
    std::set<StateId> closed = orbit_closure(x.sys, x.initial, dt);
    FiniteDynSys sub = subsample(x.sys, dt);
    Measurement meas;
    meas.alphabet = x.meas.alphabet;
    FiniteDynSys restricted;
    for (const auto& s : closed) {
        restricted.step[s] = sub.step.at(s);
        meas.phi[s] = x.meas.at(s);
    }
    return ObservedSystem{std::move(restricted), std::move(meas), x.initial};
}

ObservedSystem delay_embed(const ObservedSystem& x, std::size_t k, std::size_t dt) {
    if (k == 0) throw Error(ErrorCode::InvalidWindow, "delay window must be positive");
    if (dt == 0) throw Error(ErrorCode::InvalidStride, "stride must be positive");
    Measurement meas;
    std::set<Symbol> attained;
    for (const auto& [s, _] : x.sys.step) {
        std::vector<Symbol> coords = observe_orbit(x, s, k, dt);
        Symbol tup = Symbol::tuple(std::move(coords));
        attained.insert(tup);
        meas.phi[s] = std::move(tup);
    }
    meas.alphabet.assign(attained.begin(), attained.end());
    return ObservedSystem{x.sys, std::move(meas), x.initial};
}

ObservedSystem identity_observation(const FiniteDynSys& sys) {
    Measurement meas;
    std::vector<StateId> initial;
    for (const auto& [s, _] : sys.step) {
        meas.phi[s] = Symbol(s);
        meas.alphabet.push_back(Symbol(s));
        initial.push_back(s);
    }
    return ObservedSystem{sys, std::move(meas), std::move(initial)};
}

} // namespace symdyn
