#ifndef SYMDYN_OBSERVE_HPP
#define SYMDYN_OBSERVE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "symdyn/dynsys.hpp"
#include "symdyn/shift.hpp"
#include "symdyn/symbol.hpp"

namespace symdyn {

/// A total map from states into a finite alphabet. The domain is the key set
/// of `phi`; the alphabet may contain unused symbols.
struct Measurement {
    std::vector<Symbol> alphabet; // sorted, unique
    std::map<StateId, Symbol> phi;

    const Symbol& at(const StateId& s) const;
};

/// A system together with a measurement and an ordered list of initial
/// states (duplicates removed, order preserved).
struct ObservedSystem {
    FiniteDynSys sys;
    Measurement meas;
    std::vector<StateId> initial;
};

/// A pair (state map, symbol map) intended as a morphism of observed
/// systems; validity is established by check_obs_morphism.
struct ObsMorphism {
    std::map<StateId, StateId> h;
    std::map<Symbol, Symbol> A;
};

struct ObsCheckReport {
    bool ok = true;
    std::string detail;
};

/// Validates domain agreement (phi covers exactly the states) and initial
/// points, deduplicates the initial list.
ObservedSystem make_observed_system(FiniteDynSys sys, Measurement meas,
                                    std::vector<StateId> initial);

/// True iff h is a semiconjugacy, A . phi_x = phi_y . h, and h maps x's
/// initial points into y's initial set.
bool check_obs_morphism(const ObsMorphism& m, const ObservedSystem& x,
                        const ObservedSystem& y);
ObsCheckReport check_obs_morphism_report(const ObsMorphism& m, const ObservedSystem& x,
                                         const ObservedSystem& y);

/// The sequence phi(s), phi(step^dt s), ..., phi(step^{(len-1) dt} s).
std::vector<Symbol> observe_orbit(const ObservedSystem& x, const StateId& s,
                                  std::size_t len, std::size_t dt);

/// Labeled-graph presentation of all shifted observation sequences: vertices
/// are the forward orbit closure of the initial points under step^dt, each
/// with the single edge v -> step^dt(v) labeled phi(v).
SubshiftPresentation generate_subshift(const ObservedSystem& x, std::size_t dt);

/// Restriction of the dt-subsampled system to the forward orbit closure of
/// the initial points.
ObservedSystem orbit_system(const ObservedSystem& x, std::size_t dt);

/// Replaces the measurement by the k-fold delay tuple
/// s -> (phi(s), phi(step^dt s), ..., phi(step^{(k-1) dt} s)); the alphabet
/// holds only attained tuples. k = 0 -> InvalidWindow.
ObservedSystem delay_embed(const ObservedSystem& x, std::size_t k, std::size_t dt);

/// Fully observed system: identity measurement (states as symbols), all
/// states initial.
ObservedSystem identity_observation(const FiniteDynSys& sys);

} // namespace symdyn

#endif // SYMDYN_OBSERVE_HPP
