#ifndef SYMDYN_RECON_HPP
#define SYMDYN_RECON_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "symdyn/dynsys.hpp"
#include "symdyn/observe.hpp"
#include "symdyn/tsd.hpp"

namespace symdyn {

/// Result of reconstructing a system from timeseries data at a given block
/// order. The presentation is the order-d de Bruijn graph of the observed
/// word sets (vertices X_order, edges on (order)-overlap, labels the first
/// symbol), pruned. When the pruned graph is deterministic (exactly one
/// outgoing edge per vertex) the extracted observed system is present: its
/// step follows the unique successor, its measurement reads the first
/// symbol of the state word, and all states are initial.
struct ReconResult {
    SubshiftPresentation presentation;
    std::optional<ObservedSystem> system;
    std::size_t order = 0;
    std::map<StateId, Word> state_words;
    bool empty_data = false; // pruning left nothing (or X_order was empty)
};

struct ConsistencyReport {
    bool pass = false;
    std::optional<std::map<StateId, StateId>> bijection; // word-state -> original state
    std::string note;
};

struct InducedReconMorphism {
    std::optional<DynMorphism> morphism;
    std::string diagnostic; // set when morphism is absent
};

/// De Bruijn reconstruction at the given order (default: the largest level
/// with data). The input must satisfy the timeseries axioms.
ReconResult reconstruct(const TimeSeriesData& x,
                        std::optional<std::size_t> order = std::nullopt);

/// Reconstructs the fully observed system from its own stride-1 data at
/// order 1 and searches for a conjugacy back to the original.
ConsistencyReport consistency_check(const FiniteDynSys& sys);

/// Functorial action of reconstruction on a jump-0 morphism: maps the word
/// state w to the image word under m. Present iff every image is a state of
/// the target reconstruction and the map is a semiconjugacy.
InducedReconMorphism induced_recon_morphism(const TsdMorphism& m, const TimeSeriesData& x,
                                            const TimeSeriesData& y, std::size_t order);

/// Extracts the semiconjugacy h = gen . phi from a jump-0 morphism of the
/// source's data into fully observed target data; h runs from the orbit
/// restriction of src at stride dt into tgt_sys.
DynMorphism semiconjugacy_from_tsd_morphism(const TsdMorphism& m, const ObservedSystem& src,
                                            const FiniteDynSys& tgt_sys, std::size_t dt);

/// Converts a jump-k morphism (k >= 1) out of src's data into a jump-0
/// morphism out of the delay-embedded source. The embedded source is
/// delay_embed(src, k+1, dt): a window of k+1 coordinates is what makes one
/// tuple determine one generator key of m, and that embedding carries data
/// up to horizon - k.
TsdMorphism jump_reduction(const TsdMorphism& m, const ObservedSystem& src, std::size_t dt,
                           std::size_t horizon);

} // namespace symdyn

#endif // SYMDYN_RECON_HPP
