#ifndef SYMDYN_DYNSYS_HPP
#define SYMDYN_DYNSYS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace symdyn {

using StateId = std::string;

/// A finite state set with a total self-map. The state set is exactly the
/// key set of `step`; the empty system is valid (it is the colimit of the
/// empty diagram).
struct FiniteDynSys {
    std::map<StateId, StateId> step;

    bool contains(const StateId& s) const { return step.count(s) != 0; }
    std::size_t size() const { return step.size(); }
    bool empty() const { return step.empty(); }
    std::vector<StateId> states() const;
    const StateId& step_of(const StateId& s) const;

    auto operator<=>(const FiniteDynSys&) const = default;
};

/// Validating constructor: every step value must itself be a state.
FiniteDynSys make_system(std::map<StateId, StateId> step);

/// A map between two systems, intended as a semiconjugacy
/// (map . step_source = step_target . map). Validity is checked by
/// check_semiconjugacy, not enforced on construction.
struct DynMorphism {
    FiniteDynSys source;
    FiniteDynSys target;
    std::map<StateId, StateId> map;
};

struct DiagramArrow {
    std::size_t from = 0;
    std::size_t to = 0;
    std::map<StateId, StateId> map;
};

/// A finite diagram of systems and semiconjugacies between them.
struct DynDiagram {
    std::vector<FiniteDynSys> nodes;
    std::vector<DiagramArrow> arrows;
};

struct ColimitResult {
    FiniteDynSys system;
    std::vector<DynMorphism> legs; // one per diagram node, into `system`
};

struct RestrictionResult {
    FiniteDynSys system;
    DynMorphism inclusion; // from `system` into the ambient system
};

/// n-fold application of the step map.
StateId iterate(const FiniteDynSys& sys, const StateId& s, std::size_t n);

/// True iff map(step_src(s)) = step_tgt(map(s)) for every source state and
/// every map value is a target state. Throws MapNotTotal if some source
/// state has no image.
bool check_semiconjugacy(const DynMorphism& m);

/// Composition target-after-source; both inputs are assumed composable
/// (f.target == g.source).
DynMorphism compose_morphisms(const DynMorphism& g, const DynMorphism& f);

/// Same states, step replaced by its dt-th iterate. dt = 0 -> InvalidStride.
FiniteDynSys subsample(const FiniteDynSys& sys, std::size_t dt);

/// Smallest step-closed subsystem containing the seeds, with its inclusion.
RestrictionResult reachable_restriction(const FiniteDynSys& sys,
                                        const std::set<StateId>& seeds);

/// Colimit of a finite diagram: quotient of the disjoint union by the
/// equivalence generated by x ~ arrow(x), with the induced step. Quotient
/// states are named by the sorted list of their (node-index, id) members so
/// output is deterministic. Throws InvalidDiagram if an arrow is not a
/// semiconjugacy or the induced step is ill-defined.
ColimitResult colimit(const DynDiagram& d);

/// Exact conjugacy search by pruned backtracking; intended for small systems
/// (|states| up to roughly a dozen). Returns a bijection h with
/// h . step_a = step_b . h, or nullopt.
std::optional<std::map<StateId, StateId>> find_conjugacy(const FiniteDynSys& a,
                                                         const FiniteDynSys& b);

} // namespace symdyn

#endif // SYMDYN_DYNSYS_HPP
