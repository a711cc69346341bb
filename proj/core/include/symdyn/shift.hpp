#ifndef SYMDYN_SHIFT_HPP
#define SYMDYN_SHIFT_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "symdyn/symbol.hpp"

namespace symdyn {

using VertexId = std::string;

struct PresEdge {
    VertexId from;
    VertexId to;
    Symbol label;

    auto operator<=>(const PresEdge&) const = default;
};

/// A finitely presented subshift: the label sequences of right-infinite edge
/// paths through this graph. Pruned form means every vertex has at least one
/// outgoing edge, so every finite path extends to an infinite one; pruning
/// runs automatically after every presentation-producing operation.
struct SubshiftPresentation {
    std::vector<VertexId> vertices; // sorted, unique
    std::set<PresEdge> edges;
    std::vector<Symbol> alphabet;   // sorted, unique; may contain unused symbols

    bool empty() const { return vertices.empty(); }

    auto operator<=>(const SubshiftPresentation&) const = default;
};

/// Validating constructor: edge endpoints must be vertices and edge labels
/// must lie in the alphabet. The result is pruned.
SubshiftPresentation make_presentation(std::vector<VertexId> vertices,
                                       std::set<PresEdge> edges,
                                       std::vector<Symbol> alphabet);

/// Iteratively removes vertices with no outgoing edge (a vertex presents
/// sequences only if an infinite path starts there).
SubshiftPresentation prune(SubshiftPresentation p);

/// A shift-commuting map between subshifts determined by its generator on
/// blocks of window+1 symbols.
struct SlidingBlockCode {
    std::size_t window = 0;
    std::vector<Symbol> source_alphabet;
    std::vector<Symbol> target_alphabet;
    std::map<Word, Symbol> gen; // keys have length window+1
};

SlidingBlockCode make_code(std::size_t window, std::vector<Symbol> source_alphabet,
                           std::vector<Symbol> target_alphabet, std::map<Word, Symbol> gen);

/// The identity 0-code on an alphabet.
SlidingBlockCode identity_code(const std::vector<Symbol>& alphabet);

/// All words of length n+1 carried by paths of n+1 consecutive edges;
/// words(p, 0) is the set of labels occurring on edges.
WordSet words(const SubshiftPresentation& p, std::size_t n);

/// True iff some path in p carries the label sequence w.
bool contains_word(const SubshiftPresentation& p, const Word& w);

/// Applies the code to a finite block: output_j = gen(s_j .. s_{j+window}).
/// The output is shorter by `window`.
std::vector<Symbol> apply_sbc(const SlidingBlockCode& c, const std::vector<Symbol>& s);

/// The induced map on words: length m+window+1 in, length m+1 out.
Word induced_word_map(const SlidingBlockCode& c, std::size_t m, const Word& input);

/// Composite code applying `inner` first; windows add.
SlidingBlockCode compose_sbc(const SlidingBlockCode& outer, const SlidingBlockCode& inner);

struct SbcCheckReport {
    bool ok = true;
    std::string detail; // names the violation when !ok
};

/// Depth-bounded validity: for all m <= depth the induced image of
/// words(src, m+window) must lie inside words(tgt, m).
bool is_valid_sbc(const SlidingBlockCode& c, const SubshiftPresentation& src,
                  const SubshiftPresentation& tgt, std::size_t depth);
SbcCheckReport check_sbc(const SlidingBlockCode& c, const SubshiftPresentation& src,
                         const SubshiftPresentation& tgt, std::size_t depth);

/// Finite presentation of the image subshift (higher-block construction):
/// vertices are window-edge paths of src, edges follow src edges, labels are
/// gen applied to the traversed word. Pruned.
SubshiftPresentation sbc_image_presentation(const SlidingBlockCode& c,
                                            const SubshiftPresentation& src);

} // namespace symdyn

#endif // SYMDYN_SHIFT_HPP
