#ifndef SYMDYN_TSD_HPP
#define SYMDYN_TSD_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/observe.hpp"
#include "symdyn/shift.hpp"
#include "symdyn/symbol.hpp"

namespace symdyn {

/// Timeseries data up to a finite horizon N: word sets X_0 .. X_N where X_i
/// holds words of length i+1, closed under deleting the first symbol (start)
/// and the last symbol (finish). Levels may be empty from some index on.
struct TimeSeriesData {
    std::vector<Symbol> alphabet;  // sorted, unique
    std::vector<WordSet> levels;   // levels.size() == horizon + 1

    std::size_t horizon() const { return levels.empty() ? 0 : levels.size() - 1; }

    auto operator<=>(const TimeSeriesData&) const = default;
};

struct TsdViolation {
    std::size_t level = 0;
    Word word;
    std::string axiom; // which axiom failed

    std::string describe() const;
};

/// A morphism of timeseries data with the given jump, stored by its
/// generator on (jump+1)-words; higher levels are derived by sliding.
struct TsdMorphism {
    std::size_t jump = 0;
    std::vector<Symbol> source_alphabet;
    std::vector<Symbol> target_alphabet;
    std::map<Word, Symbol> gen;
};

struct TsdCheckReport {
    bool ok = true;
    std::string detail;
};

/// Empty iff all invariants hold; diagnostic, never throws.
std::vector<TsdViolation> validate_tsd(const TimeSeriesData& x);

/// Levels X_i = words(p, i) for i <= horizon.
TimeSeriesData word_functor(const SubshiftPresentation& p, std::size_t horizon);

/// Levels are the contiguous windows of one finite symbol stream.
TimeSeriesData tsd_from_sequence(const std::vector<Symbol>& s, std::size_t horizon);

/// The composite of subshift generation and the word functor: the data an
/// observed system produces at stride dt.
TimeSeriesData data_functor(const ObservedSystem& x, std::size_t dt, std::size_t horizon);

/// True iff every derived level map sends X_{n+jump} into Y_n and commutes
/// with start and finish, for all levels both sides carry.
bool check_tsd_morphism(const TsdMorphism& m, const TimeSeriesData& x,
                        const TimeSeriesData& y);
TsdCheckReport check_tsd_morphism_report(const TsdMorphism& m, const TimeSeriesData& x,
                                         const TimeSeriesData& y);

/// Level-n component: slides the generator over a word of length n+jump+1.
Word extend_tsd_morphism(const TsdMorphism& m, std::size_t n, const Word& w);

/// Composite applying `inner` first; jumps add.
TsdMorphism compose_tsd_morphisms(const TsdMorphism& outer, const TsdMorphism& inner);

/// The jump-0 identity-generated morphism when X_i is contained in Y_i on
/// every shared level, otherwise nullopt. Alphabets must agree.
std::optional<TsdMorphism> tsd_inclusion(const TimeSeriesData& x, const TimeSeriesData& y);

/// The word functor on morphisms: a sliding block code becomes a TSD
/// morphism whose jump is the code's window.
TsdMorphism tsd_morphism_of_code(const SlidingBlockCode& c);

/// Truncation to a smaller horizon (identity when h >= horizon).
TimeSeriesData truncate_tsd(const TimeSeriesData& x, std::size_t h);

} // namespace symdyn

#endif // SYMDYN_TSD_HPP
