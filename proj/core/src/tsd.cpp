#include "symdyn/tsd.hpp"

#include <algorithm>
#include <set>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

const Symbol& gen_at(const TsdMorphism& m, const Word& w) {
    auto it = m.gen.find(w);
    if (it == m.gen.end())
        throw Error(ErrorCode::UnknownWord, "generator undefined on word '" + w.str() + "'");
    return it->second;
}

} // namespace

std::string TsdViolation::describe() const {
    return "level " + std::to_string(level) + ", word '" + word.str() + "': " + axiom;
}

std::vector<TsdViolation> validate_tsd(const TimeSeriesData& x) {
    std::vector<TsdViolation> out;
    std::set<Symbol> alpha(x.alphabet.begin(), x.alphabet.end());
    for (std::size_t i = 0; i < x.levels.size(); ++i) {
        for (const Word& w : x.levels[i]) {
            if (w.size() != i + 1) {
                out.push_back({i, w, "length must be " + std::to_string(i + 1)});
                continue;
            }
            for (const Symbol& s : w.symbols)
                if (!alpha.count(s))
                    out.push_back({i, w, "symbol '" + s.str() + "' not in alphabet"});
            if (i >= 1) {
                if (!x.levels[i - 1].count(w.drop_first()))
                    out.push_back({i, w, "start image missing from level " +
                                             std::to_string(i - 1)});
                if (!x.levels[i - 1].count(w.drop_last()))
                    out.push_back({i, w, "finish image missing from level " +
                                             std::to_string(i - 1)});
            }
        }
    }
    return out;
}

TimeSeriesData word_functor(const SubshiftPresentation& p, std::size_t horizon) {
    TimeSeriesData x;
    x.alphabet = p.alphabet;
    x.levels.reserve(horizon + 1);
    for (std::size_t i = 0; i <= horizon; ++i) x.levels.push_back(words(p, i));
    return x;
}

TimeSeriesData tsd_from_sequence(const std::vector<Symbol>& s, std::size_t horizon) {
    TimeSeriesData x;
    std::set<Symbol> alpha(s.begin(), s.end());
    x.alphabet.assign(alpha.begin(), alpha.end());
    for (std::size_t i = 0; i <= horizon; ++i) {
        WordSet level;
        if (s.size() >= i + 1) {
            for (std::size_t j = 0; j + i + 1 <= s.size(); ++j) {
                Word w;
                w.symbols.assign(s.begin() + static_cast<std::ptrdiff_t>(j),
                                 s.begin() + static_cast<std::ptrdiff_t>(j + i + 1));
                level.insert(std::move(w));
            }
        }
        x.levels.push_back(std::move(level));
    }
    return x;
}

TimeSeriesData data_functor(const ObservedSystem& x, std::size_t dt, std::size_t horizon) {
    return word_functor(generate_subshift(x, dt), horizon);
}

TsdCheckReport check_tsd_morphism_report(const TsdMorphism& m, const TimeSeriesData& x,
                                         const TimeSeriesData& y) {
    if (x.levels.empty() || y.levels.empty()) return {}; // no shared levels
    if (m.jump < x.levels.size())
        for (const Word& w : x.levels[m.jump])
            if (!m.gen.count(w))
                throw Error(ErrorCode::UnknownWord,
                            "generator undefined on level-" + std::to_string(m.jump) +
                                " word '" + w.str() + "'");

    const std::size_t x_h = x.horizon();
    const std::size_t y_h = y.horizon();
    for (std::size_t n = 0; n + m.jump <= x_h && n <= y_h; ++n) {
        for (const Word& w : x.levels[n + m.jump]) {
            Word img = extend_tsd_morphism(m, n, w);
            if (!y.levels[n].count(img))
                return {false, "image '" + img.str() + "' of '" + w.str() +
                                   "' missing from target level " + std::to_string(n)};
            if (n >= 1) {
                Word via_start = extend_tsd_morphism(m, n - 1, w.drop_first());
                if (via_start != img.drop_first())
                    return {false, "start square fails at level " + std::to_string(n) +
                                       " on word '" + w.str() + "'"};
                Word via_finish = extend_tsd_morphism(m, n - 1, w.drop_last());
                if (via_finish != img.drop_last())
                    return {false, "finish square fails at level " + std::to_string(n) +
                                       " on word '" + w.str() + "'"};
            }
        }
    }
    return {};
}

bool check_tsd_morphism(const TsdMorphism& m, const TimeSeriesData& x,
                        const TimeSeriesData& y) {
    return check_tsd_morphism_report(m, x, y).ok;
}

Word extend_tsd_morphism(const TsdMorphism& m, std::size_t n, const Word& w) {
    if (w.size() != n + m.jump + 1)
        throw Error(ErrorCode::LengthMismatch,
                    "expected word of length " + std::to_string(n + m.jump + 1) + ", got " +
                        std::to_string(w.size()));
    Word out;
    out.symbols.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) out.symbols.push_back(gen_at(m, w.sub(j, m.jump + 1)));
    return out;
}

TsdMorphism compose_tsd_morphisms(const TsdMorphism& outer, const TsdMorphism& inner) {
    const std::size_t jump = outer.jump + inner.jump;

    std::set<Word> domain;
    for (const auto& [w, _] : inner.gen) domain.insert(w);
    for (std::size_t len = inner.jump + 1; len < jump + 1; ++len) {
        std::set<Word> next;
        for (const auto& w : domain) {
            for (const auto& [key, _] : inner.gen) {
                if (w.sub(w.size() - inner.jump, inner.jump) != key.sub(0, inner.jump))
                    continue;
                Word ext = w;
                ext.symbols.push_back(key.symbols.back());
                next.insert(std::move(ext));
            }
        }
        domain = std::move(next);
    }

    TsdMorphism out;
    out.jump = jump;
    out.source_alphabet = inner.source_alphabet;
    out.target_alphabet = outer.target_alphabet;
    for (const auto& w : domain) {
        Word mid = extend_tsd_morphism(inner, outer.jump, w);
        auto it = outer.gen.find(mid);
        if (it == outer.gen.end())
            throw Error(ErrorCode::AlphabetMismatch,
                        "inner morphism produces word '" + mid.str() +
                            "' outside the outer morphism's domain");
        out.gen[w] = it->second;
    }
    return out;
}

std::optional<TsdMorphism> tsd_inclusion(const TimeSeriesData& x, const TimeSeriesData& y) {
    if (x.alphabet != y.alphabet)
        throw Error(ErrorCode::AlphabetMismatch, "inclusion needs identical alphabets");
    const std::size_t h = std::min(x.horizon(), y.horizon());
    for (std::size_t i = 0; i <= h && i < x.levels.size(); ++i)
        for (const Word& w : x.levels[i])
            if (!y.levels[i].count(w)) return std::nullopt;

    TsdMorphism m;
    m.jump = 0;
    m.source_alphabet = x.alphabet;
    m.target_alphabet = y.alphabet;
    for (const Symbol& s : x.alphabet) m.gen[word_of(s)] = s;
    return m;
}

TsdMorphism tsd_morphism_of_code(const SlidingBlockCode& c) {
    return TsdMorphism{c.window, c.source_alphabet, c.target_alphabet, c.gen};
}

TimeSeriesData truncate_tsd(const TimeSeriesData& x, std::size_t h) {
    TimeSeriesData out;
    out.alphabet = x.alphabet;
    for (std::size_t i = 0; i <= h && i < x.levels.size(); ++i) out.levels.push_back(x.levels[i]);
    return out;
}

} // namespace symdyn
