#include "symdyn/shift.hpp"

#include <algorithm>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

std::vector<Symbol> sorted_unique(std::vector<Symbol> syms) {
    std::sort(syms.begin(), syms.end());
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
    return syms;
}

std::vector<VertexId> sorted_unique_ids(std::vector<VertexId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

const Symbol& gen_at(const SlidingBlockCode& c, const Word& w) {
    auto it = c.gen.find(w);
    if (it == c.gen.end())
        throw Error(ErrorCode::UnknownWord, "generator undefined on word '" + w.str() + "'");
    return it->second;
}

} // namespace

SubshiftPresentation make_presentation(std::vector<VertexId> vertices,
                                       std::set<PresEdge> edges,
                                       std::vector<Symbol> alphabet) {
    SubshiftPresentation p;
    p.vertices = sorted_unique_ids(std::move(vertices));
    p.alphabet = sorted_unique(std::move(alphabet));
    std::set<VertexId> vset(p.vertices.begin(), p.vertices.end());
    std::set<Symbol> aset(p.alphabet.begin(), p.alphabet.end());
    for (const auto& e : edges) {
        if (!vset.count(e.from) || !vset.count(e.to))
            throw Error(ErrorCode::ParseError,
                        "edge endpoint '" + e.from + "'->'" + e.to + "' not a vertex");
        if (!aset.count(e.label))
            throw Error(ErrorCode::AlphabetMismatch,
                        "edge label '" + e.label.str() + "' not in alphabet");
    }
    p.edges = std::move(edges);
    return prune(std::move(p));
}

SubshiftPresentation prune(SubshiftPresentation p) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<VertexId> has_out;
        for (const auto& e : p.edges) has_out.insert(e.from);
        std::vector<VertexId> keep;
        for (const auto& v : p.vertices)
            if (has_out.count(v)) keep.push_back(v);
        if (keep.size() != p.vertices.size()) {
            changed = true;
            std::set<VertexId> kept(keep.begin(), keep.end());
            std::set<PresEdge> edges;
            for (const auto& e : p.edges)
                if (kept.count(e.from) && kept.count(e.to)) edges.insert(e);
            p.vertices = std::move(keep);
            p.edges = std::move(edges);
        }
    }
    return p;
}

SlidingBlockCode make_code(std::size_t window, std::vector<Symbol> source_alphabet,
                           std::vector<Symbol> target_alphabet, std::map<Word, Symbol> gen) {
    SlidingBlockCode c;
    c.window = window;
    c.source_alphabet = sorted_unique(std::move(source_alphabet));
    c.target_alphabet = sorted_unique(std::move(target_alphabet));
    std::set<Symbol> src(c.source_alphabet.begin(), c.source_alphabet.end());
    std::set<Symbol> tgt(c.target_alphabet.begin(), c.target_alphabet.end());
    for (const auto& [w, out] : gen) {
        if (w.size() != window + 1)
            throw Error(ErrorCode::LengthMismatch,
                        "generator key '" + w.str() + "' must have length " +
                            std::to_string(window + 1));
        for (const auto& s : w.symbols)
            if (!src.count(s))
                throw Error(ErrorCode::AlphabetMismatch,
                            "generator key symbol '" + s.str() + "' not in source alphabet");
        if (!tgt.count(out))
            throw Error(ErrorCode::AlphabetMismatch,
                        "generator output '" + out.str() + "' not in target alphabet");
    }
    c.gen = std::move(gen);
    return c;
}

SlidingBlockCode identity_code(const std::vector<Symbol>& alphabet) {
    std::map<Word, Symbol> gen;
    for (const auto& s : alphabet) gen[word_of(s)] = s;
    return make_code(0, alphabet, alphabet, std::move(gen));
}

WordSet words(const SubshiftPresentation& p, std::size_t n) {
    // Breadth-first extension of (word, end-vertex) pairs along edges.
    std::set<std::pair<Word, VertexId>> layer;
    for (const auto& e : p.edges) layer.insert({word_of(e.label), e.to});
    for (std::size_t len = 1; len <= n; ++len) {
        std::set<std::pair<Word, VertexId>> next;
        for (const auto& [w, v] : layer) {
            for (const auto& e : p.edges) {
                if (e.from != v) continue;
                Word ext = w;
                ext.symbols.push_back(e.label);
                next.insert({std::move(ext), e.to});
            }
        }
        layer = std::move(next);
    }
    WordSet out;
    for (const auto& [w, _] : layer) out.insert(w);
    return out;
}

bool contains_word(const SubshiftPresentation& p, const Word& w) {
    if (w.empty()) return true;
    std::set<VertexId> reach(p.vertices.begin(), p.vertices.end());
    for (const auto& sym : w.symbols) {
        std::set<VertexId> next;
        for (const auto& e : p.edges)
            if (e.label == sym && reach.count(e.from)) next.insert(e.to);
        if (next.empty()) return false;
        reach = std::move(next);
    }
    return true;
}

std::vector<Symbol> apply_sbc(const SlidingBlockCode& c, const std::vector<Symbol>& s) {
    if (s.size() < c.window + 1)
        throw Error(ErrorCode::SequenceTooShort,
                    "need at least " + std::to_string(c.window + 1) + " symbols, got " +
                        std::to_string(s.size()));
    std::vector<Symbol> out;
    out.reserve(s.size() - c.window);
    for (std::size_t j = 0; j + c.window < s.size(); ++j) {
        Word win;
        win.symbols.assign(s.begin() + static_cast<std::ptrdiff_t>(j),
                           s.begin() + static_cast<std::ptrdiff_t>(j + c.window + 1));
        out.push_back(gen_at(c, win));
    }
    return out;
}

Word induced_word_map(const SlidingBlockCode& c, std::size_t m, const Word& input) {
    if (input.size() != m + c.window + 1)
        throw Error(ErrorCode::LengthMismatch,
                    "expected word of length " + std::to_string(m + c.window + 1) + ", got " +
                        std::to_string(input.size()));
    return Word(apply_sbc(c, input.symbols));
}

SlidingBlockCode compose_sbc(const SlidingBlockCode& outer, const SlidingBlockCode& inner) {
    const std::size_t window = outer.window + inner.window;

    // Domain of the composite: all words gluable from inner's generator keys
    // with full (inner.window)-overlap, i.e. every window lies in inner's
    // domain. Grown breadth-first from the keys themselves.
    std::set<Word> domain;
    for (const auto& [w, _] : inner.gen) domain.insert(w);
    for (std::size_t len = inner.window + 1; len < window + 1; ++len) {
        std::set<Word> next;
        for (const auto& w : domain) {
            for (const auto& [key, _] : inner.gen) {
                if (w.sub(w.size() - inner.window, inner.window) !=
                    key.sub(0, inner.window))
                    continue;
                Word ext = w;
                ext.symbols.push_back(key.symbols.back());
                next.insert(std::move(ext));
            }
        }
        domain = std::move(next);
    }

    std::map<Word, Symbol> gen;
    for (const auto& w : domain) {
        Word mid = induced_word_map(inner, outer.window, w);
        auto it = outer.gen.find(mid);
        if (it == outer.gen.end())
            throw Error(ErrorCode::AlphabetMismatch,
                        "inner code produces word '" + mid.str() +
                            "' outside the outer code's domain");
        gen[w] = it->second;
    }
    return make_code(window, inner.source_alphabet, outer.target_alphabet, std::move(gen));
}

SbcCheckReport check_sbc(const SlidingBlockCode& c, const SubshiftPresentation& src,
                         const SubshiftPresentation& tgt, std::size_t depth) {
    for (std::size_t m = 0; m <= depth; ++m) {
        WordSet source_words = words(src, m + c.window);
        WordSet target_words = words(tgt, m);
        for (const auto& w : source_words) {
            Word img = induced_word_map(c, m, w);
            if (!target_words.count(img))
                return {false, "image word '" + img.str() + "' of '" + w.str() +
                                   "' missing from target words at level " + std::to_string(m)};
        }
    }
    return {};
}

bool is_valid_sbc(const SlidingBlockCode& c, const SubshiftPresentation& src,
                  const SubshiftPresentation& tgt, std::size_t depth) {
    return check_sbc(c, src, tgt, depth).ok;
}

SubshiftPresentation sbc_image_presentation(const SlidingBlockCode& c,
                                            const SubshiftPresentation& src) {
    // Paths of `window` edges become vertices; names interleave vertices and
    // labels so parallel edges stay distinct.
    struct Path {
        std::vector<VertexId> verts; // window+1 vertices
        Word labels;                 // window labels

        std::string name() const {
            std::string out;
            for (std::size_t i = 0; i < verts.size(); ++i) {
                if (i) out += "~" + labels.symbols[i - 1].str() + "~";
                out += verts[i];
            }
            return out;
        }
    };

    std::vector<Path> paths;
    for (const auto& v : src.vertices) paths.push_back({{v}, {}});
    for (std::size_t len = 0; len < c.window; ++len) {
        std::vector<Path> next;
        for (const auto& p : paths) {
            for (const auto& e : src.edges) {
                if (e.from != p.verts.back()) continue;
                Path q = p;
                q.verts.push_back(e.to);
                q.labels.symbols.push_back(e.label);
                next.push_back(std::move(q));
            }
        }
        paths = std::move(next);
    }

    std::vector<VertexId> vertices;
    std::set<PresEdge> edges;
    std::set<Symbol> labels;
    for (const auto& p : paths) vertices.push_back(p.name());
    for (const auto& p : paths) {
        for (const auto& e : src.edges) {
            if (e.from != p.verts.back()) continue;
            Word full = p.labels;
            full.symbols.push_back(e.label);
            const Symbol& out = gen_at(c, full);
            Path q;
            if (c.window == 0) {
                q.verts = {e.to};
            } else {
                q.verts.assign(p.verts.begin() + 1, p.verts.end());
                q.verts.push_back(e.to);
                q.labels = p.labels.drop_first();
                q.labels.symbols.push_back(e.label);
            }
            edges.insert({p.name(), q.name(), out});
            labels.insert(out);
        }
    }

    std::vector<Symbol> alphabet(labels.begin(), labels.end());
    for (const auto& s : c.target_alphabet) alphabet.push_back(s);
    return make_presentation(std::move(vertices), std::move(edges), std::move(alphabet));
}

} // namespace symdyn
