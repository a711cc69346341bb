#ifndef SYMDYN_SYMBOL_HPP
#define SYMDYN_SYMBOL_HPP

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace symdyn {

/// A symbol of a measurement alphabet. Either an atom (plain text) or an
/// ordered tuple of symbols, as produced by delay embedding. Tuples nest.
///
/// Atoms must not contain the characters `,`, `(`, `)`, `|`: those are
/// reserved by the text rendering (words are comma-joined, tuples render
/// as `(a|b)`), which keeps every file format unambiguous.
class Symbol {
public:
    Symbol() = default;
    explicit Symbol(std::string atom);
    static Symbol tuple(std::vector<Symbol> parts);

    bool is_tuple() const { return !parts_.empty(); }
    const std::string& atom() const { return atom_; }
    const std::vector<Symbol>& parts() const { return parts_; }

    /// Canonical text form; parse() is its exact inverse.
    std::string str() const;
    static Symbol parse(const std::string& text);

    // Hand-written: a defaulted comparison cannot recurse through the
    // vector of the still-incomplete Symbol type.
    std::strong_ordering operator<=>(const Symbol& other) const;
    bool operator==(const Symbol& other) const;

private:
    std::string atom_;
    std::vector<Symbol> parts_;
};

/// A finite block of symbols. Most contexts require length >= 1; the empty
/// word only appears transiently as the result of dropping a symbol from a
/// one-letter word.
struct Word {
    std::vector<Symbol> symbols;

    Word() = default;
    explicit Word(std::vector<Symbol> syms) : symbols(std::move(syms)) {}

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }

    Word drop_first() const;
    Word drop_last() const;
    /// Contiguous block symbols[pos .. pos+len-1].
    Word sub(std::size_t pos, std::size_t len) const;

    /// Comma-joined symbol renderings; parse() is its exact inverse.
    std::string str() const;
    static Word parse(const std::string& text);

    auto operator<=>(const Word&) const = default;
};

using WordSet = std::set<Word>;

/// Singleton word, the common case when indexing generators of 0-morphisms.
inline Word word_of(Symbol s) { return Word({std::move(s)}); }

} // namespace symdyn

#endif // SYMDYN_SYMBOL_HPP
