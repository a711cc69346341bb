#include "symdyn/symbol.hpp"

#include <utility>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

bool atom_text_ok(const std::string& text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (c == ',' || c == '(' || c == ')' || c == '|') return false;
        if (static_cast<unsigned char>(c) < 0x20) return false;
    }
    return true;
}

// Parses one symbol starting at pos; advances pos past it.
Symbol parse_symbol_at(const std::string& text, std::size_t& pos) {
    if (pos >= text.size())
        throw Error(ErrorCode::ParseError, "empty symbol in '" + text + "'");
    if (text[pos] == '(') {
        ++pos;
        std::vector<Symbol> parts;
        while (true) {
            parts.push_back(parse_symbol_at(text, pos));
            if (pos >= text.size())
                throw Error(ErrorCode::ParseError, "unterminated tuple in '" + text + "'");
            if (text[pos] == '|') {
                ++pos;
                continue;
            }
            if (text[pos] == ')') {
                ++pos;
                return Symbol::tuple(std::move(parts));
            }
            throw Error(ErrorCode::ParseError, "malformed tuple in '" + text + "'");
        }
    }
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != '|' && text[pos] != ')' &&
           text[pos] != '(')
        ++pos;
    return Symbol(text.substr(start, pos - start));
}

} // namespace

Symbol::Symbol(std::string atom) : atom_(std::move(atom)) {
    if (!atom_text_ok(atom_))
        throw Error(ErrorCode::ParseError,
                    "invalid symbol atom '" + atom_ + "' (empty or reserved character)");
}

Symbol Symbol::tuple(std::vector<Symbol> parts) {
    if (parts.empty())
        throw Error(ErrorCode::ParseError, "tuple symbol needs at least one coordinate");
    Symbol s;
    s.parts_ = std::move(parts);
    return s;
}

std::strong_ordering Symbol::operator<=>(const Symbol& other) const {
    if (auto c = atom_ <=> other.atom_; c != 0) return c;
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                  other.parts_.begin(), other.parts_.end());
}

bool Symbol::operator==(const Symbol& other) const {
    return atom_ == other.atom_ && parts_ == other.parts_;
}

std::string Symbol::str() const {
    if (!is_tuple()) return atom_;
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '|';
        out += parts_[i].str();
    }
    out += ')';
    return out;
}

Symbol Symbol::parse(const std::string& text) {
    std::size_t pos = 0;
    Symbol s = parse_symbol_at(text, pos);
    if (pos != text.size())
        throw Error(ErrorCode::ParseError, "trailing characters in symbol '" + text + "'");
    return s;
}

Word Word::drop_first() const {
    Word w;
    if (symbols.size() > 1) w.symbols.assign(symbols.begin() + 1, symbols.end());
    return w;
}

Word Word::drop_last() const {
    Word w;
    if (symbols.size() > 1) w.symbols.assign(symbols.begin(), symbols.end() - 1);
    return w;
}

Word Word::sub(std::size_t pos, std::size_t len) const {
    Word w;
    w.symbols.assign(symbols.begin() + static_cast<std::ptrdiff_t>(pos),
                     symbols.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return w;
}

std::string Word::str() const {
    std::string out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) out += ',';
        out += symbols[i].str();
    }
    return out;
}

Word Word::parse(const std::string& text) {
    Word w;
    if (text.empty())
        throw Error(ErrorCode::ParseError, "empty word");
    std::size_t pos = 0;
    while (true) {
        w.symbols.push_back(parse_symbol_at(text, pos));
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw Error(ErrorCode::ParseError, "malformed word '" + text + "'");
        ++pos;
    }
    return w;
}

} // namespace symdyn
