#ifndef MODCOMP_WORDS_HPP
#define MODCOMP_WORDS_HPP

#include <string>
#include <string_view>

#include "modcomp/module.hpp"

namespace modcomp {

/// The reserved control label carried by every word-module gate. User
/// alphabets cannot collide with it: alphabet symbols are single characters.
inline const Label kControlLabel = "__ctl";

/// A finite ordered set of single-character symbols.
class Alphabet {
public:
    /// Throws InvalidModule on an empty or duplicate-carrying symbol set.
    explicit Alphabet(std::string_view symbols);

    static Alphabet lowercase() { return Alphabet("abcdefghijklmnopqrstuvwxyz"); }

    bool contains(char s) const;
    const std::string& symbols() const { return symbols_; }

private:
    std::string symbols_;
};

/// The module of one symbol: one control gate on each side, one interior
/// vertex named after the symbol, linked to both gates by undirected edges.
/// Throws SymbolNotInAlphabet.
Module symbol_module(char s, const Alphabet& alphabet);

/// The empty-word module: a single vertex that is the control gate of both
/// interfaces (one shared gate). It is the identity of the word monoid.
Module empty_word_module();

/// The chained composition of the word's symbol modules, freshened per
/// position; the empty word yields empty_word_module().
/// Throws SymbolNotInAlphabet.
Module word_to_module(std::string_view word, const Alphabet& alphabet);

/// Reads the word back from a module in chain shape by walking from the left
/// control gate. Throws NotAWordModule when the shape check fails.
std::string module_to_word(const Module& m);

} // namespace modcomp

#endif // MODCOMP_WORDS_HPP
