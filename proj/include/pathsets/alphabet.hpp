#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pathsets {

/// A symbol is an index into its ambient Alphabet.
using Symbol = int;

/// A finite word: a (possibly empty) sequence of symbol indices.
/// Lexicographic vector order doubles as the canonical block order
/// (a proper prefix sorts before its extensions).
using WordBlock = std::vector<Symbol>;

/// Ordered list of distinct symbol names. The declaration order is the
/// alphabet's total order and drives every canonical-form tie-break.
class Alphabet {
public:
    /// Throws ValidationError("EmptyAlphabet") on an empty list and
    /// ValidationError("DuplicateSymbol") on repeated names.
    explicit Alphabet(std::vector<std::string> symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::string& name(Symbol s) const { return symbols_.at(static_cast<size_t>(s)); }
    const std::vector<std::string>& names() const { return symbols_; }

    std::optional<Symbol> index_of(std::string_view name) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

    /// Union by name: a's symbols in a's order, then b's remaining symbols
    /// in b's order. Binary operations on path sets with different alphabets
    /// run over this unified alphabet.
    static Alphabet unify(const Alphabet& a, const Alphabet& b);

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, Symbol> index_;
};

} // namespace pathsets
