#include "pathsets/alphabet.hpp"

#include "pathsets/errors.hpp"

namespace pathsets {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty())
        throw ValidationError("EmptyAlphabet", "alphabet must list at least one symbol");
    for (size_t i = 0; i < symbols_.size(); ++i) {
        auto [it, inserted] = index_.emplace(symbols_[i], static_cast<Symbol>(i));
        if (!inserted)
            throw ValidationError("DuplicateSymbol", "symbol '" + symbols_[i] + "' listed twice");
    }
}

std::optional<Symbol> Alphabet::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Alphabet Alphabet::unify(const Alphabet& a, const Alphabet& b) {
    std::vector<std::string> names = a.names();
    for (const auto& s : b.names())
        if (!a.index_of(s)) names.push_back(s);
    return Alphabet(names);
}

} // namespace pathsets
