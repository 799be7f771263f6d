#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qgep::gep {

using SymbolId = int;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Symbol {
    std::string name;
    int arity = 0;
};

/// Function and terminal symbols of a GEP problem. Symbol ids are dense
/// indices into the table, so they are unique by construction.
class PrimitiveSet {
public:
    PrimitiveSet() = default;

    SymbolId add_function(std::string name, int arity);
    SymbolId add_terminal(std::string name);

    const Symbol& symbol(SymbolId id) const { return symbols_.at(static_cast<std::size_t>(id)); }
    int arity(SymbolId id) const { return symbols_[static_cast<std::size_t>(id)].arity; }
    bool is_terminal(SymbolId id) const { return arity(id) == 0; }
    std::size_t size() const { return symbols_.size(); }

    const std::vector<SymbolId>& functions() const { return functions_; }
    const std::vector<SymbolId>& terminals() const { return terminals_; }

    /// Largest function arity, or 1 when there are no functions.
    int max_arity() const { return max_arity_; }

    /// Tail length that closes every head of length head_len.
    int tail_length(int head_len) const { return head_len * (max_arity_ - 1) + 1; }

    std::optional<SymbolId> find(std::string_view name) const;

    /// Throws ConfigError when the set cannot generate genes.
    void validate() const;

private:
    std::vector<Symbol> symbols_;
    std::vector<SymbolId> functions_;
    std::vector<SymbolId> terminals_;
    int max_arity_ = 1;
};

} // namespace qgep::gep
