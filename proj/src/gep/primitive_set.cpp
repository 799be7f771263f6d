#include "qgep/gep/primitive_set.hpp"

#include <algorithm>

namespace qgep::gep {

namespace {

void check_unique(const std::vector<Symbol>& symbols, const std::string& name)
{
    const bool taken = std::any_of(symbols.begin(), symbols.end(),
                                   [&](const Symbol& s) { return s.name == name; });
    if (taken) {
        throw ConfigError("duplicate primitive symbol '" + name + "'");
    }
}

} // namespace

SymbolId PrimitiveSet::add_function(std::string name, int arity)
{
    if (arity < 1) {
        throw ConfigError("function '" + name + "' needs arity >= 1");
    }
    check_unique(symbols_, name);
    const auto id = static_cast<SymbolId>(symbols_.size());
    symbols_.push_back({std::move(name), arity});
    functions_.push_back(id);
    if (functions_.size() == 1) {
        max_arity_ = arity;
    } else {
        max_arity_ = std::max(max_arity_, arity);
    }
    return id;
}

SymbolId PrimitiveSet::add_terminal(std::string name)
{
    check_unique(symbols_, name);
    const auto id = static_cast<SymbolId>(symbols_.size());
    symbols_.push_back({std::move(name), 0});
    terminals_.push_back(id);
    return id;
}

std::optional<SymbolId> PrimitiveSet::find(std::string_view name) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].name == name) {
            return static_cast<SymbolId>(i);
        }
    }
    return std::nullopt;
}

void PrimitiveSet::validate() const
{
    if (terminals_.empty()) {
        throw ConfigError("primitive set has no terminals");
    }
}

} // namespace qgep::gep
