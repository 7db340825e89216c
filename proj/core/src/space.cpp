#include "iforms/space.hpp"

#include <algorithm>
#include <set>

#include "iforms/error.hpp"

namespace iforms {

Space::Space(std::vector<std::string> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw Error("space needs at least one coordinate");
    std::set<std::string> seen;
    for (const auto& c : coords_) {
        if (c.empty()) throw Error("empty coordinate name");
        if (!seen.insert(c).second) throw Error("duplicate coordinate name: " + c);
    }
}

std::optional<std::size_t> Space::index_of(std::string_view name) const {
    auto it = std::find(coords_.begin(), coords_.end(), name);
    if (it == coords_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - coords_.begin());
}

std::size_t Space::require(std::string_view name) const {
    auto idx = index_of(name);
    if (!idx) throw Error("unknown coordinate: " + std::string(name));
    return *idx;
}

}  // namespace iforms
