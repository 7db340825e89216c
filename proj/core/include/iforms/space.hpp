#ifndef IFORMS_SPACE_HPP
#define IFORMS_SPACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iforms {

/// An ordered list of distinct coordinate names; the local chart of the manifold.
class Space {
public:
    explicit Space(std::vector<std::string> coords);

    std::size_t dim() const { return coords_.size(); }
    const std::string& coord(std::size_t i) const { return coords_.at(i); }
    const std::vector<std::string>& coords() const { return coords_; }

    std::optional<std::size_t> index_of(std::string_view name) const;
    /// Like index_of but throws on an unknown coordinate.
    std::size_t require(std::string_view name) const;

    friend bool operator==(const Space&, const Space&) = default;

private:
    std::vector<std::string> coords_;
};

}  // namespace iforms

#endif
