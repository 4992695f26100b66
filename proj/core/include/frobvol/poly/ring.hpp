#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace frobvol::poly {

// Variables z_{i,j} (1 <= i < j <= m) indexed by edges of K_m. With the
// antisymmetric convention z_{j,i} = -z_{i,j}; otherwise z_{j,i} = z_{i,j}.
struct EdgeConvention {
    std::string prefix;
    uint32_t m = 0;
    bool antisymmetric = false;
};

class Ring {
public:
    static std::shared_ptr<const Ring> make(std::vector<std::string> names);
    static std::shared_ptr<const Ring> edges(const std::string& prefix, uint32_t m,
                                             bool antisymmetric);

    size_t nvars() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<size_t> index(const std::string& name) const;
    size_t require_index(const std::string& name) const;

    const std::optional<EdgeConvention>& edge_convention() const { return edges_; }
    bool has_edges() const { return edges_.has_value(); }
    // Variable index and sign of z_{i,j} for 1-based vertices i != j.
    std::pair<size_t, int> edge(uint32_t i, uint32_t j) const;
    // Endpoints (i<j, 1-based) of an edge variable.
    std::pair<uint32_t, uint32_t> edge_ends(size_t var) const;

    bool same_as(const Ring& o) const { return this == &o || (names_ == o.names_ && same_edges(o)); }

private:
    bool same_edges(const Ring& o) const;
    std::vector<std::string> names_;
    std::map<std::string, size_t> index_;
    std::optional<EdgeConvention> edges_;
    std::vector<std::pair<uint32_t, uint32_t>> ends_;
};

using RingPtr = std::shared_ptr<const Ring>;

}  // namespace frobvol::poly
