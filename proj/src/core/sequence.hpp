#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/group.hpp"

namespace subsum {

// A multiset of group elements stored as a multiplicity vector over the
// whole group. Order of terms never matters. Immutable after construction.
class Sequence {
public:
    Sequence(GroupPtr group, std::vector<uint32_t> mult, uint32_t length_cap = Caps{}.length_cap);

    static Sequence empty(GroupPtr group);

    // Literal grammar: comma-separated `elem^mult` terms, `^1` omissible,
    // e.g. "0^4,1^4,2,6" or "(0,1)^3,(1,2)". An empty string is the empty
    // sequence.
    static Sequence parse(GroupPtr group, std::string_view literal,
                          uint32_t length_cap = Caps{}.length_cap);

    const GroupPtr& group() const { return group_; }
    const std::vector<uint32_t>& mult() const { return mult_; }
    uint32_t multiplicity(uint32_t g) const { return mult_[g]; }

    uint32_t length() const { return length_; }
    uint32_t sum() const;              // sigma(S)
    GroupSet support() const;
    uint32_t support_size() const;
    uint32_t max_multiplicity() const; // h(S); 0 for the empty sequence

    Sequence concat(const Sequence& other) const;
    Sequence removing(const Sequence& sub) const; // S T^{-1}; sub must fit under S
    Sequence translated(uint32_t g) const;        // g + S
    Sequence appending(uint32_t g, uint32_t copies = 1) const;

    std::string literal() const;

    bool operator==(const Sequence& o) const { return mult_ == o.mult_; }

private:
    GroupPtr group_;
    std::vector<uint32_t> mult_;
    uint32_t length_ = 0;
};

// Expansion to an explicit element list (index per copy, ascending).
std::vector<uint32_t> to_elements(const Sequence& s);

} // namespace subsum
