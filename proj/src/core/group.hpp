#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "core/caps.hpp"
#include "core/groupset.hpp"

namespace subsum {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A finite abelian group in invariant-factor form n_1 | n_2 | ... | n_r.
// Elements are dense indices in [0, order); the tuple view exists only at
// the I/O boundary. Immutable after construction, safe to share.
class Group {
public:
    // Normalizes an arbitrary modulus list (each >= 2) to invariant factors
    // by pairwise gcd/lcm reduction; isomorphic inputs yield identical specs.
    static GroupPtr make(std::vector<uint64_t> moduli, uint32_t order_cap = Caps{}.order_cap);

    // Parses a comma-separated modulus list, e.g. "3,3" or "6,4".
    static GroupPtr parse(std::string_view literal, uint32_t order_cap = Caps{}.order_cap);

    const std::vector<uint32_t>& moduli() const { return moduli_; }
    uint32_t order() const { return order_; }
    uint32_t exponent() const { return moduli_.back(); }
    uint32_t rank() const { return static_cast<uint32_t>(moduli_.size()); }
    bool is_cyclic() const { return moduli_.size() == 1; }

    std::string literal() const; // normalized moduli, e.g. "2,12"

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t scalar_mul(uint64_t t, uint32_t a) const;
    uint32_t element_order(uint32_t a) const;

    std::vector<uint32_t> decode(uint32_t index) const;
    uint32_t encode(const std::vector<uint32_t>& tuple) const;

    std::string format_element(uint32_t index) const;            // "5" or "(1,2)"
    uint32_t parse_element(std::string_view text) const;

    // Permutation x -> x + g over element indices.
    std::vector<uint32_t> translation(uint32_t g) const;

    // --- subset algebra that needs the group law ---
    GroupSet translate_set(const GroupSet& a, uint32_t g) const;
    GroupSet sumset(const GroupSet& a, const GroupSet& b) const;
    GroupSet negate_set(const GroupSet& a) const;

    // Subgroup generated by a set of elements.
    GroupSet closure(const GroupSet& gens) const;

private:
    Group(std::vector<uint32_t> moduli, uint32_t order);

    uint32_t add_arith(uint32_t a, uint32_t b) const;
    void check_set(const GroupSet& a) const;

    std::vector<uint32_t> moduli_;
    std::vector<uint32_t> radix_; // radix_[i] = product of moduli_[0..i)
    uint32_t order_ = 1;
    // add tables are cached for small groups so hot loops stay cheap
    std::vector<std::vector<uint32_t>> trans_cache_;
};

// All automorphisms of the group as permutations of [0, order).
// maps[k][i] = image of element i. The identity map is always present.
struct AutomorphismSet {
    std::vector<std::vector<uint32_t>> maps;
    size_t count() const { return maps.size(); }
};

// Cyclic groups use the units construction at any supported order; other
// groups go through brute force over generator images and require
// order <= caps.aut_order_cap (and at most caps.aut_count_cap maps).
AutomorphismSet automorphisms(const Group& g, const Caps& caps = Caps{});

} // namespace subsum
