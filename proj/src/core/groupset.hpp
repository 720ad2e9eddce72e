#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace subsum {

// Subset of a group as a fixed-width characteristic bit vector over element
// indices [0, n). Structure-free operations live here; anything that needs
// the group law (translation, sumsets) lives on Group.
class GroupSet {
public:
    GroupSet() = default;

    explicit GroupSet(uint32_t universe)
        : n_(universe), words_((universe + 63) / 64, 0) {}

    static GroupSet singleton(uint32_t universe, uint32_t e) {
        GroupSet s(universe);
        s.set(e);
        return s;
    }

    uint32_t universe() const { return n_; }

    bool test(uint32_t e) const { return (words_[e >> 6] >> (e & 63)) & 1; }
    void set(uint32_t e) { words_[e >> 6] |= uint64_t(1) << (e & 63); }
    void reset(uint32_t e) { words_[e >> 6] &= ~(uint64_t(1) << (e & 63)); }

    uint32_t count() const {
        uint32_t c = 0;
        for (uint64_t w : words_) c += static_cast<uint32_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    GroupSet& operator|=(const GroupSet& o) {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    GroupSet& operator&=(const GroupSet& o) {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // set difference: elements of *this not in o
    GroupSet& operator-=(const GroupSet& o) {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend GroupSet operator|(GroupSet a, const GroupSet& b) { return a |= b; }
    friend GroupSet operator&(GroupSet a, const GroupSet& b) { return a &= b; }
    friend GroupSet operator-(GroupSet a, const GroupSet& b) { return a -= b; }

    bool operator==(const GroupSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const GroupSet& o) const { return !(*this == o); }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                uint32_t b = static_cast<uint32_t>(std::countr_zero(w));
                f(static_cast<uint32_t>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<uint32_t> elements() const {
        std::vector<uint32_t> out;
        out.reserve(count());
        for_each([&](uint32_t e) { out.push_back(e); });
        return out;
    }

    // dst |= perm(src), where perm maps element indices
    static void or_permuted(GroupSet& dst, const GroupSet& src, const std::vector<uint32_t>& perm) {
        src.for_each([&](uint32_t e) { dst.set(perm[e]); });
    }

private:
    void check_universe(const GroupSet& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("set operation across different universes");
    }

    uint32_t n_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace subsum
