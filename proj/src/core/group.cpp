#include "core/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "core/error.hpp"

namespace subsum {

namespace {

std::vector<uint32_t> normalize_moduli(std::vector<uint64_t> m, uint32_t order_cap) {
    if (m.empty())
        throw Error(ErrorCode::invalid_argument, "group needs at least one modulus");
    for (uint64_t v : m)
        if (v < 2)
            throw Error(ErrorCode::invalid_argument,
                        "modulus " + std::to_string(v) + " is < 2");

    uint64_t order = 1;
    for (uint64_t v : m) {
        order *= v;
        if (order > order_cap)
            throw Error(ErrorCode::cap_exceeded,
                        "group order exceeds cap " + std::to_string(order_cap));
    }

    // pairwise gcd/lcm until the sorted list is a divisibility chain
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(m.begin(), m.end());
        for (size_t i = 0; i + 1 < m.size() && !changed; ++i) {
            for (size_t j = i + 1; j < m.size() && !changed; ++j) {
                if (m[j] % m[i] != 0) {
                    uint64_t g = std::gcd(m[i], m[j]);
                    uint64_t l = m[i] / g * m[j];
                    m[i] = g;
                    m[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::vector<uint32_t> out;
    for (uint64_t v : m)
        if (v > 1) out.push_back(static_cast<uint32_t>(v));
    return out;
}

} // namespace

Group::Group(std::vector<uint32_t> moduli, uint32_t order) : moduli_(std::move(moduli)), order_(order) {
    radix_.resize(moduli_.size());
    uint32_t p = 1;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        radix_[i] = p;
        p *= moduli_[i];
    }
    // full translation table only when it stays small
    if (order_ <= 1024) {
        std::vector<std::vector<uint32_t>> cache(order_);
        for (uint32_t g = 0; g < order_; ++g) {
            cache[g].resize(order_);
            for (uint32_t x = 0; x < order_; ++x) cache[g][x] = add_arith(x, g);
        }
        trans_cache_ = std::move(cache);
    }
}

uint32_t Group::add_arith(uint32_t a, uint32_t b) const {
    uint32_t out = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        uint32_t da = (a / radix_[i]) % moduli_[i];
        uint32_t db = (b / radix_[i]) % moduli_[i];
        uint32_t ds = da + db;
        if (ds >= moduli_[i]) ds -= moduli_[i];
        out += ds * radix_[i];
    }
    return out;
}

GroupPtr Group::make(std::vector<uint64_t> moduli, uint32_t order_cap) {
    std::vector<uint32_t> norm = normalize_moduli(std::move(moduli), order_cap);
    uint32_t order = 1;
    for (uint32_t v : norm) order *= v;
    return GroupPtr(new Group(std::move(norm), order));
}

GroupPtr Group::parse(std::string_view literal, uint32_t order_cap) {
    std::vector<uint64_t> moduli;
    std::string cur;
    auto flush = [&] {
        if (cur.empty())
            throw Error(ErrorCode::parse_error, "empty modulus in group literal");
        size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(cur, &pos);
        } catch (const std::exception&) {
            throw Error(ErrorCode::parse_error, "bad modulus '" + cur + "'");
        }
        if (pos != cur.size())
            throw Error(ErrorCode::parse_error, "bad modulus '" + cur + "'");
        moduli.push_back(v);
        cur.clear();
    };
    for (char c : literal) {
        if (c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            cur.push_back(c);
    }
    flush();
    return make(std::move(moduli), order_cap);
}

std::string Group::literal() const {
    std::string out;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(moduli_[i]);
    }
    return out;
}

uint32_t Group::add(uint32_t a, uint32_t b) const {
    if (!trans_cache_.empty()) return trans_cache_[b][a];
    return add_arith(a, b);
}

uint32_t Group::neg(uint32_t a) const {
    uint32_t out = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        uint32_t d = (a / radix_[i]) % moduli_[i];
        uint32_t dn = d == 0 ? 0 : moduli_[i] - d;
        out += dn * radix_[i];
    }
    return out;
}

uint32_t Group::scalar_mul(uint64_t t, uint32_t a) const {
    uint32_t out = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        uint32_t d = (a / radix_[i]) % moduli_[i];
        uint32_t dm = static_cast<uint32_t>((t % moduli_[i]) * d % moduli_[i]);
        out += dm * radix_[i];
    }
    return out;
}

uint32_t Group::element_order(uint32_t a) const {
    if (a >= order_)
        throw Error(ErrorCode::invalid_argument, "element index out of range");
    uint64_t ord = 1;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        uint32_t d = (a / radix_[i]) % moduli_[i];
        uint64_t oi = moduli_[i] / std::gcd<uint64_t>(moduli_[i], d);
        ord = std::lcm(ord, oi);
    }
    return static_cast<uint32_t>(ord);
}

std::vector<uint32_t> Group::decode(uint32_t index) const {
    std::vector<uint32_t> t(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) t[i] = (index / radix_[i]) % moduli_[i];
    return t;
}

uint32_t Group::encode(const std::vector<uint32_t>& tuple) const {
    if (tuple.size() != moduli_.size())
        throw Error(ErrorCode::invalid_argument, "tuple rank mismatch");
    uint32_t out = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        if (tuple[i] >= moduli_[i])
            throw Error(ErrorCode::invalid_argument, "tuple coordinate out of range");
        out += tuple[i] * radix_[i];
    }
    return out;
}

std::string Group::format_element(uint32_t index) const {
    if (moduli_.size() == 1) return std::to_string(index);
    std::vector<uint32_t> t = decode(index);
    std::string out = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(t[i]);
    }
    out.push_back(')');
    return out;
}

uint32_t Group::parse_element(std::string_view text) const {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty())
        throw Error(ErrorCode::parse_error, "empty element literal");

    if (s.front() == '(') {
        if (s.back() != ')')
            throw Error(ErrorCode::parse_error, "unbalanced parentheses in '" + s + "'");
        std::vector<uint32_t> tuple;
        std::string cur;
        for (size_t i = 1; i + 1 < s.size(); ++i) {
            if (s[i] == ',') {
                if (cur.empty())
                    throw Error(ErrorCode::parse_error, "empty coordinate in '" + s + "'");
                tuple.push_back(static_cast<uint32_t>(std::stoul(cur)));
                cur.clear();
            } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                cur.push_back(s[i]);
            } else {
                throw Error(ErrorCode::parse_error, "bad character in element '" + s + "'");
            }
        }
        if (cur.empty())
            throw Error(ErrorCode::parse_error, "empty coordinate in '" + s + "'");
        tuple.push_back(static_cast<uint32_t>(std::stoul(cur)));
        if (tuple.size() != moduli_.size())
            throw Error(ErrorCode::parse_error, "element rank mismatch in '" + s + "'");
        return encode(tuple);
    }

    if (moduli_.size() != 1)
        throw Error(ErrorCode::parse_error,
                    "element of a rank-" + std::to_string(moduli_.size()) +
                        " group needs a tuple literal");
    size_t pos = 0;
    unsigned long v = std::stoul(s, &pos);
    if (pos != s.size())
        throw Error(ErrorCode::parse_error, "bad element '" + s + "'");
    if (v >= order_)
        throw Error(ErrorCode::parse_error, "element " + s + " out of range");
    return static_cast<uint32_t>(v);
}

std::vector<uint32_t> Group::translation(uint32_t g) const {
    if (!trans_cache_.empty()) return trans_cache_[g];
    std::vector<uint32_t> perm(order_);
    for (uint32_t x = 0; x < order_; ++x) perm[x] = add(x, g);
    return perm;
}

GroupSet Group::translate_set(const GroupSet& a, uint32_t g) const {
    check_set(a);
    GroupSet out(order_);
    if (!trans_cache_.empty()) {
        GroupSet::or_permuted(out, a, trans_cache_[g]);
    } else {
        a.for_each([&](uint32_t e) { out.set(add(e, g)); });
    }
    return out;
}

GroupSet Group::sumset(const GroupSet& a, const GroupSet& b) const {
    check_set(a);
    check_set(b);
    GroupSet out(order_);
    a.for_each([&](uint32_t e) {
        if (!trans_cache_.empty())
            GroupSet::or_permuted(out, b, trans_cache_[e]);
        else
            b.for_each([&](uint32_t f) { out.set(add(e, f)); });
    });
    return out;
}

GroupSet Group::negate_set(const GroupSet& a) const {
    check_set(a);
    GroupSet out(order_);
    a.for_each([&](uint32_t e) { out.set(neg(e)); });
    return out;
}

void Group::check_set(const GroupSet& a) const {
    if (a.universe() != order_)
        throw Error(ErrorCode::invalid_argument, "set does not belong to this group");
}

GroupSet Group::closure(const GroupSet& gens) const {
    GroupSet cur(order_);
    cur.set(0);
    bool grew = true;
    while (grew) {
        grew = false;
        GroupSet next = cur;
        gens.for_each([&](uint32_t g) { next |= translate_set(cur, g); });
        if (next != cur) {
            cur = next;
            grew = true;
        }
    }
    return cur;
}

namespace {

// Brute force over generator images. The standard basis e_i (tuple with 1 in
// coordinate i) generates the group; a map is a hom iff n_i * img(e_i) = 0.
// Indices below prefix_products[i] are exactly the subgroup <e_0..e_{i-1}>,
// so partial injectivity can be checked level by level.
void aut_dfs(const Group& g, size_t level, std::vector<uint32_t>& img,
             const std::vector<std::vector<uint32_t>>& candidates,
             const std::vector<uint32_t>& prefix_products, uint64_t count_cap,
             std::vector<std::vector<uint32_t>>& out) {
    const auto& moduli = g.moduli();
    if (level == moduli.size()) {
        if (out.size() >= count_cap)
            throw Error(ErrorCode::cap_exceeded, "automorphism count exceeds cap");
        out.push_back(img);
        return;
    }
    uint32_t lo = prefix_products[level];
    uint32_t hi = prefix_products[level + 1];
    for (uint32_t u : candidates[level]) {
        // extend the partial map to <e_0..e_level>
        for (uint32_t idx = lo; idx < hi; ++idx) {
            uint32_t digit = idx / lo; // value of coordinate `level`
            uint32_t rem = idx % lo;
            img[idx] = g.add(g.scalar_mul(digit, u), img[rem]);
        }
        GroupSet seen(g.order());
        bool injective = true;
        for (uint32_t idx = 0; idx < hi && injective; ++idx) {
            if (seen.test(img[idx]))
                injective = false;
            else
                seen.set(img[idx]);
        }
        if (injective)
            aut_dfs(g, level + 1, img, candidates, prefix_products, count_cap, out);
    }
}

} // namespace

AutomorphismSet automorphisms(const Group& g, const Caps& caps) {
    AutomorphismSet out;
    uint32_t n = g.order();

    if (g.is_cyclic()) {
        for (uint32_t t = 1; t < n; ++t) {
            if (std::gcd(t, n) != 1) continue;
            std::vector<uint32_t> map(n);
            for (uint32_t x = 0; x < n; ++x)
                map[x] = static_cast<uint32_t>((uint64_t(x) * t) % n);
            out.maps.push_back(std::move(map));
        }
        if (n == 1) out.maps.push_back({0});
        return out;
    }

    if (n > caps.aut_order_cap)
        throw Error(ErrorCode::cap_exceeded,
                    "automorphism enumeration capped at order " +
                        std::to_string(caps.aut_order_cap) + " for non-cyclic groups");

    const auto& moduli = g.moduli();
    std::vector<uint32_t> prefix_products(moduli.size() + 1);
    prefix_products[0] = 1;
    for (size_t i = 0; i < moduli.size(); ++i)
        prefix_products[i + 1] = prefix_products[i] * moduli[i];

    std::vector<std::vector<uint32_t>> candidates(moduli.size());
    for (size_t i = 0; i < moduli.size(); ++i)
        for (uint32_t u = 0; u < n; ++u)
            if (g.scalar_mul(moduli[i], u) == 0) candidates[i].push_back(u);

    std::vector<uint32_t> img(n, 0);
    aut_dfs(g, 0, img, candidates, prefix_products, caps.aut_count_cap, out.maps);
    return out;
}

} // namespace subsum
