#include "core/sequence.hpp"

#include <numeric>

#include "core/error.hpp"

namespace subsum {

Sequence::Sequence(GroupPtr group, std::vector<uint32_t> mult, uint32_t length_cap)
    : group_(std::move(group)), mult_(std::move(mult)) {
    if (mult_.size() != group_->order())
        throw Error(ErrorCode::invalid_argument, "multiplicity vector size mismatch");
    uint64_t len = std::accumulate(mult_.begin(), mult_.end(), uint64_t(0));
    if (len > length_cap)
        throw Error(ErrorCode::cap_exceeded,
                    "sequence length " + std::to_string(len) + " exceeds cap " +
                        std::to_string(length_cap));
    length_ = static_cast<uint32_t>(len);
}

Sequence Sequence::empty(GroupPtr group) {
    std::vector<uint32_t> m(group->order(), 0);
    return Sequence(std::move(group), std::move(m));
}

Sequence Sequence::parse(GroupPtr group, std::string_view literal, uint32_t length_cap) {
    std::vector<uint32_t> mult(group->order(), 0);

    // split on top-level commas (commas inside parentheses belong to tuples)
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (char c : literal) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            terms.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (depth != 0)
        throw Error(ErrorCode::parse_error, "unbalanced parentheses in sequence literal");
    terms.push_back(cur);
    if (terms.size() == 1 && terms[0].empty())
        return Sequence(std::move(group), std::move(mult), length_cap);

    for (const std::string& term : terms) {
        if (term.empty())
            throw Error(ErrorCode::parse_error, "empty term in sequence literal");
        size_t caret = term.rfind('^');
        // a caret inside parentheses is impossible in the grammar; rfind is safe
        std::string elem = caret == std::string::npos ? term : term.substr(0, caret);
        uint64_t count = 1;
        if (caret != std::string::npos) {
            std::string c = term.substr(caret + 1);
            if (c.empty())
                throw Error(ErrorCode::parse_error, "missing multiplicity in '" + term + "'");
            try {
                count = std::stoull(c);
            } catch (const std::exception&) {
                throw Error(ErrorCode::parse_error, "bad multiplicity in '" + term + "'");
            }
        }
        uint32_t g = group->parse_element(elem);
        mult[g] += static_cast<uint32_t>(count);
    }
    return Sequence(std::move(group), std::move(mult), length_cap);
}

uint32_t Sequence::sum() const {
    uint32_t s = 0;
    for (uint32_t g = 0; g < mult_.size(); ++g)
        if (mult_[g]) s = group_->add(s, group_->scalar_mul(mult_[g], g));
    return s;
}

GroupSet Sequence::support() const {
    GroupSet s(group_->order());
    for (uint32_t g = 0; g < mult_.size(); ++g)
        if (mult_[g]) s.set(g);
    return s;
}

uint32_t Sequence::support_size() const {
    uint32_t c = 0;
    for (uint32_t m : mult_)
        if (m) ++c;
    return c;
}

uint32_t Sequence::max_multiplicity() const {
    uint32_t h = 0;
    for (uint32_t m : mult_) h = std::max(h, m);
    return h;
}

Sequence Sequence::concat(const Sequence& other) const {
    if (group_->literal() != other.group_->literal())
        throw Error(ErrorCode::invalid_argument, "concat across different groups");
    std::vector<uint32_t> m = mult_;
    for (uint32_t g = 0; g < m.size(); ++g) m[g] += other.mult_[g];
    return Sequence(group_, std::move(m));
}

Sequence Sequence::removing(const Sequence& sub) const {
    if (group_->literal() != sub.group_->literal())
        throw Error(ErrorCode::invalid_argument, "removal across different groups");
    std::vector<uint32_t> m = mult_;
    for (uint32_t g = 0; g < m.size(); ++g) {
        if (sub.mult_[g] > m[g])
            throw Error(ErrorCode::invalid_argument,
                        "not a subsequence: multiplicity of " + group_->format_element(g) +
                            " exceeds the host sequence");
        m[g] -= sub.mult_[g];
    }
    return Sequence(group_, std::move(m));
}

Sequence Sequence::translated(uint32_t g) const {
    std::vector<uint32_t> m(mult_.size(), 0);
    for (uint32_t x = 0; x < mult_.size(); ++x)
        if (mult_[x]) m[group_->add(g, x)] = mult_[x];
    return Sequence(group_, std::move(m));
}

Sequence Sequence::appending(uint32_t g, uint32_t copies) const {
    std::vector<uint32_t> m = mult_;
    m[g] += copies;
    return Sequence(group_, std::move(m));
}

std::string Sequence::literal() const {
    std::string out;
    bool first = true;
    for (uint32_t g = 0; g < mult_.size(); ++g) {
        if (!mult_[g]) continue;
        if (!first) out.push_back(',');
        first = false;
        out += group_->format_element(g);
        if (mult_[g] > 1) {
            out.push_back('^');
            out += std::to_string(mult_[g]);
        }
    }
    return out;
}

std::vector<uint32_t> to_elements(const Sequence& s) {
    std::vector<uint32_t> out;
    out.reserve(s.length());
    for (uint32_t g = 0; g < s.group()->order(); ++g)
        for (uint32_t c = 0; c < s.multiplicity(g); ++c) out.push_back(g);
    return out;
}

} // namespace subsum
