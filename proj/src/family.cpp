#include "bwf/family.hpp"

#include "bwf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <utility>

namespace bwf {

OmegaFamily::OmegaFamily(std::vector<NatSet> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    has_empty_ = std::any_of(members_.begin(), members_.end(),
                             [](const NatSet& s) { return s.is_empty(); });
}

OmegaFamily OmegaFamily::close(std::span<const NatSet> generators) {
    if (generators.empty())
        throw std::invalid_argument("a family needs at least one generator");

    std::vector<NatSet> members;
    std::set<NatSet> seen;
    std::vector<std::vector<NatSet>> shifts;  // distinct down shifts, parallel to members

    auto admit = [&](NatSet s) {
        if (seen.insert(s).second) {
            std::vector<NatSet> ds;
            for (auto& d : distinct_down_shifts(s))
                ds.push_back(std::move(d.set));
            shifts.push_back(std::move(ds));
            members.push_back(std::move(s));
        }
    };
    for (const auto& g : generators)
        admit(g);

    // Breadth-first over members in insertion order: once member `next` is
    // processed, every pair among members[0..next] has been combined both ways.
    for (std::size_t next = 0; next < members.size(); ++next) {
        for (std::size_t other = 0; other <= next; ++other) {
            for (const auto& [lhs, rhs] : {std::pair{next, other}, std::pair{other, next}}) {
                // Copy: `admit` may reallocate `shifts`.
                const std::vector<NatSet> rhs_shifts = shifts[rhs];
                const NatSet lhs_set = members[lhs];
                for (const auto& s : rhs_shifts)
                    admit(intersect(lhs_set, s));
            }
        }
    }
    return OmegaFamily(std::move(members));
}

OmegaFamily OmegaFamily::validate(std::span<const NatSet> sets) {
    if (sets.empty())
        throw std::invalid_argument("a family needs at least one member");
    if (!is_closed(sets))
        throw ContractViolation("family is not omega-closed");
    return OmegaFamily(std::vector<NatSet>(sets.begin(), sets.end()));
}

std::optional<std::size_t> OmegaFamily::index_of(const NatSet& s) const {
    const auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it == members_.end() || *it != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

bool is_closed(std::span<const NatSet> sets) {
    const std::set<NatSet> lookup(sets.begin(), sets.end());
    for (const auto& rhs : sets) {
        for (const auto& ds : distinct_down_shifts(rhs))
            for (const auto& lhs : sets)
                if (!lookup.contains(intersect(lhs, ds.set)))
                    return false;
    }
    return true;
}

NatSet family_union(const OmegaFamily& f) {
    NatSet acc = NatSet::empty();
    for (const auto& m : f.members())
        acc = unite(acc, m);
    return acc;
}

std::vector<NatSet> parse_set_list(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    bool wrapped = false;
    if (text.substr(pos, 7) == "family{") {
        wrapped = true;
        pos += 7;
    }
    std::vector<NatSet> sets;
    sets.push_back(parse_set_at(text, pos));
    skip_ws();
    while (pos < text.size() && text[pos] == ',') {
        ++pos;
        sets.push_back(parse_set_at(text, pos));
        skip_ws();
    }
    if (wrapped) {
        if (pos >= text.size() || text[pos] != '}')
            throw ParseError("expected '}' closing the family literal", pos);
        ++pos;
        skip_ws();
    }
    if (pos != text.size())
        throw ParseError("unexpected trailing input", pos);
    return sets;
}

std::string format_family(const OmegaFamily& f) {
    std::string out = "family{";
    for (std::size_t i = 0; i < f.size(); ++i)
        out += (i ? ", " : "") + format_set(f[i]);
    return out + "}";
}

} // namespace bwf
