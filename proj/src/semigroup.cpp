#include "bwf/semigroup.hpp"

#include "bwf/errors.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace bwf {

std::optional<Green> parse_green(std::string_view name) {
    if (name == "R") return Green::R;
    if (name == "L") return Green::L;
    if (name == "H") return Green::H;
    if (name == "D") return Green::D;
    if (name == "J") return Green::J;
    return std::nullopt;
}

const char* green_name(Green rel) noexcept {
    switch (rel) {
    case Green::R: return "R";
    case Green::L: return "L";
    case Green::H: return "H";
    case Green::D: return "D";
    case Green::J: return "J";
    }
    return "?";
}

SemigroupCtx::SemigroupCtx(OmegaFamily family) : family_(std::move(family)) {
    const auto& members = family_.members();
    if (!is_closed(members))
        throw ContractViolation("family is not omega-closed");
    const std::size_t m = members.size();

    for (SetIndex s = 0; s < m; ++s) {
        if (members[s].is_empty())
            empty_index_ = s;
        else
            nonempty_.push_back(s);
    }

    meet_.assign(m, std::vector<std::vector<SetIndex>>(m));
    for (SetIndex b = 0; b < m; ++b) {
        const Nat orbit = members[b].threshold() + members[b].period();
        for (Nat k = 0; k < orbit; ++k) {
            const NatSet shifted = shift(members[b], -static_cast<std::int64_t>(k));
            for (SetIndex a = 0; a < m; ++a) {
                const auto idx = family_.index_of(intersect(members[a], shifted));
                // is_closed() above guarantees membership.
                meet_[a][b].push_back(*idx);
            }
        }
    }

    j_related_.assign(m, std::vector<bool>(m, false));
    for (SetIndex a = 0; a < m; ++a)
        for (SetIndex b = 0; b < m; ++b)
            j_related_[a][b] = exists_shift_superset(members[a], members[b]).has_value() &&
                               exists_shift_superset(members[b], members[a]).has_value();
}

const NatSet& SemigroupCtx::set_of(const Element& e) const {
    if (e.is_zero())
        throw ContractViolation("zero carries no set");
    return family_[e.set()];
}

bool SemigroupCtx::is_valid(const Element& e) const noexcept {
    if (e.is_zero())
        return has_zero();
    return e.set() < family_.size() && e.set() != empty_index_;
}

void SemigroupCtx::check(const Element& e) const {
    if (!is_valid(e))
        throw ContractViolation("element does not belong to this semigroup");
}

Element SemigroupCtx::element(Nat i, Nat j, const NatSet& s) const {
    const auto idx = family_.index_of(s);
    if (!idx)
        throw ContractViolation("set " + format_set(s) + " is not a member of the family");
    return normalize(i, j, *idx);
}

SetIndex SemigroupCtx::meet(SetIndex a, SetIndex b, Nat k) const {
    return meet_[a][b][reduce_down_shift(family_[b], k)];
}

Element SemigroupCtx::normalize(Nat i, Nat j, SetIndex s) const noexcept {
    if (s == empty_index_)
        return Element::zero();
    return Element(i, j, s);
}

Element multiply(const SemigroupCtx& ctx, const Element& a, const Element& b) {
    ctx.check(a);
    ctx.check(b);
    if (a.is_zero() || b.is_zero())
        return Element::zero();
    if (a.j() <= b.i()) {
        // (i1 - j1 + i2, j2, (j1 - i2 + F1) ∩ F2)
        return ctx.normalize(a.i() - a.j() + b.i(), b.j(), ctx.meet(b.set(), a.set(), b.i() - a.j()));
    }
    // (i1, j1 - i2 + j2, F1 ∩ (i2 - j1 + F2))
    return ctx.normalize(a.i(), a.j() - b.i() + b.j(), ctx.meet(a.set(), b.set(), a.j() - b.i()));
}

Element multiply_by_sets(const SemigroupCtx& ctx, const Element& a, const Element& b) {
    ctx.check(a);
    ctx.check(b);
    if (a.is_zero() || b.is_zero())
        return Element::zero();
    const NatSet& f1 = ctx.set_of(a);
    const NatSet& f2 = ctx.set_of(b);
    const auto i1 = static_cast<std::int64_t>(a.i());
    const auto j1 = static_cast<std::int64_t>(a.j());
    const auto i2 = static_cast<std::int64_t>(b.i());
    const auto j2 = static_cast<std::int64_t>(b.j());

    std::optional<Element> low, high;
    if (j1 <= i2)
        low = ctx.element(static_cast<Nat>(i1 - j1 + i2), b.j(), intersect(shift(f1, j1 - i2), f2));
    if (j1 >= i2)
        high = ctx.element(a.i(), static_cast<Nat>(j1 - i2 + j2), intersect(f1, shift(f2, i2 - j1)));
    if (low && high && *low != *high)
        throw std::logic_error("multiplication branches disagree at j1 == i2");
    return low ? *low : *high;
}

Element inverse(const Element& a) noexcept {
    if (a.is_zero())
        return a;
    return Element(a.j(), a.i(), a.set());
}

bool is_idempotent(const Element& a) noexcept { return a.is_zero() || a.i() == a.j(); }

bool natural_leq(const SemigroupCtx& ctx, const Element& a, const Element& b) {
    ctx.check(a);
    ctx.check(b);
    if (a.is_zero())
        return true;
    if (b.is_zero())
        return false;
    if (a.i() < b.i() || a.j() < b.j() || a.i() - b.i() != a.j() - b.j())
        return false;
    // F1 ⊆ -k + F2  <=>  F1 ∩ (-k + F2) = F1
    return ctx.meet(a.set(), b.set(), a.i() - b.i()) == a.set();
}

bool green(const SemigroupCtx& ctx, Green rel, const Element& a, const Element& b) {
    ctx.check(a);
    ctx.check(b);
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    switch (rel) {
    case Green::R: return a.i() == b.i() && a.set() == b.set();
    case Green::L: return a.j() == b.j() && a.set() == b.set();
    case Green::H: return a == b;
    case Green::D: return a.set() == b.set();
    case Green::J: return ctx.sets_j_related(a.set(), b.set());
    }
    return false;
}

std::int64_t sigma_image(const Element& a) {
    if (a.is_zero())
        throw ContractViolation("sigma image of zero is undefined");
    return static_cast<std::int64_t>(a.i()) - static_cast<std::int64_t>(a.j());
}

bool sigma_equiv(const SemigroupCtx& ctx, const Element& a, const Element& b) {
    ctx.check(a);
    ctx.check(b);
    if (ctx.has_zero())
        return true;
    return sigma_image(a) == sigma_image(b);
}

std::vector<Element> truncate(const SemigroupCtx& ctx, Nat n) {
    std::vector<Element> out;
    if (ctx.has_zero())
        out.push_back(Element::zero());
    for (Nat i = 0; i <= n; ++i)
        for (Nat j = 0; j <= n; ++j)
            for (SetIndex s : ctx.nonempty_sets())
                out.emplace_back(i, j, s);
    return out;
}

std::string format_element(const SemigroupCtx& ctx, const Element& e) {
    if (e.is_zero())
        return "0";
    return "(" + std::to_string(e.i()) + "," + std::to_string(e.j()) + "," +
           format_set(ctx.set_of(e)) + ")";
}

Element parse_element(const SemigroupCtx& ctx, std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    };
    auto nat = [&] {
        skip_ws();
        const std::size_t start = pos;
        Nat v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<Nat>(text[pos] - '0');
            if (v > 1'000'000'000)
                throw ParseError("number too large", start);
            ++pos;
        }
        if (pos == start)
            throw ParseError("expected a natural number", pos);
        return v;
    };

    skip_ws();
    if (pos < text.size() && text[pos] == '0') {
        ++pos;
        skip_ws();
        if (pos != text.size())
            throw ParseError("unexpected trailing input", pos);
        if (!ctx.has_zero())
            throw ContractViolation("this semigroup has no zero");
        return Element::zero();
    }
    expect('(');
    const Nat i = nat();
    expect(',');
    const Nat j = nat();
    expect(',');
    const NatSet s = parse_set_at(text, pos);
    expect(')');
    skip_ws();
    if (pos != text.size())
        throw ParseError("unexpected trailing input", pos);
    return ctx.element(i, j, s);
}

} // namespace bwf
