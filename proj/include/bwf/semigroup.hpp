#pragma once

#include "bwf/family.hpp"
#include "bwf/natset.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bwf {

using SetIndex = std::size_t;

/// An element of B_ω^F: either the zero (present exactly when the empty set
/// belongs to the family) or a triple (i, j, F) where F is named by its index
/// in the owning family.
class Element {
public:
    static Element zero() noexcept { return Element(); }
    Element(Nat i, Nat j, SetIndex set) noexcept : nonzero_(true), i_(i), j_(j), set_(set) {}

    bool is_zero() const noexcept { return !nonzero_; }
    Nat i() const noexcept { return i_; }
    Nat j() const noexcept { return j_; }
    SetIndex set() const noexcept { return set_; }

    friend auto operator<=>(const Element&, const Element&) = default;
    friend bool operator==(const Element&, const Element&) = default;

private:
    Element() noexcept = default;

    // Zero sorts first.
    bool nonzero_ = false;
    Nat i_ = 0;
    Nat j_ = 0;
    SetIndex set_ = 0;
};

enum class Green { R, L, H, D, J };

std::optional<Green> parse_green(std::string_view name);
const char* green_name(Green rel) noexcept;

/// The semigroup B_ω^F over a closed family. Immutable after construction.
///
/// All set arithmetic needed by the multiplication and the order is done once
/// up front: `meet(a, b, k)` is the family index of F_a ∩ (-k + F_b).
class SemigroupCtx {
public:
    explicit SemigroupCtx(OmegaFamily family);

    const OmegaFamily& family() const noexcept { return family_; }
    bool has_zero() const noexcept { return family_.has_empty(); }
    const NatSet& set_of(const Element& e) const;

    /// Throws ContractViolation unless `e` is a legal element of this semigroup.
    void check(const Element& e) const;
    bool is_valid(const Element& e) const noexcept;

    /// (i, j, s) as an element; Zero when s is empty and the semigroup has a zero.
    /// Throws ContractViolation if s is not a member.
    Element element(Nat i, Nat j, const NatSet& s) const;

    /// Index of F_a ∩ (-k + F_b).
    SetIndex meet(SetIndex a, SetIndex b, Nat k) const;

    /// Triples whose set is the empty member are folded into Zero.
    Element normalize(Nat i, Nat j, SetIndex s) const noexcept;

    /// Nonempty members, by index.
    const std::vector<SetIndex>& nonempty_sets() const noexcept { return nonempty_; }

    /// F_a ⊆ -k1 + F_b and F_b ⊆ -k2 + F_a for some k1, k2.
    bool sets_j_related(SetIndex a, SetIndex b) const { return j_related_.at(a).at(b); }

private:
    OmegaFamily family_;
    std::optional<SetIndex> empty_index_;
    std::vector<SetIndex> nonempty_;
    // meet_[a][b][k] for k < threshold(b) + period(b).
    std::vector<std::vector<std::vector<SetIndex>>> meet_;
    std::vector<std::vector<bool>> j_related_;
};

Element multiply(const SemigroupCtx& ctx, const Element& a, const Element& b);

/// The multiplication evaluated directly with NatSet arithmetic, both case
/// branches included. Slow; used to cross-check `multiply`.
Element multiply_by_sets(const SemigroupCtx& ctx, const Element& a, const Element& b);

Element inverse(const Element& a) noexcept;
bool is_idempotent(const Element& a) noexcept;

/// Natural partial order. Zero is taken to be the least element.
bool natural_leq(const SemigroupCtx& ctx, const Element& a, const Element& b);

bool green(const SemigroupCtx& ctx, Green rel, const Element& a, const Element& b);

/// i - j. Throws ContractViolation for Zero.
std::int64_t sigma_image(const Element& a);

/// Minimal group congruence. Every pair is related when the semigroup has a zero.
bool sigma_equiv(const SemigroupCtx& ctx, const Element& a, const Element& b);

/// All elements with i, j <= n (Zero first when present), ordered by (i, j, set).
std::vector<Element> truncate(const SemigroupCtx& ctx, Nat n);

/// '(i,j,SET)' or '0'.
std::string format_element(const SemigroupCtx& ctx, const Element& e);
/// Throws ParseError on bad syntax, ContractViolation if the set is not a member.
Element parse_element(const SemigroupCtx& ctx, std::string_view text);

} // namespace bwf
