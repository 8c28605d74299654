#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bwf {

using Nat = std::size_t;

/// An eventually periodic subset of the non-negative integers.
///
/// Membership of n is `prefix[n]` below the threshold and
/// `residues[n mod period]` from the threshold on. Values are always kept in
/// canonical form (minimal period, then minimal threshold), so two NatSets
/// compare equal exactly when they contain the same numbers. The defaulted
/// ordering (threshold, period, prefix, residues) is the fixed total order
/// used to sort family members.
class NatSet {
public:
    /// The empty set.
    NatSet();

    static NatSet empty();
    static NatSet omega();
    static NatSet finite(std::vector<Nat> elements);
    /// [k) = {n : n >= k}.
    static NatSet tail(Nat k);
    /// i0 + n*omega. Throws std::invalid_argument when n == 0.
    static NatSet progression(Nat i0, Nat n);

    /// Builds the canonical form of an arbitrary threshold/period description.
    /// `residues` must have size `period` (period >= 1).
    static NatSet from_parts(std::vector<bool> prefix, Nat period, std::vector<bool> residues);

    /// Builds a set from a predicate that is known to be periodic with
    /// `period` from `threshold` on.
    static NatSet from_predicate(Nat threshold, Nat period, const std::function<bool(Nat)>& pred);

    Nat threshold() const noexcept { return threshold_; }
    Nat period() const noexcept { return period_; }
    const std::vector<bool>& prefix() const noexcept { return prefix_; }
    const std::vector<bool>& residues() const noexcept { return residues_; }

    bool contains(Nat n) const noexcept;
    bool is_empty() const noexcept;
    bool is_finite() const noexcept;
    std::optional<Nat> min_element() const noexcept;
    /// Elements of the set below `bound`, ascending.
    std::vector<Nat> elements_below(Nat bound) const;

    friend auto operator<=>(const NatSet&, const NatSet&) = default;
    friend bool operator==(const NatSet&, const NatSet&) = default;

private:
    NatSet(std::vector<bool> prefix, Nat period, std::vector<bool> residues);
    void canonicalize();

    Nat threshold_ = 0;
    Nat period_ = 1;
    std::vector<bool> prefix_;
    std::vector<bool> residues_;
};

NatSet intersect(const NatSet& a, const NatSet& b);
NatSet unite(const NatSet& a, const NatSet& b);

/// {k + d : k in a}, clipped to the non-negative integers.
NatSet shift(const NatSet& a, std::int64_t d);

bool subset(const NatSet& a, const NatSet& b);

/// A set closed under successor. Nonempty inductive sets are exactly tails.
bool is_inductive(const NatSet& a);

struct DownShift {
    Nat k;
    NatSet set;
};

/// Every distinct value of shift(a, -k), k >= 0, with its least witness k.
/// Ordered by k.
std::vector<DownShift> distinct_down_shifts(const NatSet& a);

/// Index of the value shift(a, -k) in the periodic orbit of down shifts:
/// shift(a, -k) == shift(a, -reduce_down_shift(a, k)) and the result is
/// below threshold + period.
Nat reduce_down_shift(const NatSet& a, Nat k) noexcept;

/// Least k with a ⊆ shift(b, -k), if any.
std::optional<Nat> exists_shift_superset(const NatSet& a, const NatSet& b);

/// For every k >= 1, (shift(a,-k) ∩ a) is either a or empty.
bool satisfies_star(const NatSet& a);

/// (i0, n) with a == i0 + n*omega, if a has that shape.
std::optional<std::pair<Nat, Nat>> as_progression(const NatSet& a);

/// Parses the set-expression grammar:
///   set  := term ('|' term)*
///   term := 'w' | '[' nat ')' | nat '+' nat 'w' | '{' nat (',' nat)* '}' | '{}' | 'empty'
/// Whitespace is ignored. Throws ParseError.
NatSet parse_set(std::string_view text);

/// Parses one set expression starting at `pos`, stopping before the first
/// character that cannot continue it. Advances `pos`.
NatSet parse_set_at(std::string_view text, std::size_t& pos);

std::string format_set(const NatSet& a);

} // namespace bwf

template <>
struct std::hash<bwf::NatSet> {
    std::size_t operator()(const bwf::NatSet& s) const noexcept;
};
