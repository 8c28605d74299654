#pragma once

// Brute-force verification of the closed-form characterizations against
// their definitions, on truncated instances. Oracles here only use raw
// multiplication identities and exhaustive search; they never call the
// predicate they are checking.

#include "bwf/family.hpp"
#include "bwf/natset.hpp"
#include "bwf/semigroup.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bwf {

struct CheckFailure {
    std::string inputs;
    std::string expected;
    std::string actual;

    friend auto operator<=>(const CheckFailure&, const CheckFailure&) = default;
};

struct CheckReport {
    std::string name;
    std::uint64_t instances = 0;
    std::vector<CheckFailure> failures;  // sorted
    std::chrono::duration<double> elapsed{};
    std::vector<std::string> notes;

    bool passed() const noexcept { return failures.empty(); }
};

CheckReport check_multiplication(const SemigroupCtx& ctx, Nat n);
CheckReport check_associativity(const SemigroupCtx& ctx, Nat n);
CheckReport check_inverse_axioms(const SemigroupCtx& ctx, Nat n);
CheckReport check_idempotent_commutation(const SemigroupCtx& ctx, Nat n);
CheckReport check_combinatorial(const SemigroupCtx& ctx, Nat n);
CheckReport check_order(const SemigroupCtx& ctx, Nat n);
CheckReport check_green(const SemigroupCtx& ctx, Nat n);
CheckReport check_sigma(const SemigroupCtx& ctx, Nat n);
/// Compares is_e_unitary() with an exhaustive search for a violation. A
/// predicted violation is only required to show up once the window contains a
/// non-idempotent element (n >= 1).
CheckReport check_e_unitary(const SemigroupCtx& ctx, Nat n);
/// identity, (0-)simplicity, bisimplicity and the isomorphism maps.
CheckReport check_classification(const SemigroupCtx& ctx, Nat n);
/// Over every canonical set with threshold <= max_threshold and
/// period <= max_period: for infinite sets, satisfies_star agrees with
/// as_progression, and both agree with membership-scan oracles.
CheckReport check_star_lemma(Nat max_threshold, Nat max_period);

/// Everything above except the star lemma, in a fixed order.
std::vector<CheckReport> run_all_checks(const SemigroupCtx& ctx, Nat n);

// Definitional oracles, exposed for tests.

/// a <= b iff a = b (a^-1 a).
bool leq_by_definition(const SemigroupCtx& ctx, const Element& a, const Element& b);
/// Exhaustive witness search: c c^-1 = a a^-1 and c^-1 c = b^-1 b.
bool d_related_by_search(const SemigroupCtx& ctx, const Element& a, const Element& b);
/// S^1 a S^1 = S^1 b S^1, reduced to the idempotents (0,0,F) and searched
/// over x (0,0,F_b) y with x = (0,k,G), y = (k,0,H).
bool j_related_by_ideals(const SemigroupCtx& ctx, const Element& a, const Element& b);
/// e s = e t for some idempotent e of the search window.
bool sigma_by_definition(const SemigroupCtx& ctx, const Element& a, const Element& b);

/// (e, s) with e idempotent, e <= s and s not idempotent, within truncate(ctx, n).
std::optional<std::pair<Element, Element>> find_e_unitary_violation(const SemigroupCtx& ctx, Nat n);

/// All distinct canonical sets with threshold <= max_threshold and period <= max_period.
std::vector<NatSet> enumerate_sets(Nat max_threshold, Nat max_period);

struct CorpusEntry {
    std::string label;
    OmegaFamily family;
};

/// The six reference families.
std::vector<CorpusEntry> default_corpus();

} // namespace bwf
