#include "bwf/classify.hpp"

#include "bwf/errors.hpp"
#include "bwf/family.hpp"

namespace bwf {

std::string format_iso_type(const IsoType& t) {
    switch (t.kind) {
    case IsoKind::Trivial: return "Trivial";
    case IsoKind::Bicyclic: return "Bicyclic";
    case IsoKind::BicyclicWithZero: return "BicyclicWithZero";
    case IsoKind::MatrixUnits: return "MatrixUnits";
    case IsoKind::Progression: return "Progression(" + std::to_string(t.step) + ")";
    case IsoKind::Other: return "Other";
    }
    return "Other";
}

std::optional<Element> identity_element(const SemigroupCtx& ctx) {
    const NatSet f0 = family_union(ctx.family());
    if (!is_inductive(f0))
        return std::nullopt;
    const auto idx = ctx.family().index_of(f0);
    if (!idx)
        return std::nullopt;
    return ctx.normalize(0, 0, *idx);
}

namespace {

bool all_nonempty_j_related(const SemigroupCtx& ctx) {
    for (SetIndex a : ctx.nonempty_sets())
        for (SetIndex b : ctx.nonempty_sets())
            if (!ctx.sets_j_related(a, b))
                return false;
    return true;
}

} // namespace

bool is_simple(const SemigroupCtx& ctx) {
    if (ctx.has_zero())
        throw ContractViolation("simplicity is asked of semigroups without zero; use 0-simplicity");
    return all_nonempty_j_related(ctx);
}

bool is_zero_simple(const SemigroupCtx& ctx) {
    if (!ctx.has_zero())
        throw ContractViolation("0-simplicity is asked of semigroups with zero; use simplicity");
    if (ctx.nonempty_sets().empty())
        return false;
    return all_nonempty_j_related(ctx);
}

bool is_bisimple(const SemigroupCtx& ctx) { return ctx.family().size() == 1; }

bool is_zero_bisimple(const SemigroupCtx& ctx) {
    return ctx.has_zero() && ctx.family().size() == 2;
}

IsoType iso_type(const SemigroupCtx& ctx) {
    const auto& fam = ctx.family();
    if (fam.size() == 1) {
        if (fam.has_empty())
            return {IsoKind::Trivial, 0};
        // A closed singleton {F} satisfies (-1 + F) ∩ F = F, so F is inductive.
        if (is_inductive(fam[0]))
            return {IsoKind::Bicyclic, 0};
        return {IsoKind::Other, 0};
    }
    if (!is_zero_bisimple(ctx))
        return {IsoKind::Other, 0};

    const NatSet& f = fam[ctx.nonempty_sets().front()];
    if (f.is_finite()) {
        const auto elements = f.elements_below(f.threshold());
        return {elements.size() == 1 ? IsoKind::MatrixUnits : IsoKind::Other, 0};
    }
    if (is_inductive(f))
        return {IsoKind::BicyclicWithZero, 0};
    if (const auto prog = as_progression(f); prog && prog->second >= 2)
        return {IsoKind::Progression, prog->second};
    return {IsoKind::Other, 0};
}

std::optional<NatSet> find_bicyclic_copy(const SemigroupCtx& ctx) {
    std::optional<NatSet> best;
    for (SetIndex s : ctx.nonempty_sets()) {
        const NatSet& f = ctx.family()[s];
        if (!is_inductive(f))
            continue;
        // Members are already in canonical order, so the first minimum wins ties.
        if (!best || *f.min_element() < *best->min_element())
            best = f;
    }
    return best;
}

bool is_e_unitary(const SemigroupCtx& ctx) {
    // With a nonempty member, 0 <= (0,1,F) and (0,1,F) is not idempotent.
    return !ctx.has_zero() || ctx.nonempty_sets().empty();
}

Classification classify(const SemigroupCtx& ctx) {
    Classification c;
    c.has_zero = ctx.has_zero();
    c.identity = identity_element(ctx);
    if (c.has_zero)
        c.zero_simple = is_zero_simple(ctx);
    else
        c.simple = is_simple(ctx);
    c.bisimple = is_bisimple(ctx);
    c.zero_bisimple = is_zero_bisimple(ctx);
    c.e_unitary = is_e_unitary(ctx);
    c.iso_type = iso_type(ctx);
    c.bicyclic_copy = find_bicyclic_copy(ctx);
    return c;
}

std::pair<Nat, Nat> map_to_bicyclic(const SemigroupCtx& ctx, const Element& e) {
    if (iso_type(ctx).kind != IsoKind::Bicyclic)
        throw ContractViolation("semigroup is not isomorphic to the bicyclic monoid");
    ctx.check(e);
    return {e.i(), e.j()};
}

std::optional<std::pair<Nat, Nat>> map_to_matrix_units(const SemigroupCtx& ctx, const Element& e) {
    if (iso_type(ctx).kind != IsoKind::MatrixUnits)
        throw ContractViolation("semigroup is not isomorphic to the matrix-units semigroup");
    ctx.check(e);
    if (e.is_zero())
        return std::nullopt;
    return std::pair{e.i(), e.j()};
}

} // namespace bwf
