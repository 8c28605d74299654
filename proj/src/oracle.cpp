#include "bwf/oracle.hpp"

#include "bwf/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bwf {

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
public:
    explicit Recorder(std::string name) : start_(Clock::now()) { report_.name = std::move(name); }

    void tick(std::uint64_t n = 1) { report_.instances += n; }
    void fail(std::string inputs, std::string expected, std::string actual) {
        report_.failures.push_back({std::move(inputs), std::move(expected), std::move(actual)});
    }
    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    CheckReport finish() {
        std::sort(report_.failures.begin(), report_.failures.end());
        report_.elapsed = Clock::now() - start_;
        return std::move(report_);
    }

private:
    CheckReport report_;
    Clock::time_point start_;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

struct Fmt {
    const SemigroupCtx& ctx;
    std::string operator()(const Element& e) const { return format_element(ctx, e); }
    std::string operator()(const Element& a, const Element& b) const {
        return format_element(ctx, a) + ", " + format_element(ctx, b);
    }
};

Element mul(const SemigroupCtx& ctx, const Element& a, const Element& b) {
    return multiply(ctx, a, b);
}

Nat window_of(std::initializer_list<Element> elements) {
    Nat w = 0;
    for (const auto& e : elements)
        if (!e.is_zero())
            w = std::max({w, e.i(), e.j()});
    return w;
}

Nat max_orbit(const SemigroupCtx& ctx) {
    Nat k = 0;
    for (const auto& s : ctx.family().members())
        k = std::max(k, s.threshold() + s.period());
    return k;
}

std::vector<Element> idempotents_by_definition(const SemigroupCtx& ctx, const std::vector<Element>& elements) {
    std::vector<Element> out;
    for (const auto& e : elements)
        if (mul(ctx, e, e) == e)
            out.push_back(e);
    return out;
}

bool is_two_sided_identity(const SemigroupCtx& ctx, const Element& u, const std::vector<Element>& elements) {
    return std::all_of(elements.begin(), elements.end(), [&](const Element& x) {
        return mul(ctx, u, x) == x && mul(ctx, x, u) == x;
    });
}

// (0,0,F) for the idempotent a a^-1 = (i,i,F), after checking the D-link
// between them through the witness (i,0,F).
Element base_idempotent(const SemigroupCtx& ctx, const Element& a) {
    const Element e = mul(ctx, a, inverse(a));
    const Element base(0, 0, e.set());
    const Element c(e.i(), 0, e.set());
    if (mul(ctx, c, inverse(c)) != e || mul(ctx, inverse(c), c) != base)
        throw std::logic_error("D-link witness failed: multiplication is inconsistent");
    return base;
}

// e1 in S^1 e2 S^1 for e1 = (0,0,F1), e2 = (0,0,F2). A product x e2 y equal to
// e1 forces x = (0,k,G), y = (k,0,H) (or an adjoined identity, which G = F2
// or H = F2 with k = 0 reproduces). The product depends on k only through
// -k + F2, which repeats past threshold + period.
bool in_principal_ideal(const SemigroupCtx& ctx, const Element& e1, const Element& e2) {
    const NatSet& f2 = ctx.family()[e2.set()];
    const Nat orbit = f2.threshold() + f2.period();
    for (Nat k = 0; k < orbit; ++k)
        for (SetIndex g : ctx.nonempty_sets())
            for (SetIndex h : ctx.nonempty_sets())
                if (mul(ctx, mul(ctx, Element(0, k, g), e2), Element(k, 0, h)) == e1)
                    return true;
    return false;
}

std::pair<Nat, Nat> bicyclic_product(std::pair<Nat, Nat> x, std::pair<Nat, Nat> y) {
    const Nat m = std::min(x.second, y.first);
    return {x.first + y.first - m, x.second + y.second - m};
}

} // namespace

// ---------------------------------------------------------------------------
// Definitional oracles

bool leq_by_definition(const SemigroupCtx& ctx, const Element& a, const Element& b) {
    return a == mul(ctx, b, mul(ctx, inverse(a), a));
}

bool d_related_by_search(const SemigroupCtx& ctx, const Element& a, const Element& b) {
    const Element left = mul(ctx, a, inverse(a));
    const Element right = mul(ctx, inverse(b), b);
    // c c^-1 = a a^-1 pins c's first index and c^-1 c = b^-1 b its second, so
    // the window spanned by a and b is exhaustive.
    for (const auto& c : truncate(ctx, window_of({a, b})))
        if (mul(ctx, c, inverse(c)) == left && mul(ctx, inverse(c), c) == right)
            return true;
    return false;
}

bool j_related_by_ideals(const SemigroupCtx& ctx, const Element& a, const Element& b) {
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    const Element ea = base_idempotent(ctx, a);
    const Element eb = base_idempotent(ctx, b);
    return in_principal_ideal(ctx, ea, eb) && in_principal_ideal(ctx, eb, ea);
}

bool sigma_by_definition(const SemigroupCtx& ctx, const Element& a, const Element& b) {
    if (ctx.has_zero())
        return mul(ctx, Element::zero(), a) == mul(ctx, Element::zero(), b);
    const Nat top = window_of({a, b}) + max_orbit(ctx);
    for (Nat m = 0; m <= top; ++m)
        for (SetIndex g : ctx.nonempty_sets()) {
            const Element e(m, m, g);
            if (mul(ctx, e, a) == mul(ctx, e, b))
                return true;
        }
    return false;
}

std::optional<std::pair<Element, Element>> find_e_unitary_violation(const SemigroupCtx& ctx, Nat n) {
    const auto elements = truncate(ctx, n);
    for (const auto& e : idempotents_by_definition(ctx, elements))
        for (const auto& s : elements)
            if (leq_by_definition(ctx, e, s) && mul(ctx, s, s) != s)
                return std::pair{e, s};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Checks

CheckReport check_multiplication(const SemigroupCtx& ctx, Nat n) {
    Recorder rec("multiplication");
    const Fmt fmt{ctx};
    const auto elements = truncate(ctx, n);
    for (const auto& a : elements)
        for (const auto& b : elements) {
            rec.tick();
            const Element fast = multiply(ctx, a, b);
            const Element slow = multiply_by_sets(ctx, a, b);
            if (fast != slow)
                rec.fail(fmt(a, b), fmt(slow), fmt(fast));
        }
    return rec.finish();
}

CheckReport check_associativity(const SemigroupCtx& ctx, Nat n) {
    Recorder rec("associativity");
    const Fmt fmt{ctx};
    const auto elements = truncate(ctx, n);
    for (const auto& a : elements)
        for (const auto& b : elements) {
            const Element ab = mul(ctx, a, b);
            for (const auto& c : elements) {
                rec.tick();
                const Element lhs = mul(ctx, ab, c);
                const Element rhs = mul(ctx, a, mul(ctx, b, c));
                if (lhs != rhs)
                    rec.fail(fmt(a, b) + ", " + fmt(c), fmt(lhs), fmt(rhs));
            }
        }
    return rec.finish();
}

CheckReport check_inverse_axioms(const SemigroupCtx& ctx, Nat n) {
    Recorder rec("inverse_axioms");
    const Fmt fmt{ctx};
    const auto elements = truncate(ctx, n);
    for (const auto& x : elements) {
        rec.tick();
        const Element inv = inverse(x);
        if (mul(ctx, mul(ctx, x, inv), x) != x)
            rec.fail("x x^-1 x, x = " + fmt(x), fmt(x), fmt(mul(ctx, mul(ctx, x, inv), x)));
        if (mul(ctx, mul(ctx, inv, x), inv) != inv)
            rec.fail("x^-1 x x^-1, x = " + fmt(x), fmt(inv), fmt(mul(ctx, mul(ctx, inv, x), inv)));
        const bool squares = mul(ctx, x, x) == x;
        if (is_idempotent(x) != squares)
            rec.fail("idempotent " + fmt(x), yes_no(squares), yes_no(is_idempotent(x)));
        // Uniqueness of the inverse inside the window.
        for (const auto& y : elements) {
            if (y == inv)
                continue;
            if (mul(ctx, mul(ctx, x, y), x) == x && mul(ctx, mul(ctx, y, x), y) == y)
                rec.fail("second inverse of " + fmt(x), fmt(inv), fmt(y));
        }
    }
    return rec.finish();
}

CheckReport check_idempotent_commutation(const SemigroupCtx& ctx, Nat n) {
    Recorder rec("idempotent_commutation");
    const Fmt fmt{ctx};
    const auto idempotents = idempotents_by_definition(ctx, truncate(ctx, n));
    for (const auto& e : idempotents)
        for (const auto& f : idempotents) {
            rec.tick();
            const Element ef = mul(ctx, e, f);
            const Element fe = mul(ctx, f, e);
            if (ef != fe)
                rec.fail(fmt(e, f), fmt(ef), fmt(fe));
        }
    return rec.finish();
}

CheckReport check_combinatorial(const SemigroupCtx& ctx, Nat n) {
    Recorder rec("combinatorial");
    const Fmt fmt{ctx};
    const auto elements = truncate(ctx, n);
    for (const auto& a : elements)
        for (const auto& b : elements) {
            rec.tick();
            const bool h_char = green(ctx, Green::H, a, b);
            const bool h_def = mul(ctx, a, inverse(a)) == mul(ctx, b, inverse(b)) &&
                               mul(ctx, inverse(a), a) == mul(ctx, inverse(b), b);
            if (h_char != (a == b))
                rec.fail("H " + fmt(a, b), yes_no(a == b), yes_no(h_char));
            if (h_def != (a == b))
                rec.fail("H by definition " + fmt(a, b), yes_no(a == b), yes_no(h_def));
        }
    return rec.finish();
}

CheckReport check_order(const SemigroupCtx& ctx, Nat n) {
    Recorder rec("natural_order");
    const Fmt fmt{ctx};
    const auto elements = truncate(ctx, n);
    for (const auto& a : elements) {
        if (!natural_leq(ctx, a, a))
            rec.fail("reflexive " + fmt(a), "true", "false");
        for (const auto& b : elements) {
            rec.tick();
            const bool by_char = natural_leq(ctx, a, b);
            const bool right = leq_by_definition(ctx, a, b);
            const bool left = a == mul(ctx, mul(ctx, a, inverse(a)), b);
            if (by_char != right)
                rec.fail("a = b a^-1 a for " + fmt(a, b), yes_no(right), yes_no(by_char));
            if (by_char != left)
                rec.fail("a = a a^-1 b for " + fmt(a, b), yes_no(left), yes_no(by_char));
            if (by_char && a != b && natural_leq(ctx, b, a))
                rec.fail("antisymmetric " + fmt(a, b), "false", "true");

            // On nonzero idempotents: (i,i,Fi) <= (j,j,Fj) iff i >= j and Fi ⊆ j-i+Fj,
            // against ef = fe = e.
            if (!a.is_zero() && !b.is_zero() && is_idempotent(a) && is_idempotent(b)) {
                const bool lemma =
                    a.i() >= b.i() &&
                    subset(ctx.set_of(a), shift(ctx.set_of(b), static_cast<std::int64_t>(b.i()) -
                                                                    static_cast<std::int64_t>(a.i())));
                const bool semilattice = mul(ctx, a, b) == a && mul(ctx, b, a) == a;
                if (lemma != semilattice)
                    rec.fail("idempotent order " + fmt(a, b), yes_no(semilattice), yes_no(lemma));
                if (lemma != by_char)
                    rec.fail("idempotent order vs natural_leq " + fmt(a, b), yes_no(lemma), yes_no(by_char));
            }
        }
    }
    return rec.finish();
}

CheckReport check_green(const SemigroupCtx& ctx, Nat n) {
    Recorder rec("green");
    const Fmt fmt{ctx};
    const auto elements = truncate(ctx, n);
    std::optional<std::pair<Element, Element>> j_not_d;
    for (const auto& a : elements)
        for (const auto& b : elements) {
            rec.tick();
            const bool r_def = mul(ctx, a, inverse(a)) == mul(ctx, b, inverse(b));
            const bool l_def = mul(ctx, inverse(a), a) == mul(ctx, inverse(b), b);
            const bool d_def = d_related_by_search(ctx, a, b);
            const bool j_def = j_related_by_ideals(ctx, a, b);
            const std::pair<Green, bool> expectations[] = {
                {Green::R, r_def}, {Green::L, l_def}, {Green::H, r_def && l_def},
                {Green::D, d_def}, {Green::J, j_def}};
            for (const auto& [rel, expected] : expectations) {
                const bool actual = green(ctx, rel, a, b);
                if (actual != expected)
                    rec.fail(std::string(green_name(rel)) + " " + fmt(a, b), yes_no(expected), yes_no(actual));
            }
            if (green(ctx, Green::D, a, b) && !a.is_zero()) {
                const Element c(a.i(), b.j(), a.set());
                if (mul(ctx, c, inverse(c)) != mul(ctx, a, inverse(a)) ||
                    mul(ctx, inverse(c), c) != mul(ctx, inverse(b), b))
                    rec.fail("D witness for " + fmt(a, b), "c c^-1 = a a^-1, c^-1 c = b^-1 b", fmt(c));
            }
            if (j_def && !d_def && !j_not_d)
                j_not_d = std::pair{a, b};
        }
    if (j_not_d)
        rec.note("J but not D: " + fmt(j_not_d->first, j_not_d->second));
    return rec.finish();
}

CheckReport check_sigma(const SemigroupCtx& ctx, Nat n) {
    Recorder rec("sigma");
    const Fmt fmt{ctx};
    const auto elements = truncate(ctx, n);
    for (const auto& a : elements)
        for (const auto& b : elements) {
            rec.tick();
            const bool by_char = sigma_equiv(ctx, a, b);
            const bool by_def = sigma_by_definition(ctx, a, b);
            if (by_char != by_def)
                rec.fail("sigma " + fmt(a, b), yes_no(by_def), yes_no(by_char));
            if (ctx.has_zero())
                continue;
            const Element ab = mul(ctx, a, b);
            const auto sum = sigma_image(a) + sigma_image(b);
            if (sigma_image(ab) != sum)
                rec.fail("sigma(ab) for " + fmt(a, b), std::to_string(sum), std::to_string(sigma_image(ab)));
        }
    if (!ctx.has_zero()) {
        for (const auto& x : elements) {
            if (is_idempotent(x) && sigma_image(x) != 0)
                rec.fail("sigma of idempotent " + fmt(x), "0", std::to_string(sigma_image(x)));
            if (sigma_image(inverse(x)) != -sigma_image(x))
                rec.fail("sigma of inverse " + fmt(x), std::to_string(-sigma_image(x)),
                         std::to_string(sigma_image(inverse(x))));
        }
    }
    return rec.finish();
}

CheckReport check_e_unitary(const SemigroupCtx& ctx, Nat n) {
    Recorder rec("e_unitary");
    const Fmt fmt{ctx};
    const auto elements = truncate(ctx, n);
    rec.tick(elements.size() * elements.size());
    const bool predicted = is_e_unitary(ctx);
    const auto violation = find_e_unitary_violation(ctx, n);
    if (violation)
        rec.note("violation: " + fmt(violation->first) + " <= " + fmt(violation->second));
    if (predicted && violation)
        rec.fail("E-unitary", "no violation", fmt(violation->first) + " <= " + fmt(violation->second));
    const bool window_has_non_idempotent = std::any_of(
        elements.begin(), elements.end(), [&](const Element& x) { return mul(ctx, x, x) != x; });
    if (!predicted && !violation && window_has_non_idempotent)
        rec.fail("E-unitary", "a violation", "none found");
    return rec.finish();
}

CheckReport check_classification(const SemigroupCtx& ctx, Nat n) {
    Recorder rec("classification");
    const Fmt fmt{ctx};
    const auto elements = truncate(ctx, n);

    // Identity.
    rec.tick();
    if (const auto id = identity_element(ctx)) {
        if (!is_two_sided_identity(ctx, *id, elements))
            rec.fail("identity", fmt(*id) + " acts as identity", "it does not");
    } else if (n >= 2) {
        for (const auto& u : elements)
            if (is_two_sided_identity(ctx, u, elements))
                rec.fail("identity", "none", fmt(u));
    }

    std::vector<Element> nonzero;
    std::copy_if(elements.begin(), elements.end(), std::back_inserter(nonzero),
                 [](const Element& e) { return !e.is_zero(); });

    // Bisimplicity and (0-)simplicity against the definitional D and J.
    bool one_d_class = true;
    for (const auto& a : elements)
        for (const auto& b : elements) {
            rec.tick();
            one_d_class = one_d_class && d_related_by_search(ctx, a, b);
        }
    if (is_bisimple(ctx) != one_d_class)
        rec.fail("bisimple", yes_no(one_d_class), yes_no(is_bisimple(ctx)));

    bool all_d = true;
    bool all_j = true;
    for (const auto& a : nonzero)
        for (const auto& b : nonzero) {
            rec.tick();
            all_d = all_d && d_related_by_search(ctx, a, b);
            all_j = all_j && j_related_by_ideals(ctx, a, b);
        }
    if (ctx.has_zero()) {
        // 0-bisimple: two D-classes, S\{0} and {0}.
        const bool expected = all_d && !nonzero.empty();
        if (is_zero_bisimple(ctx) != expected)
            rec.fail("0-bisimple", yes_no(expected), yes_no(is_zero_bisimple(ctx)));
        const bool zero_simple = all_j && !nonzero.empty();
        if (is_zero_simple(ctx) != zero_simple)
            rec.fail("0-simple", yes_no(zero_simple), yes_no(is_zero_simple(ctx)));
    } else if (is_simple(ctx) != all_j) {
        rec.fail("simple", yes_no(all_j), yes_no(is_simple(ctx)));
    }

    // Isomorphism maps.
    const IsoType type = iso_type(ctx);
    switch (type.kind) {
    case IsoKind::Bicyclic:
    case IsoKind::BicyclicWithZero: {
        std::set<std::pair<Nat, Nat>> image;
        for (const auto& a : nonzero) {
            image.insert({a.i(), a.j()});
            for (const auto& b : nonzero) {
                rec.tick();
                const Element ab = mul(ctx, a, b);
                const auto expected = bicyclic_product({a.i(), a.j()}, {b.i(), b.j()});
                const std::pair<Nat, Nat> actual =
                    ab.is_zero() ? std::pair<Nat, Nat>{~Nat{0}, ~Nat{0}}
                    : type.kind == IsoKind::Bicyclic ? map_to_bicyclic(ctx, ab)
                                                     : std::pair{ab.i(), ab.j()};
                if (actual != expected)
                    rec.fail("bicyclic image of " + fmt(a, b),
                             std::to_string(expected.first) + "," + std::to_string(expected.second),
                             fmt(ab));
            }
        }
        if (image.size() != nonzero.size())
            rec.fail("bicyclic map injective", std::to_string(nonzero.size()), std::to_string(image.size()));
        break;
    }
    case IsoKind::MatrixUnits:
        for (const auto& a : elements)
            for (const auto& b : elements) {
                rec.tick();
                const auto x = map_to_matrix_units(ctx, a);
                const auto y = map_to_matrix_units(ctx, b);
                std::optional<std::pair<Nat, Nat>> expected;
                if (x && y && x->second == y->first)
                    expected = std::pair{x->first, y->second};
                const auto actual = map_to_matrix_units(ctx, mul(ctx, a, b));
                if (actual != expected)
                    rec.fail("matrix-units image of " + fmt(a, b), expected ? "pair" : "0", fmt(mul(ctx, a, b)));
            }
        break;
    case IsoKind::Progression: {
        // (n,m,i0+j0w) -> (n,m,0+j0w) is an isomorphism onto B^(0,j0).
        const NatSet base_set = NatSet::progression(0, type.step);
        const SemigroupCtx normal(OmegaFamily::close(std::vector{base_set}));
        auto h = [&](const Element& e) {
            return e.is_zero() ? Element::zero() : normal.element(e.i(), e.j(), base_set);
        };
        std::set<Element> image;
        for (const auto& a : elements) {
            image.insert(h(a));
            for (const auto& b : elements) {
                rec.tick();
                const Element lhs = h(mul(ctx, a, b));
                const Element rhs = multiply(normal, h(a), h(b));
                if (lhs != rhs)
                    rec.fail("base shift of " + fmt(a, b), format_element(normal, rhs),
                             format_element(normal, lhs));
            }
        }
        if (image.size() != elements.size())
            rec.fail("base shift injective", std::to_string(elements.size()), std::to_string(image.size()));
        break;
    }
    case IsoKind::Trivial:
        if (elements.size() != 1)
            rec.fail("trivial semigroup size", "1", std::to_string(elements.size()));
        break;
    case IsoKind::Other:
        break;
    }
    rec.note("iso_type: " + format_iso_type(type));
    return rec.finish();
}

std::vector<NatSet> enumerate_sets(Nat max_threshold, Nat max_period) {
    std::set<NatSet> seen;
    for (Nat threshold = 0; threshold <= max_threshold; ++threshold)
        for (Nat period = 1; period <= max_period; ++period)
            for (std::uint64_t pm = 0; pm < (std::uint64_t{1} << threshold); ++pm)
                for (std::uint64_t rm = 0; rm < (std::uint64_t{1} << period); ++rm) {
                    std::vector<bool> prefix(threshold), residues(period);
                    for (Nat b = 0; b < threshold; ++b)
                        prefix[b] = (pm >> b) & 1;
                    for (Nat b = 0; b < period; ++b)
                        residues[b] = (rm >> b) & 1;
                    seen.insert(NatSet::from_parts(std::move(prefix), period, std::move(residues)));
                }
    return {seen.begin(), seen.end()};
}

CheckReport check_star_lemma(Nat max_threshold, Nat max_period) {
    Recorder rec("star_lemma");
    std::size_t infinite = 0;
    std::size_t star = 0;
    for (const auto& a : enumerate_sets(max_threshold, max_period)) {
        rec.tick();
        const std::string name = format_set(a);
        const Nat orbit = a.threshold() + a.period();
        const Nat scan = 2 * orbit + a.period();

        // Condition (*) by membership scan; k beyond threshold + period repeats.
        bool star_scan = true;
        for (Nat k = 1; k <= orbit && star_scan; ++k) {
            bool all = true;
            bool none = true;
            for (Nat n = 0; n < scan; ++n) {
                const bool in_meet = a.contains(n + k) && a.contains(n);
                all = all && in_meet == a.contains(n);
                none = none && !in_meet;
            }
            star_scan = all || none;
        }

        // Progression shape by search: i0 + s*w has minimum i0 < threshold + period
        // and step s equal to its period.
        std::optional<std::pair<Nat, Nat>> prog_scan;
        for (Nat i0 = 0; i0 < orbit && !prog_scan; ++i0)
            for (Nat s = 1; s <= 2 * a.period() && !prog_scan; ++s) {
                bool same = true;
                for (Nat n = 0; n < scan + 2 * s + i0 && same; ++n)
                    same = a.contains(n) == (n >= i0 && (n - i0) % s == 0);
                if (same)
                    prog_scan = std::pair{i0, s};
            }

        const bool star_lib = satisfies_star(a);
        const auto prog_lib = as_progression(a);
        if (star_lib != star_scan)
            rec.fail("satisfies_star " + name, yes_no(star_scan), yes_no(star_lib));
        if (prog_lib != prog_scan)
            rec.fail("as_progression " + name, prog_scan ? "present" : "absent", prog_lib ? "present" : "absent");
        if (!a.is_finite()) {
            ++infinite;
            star += star_lib ? 1 : 0;
            if (star_lib != prog_lib.has_value())
                rec.fail("star <=> progression for " + name, yes_no(star_lib), yes_no(prog_lib.has_value()));
        }
    }
    rec.note(std::to_string(infinite) + " infinite sets, " + std::to_string(star) + " satisfy (*)");
    return rec.finish();
}

std::vector<CheckReport> run_all_checks(const SemigroupCtx& ctx, Nat n) {
    std::vector<CheckReport> out;
    out.push_back(check_multiplication(ctx, n));
    out.push_back(check_associativity(ctx, n));
    out.push_back(check_inverse_axioms(ctx, n));
    out.push_back(check_idempotent_commutation(ctx, n));
    out.push_back(check_combinatorial(ctx, n));
    out.push_back(check_order(ctx, n));
    out.push_back(check_green(ctx, n));
    out.push_back(check_sigma(ctx, n));
    out.push_back(check_e_unitary(ctx, n));
    out.push_back(check_classification(ctx, n));
    return out;
}

std::vector<CorpusEntry> default_corpus() {
    const std::pair<const char*, std::vector<NatSet>> generators[] = {
        {"closure(w)", {NatSet::omega()}},
        {"closure({0})", {NatSet::finite({0})}},
        {"closure(2+3w)", {NatSet::progression(2, 3)}},
        {"closure([2), w)", {NatSet::tail(2), NatSet::omega()}},
        {"closure(0+2w, 1+2w)", {NatSet::progression(0, 2), NatSet::progression(1, 2)}},
        {"closure({0,1}, {0})", {NatSet::finite({0, 1}), NatSet::finite({0})}},
    };
    std::vector<CorpusEntry> out;
    for (const auto& [label, gens] : generators)
        out.push_back({label, OmegaFamily::close(gens)});
    return out;
}

} // namespace bwf
