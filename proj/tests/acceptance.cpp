// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "bwf/classify.hpp"
#include "bwf/oracle.hpp"

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace bwf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok)
                detail << what;
            ok = false;
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SemigroupCtx closed(std::initializer_list<NatSet> generators) {
    return SemigroupCtx(OmegaFamily::close(std::vector<NatSet>(generators)));
}

SemigroupCtx exact(std::initializer_list<NatSet> members) {
    return SemigroupCtx(OmegaFamily::validate(std::vector<NatSet>(members)));
}

bool two_sided_identity(const SemigroupCtx& ctx, const Element& u, const std::vector<Element>& xs) {
    for (const auto& x : xs)
        if (multiply(ctx, u, x) != x || multiply(ctx, x, u) != x)
            return false;
    return true;
}

void fail_report(Outcome& o, const std::string& label, const CheckReport& r) {
    if (!r.passed())
        o.require(false, label + " " + r.name + ": " + r.failures.front().inputs + " expected " +
                             r.failures.front().expected + ", got " + r.failures.front().actual);
}

Outcome associativity() {
    Outcome o;
    const auto t0 = Clock::now();
    std::uint64_t triples = 0;
    for (const auto& entry : default_corpus()) {
        const auto r = check_associativity(SemigroupCtx(entry.family), 4);
        triples += r.instances;
        o.require(r.instances >= 25 * 25 * 25, entry.label + ": too few triples");
        fail_report(o, entry.label, r);
    }
    const double s = seconds_since(t0);
    o.require(s < 10.0, "took longer than 10 s");
    o.detail << (o.ok ? "" : "; ") << triples << " triples in " << s << " s";
    return o;
}

Outcome bicyclic_table() {
    Outcome o;
    const auto ctx = exact({NatSet::omega()});
    o.require(iso_type(ctx).kind == IsoKind::Bicyclic, "{w} not recognised as bicyclic");
    const auto elements = truncate(ctx, 3);
    o.require(elements.size() == 16, "expected 16 elements");
    int products = 0;
    for (const auto& a : elements)
        for (const auto& b : elements) {
            const auto [i1, j1] = map_to_bicyclic(ctx, a);
            const auto [i2, j2] = map_to_bicyclic(ctx, b);
            const std::pair<Nat, Nat> expected =
                j1 <= i2 ? std::pair<Nat, Nat>{i1 - j1 + i2, j2} : std::pair<Nat, Nat>{i1, j1 - i2 + j2};
            o.require(map_to_bicyclic(ctx, multiply(ctx, a, b)) == expected,
                      format_element(ctx, a) + "*" + format_element(ctx, b));
            ++products;
        }
    o.detail << (o.ok ? "" : "; ") << products << " products";
    o.require(products == 256, "expected 256 products");
    return o;
}

Outcome matrix_units_table() {
    Outcome o;
    const auto ctx = closed({NatSet::finite({0})});
    o.require(iso_type(ctx).kind == IsoKind::MatrixUnits, "closure({0}) not recognised as matrix units");
    const auto elements = truncate(ctx, 3);
    int products = 0;
    for (const auto& a : elements)
        for (const auto& b : elements) {
            const auto x = map_to_matrix_units(ctx, a);
            const auto y = map_to_matrix_units(ctx, b);
            std::optional<std::pair<Nat, Nat>> expected;
            if (x && y && x->second == y->first)
                expected = std::pair<Nat, Nat>{x->first, y->second};
            o.require(map_to_matrix_units(ctx, multiply(ctx, a, b)) == expected,
                      format_element(ctx, a) + "*" + format_element(ctx, b));
            ++products;
        }
    o.detail << (o.ok ? "" : "; ") << products << " products";
    return o;
}

Outcome green_relations() {
    Outcome o;
    std::uint64_t pairs = 0;
    for (const auto& entry : default_corpus()) {
        const auto r = check_green(SemigroupCtx(entry.family), 4);
        pairs += r.instances;
        fail_report(o, entry.label, r);
    }
    const auto ctx = closed({NatSet::tail(2), NatSet::omega()});
    const auto a = parse_element(ctx, "(0,0,w)");
    const auto b = parse_element(ctx, "(0,0,[2))");
    o.require(green(ctx, Green::J, a, b) && j_related_by_ideals(ctx, a, b), "(0,0,w), (0,0,[2)) not J-related");
    o.require(!green(ctx, Green::D, a, b) && !d_related_by_search(ctx, a, b), "(0,0,w), (0,0,[2)) D-related");
    o.detail << (o.ok ? "" : "; ") << pairs << " pairs, J but not D confirmed";
    return o;
}

Outcome natural_order() {
    Outcome o;
    std::uint64_t pairs = 0;
    for (const auto& entry : default_corpus()) {
        const SemigroupCtx ctx(entry.family);
        const auto r = check_order(ctx, 4);
        pairs += r.instances;
        fail_report(o, entry.label, r);
        // Idempotents (n,n,F) <= (m,m,G) iff n >= m and F ⊆ -(n-m)+G.
        const auto elements = truncate(ctx, 4);
        for (const auto& e : elements)
            for (const auto& f : elements) {
                if (!is_idempotent(e) || !is_idempotent(f) || e.is_zero() || f.is_zero())
                    continue;
                const bool lemma = e.i() >= f.i() &&
                                   subset(ctx.set_of(e), shift(ctx.set_of(f), -std::int64_t(e.i() - f.i())));
                o.require(natural_leq(ctx, e, f) == lemma, entry.label + ": idempotent order");
                o.require(leq_by_definition(ctx, e, f) == lemma, entry.label + ": idempotent definition");
            }
    }
    o.detail << (o.ok ? "" : "; ") << pairs << " pairs";
    return o;
}

Outcome sigma() {
    Outcome o;
    std::uint64_t pairs = 0;
    for (const auto& entry : default_corpus()) {
        const SemigroupCtx ctx(entry.family);
        if (ctx.has_zero())
            continue;
        const auto elements = truncate(ctx, 4);
        std::set<std::int64_t> image;
        for (const auto& a : elements)
            image.insert(sigma_image(a));
        for (const auto& a : elements)
            for (const auto& b : elements) {
                ++pairs;
                const auto sa = sigma_image(a);
                const auto sb = sigma_image(b);
                o.require(sigma_image(multiply(ctx, a, b)) == sa + sb, entry.label + ": not a homomorphism");
                if (image.count(sa + sb) == 0 && std::llabs(sa + sb) <= 4)
                    o.require(false, entry.label + ": image not closed under addition");
                o.require(sigma_by_definition(ctx, a, b) == (sa == sb), entry.label + ": kernel is not the fibres");
            }
        fail_report(o, entry.label, check_sigma(ctx, 4));
    }
    o.detail << (o.ok ? "" : "; ") << pairs << " pairs over zero-free families";
    return o;
}

Outcome identity() {
    Outcome o;
    const auto ctx = closed({NatSet::tail(2), NatSet::omega()});
    const auto id = identity_element(ctx);
    o.require(id == parse_element(ctx, "(0,0,w)"), "closure([2),w) identity is not (0,0,w)");
    const auto elements = truncate(ctx, 3);
    if (id)
        o.require(two_sided_identity(ctx, *id, elements), "(0,0,w) is not a two-sided identity");

    const auto mu = closed({NatSet::finite({0})});
    o.require(!identity_element(mu).has_value(), "closure({0}) reports an identity");
    for (const auto& u : truncate(mu, 3))
        o.require(!two_sided_identity(mu, u, truncate(mu, 3)), "closure({0}) element acts as identity");
    o.detail << (o.ok ? "" : "; ") << "(0,0,w) on " << elements.size() << " elements; none for closure({0})";
    return o;
}

Outcome classification() {
    Outcome o;
    const auto expect = [&](const SemigroupCtx& ctx, IsoType want, const std::string& label) {
        const IsoType got = iso_type(ctx);
        o.require(got == want, label + " -> " + format_iso_type(got));
        o.require(classify(ctx).iso_type == want, label + " classify disagrees");
    };
    expect(exact({NatSet::empty(), NatSet::finite({0})}), {IsoKind::MatrixUnits, 0}, "{empty,{0}}");
    expect(exact({NatSet::empty(), NatSet::omega()}), {IsoKind::BicyclicWithZero, 0}, "{empty,w}");
    expect(closed({NatSet::progression(2, 3)}), {IsoKind::Progression, 3}, "closure(2+3w)");
    expect(exact({NatSet::omega()}), {IsoKind::Bicyclic, 0}, "{w}");
    expect(exact({NatSet::empty()}), {IsoKind::Trivial, 0}, "{empty}");

    // Normalized base 0: shifting down by the base gives an isomorphic copy.
    const auto prog = closed({NatSet::progression(2, 3)});
    const auto base = closed({NatSet::progression(0, 3)});
    const auto r = check_classification(prog, 3);
    fail_report(o, "closure(2+3w)", r);
    o.require(iso_type(base) == iso_type(prog), "closure(0+3w) differs from closure(2+3w)");
    o.detail << (o.ok ? "" : "; ") << "5 families";
    return o;
}

Outcome star_lemma() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto r = check_star_lemma(3, 4);
    const double s = seconds_since(t0);
    fail_report(o, "star", r);
    o.require(r.instances == enumerate_sets(3, 4).size(), "not every set was checked");
    o.require(s < 1.0, "took longer than 1 s");
    o.detail << (o.ok ? "" : "; ") << r.instances << " sets in " << s << " s";
    return o;
}

Outcome e_unitary() {
    Outcome o;
    int families = 0;
    for (const auto& entry : default_corpus()) {
        const SemigroupCtx ctx(entry.family);
        if (ctx.has_zero())
            continue;
        ++families;
        o.require(is_e_unitary(ctx), entry.label + " predicted not E-unitary");
        o.require(!find_e_unitary_violation(ctx, 4).has_value(), entry.label + " has a violation");
        fail_report(o, entry.label, check_e_unitary(ctx, 4));
    }
    const auto mu = closed({NatSet::finite({0})});
    const auto witness = find_e_unitary_violation(mu, 4);
    o.require(witness.has_value(), "no witness for closure({0})");
    if (witness) {
        o.require(is_idempotent(witness->first) && !is_idempotent(witness->second) &&
                      natural_leq(mu, witness->first, witness->second),
                  "witness is not a violation");
        o.detail << (o.ok ? "" : "; ") << families << " zero-free families; witness "
                 << format_element(mu, witness->first) << " <= " << format_element(mu, witness->second);
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"associativity", associativity},
        {"bicyclic equivalence", bicyclic_table},
        {"matrix-units equivalence", matrix_units_table},
        {"Green's relations", green_relations},
        {"natural partial order", natural_order},
        {"sigma congruence", sigma},
        {"identity", identity},
        {"classification", classification},
        {"shift lemma", star_lemma},
        {"E-unitarity", e_unitary},
    };
    int failed = 0;
    int index = 0;
    for (const auto& c : criteria) {
        const Outcome o = c.run();
        failed += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << ++index << ". " << c.name << "  (" << o.detail.str()
                  << ")\n";
    }
    std::cout << (10 - failed) << "/10 criteria passed\n";
    return failed == 0 ? 0 : 1;
}
