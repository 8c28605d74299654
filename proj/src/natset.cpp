#include "bwf/natset.hpp"

#include "bwf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bwf {

NatSet::NatSet() : residues_{false} {}

NatSet::NatSet(std::vector<bool> prefix, Nat period, std::vector<bool> residues)
    : threshold_(prefix.size()), period_(period), prefix_(std::move(prefix)),
      residues_(std::move(residues)) {
    canonicalize();
}

void NatSet::canonicalize() {
    // Minimal period first: the eventual minimal period does not depend on the
    // threshold, so folding the threshold afterwards cannot undo it.
    for (Nat d = 1; d < period_; ++d) {
        if (period_ % d != 0)
            continue;
        bool invariant = true;
        for (Nat r = d; r < period_ && invariant; ++r)
            invariant = residues_[r] == residues_[r % d];
        if (invariant) {
            residues_.resize(d);
            period_ = d;
            break;
        }
    }
    while (threshold_ > 0 && prefix_[threshold_ - 1] == residues_[(threshold_ - 1) % period_]) {
        prefix_.pop_back();
        --threshold_;
    }
}

NatSet NatSet::empty() { return NatSet{}; }

NatSet NatSet::omega() { return NatSet({}, 1, {true}); }

NatSet NatSet::finite(std::vector<Nat> elements) {
    if (elements.empty())
        return empty();
    const Nat top = *std::max_element(elements.begin(), elements.end());
    std::vector<bool> prefix(top + 1, false);
    for (Nat e : elements)
        prefix[e] = true;
    return NatSet(std::move(prefix), 1, {false});
}

NatSet NatSet::tail(Nat k) { return NatSet(std::vector<bool>(k, false), 1, {true}); }

NatSet NatSet::progression(Nat i0, Nat n) {
    if (n == 0)
        throw std::invalid_argument("progression step must be at least 1");
    return from_predicate(i0, n, [i0, n](Nat m) { return m >= i0 && (m - i0) % n == 0; });
}

NatSet NatSet::from_parts(std::vector<bool> prefix, Nat period, std::vector<bool> residues) {
    if (period == 0 || residues.size() != period)
        throw std::invalid_argument("residue table must have exactly `period` entries");
    return NatSet(std::move(prefix), period, std::move(residues));
}

NatSet NatSet::from_predicate(Nat threshold, Nat period, const std::function<bool(Nat)>& pred) {
    std::vector<bool> prefix(threshold);
    for (Nat n = 0; n < threshold; ++n)
        prefix[n] = pred(n);
    std::vector<bool> residues(period);
    const Nat base = threshold % period;
    for (Nat r = 0; r < period; ++r)
        residues[r] = pred(threshold + (r + period - base) % period);
    return NatSet(std::move(prefix), period, std::move(residues));
}

bool NatSet::contains(Nat n) const noexcept {
    return n < threshold_ ? prefix_[n] : residues_[n % period_];
}

bool NatSet::is_empty() const noexcept { return threshold_ == 0 && is_finite(); }

bool NatSet::is_finite() const noexcept {
    return std::none_of(residues_.begin(), residues_.end(), [](bool b) { return b; });
}

std::optional<Nat> NatSet::min_element() const noexcept {
    for (Nat n = 0; n < threshold_ + period_; ++n)
        if (contains(n))
            return n;
    return std::nullopt;
}

std::vector<Nat> NatSet::elements_below(Nat bound) const {
    std::vector<Nat> out;
    for (Nat n = 0; n < bound; ++n)
        if (contains(n))
            out.push_back(n);
    return out;
}

namespace {

template <typename Op>
NatSet combine(const NatSet& a, const NatSet& b, Op op) {
    const Nat threshold = std::max(a.threshold(), b.threshold());
    const Nat period = std::lcm(a.period(), b.period());
    return NatSet::from_predicate(threshold, period,
                                  [&](Nat n) { return op(a.contains(n), b.contains(n)); });
}

} // namespace

NatSet intersect(const NatSet& a, const NatSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && y; });
}

NatSet unite(const NatSet& a, const NatSet& b) {
    return combine(a, b, [](bool x, bool y) { return x || y; });
}

NatSet shift(const NatSet& a, std::int64_t d) {
    if (d == 0)
        return a;
    if (d > 0) {
        const Nat up = static_cast<Nat>(d);
        return NatSet::from_predicate(a.threshold() + up, a.period(),
                                      [&](Nat n) { return n >= up && a.contains(n - up); });
    }
    const Nat down = static_cast<Nat>(-d);
    const Nat threshold = a.threshold() > down ? a.threshold() - down : 0;
    return NatSet::from_predicate(threshold, a.period(),
                                  [&](Nat n) { return a.contains(n + down); });
}

bool subset(const NatSet& a, const NatSet& b) {
    const Nat bound = std::max(a.threshold(), b.threshold()) + std::lcm(a.period(), b.period());
    for (Nat n = 0; n < bound; ++n)
        if (a.contains(n) && !b.contains(n))
            return false;
    return true;
}

bool is_inductive(const NatSet& a) { return intersect(shift(a, -1), a) == a; }

Nat reduce_down_shift(const NatSet& a, Nat k) noexcept {
    const Nat bound = a.threshold() + a.period();
    if (k < bound)
        return k;
    return a.threshold() + (k - a.threshold()) % a.period();
}

std::vector<DownShift> distinct_down_shifts(const NatSet& a) {
    std::vector<DownShift> out;
    const Nat bound = a.threshold() + a.period();
    for (Nat k = 0; k < bound; ++k) {
        NatSet s = shift(a, -static_cast<std::int64_t>(k));
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const DownShift& ds) { return ds.set == s; });
        if (!seen)
            out.push_back({k, std::move(s)});
    }
    return out;
}

std::optional<Nat> exists_shift_superset(const NatSet& a, const NatSet& b) {
    const Nat bound = b.threshold() + b.period();
    for (Nat k = 0; k < bound; ++k)
        if (subset(a, shift(b, -static_cast<std::int64_t>(k))))
            return k;
    return std::nullopt;
}

bool satisfies_star(const NatSet& a) {
    for (const auto& ds : distinct_down_shifts(a)) {
        const NatSet meet = intersect(ds.set, a);
        if (meet != a && !meet.is_empty())
            return false;
    }
    return true;
}

std::optional<std::pair<Nat, Nat>> as_progression(const NatSet& a) {
    if (a.is_finite())
        return std::nullopt;
    const Nat i0 = *a.min_element();
    const Nat n = a.period();
    if (a == NatSet::progression(i0, n))
        return std::pair{i0, n};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

constexpr Nat kMaxLiteral = 1'000'000'000;

struct Cursor {
    std::string_view text;
    std::size_t& pos;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }
    [[noreturn]] void fail(const std::string& what) {
        if (pos >= text.size())
            throw ParseError(what + ", found end of input", pos);
        throw ParseError(what + ", found '" + text[pos] + "'", pos);
    }
    Nat nat() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a natural number");
        Nat value = 0;
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + static_cast<Nat>(text[pos] - '0');
            if (value > kMaxLiteral)
                throw ParseError("number too large", start);
            ++pos;
        }
        return value;
    }
};

NatSet parse_term(Cursor& c) {
    const char head = c.peek();
    if (head == 'w') {
        ++c.pos;
        return NatSet::omega();
    }
    if (head == 'e') {
        if (c.text.substr(c.pos, 5) != "empty")
            c.fail("expected 'empty'");
        c.pos += 5;
        return NatSet::empty();
    }
    if (head == '[') {
        ++c.pos;
        const Nat k = c.nat();
        c.expect(')');
        return NatSet::tail(k);
    }
    if (head == '{') {
        ++c.pos;
        std::vector<Nat> elements;
        if (c.peek() == '}') {
            ++c.pos;
            return NatSet::empty();
        }
        elements.push_back(c.nat());
        while (c.peek() == ',') {
            ++c.pos;
            elements.push_back(c.nat());
        }
        c.expect('}');
        return NatSet::finite(std::move(elements));
    }
    if (std::isdigit(static_cast<unsigned char>(head))) {
        const Nat i0 = c.nat();
        c.expect('+');
        const std::size_t step_pos = c.pos;
        const Nat n = c.nat();
        c.expect('w');
        if (n == 0)
            throw ParseError("progression step must be at least 1", step_pos);
        return NatSet::progression(i0, n);
    }
    c.fail("expected a set term");
}

} // namespace

NatSet parse_set_at(std::string_view text, std::size_t& pos) {
    Cursor c{text, pos};
    NatSet result = parse_term(c);
    while (c.peek() == '|') {
        ++c.pos;
        result = unite(result, parse_term(c));
    }
    return result;
}

NatSet parse_set(std::string_view text) {
    std::size_t pos = 0;
    NatSet result = parse_set_at(text, pos);
    Cursor c{text, pos};
    if (c.peek() != '\0')
        c.fail("unexpected trailing input");
    return result;
}

std::string format_set(const NatSet& a) {
    if (a.is_empty())
        return "empty";
    std::vector<std::string> terms;
    const auto head = a.elements_below(a.threshold());
    if (!head.empty()) {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < head.size(); ++i)
            os << (i ? "," : "") << head[i];
        os << '}';
        terms.push_back(os.str());
    }
    if (a.period() == 1) {
        if (a.residues()[0])
            terms.push_back(a.threshold() == 0 ? "w" : "[" + std::to_string(a.threshold()) + ")");
    } else {
        for (Nat t = 0; t < a.period(); ++t) {
            const Nat n = a.threshold() + t;
            if (a.contains(n))
                terms.push_back(std::to_string(n) + "+" + std::to_string(a.period()) + "w");
        }
    }
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i)
        out += (i ? "|" : "") + terms[i];
    return out;
}

} // namespace bwf

std::size_t std::hash<bwf::NatSet>::operator()(const bwf::NatSet& s) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(s.threshold()) * 31 + s.period();
    h = h * 1'000'003 ^ std::hash<std::vector<bool>>{}(s.prefix());
    h = h * 1'000'003 ^ std::hash<std::vector<bool>>{}(s.residues());
    return h;
}
