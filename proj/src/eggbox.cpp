#include "bwf/eggbox.hpp"

#include <algorithm>
#include <string>

namespace bwf {

EggBox build_eggbox(const SemigroupCtx& ctx, Nat max_index) {
    EggBox box;
    box.max_index = max_index;
    box.has_zero = ctx.has_zero();
    for (SetIndex s : ctx.nonempty_sets()) {
        EggBoxClass cls{s, {}};
        cls.cells.resize(max_index + 1);
        for (Nat i = 0; i <= max_index; ++i)
            for (Nat j = 0; j <= max_index; ++j)
                cls.cells[i].emplace_back(i, j, s);
        box.classes.push_back(std::move(cls));
    }
    return box;
}

void write_eggbox_text(std::ostream& os, const SemigroupCtx& ctx, const EggBox& box) {
    for (const auto& cls : box.classes) {
        const Nat side = box.max_index + 1;
        os << "D-class F" << cls.set << " = " << format_set(ctx.family()[cls.set]) << " (" << side
           << " x " << side << ")\n";
        std::size_t width = 0;
        for (const auto& row : cls.cells)
            for (const auto& e : row)
                width = std::max(width, format_element(ctx, e).size());
        for (const auto& row : cls.cells) {
            os << "  |";
            for (const auto& e : row) {
                const std::string text = format_element(ctx, e);
                os << ' ' << text << std::string(width - text.size(), ' ') << " |";
            }
            os << '\n';
        }
    }
    if (box.has_zero)
        os << "D-class {0} (1 x 1)\n  | 0 |\n";
}

namespace {

std::string superscript(std::size_t n) {
    static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    const std::string plain = std::to_string(n);
    std::string out;
    for (char c : plain)
        out += digits[c - '0'];
    return out;
}

std::string node_id(const Element& e) {
    return "n" + std::to_string(e.set()) + "_" + std::to_string(e.i()) + "_" + std::to_string(e.j());
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

void write_eggbox_dot(std::ostream& os, const SemigroupCtx& ctx, const EggBox& box) {
    os << "digraph eggbox {\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (const auto& cls : box.classes) {
        os << "  subgraph cluster_" << cls.set << " {\n";
        os << "    label=\"F" << superscript(cls.set) << " = "
           << escape(format_set(ctx.family()[cls.set])) << "\";\n";
        for (const auto& row : cls.cells)
            for (const auto& e : row)
                os << "    " << node_id(e) << " [label=\"(" << e.i() << "," << e.j() << ",F"
                   << superscript(cls.set) << ")\"];\n";
        for (const auto& row : cls.cells) {
            os << "    { rank=same;";
            for (const auto& e : row)
                os << ' ' << node_id(e) << ';';
            os << " }\n";
        }
        for (std::size_t i = 0; i + 1 < cls.cells.size(); ++i)
            os << "    " << node_id(cls.cells[i][0]) << " -> " << node_id(cls.cells[i + 1][0])
               << " [style=invis];\n";
        os << "  }\n";
    }
    if (box.has_zero)
        os << "  subgraph cluster_zero {\n    label=\"{0}\";\n    zero [label=\"0\"];\n  }\n";
    os << "}\n";
}

} // namespace bwf
