#pragma once

#include "bwf/semigroup.hpp"

#include <ostream>
#include <vector>

namespace bwf {

/// One D-class of a truncation: rows are R-classes (fixed i), columns are
/// L-classes (fixed j).
struct EggBoxClass {
    SetIndex set;
    std::vector<std::vector<Element>> cells;  // cells[i][j]
};

struct EggBox {
    Nat max_index = 0;
    std::vector<EggBoxClass> classes;  // one per nonempty member, by index
    bool has_zero = false;             // the zero forms its own class
};

EggBox build_eggbox(const SemigroupCtx& ctx, Nat max_index);

void write_eggbox_text(std::ostream& os, const SemigroupCtx& ctx, const EggBox& box);

/// Graphviz rendering: one cluster per D-class, rows ranked by i.
void write_eggbox_dot(std::ostream& os, const SemigroupCtx& ctx, const EggBox& box);

} // namespace bwf
