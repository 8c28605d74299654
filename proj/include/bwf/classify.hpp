#pragma once

#include "bwf/natset.hpp"
#include "bwf/semigroup.hpp"

#include <optional>
#include <string>
#include <utility>

namespace bwf {

enum class IsoKind { Trivial, Bicyclic, BicyclicWithZero, MatrixUnits, Progression, Other };

/// Recognised isomorphism type. `step` is the progression step j0 (>= 2) for
/// IsoKind::Progression and 0 otherwise; the base is always reported as 0
/// since B^(i0,j0) does not depend on i0 up to isomorphism.
struct IsoType {
    IsoKind kind = IsoKind::Other;
    Nat step = 0;

    friend bool operator==(const IsoType&, const IsoType&) = default;
};

std::string format_iso_type(const IsoType& t);

struct Classification {
    bool has_zero = false;
    std::optional<Element> identity;
    std::optional<bool> simple;       // only without zero
    std::optional<bool> zero_simple;  // only with zero
    bool bisimple = false;
    bool zero_bisimple = false;
    bool e_unitary = false;
    IsoType iso_type;
    std::optional<NatSet> bicyclic_copy;
};

/// (0,0,F0) with F0 the union of the family, when F0 is an inductive member.
/// For the family {∅} the semigroup is trivial and its zero is the identity.
std::optional<Element> identity_element(const SemigroupCtx& ctx);

/// Requires a semigroup without zero; throws ContractViolation otherwise.
bool is_simple(const SemigroupCtx& ctx);
/// Requires a semigroup with zero; throws ContractViolation otherwise.
/// The one-element semigroup over {∅} is not counted as 0-simple.
bool is_zero_simple(const SemigroupCtx& ctx);

bool is_bisimple(const SemigroupCtx& ctx);
bool is_zero_bisimple(const SemigroupCtx& ctx);

IsoType iso_type(const SemigroupCtx& ctx);

/// A nonempty inductive member (least minimum wins); (i,j) -> (i,j,F) embeds
/// the bicyclic monoid.
std::optional<NatSet> find_bicyclic_copy(const SemigroupCtx& ctx);

bool is_e_unitary(const SemigroupCtx& ctx);

Classification classify(const SemigroupCtx& ctx);

/// Only for IsoKind::Bicyclic; throws ContractViolation otherwise.
std::pair<Nat, Nat> map_to_bicyclic(const SemigroupCtx& ctx, const Element& e);

/// Image in the matrix-units semigroup; nullopt is its zero.
/// Only for IsoKind::MatrixUnits; throws ContractViolation otherwise.
std::optional<std::pair<Nat, Nat>> map_to_matrix_units(const SemigroupCtx& ctx, const Element& e);

} // namespace bwf
