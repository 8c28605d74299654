#pragma once

#include "bwf/natset.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bwf {

/// A finite omega-closed family: for all members F1, F2 and every n >= 0,
/// F1 ∩ (-n + F2) is again a member. Members are distinct and sorted by the
/// NatSet total order.
///
/// Infinite omega-closed families exist but cannot be represented here.
class OmegaFamily {
public:
    /// Least omega-closed family containing `generators`.
    /// Throws std::invalid_argument on an empty generator list.
    static OmegaFamily close(std::span<const NatSet> generators);

    /// Wraps `sets` as a family without adding anything.
    /// Throws ContractViolation if they are not omega-closed.
    static OmegaFamily validate(std::span<const NatSet> sets);

    const std::vector<NatSet>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    const NatSet& operator[](std::size_t index) const { return members_.at(index); }
    bool has_empty() const noexcept { return has_empty_; }

    std::optional<std::size_t> index_of(const NatSet& s) const;

    friend bool operator==(const OmegaFamily&, const OmegaFamily&) = default;

private:
    explicit OmegaFamily(std::vector<NatSet> members);

    std::vector<NatSet> members_;
    bool has_empty_ = false;
};

bool is_closed(std::span<const NatSet> sets);

/// Union of all members.
NatSet family_union(const OmegaFamily& f);

/// Comma-separated set expressions, optionally wrapped as `family{ ... }`.
std::vector<NatSet> parse_set_list(std::string_view text);

std::string format_family(const OmegaFamily& f);

} // namespace bwf
