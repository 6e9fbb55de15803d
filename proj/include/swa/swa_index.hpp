#pragma once

#include <string_view>
#include <variant>

#include "swa/swa_linear.hpp"
#include "swa/swa_log.hpp"

namespace swa {

enum class Variant { log, linear };

// Throws std::invalid_argument for anything but "log" or "linear".
Variant parse_variant(std::string_view name);

// Either SWA index behind one query interface.
class SwaIndex {
 public:
  SwaIndex() = default;
  SwaIndex(RootedTree tree, std::vector<weight_t> weights, Variant variant = Variant::linear,
           const LinearOptions& options = {});

  std::optional<node_id> query(node_id u, weight_t k, QueryStats* stats = nullptr) const {
    return std::visit([&](const auto& index) { return index.query(u, k, stats); }, index_);
  }
  Variant variant() const noexcept { return index_.index() == 0 ? Variant::log : Variant::linear; }
  const HeavyPathCore& core() const noexcept {
    return std::visit([](const auto& index) -> const HeavyPathCore& { return index.core(); }, index_);
  }
  std::span<const weight_t> weights() const noexcept { return core().weights(); }
  SpaceReport space() const noexcept {
    return std::visit([](const auto& index) { return index.space(); }, index_);
  }

 private:
  std::variant<SwaIndexLog, SwaIndexLinear> index_;
};

}  // namespace swa
