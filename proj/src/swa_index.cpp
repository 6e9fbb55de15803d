#include "swa/swa_index.hpp"

#include <stdexcept>
#include <string>

namespace swa {

Variant parse_variant(std::string_view name) {
  if (name == "log") return Variant::log;
  if (name == "linear") return Variant::linear;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "' (expected log or linear)");
}

SwaIndex::SwaIndex(RootedTree tree, std::vector<weight_t> weights, Variant variant,
                   const LinearOptions& options) {
  if (variant == Variant::log) {
    index_.emplace<SwaIndexLog>(std::move(tree), std::move(weights));
  } else {
    index_.emplace<SwaIndexLinear>(std::move(tree), std::move(weights), options);
  }
}

}  // namespace swa
