#include "realblocks/conjugacy.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "realblocks/errors.hpp"
#include "realblocks/group_algorithms.hpp"

namespace realblocks {

ConjugacyClasses::ConjugacyClasses(PermGroup group) : group_(std::move(group)) {
  const auto& elts = group_.elements();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> raw(elts.size(), kUnset);
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::size_t i = 0; i < elts.size(); ++i) {
    if (raw[i] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(orbits.size());
    std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(i)};
    raw[i] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const Permutation& x = elts[orbit[k]];
      for (const auto& s : group_.generators()) {
        std::size_t j = group_.index_of(conjugate(x, s));
        if (raw[j] == kUnset) {
          raw[j] = id;
          orbit.push_back(static_cast<std::uint32_t>(j));
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<std::size_t> order(orbits.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint64_t> elt_order(orbits.size());
  for (std::size_t c = 0; c < orbits.size(); ++c) elt_order[c] = elts[orbits[c].front()].order();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::make_tuple(elt_order[a], orbits[a].size(), orbits[a].front()) <
           std::make_tuple(elt_order[b], orbits[b].size(), orbits[b].front());
  });
  std::vector<std::uint32_t> rank(orbits.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<std::uint32_t>(k);

  class_of_element_.resize(elts.size());
  for (std::size_t i = 0; i < elts.size(); ++i) class_of_element_[i] = rank[raw[i]];
  members_.resize(orbits.size());
  classes_.resize(orbits.size());
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    std::size_t k = rank[c];
    members_[k] = std::move(orbits[c]);
    auto& cl = classes_[k];
    cl.representative = elts[members_[k].front()];
    cl.size = members_[k].size();
    cl.element_order = static_cast<std::uint32_t>(elt_order[c]);
    exponent_ = std::lcm(exponent_, elt_order[c]);
  }
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    auto& cl = classes_[k];
    cl.inverse_class = class_of(cl.representative.inverse());
    cl.is_real = cl.inverse_class == k;
    cl.power_map_2 = class_of(cl.representative * cl.representative);
  }
}

std::size_t ConjugacyClasses::class_of(const Permutation& g) const {
  return class_of_element_[group_.index_of(g)];
}

std::size_t ConjugacyClasses::power_class(std::size_t i, long long e) const {
  return class_of(classes_[i].representative.pow(e));
}

bool ConjugacyClasses::is_p_element(std::size_t i, std::uint64_t p) const {
  return is_power_of(classes_[i].element_order, p);
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& g) { return ConjugacyClasses(g).classes(); }

std::vector<std::size_t> class_fusion(const ConjugacyClasses& h, const ConjugacyClasses& g) {
  std::vector<std::size_t> out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = g.class_of(h[i].representative);
  return out;
}

}  // namespace realblocks
