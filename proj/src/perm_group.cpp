#include "realblocks/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "realblocks/errors.hpp"

namespace realblocks {

namespace {

struct Level {
  Point base = 0;
  std::vector<Permutation> gens;
  std::vector<Point> orbit;
  std::vector<std::int32_t> slot;
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inv;

  void rebuild(std::size_t degree) {
    slot.assign(degree, -1);
    orbit.clear();
    transversal.clear();
    transversal_inv.clear();
    orbit.push_back(base);
    slot[base] = 0;
    transversal.emplace_back(degree);
    transversal_inv.emplace_back(degree);
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      Point b = orbit[k];
      for (const auto& s : gens) {
        Point c = s[b];
        if (slot[c] >= 0) continue;
        slot[c] = static_cast<std::int32_t>(orbit.size());
        orbit.push_back(c);
        transversal.push_back(transversal[k] * s);
        transversal_inv.push_back(transversal.back().inverse());
      }
    }
  }
};

}  // namespace

struct PermGroup::Impl {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Level> levels;
  std::vector<Point> base;
  BigInt order = 1;

  mutable std::once_flag elements_once;
  mutable std::vector<Permutation> elements;
  mutable std::unordered_map<Permutation, std::uint32_t> index;

  Impl() = default;
  Impl(const Impl& o)
      : degree(o.degree), generators(o.generators), levels(o.levels), base(o.base), order(o.order) {}

  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t i = from; i < levels.size(); ++i) {
      Point b = g[levels[i].base];
      std::int32_t s = levels[i].slot[b];
      if (s < 0) return {std::move(g), i};
      g = g * levels[i].transversal_inv[static_cast<std::size_t>(s)];
    }
    return {std::move(g), levels.size()};
  }

  void insert(const Permutation& g, std::size_t level) {
    auto [h, j] = sift(g, level);
    if (j == levels.size() && h.is_identity()) return;
    if (j == levels.size()) {
      Level lv;
      lv.base = h.first_moved_point();
      levels.push_back(std::move(lv));
    }
    for (std::size_t i = level; i <= j; ++i) levels[i].gens.push_back(h);
    for (std::size_t i = j + 1; i-- > level;) {
      levels[i].rebuild(degree);
      // Snapshot: recursive inserts may grow this level's generators, which
      // triggers its own rebuild and full recheck.
      std::vector<Point> orbit = levels[i].orbit;
      std::vector<Permutation> gens = levels[i].gens;
      for (Point b : orbit) {
        for (const auto& s : gens) {
          const Level& lv = levels[i];
          Point c = s[b];
          Permutation schreier = lv.transversal[static_cast<std::size_t>(lv.slot[b])] * s *
                                 lv.transversal_inv[static_cast<std::size_t>(lv.slot[c])];
          if (!schreier.is_identity()) insert(schreier, i + 1);
        }
      }
    }
  }

  void finish() {
    base.clear();
    order = 1;
    for (auto& lv : levels) {
      base.push_back(lv.base);
      order *= lv.orbit.size();
    }
  }
};

PermGroup::PermGroup() : impl_(std::make_shared<Impl>()) {}

PermGroup::PermGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

PermGroup PermGroup::trivial(std::size_t degree) { return from_generators({}, degree); }

PermGroup PermGroup::from_generators(const std::vector<Permutation>& gens, std::size_t degree) {
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  for (const auto& g : gens) {
    if (g.degree() != degree) throw InputError("generators have inconsistent degrees");
    if (g.is_identity()) continue;
    impl->generators.push_back(g);
    impl->insert(g, 0);
  }
  impl->finish();
  return PermGroup(std::move(impl));
}

PermGroup PermGroup::from_generators(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw InputError("cannot infer degree from an empty generator list");
  return from_generators(gens, gens.front().degree());
}

PermGroup PermGroup::with_generator(const Permutation& g) const {
  if (g.degree() != degree()) throw InputError("generator degree mismatch");
  if (contains(g)) return *this;
  auto impl = std::make_shared<Impl>(*impl_);
  impl->generators.push_back(g);
  impl->insert(g, 0);
  impl->finish();
  return PermGroup(std::move(impl));
}

std::size_t PermGroup::degree() const { return impl_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return impl_->generators; }
const std::vector<Point>& PermGroup::base() const { return impl_->base; }
const BigInt& PermGroup::order() const { return impl_->order; }

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& lv : impl_->levels) out.push_back(lv.orbit.size());
  return out;
}

std::uint64_t PermGroup::size() const {
  if (impl_->order > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw CapacityError("group order does not fit in 64 bits");
  return impl_->order.convert_to<std::uint64_t>();
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree()) return false;
  auto [h, j] = impl_->sift(g, 0);
  return j == impl_->levels.size() && h.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  for (const auto& g : generators())
    if (!other.contains(g)) return false;
  return true;
}

const std::vector<Permutation>& PermGroup::elements() const {
  std::call_once(impl_->elements_once, [this] {
    const Impl& im = *impl_;
    if (im.order > BigInt(kMaxEnumeratedElements))
      throw CapacityError("group too large to enumerate (order " + im.order.str() + ")");
    std::uint64_t n = im.order.convert_to<std::uint64_t>();
    if (n * std::max<std::size_t>(im.degree, 1) > 400'000'000ULL)
      throw CapacityError("group elements exceed memory cap");
    std::vector<Permutation> elts{Permutation(im.degree)};
    for (std::size_t i = im.levels.size(); i-- > 0;) {
      std::vector<Permutation> next;
      next.reserve(elts.size() * im.levels[i].transversal.size());
      for (const auto& x : elts)
        for (const auto& u : im.levels[i].transversal) next.push_back(x * u);
      elts = std::move(next);
    }
    std::sort(elts.begin(), elts.end());
    im.index.reserve(elts.size());
    for (std::size_t k = 0; k < elts.size(); ++k) im.index.emplace(elts[k], static_cast<std::uint32_t>(k));
    im.elements = std::move(elts);
  });
  return impl_->elements;
}

std::optional<std::size_t> PermGroup::find(const Permutation& g) const {
  elements();
  auto it = impl_->index.find(g);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::index_of(const Permutation& g) const {
  auto k = find(g);
  if (!k) throw InputError("permutation " + g.to_cycle_string() + " is not a group element");
  return *k;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.is_subgroup_of(b);
}

}  // namespace realblocks
