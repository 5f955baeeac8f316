#include "realblocks/named_groups.hpp"

#include <numeric>

#include "realblocks/errors.hpp"

namespace realblocks {

namespace {

Permutation from_images(std::vector<Point> v) { return Permutation(std::move(v)); }

}  // namespace

PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return PermGroup::from_generators({from_images(img)}, n);
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw InputError("dihedral group needs n >= 3");
  std::vector<Point> rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    ref[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup::from_generators({from_images(rot), from_images(ref)}, n);
}

PermGroup symmetric_group(std::size_t n) {
  if (n <= 1) return PermGroup::trivial(n);
  std::vector<Point> cyc(n), tr(n);
  std::iota(tr.begin(), tr.end(), Point{0});
  std::swap(tr[0], tr[1]);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
  return PermGroup::from_generators({from_images(cyc), from_images(tr)}, n);
}

PermGroup alternating_group(std::size_t n) {
  if (n < 3) return PermGroup::trivial(n);
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    // 3-cycle (0 1 k)
    img[0] = 1;
    img[1] = static_cast<Point>(k);
    img[k] = 0;
    gens.push_back(from_images(img));
  }
  return PermGroup::from_generators(gens, n);
}

PermGroup quaternion_group() {
  return PermGroup::from_generators(
      {parse_cycles("(1,2,4,7)(3,6,8,5)", 8), parse_cycles("(1,3,4,8)(2,5,7,6)", 8)}, 8);
}

PermGroup linear_group_2(const std::vector<std::array<std::uint32_t, 4>>& mats, std::uint32_t p) {
  std::size_t deg = static_cast<std::size_t>(p) * p - 1;
  auto index = [p](std::uint32_t a, std::uint32_t b) { return a * p + b - 1; };
  std::vector<Permutation> gens;
  for (const auto& m : mats) {
    std::vector<Point> img(deg);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        std::uint32_t c = (a * m[0] + b * m[2]) % p;
        std::uint32_t d = (a * m[1] + b * m[3]) % p;
        if (c == 0 && d == 0) throw InputError("singular matrix");
        img[index(a, b)] = index(c, d);
      }
    gens.push_back(from_images(img));
  }
  return PermGroup::from_generators(gens, deg);
}

PermGroup special_linear_2_3() { return linear_group_2({{1, 1, 0, 1}, {0, 1, 2, 0}}, 3); }

PermGroup general_linear_2_3() { return linear_group_2({{1, 1, 0, 1}, {0, 1, 2, 0}, {2, 0, 0, 1}}, 3); }

Permutation embed_left(const Permutation& x, std::size_t other_degree) {
  std::vector<Point> img = x.images();
  for (std::size_t i = 0; i < other_degree; ++i) img.push_back(static_cast<Point>(x.degree() + i));
  return from_images(img);
}

Permutation embed_right(const Permutation& x, std::size_t other_degree) {
  std::vector<Point> img(other_degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (Point y : x.images()) img.push_back(static_cast<Point>(y + other_degree));
  return from_images(img);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(embed_left(g, b.degree()));
  for (const auto& g : b.generators()) gens.push_back(embed_right(g, a.degree()));
  return PermGroup::from_generators(gens, a.degree() + b.degree());
}

PermGroup regular_representation(const PermGroup& g) {
  const auto& el = g.elements();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> img(el.size());
    for (std::size_t i = 0; i < el.size(); ++i) img[i] = static_cast<Point>(g.index_of(el[i] * s));
    gens.push_back(from_images(img));
  }
  return PermGroup::from_generators(gens, el.size());
}

}  // namespace realblocks
