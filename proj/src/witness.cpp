#include "realblocks/witness.hpp"

#include <optional>

#include "realblocks/errors.hpp"
#include "realblocks/group_algorithms.hpp"
#include "realblocks/named_groups.hpp"

namespace realblocks {

SemidirectProduct semidirect_product(const PermGroup& n, const PermGroup& h,
                                     const std::function<Permutation(const Permutation&, const Permutation&)>& act) {
  std::size_t nh = h.size(), degree = n.size() * nh;
  // (x, g)(y, k) = (x * act(g, y), g k)
  auto right_mult = [n, h, act, nh, degree](const Permutation& y, const Permutation& k) {
    const auto& ne = n.elements();
    const auto& he = h.elements();
    std::vector<Point> img(degree);
    for (std::size_t xi = 0; xi < ne.size(); ++xi)
      for (std::size_t gi = 0; gi < nh; ++gi) {
        std::size_t zx = n.index_of(ne[xi] * act(he[gi], y));
        std::size_t zg = h.index_of(he[gi] * k);
        img[xi * nh + gi] = static_cast<Point>(zx * nh + zg);
      }
    return Permutation(std::move(img));
  };
  std::vector<Permutation> ngens, hgens;
  Permutation n_one(n.degree()), h_one(h.degree());
  for (const auto& y : n.generators()) ngens.push_back(right_mult(y, h_one));
  for (const auto& k : h.generators()) hgens.push_back(right_mult(n_one, k));
  std::vector<Permutation> all = ngens;
  all.insert(all.end(), hgens.begin(), hgens.end());
  SemidirectProduct out;
  out.group = PermGroup::from_generators(all, degree);
  out.normal_image = PermGroup::from_generators(ngens, degree);
  out.top_image = PermGroup::from_generators(hgens, degree);
  if (out.group.size() != degree) throw InvariantError("semidirect product has the wrong order");
  out.element = [right_mult](const Permutation& y, const Permutation& k) { return right_mult(y, k); };
  return out;
}

CqExtension construct_cq_extension(const PermGroup& e, const PermGroup& d, std::uint32_t q) {
  if (q < 3 || !is_prime(q)) throw InputError("q must be an odd prime");
  if (!d.is_subgroup_of(e) || e.size() != 2 * d.size()) throw InputError("D must have index 2 in E");
  PermGroup cq = cyclic_group(q);
  auto act = [d](const Permutation& g, const Permutation& y) {
    if (d.contains(g)) return y;
    return y.inverse();
  };
  auto sp = semidirect_product(cq, e, act);
  CqExtension out;
  out.group = sp.group;
  out.q_subgroup = sp.normal_image;
  out.e_image = sp.top_image;
  std::vector<Permutation> dgens;
  Permutation one(cq.degree());
  for (const auto& x : d.generators()) dgens.push_back(sp.element(one, x));
  out.d_image = PermGroup::from_generators(dgens, sp.group.degree());
  if (!(intersection(centralizer(out.group, out.q_subgroup), out.e_image) == out.d_image))
    throw InvariantError("C_E(C_q) differs from D");
  return out;
}

PermGroup q8_semidirect_c9() {
  PermGroup q8 = quaternion_group();
  const Permutation& i = q8.generators()[0];
  const Permutation& j = q8.generators()[1];
  Permutation k = i * j;
  // sigma: i -> j, j -> k, extended multiplicatively over words in i, j.
  std::vector<std::optional<Permutation>> image(q8.size());
  image[0] = Permutation(q8.degree());
  std::vector<Permutation> frontier{Permutation(q8.degree())};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      const Permutation& sx = *image[q8.index_of(x)];
      for (int t = 0; t < 2; ++t) {
        Permutation y = x * (t ? j : i);
        auto& slot = image[q8.index_of(y)];
        Permutation sy = sx * (t ? k : j);
        if (!slot) {
          slot = sy;
          next.push_back(y);
        } else if (*slot != sy) {
          throw InvariantError("i -> j -> k is not an automorphism");
        }
      }
    }
    frontier = std::move(next);
  }
  PermGroup c9 = cyclic_group(9);
  auto act = [q8, image](const Permutation& t, const Permutation& y) {
    // exponent of t in C_9 = image of point 0
    unsigned e = t[0] % 3;
    Permutation r = y;
    for (unsigned s = 0; s < e; ++s) r = *image[q8.index_of(r)];
    return r;
  };
  return semidirect_product(q8, c9, act).group;
}

}  // namespace realblocks
