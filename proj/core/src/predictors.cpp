#include "comax/predictors.hpp"

#include "comax/error.hpp"
#include "comax/lattice.hpp"
#include "comax/number_theory.hpp"

#include <algorithm>

namespace comax
{

namespace
{

[[noreturn]] void unsupported(GraphClass c, const std::string &family)
{
  throw Error(Errc::unsupported_class,
              "no prediction for " + std::string(to_string(c)) + " on " + family);
}

std::vector<std::size_t> element_orders(const GroupTable &g)
{
  std::vector<std::size_t> out(g.order());
  for (Element x = 0; x < g.order(); ++x)
    out[x] = element_order(g, x);
  return out;
}

bool is_p_power(std::size_t n, std::size_t p)
{
  while (n % p == 0)
    n /= p;
  return n == 1;
}

std::size_t log_p(std::size_t n, std::size_t p)
{
  std::size_t e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

bool has_cyclic_generator(const std::vector<std::size_t> &orders, const SubgroupSet &h)
{
  bool found = false;
  h.elements().for_each([&](std::size_t x) { found = found || orders[x] == h.order(); });
  return found;
}

bool all_maximal_cyclic(const GroupTable &g, const std::vector<std::size_t> &orders)
{
  const auto lat = all_subgroups(g);
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.maximal(i) && !has_cyclic_generator(orders, lat[i]))
      return false;
  return true;
}

bool is_type(const SylowInfo &s, std::initializer_list<std::size_t> type)
{
  return s.abelian && std::equal(s.type.begin(), s.type.end(), type.begin(), type.end());
}

/// C_{p^k} x C_p for some k >= 1.
bool is_type_k1(const SylowInfo &s)
{
  return s.abelian && s.type.size() == 2 && s.type[1] == 1;
}

bool is_q8(const SylowInfo &s)
{
  return !s.abelian && s.prime == 2 && s.log_order == 3 && s.unique_minimal;
}

/// Generalized quaternion: a non-cyclic 2-group with a unique involution.
bool is_gen_quaternion(const SylowInfo &s)
{
  return !s.cyclic && s.prime == 2 && s.unique_minimal;
}

} // namespace

bool predict_dihedral(GraphClass c, std::size_t n)
{
  if (n < 3)
    throw Error(Errc::out_of_scope, "dihedral predictions need n >= 3");
  switch (c) {
  case GraphClass::cluster: return false;
  case GraphClass::triangle_free:
  case GraphClass::cograph: return is_odd_prime_power(n);
  case GraphClass::claw_free: return n == 4;
  case GraphClass::chordal: return n == 4 || is_odd_prime_power(n);
  default: unsupported(c, "D" + std::to_string(n));
  }
}

bool predict_dicyclic(GraphClass c, std::size_t m)
{
  if (m < 3)
    throw Error(Errc::out_of_scope, "dicyclic predictions need m >= 3, got Dic" +
                                        std::to_string(m));
  switch (c) {
  case GraphClass::triangle_free:
  case GraphClass::cograph:
  case GraphClass::chordal: return is_prime_power(m);
  case GraphClass::cluster:
  case GraphClass::claw_free: return false;
  default: unsupported(c, "Dic" + std::to_string(m));
  }
}

std::optional<std::vector<SylowInfo>> nilpotent_structure(const GroupTable &g)
{
  const auto orders = element_orders(g);
  std::vector<SylowInfo> out;
  for (auto [p, a] : factorize(g.order())) {
    std::vector<Element> members;
    for (Element x = 0; x < g.order(); ++x)
      if (is_p_power(orders[x], p))
        members.push_back(x);
    if (members.size() != ipow(p, a))
      return std::nullopt;

    SylowInfo s;
    s.prime = p;
    s.log_order = a;
    std::size_t order_p_elements = 0;
    std::vector<std::size_t> omega(a + 1, 0); // #{x : x^(p^i) = 1}
    for (auto x : members) {
      const std::size_t e = log_p(orders[x], p);
      s.log_exponent = std::max(s.log_exponent, e);
      order_p_elements += e == 1;
      for (std::size_t i = e; i <= a; ++i)
        ++omega[i];
      for (auto y : members)
        if (s.abelian && g.mul(x, y) != g.mul(y, x))
          s.abelian = false;
    }
    s.cyclic = s.log_exponent == a;
    s.unique_minimal = order_p_elements == p - 1;
    if (s.abelian) {
      // The number of parts >= i is log_p(omega_i) - log_p(omega_{i-1}).
      std::vector<std::size_t> at_least(a + 1, 0);
      for (std::size_t i = 1; i <= a; ++i)
        at_least[i] = log_p(omega[i], p) - log_p(omega[i - 1], p);
      for (std::size_t j = 1; j <= at_least[1]; ++j) {
        std::size_t part = 0;
        for (std::size_t i = 1; i <= a; ++i)
          part += at_least[i] >= j;
        s.type.push_back(part);
      }
      s.two_generated = s.type.size() <= 2;
    } else {
      s.two_generated = false;
      for (std::size_t i = 0; i < members.size() && !s.two_generated; ++i)
        for (std::size_t j = i + 1; j < members.size() && !s.two_generated; ++j)
          if (generated_subgroup(g, {members[i], members[j]}).order() == members.size())
            s.two_generated = true;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<bool> predict_nilpotent(GraphClass c, const GroupTable &g)
{
  const auto structure = nilpotent_structure(g);
  if (!structure)
    throw Error(Errc::out_of_scope, g.name() + " is not nilpotent");
  const auto &syl = *structure;
  const std::size_t r = syl.size();
  const bool cyclic = std::all_of(syl.begin(), syl.end(), [](const SylowInfo &s) { return s.cyclic; });
  const bool abelian = std::all_of(syl.begin(), syl.end(), [](const SylowInfo &s) { return s.abelian; });
  const bool some_prime_sylow =
      std::any_of(syl.begin(), syl.end(), [](const SylowInfo &s) { return s.log_order == 1; });

  switch (c) {
  case GraphClass::cluster:
    if (r == 0 || cyclic)
      return r <= 1 || (r == 2 && syl[0].log_order == 1 && syl[1].log_order == 1);
    if (r == 1)
      return is_type(syl[0], {1, 1}) || is_q8(syl[0]) ||
             all_maximal_cyclic(g, element_orders(g));
    return false;

  case GraphClass::triangle_free:
  case GraphClass::bipartite: return cyclic && r <= 2;

  case GraphClass::claw_free:
  case GraphClass::line_graph:
    if (r <= 1)
      return cyclic || is_type(syl[0], {1, 1}) || is_q8(syl[0]);
    return r == 2 && cyclic && some_prime_sylow;

  case GraphClass::cograph:
    if (r <= 1) {
      if (cyclic)
        return true;
      if (!syl[0].abelian)
        return std::nullopt;
      return syl[0].type.size() == 2;
    }
    return cyclic && r == 2;

  case GraphClass::chordal:
    if (r <= 1) {
      if (cyclic)
        return true;
      if (!syl[0].abelian)
        return std::nullopt;
      return is_type_k1(syl[0]) || is_type(syl[0], {1, 1, 1});
    }
    if (r == 3)
      return cyclic && std::all_of(syl.begin(), syl.end(),
                                   [](const SylowInfo &s) { return s.log_order == 1; });
    if (r == 2) {
      if (cyclic)
        return some_prime_sylow;
      for (std::size_t i = 0; i < 2; ++i) {
        const auto &small = syl[i], &big = syl[1 - i];
        if (small.log_order == 1 && !big.cyclic && big.two_generated && big.log_exponent == 1)
          return true;
      }
      return false;
    }
    return false;

  case GraphClass::threshold:
    if (r <= 1)
      return cyclic || is_type(syl[0], {1, 1}) ||
             (is_gen_quaternion(syl[0]) && syl[0].log_order >= 4);
    return r == 2 && cyclic && some_prime_sylow;

  case GraphClass::split:
    if (!abelian)
      return std::nullopt;
    if (r <= 1)
      return cyclic || is_type_k1(syl[0]) || is_type(syl[0], {1, 1, 1});
    if (r == 2) {
      if (cyclic)
        return some_prime_sylow;
      return (is_type(syl[0], {1, 1}) && is_type(syl[1], {1})) ||
             (is_type(syl[0], {1}) && is_type(syl[1], {1, 1}));
    }
    return false;
  }
  unsupported(c, g.name());
}

std::optional<bool> predict_nilpotent(GraphClass c, const GroupSpec &spec)
{
  return predict_nilpotent(c, realize(spec));
}

bool is_epo_group(const GroupTable &g)
{
  for (Element x = 0; x < g.order(); ++x)
    if (x != g.identity() && !is_prime(element_order(g, x)))
      return false;
  return true;
}

bool is_eppo_group(const GroupTable &g)
{
  for (Element x = 0; x < g.order(); ++x) {
    const std::size_t o = element_order(g, x);
    if (o != 1 && !is_prime_power(o))
      return false;
  }
  return true;
}

bool is_two_generated(const GroupTable &g)
{
  const std::size_t n = g.order();
  for (Element x = 0; x < n; ++x)
    if (element_order(g, x) == n)
      return true;
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (generated_subgroup(g, {a, b}).order() == n)
        return true;
  return false;
}

std::optional<bool> predict_order_pq(GraphClass c, const GroupTable &g)
{
  if (c != GraphClass::cograph)
    unsupported(c, "groups of order pq");
  const auto f = factorize(g.order());
  if (f.size() != 2 || f[0].second != 1 || f[1].second != 1)
    return std::nullopt;
  return true;
}

std::optional<bool> predict_order_p2q(GraphClass c, const GroupTable &g)
{
  if (c != GraphClass::cograph)
    unsupported(c, "groups of order p^2 q");
  const auto f = factorize(g.order());
  if (f.size() != 2 || f[0].second + f[1].second != 3 || (f[0].second != 2 && f[1].second != 2))
    return std::nullopt;
  const std::size_t p = f[0].second == 2 ? f[0].first : f[1].first;
  const std::size_t q = f[0].second == 2 ? f[1].first : f[0].first;
  const std::size_t n = g.order();
  const auto orders = element_orders(g);
  const auto lat = all_subgroups(g);

  auto count_of_order = [&](std::size_t k) {
    return std::count_if(lat.subgroups().begin(), lat.subgroups().end(),
                         [k](const SubgroupSet &h) { return h.order() == k; });
  };

  // A_4: the group of order 12 without a subgroup of order 6.
  if (n == 12 && count_of_order(6) == 0)
    return true;
  // C_q ⋊ C_{p^2}: normal Sylow q-subgroup and a cyclic Sylow p-subgroup.
  if (count_of_order(q) == 1 &&
      std::find(orders.begin(), orders.end(), p * p) != orders.end())
    return true;
  // C_{p^2} ⋊ C_q: a normal cyclic subgroup of order p^2.
  for (const auto &h : lat.subgroups())
    if (h.order() == p * p && has_cyclic_generator(orders, h) && is_normal(g, h))
      return true;
  // Every nontrivial proper subgroup is an EPPO group.
  for (const auto &h : lat.subgroups()) {
    if (h.order() == 1 || h.order() == n)
      continue;
    bool eppo = true;
    h.elements().for_each([&](std::size_t x) {
      eppo = eppo && (orders[x] == 1 || is_prime_power(orders[x]));
    });
    if (!eppo)
      return false;
  }
  return true;
}

std::optional<bool> predict_epo(GraphClass c, const GroupTable &g)
{
  if (c != GraphClass::cograph)
    unsupported(c, "EPO groups");
  if (!is_epo_group(g))
    return std::nullopt;
  return is_two_generated(g);
}

std::vector<GroupSpec> enumerate_abelian(std::size_t order_cap, std::size_t max_subgroups)
{
  if (order_cap > 128)
    throw Error(Errc::invalid_parameter, "abelian enumeration supports orders up to 128");
  std::vector<GroupSpec> out;
  for (std::size_t n = 2; n <= order_cap; ++n) {
    const auto f = factorize(n);
    std::vector<std::vector<std::vector<std::size_t>>> choices;
    for (auto [p, e] : f)
      choices.push_back(partitions(e));
    std::vector<std::size_t> pick(f.size(), 0);
    while (true) {
      std::vector<GroupSpec> factors;
      std::uint64_t subgroups = 1;
      for (std::size_t i = 0; i < f.size(); ++i) {
        const auto &part = choices[i][pick[i]];
        for (auto e : part)
          factors.push_back(GroupSpec::cyclic(ipow(f[i].first, e)));
        const std::uint64_t c = abelian_p_subgroup_count(f[i].first, part);
        subgroups = c > 0 && subgroups > UINT64_MAX / c ? UINT64_MAX : subgroups * c;
      }
      if (subgroups <= max_subgroups)
        out.push_back(GroupSpec::product(std::move(factors)));
      // Odometer over partition choices, last prime fastest.
      std::size_t i = f.size();
      while (i > 0 && ++pick[i - 1] == choices[i - 1].size())
        pick[--i] = 0;
      if (i == 0)
        break;
    }
  }
  return out;
}

} // namespace comax
