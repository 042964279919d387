#include "comax/group.hpp"

#include "comax/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace comax
{

const char *to_string(Errc code)
{
  switch (code) {
  case Errc::invalid_parameter: return "invalid-parameter";
  case Errc::resource_limit: return "resource-limit";
  case Errc::syntax: return "syntax";
  case Errc::semantic: return "semantic";
  case Errc::ambient_mismatch: return "ambient-mismatch";
  case Errc::not_in_lattice: return "not-in-lattice";
  case Errc::out_of_scope: return "out-of-scope";
  case Errc::unsupported_class: return "unsupported-class";
  case Errc::io: return "io";
  case Errc::internal: return "internal";
  }
  return "unknown";
}

namespace
{

std::uint64_t fnv1a(std::size_t order, const std::vector<Element> &mul)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(order);
  for (auto e : mul)
    mix(e);
  return h;
}

void check_cap(std::size_t order, const GroupLimits &limits, const std::string &what)
{
  if (order > limits.max_order)
    throw Error(Errc::resource_limit,
                what + " has order " + std::to_string(order) +
                    ", above the group order cap " + std::to_string(limits.max_order));
}

std::string power_name(const char *sym, std::size_t i)
{
  if (i == 0)
    return "";
  if (i == 1)
    return sym;
  return std::string(sym) + "^" + std::to_string(i);
}

} // namespace

GroupTable::GroupTable(std::string name, std::size_t order, std::vector<Element> mul,
                       Element identity, std::vector<Element> inv,
                       std::vector<std::string> element_names,
                       std::map<Element, std::string> generator_labels)
: _name(std::move(name)), _order(order), _mul(std::move(mul)), _identity(identity),
  _inv(std::move(inv)), _element_names(std::move(element_names)),
  _generator_labels(std::move(generator_labels))
{
  if (_order == 0)
    throw Error(Errc::invalid_parameter, "group order must be positive");
  if (_mul.size() != _order * _order || _inv.size() != _order)
    throw Error(Errc::invalid_parameter, "Cayley table has the wrong shape");
  if (!_element_names.empty() && _element_names.size() != _order)
    throw Error(Errc::invalid_parameter, "element name list has the wrong length");
  _fingerprint = fnv1a(_order, _mul);
}

GroupTable GroupTable::from_cayley(std::string name, std::size_t order,
                                   std::vector<Element> mul)
{
  if (order == 0 || mul.size() != order * order)
    throw Error(Errc::invalid_parameter, "Cayley table has the wrong shape");

  Element identity = 0;
  for (Element e = 0; e < order; ++e) {
    bool ok = true;
    for (Element x = 0; x < order && ok; ++x)
      ok = mul[e * order + x] == x && mul[x * order + e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }

  std::vector<Element> inv(order, identity);
  for (Element x = 0; x < order; ++x)
    for (Element y = 0; y < order; ++y)
      if (mul[x * order + y] == identity) {
        inv[x] = y;
        break;
      }

  return GroupTable(std::move(name), order, std::move(mul), identity, std::move(inv));
}

std::string GroupTable::element_name(Element a) const
{
  if (!_element_names.empty())
    return _element_names[a];
  return std::to_string(a);
}

bool GroupTable::is_abelian() const
{
  for (Element a = 0; a < _order; ++a)
    for (Element b = a + 1; b < _order; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

GroupTable GroupTable::renamed(std::string name) const
{
  GroupTable out = *this;
  out._name = std::move(name);
  return out;
}

GroupTable make_cyclic(std::size_t n, const GroupLimits &limits)
{
  if (n == 0)
    throw Error(Errc::invalid_parameter, "C<n> requires n >= 1");
  check_cap(n, limits, "C" + std::to_string(n));

  std::vector<Element> mul(n * n);
  std::vector<Element> inv(n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      mul[i * n + j] = static_cast<Element>((i + j) % n);
    inv[i] = static_cast<Element>((n - i) % n);
    names[i] = std::to_string(i);
  }
  std::map<Element, std::string> labels;
  if (n > 1)
    labels[1] = "g";
  return GroupTable("C" + std::to_string(n), n, std::move(mul), 0, std::move(inv),
                    std::move(names), std::move(labels));
}

GroupTable make_dihedral(std::size_t n, const GroupLimits &limits)
{
  if (n < 3)
    throw Error(Errc::invalid_parameter, "D<n> requires n >= 3");
  const std::size_t order = 2 * n;
  check_cap(order, limits, "D" + std::to_string(n));

  // r^i s^a * r^j s^b = r^(i + (-1)^a j) s^(a+b)
  auto index = [n](std::size_t i, std::size_t a) { return static_cast<Element>(a * n + i); };
  std::vector<Element> mul(order * order);
  std::vector<Element> inv(order);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n, a = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t j = y % n, b = y / n;
      const std::size_t rot = a == 0 ? (i + j) % n : (i + n - j) % n;
      mul[x * order + y] = index(rot, (a + b) % 2);
    }
    inv[x] = a == 0 ? index((n - i) % n, 0) : static_cast<Element>(x);
    std::string r = power_name("r", i);
    names[x] = a == 0 ? (r.empty() ? "1" : r) : r + "s";
  }
  return GroupTable("D" + std::to_string(n), order, std::move(mul), 0, std::move(inv),
                    std::move(names), {{index(1, 0), "r"}, {index(0, 1), "s"}});
}

GroupTable make_dicyclic(std::size_t m, const GroupLimits &limits)
{
  if (m < 2)
    throw Error(Errc::invalid_parameter, "Dic<m> requires m >= 2");
  const std::size_t order = 4 * m;
  const std::size_t twom = 2 * m;
  check_cap(order, limits, "Dic" + std::to_string(m));

  auto index = [twom](std::size_t i, std::size_t a) { return static_cast<Element>(a * twom + i); };
  std::vector<Element> mul(order * order);
  std::vector<Element> inv(order);
  std::vector<std::string> names(order);
  for (std::size_t p = 0; p < order; ++p) {
    const std::size_t i = p % twom, a = p / twom;
    for (std::size_t q = 0; q < order; ++q) {
      const std::size_t j = q % twom, b = q / twom;
      Element r;
      if (a == 0)
        r = index((i + j) % twom, b);
      else if (b == 0)
        r = index((i + twom - j) % twom, 1); // y x^j = x^-j y
      else
        r = index((i + twom - j + m) % twom, 0); // y^2 = x^m
      mul[p * order + q] = r;
    }
    std::string x = power_name("x", i);
    names[p] = a == 0 ? (x.empty() ? "1" : x) : x + "y";
  }
  for (std::size_t p = 0; p < order; ++p)
    for (std::size_t q = 0; q < order; ++q)
      if (mul[p * order + q] == 0) {
        inv[p] = static_cast<Element>(q);
        break;
      }
  return GroupTable("Dic" + std::to_string(m), order, std::move(mul), 0, std::move(inv),
                    std::move(names), {{index(1, 0), "x"}, {index(0, 1), "y"}});
}

GroupTable make_gen_quaternion(std::size_t k, const GroupLimits &limits)
{
  if (k < 3)
    throw Error(Errc::invalid_parameter, "Q<2^k> requires k >= 3");
  if (k > 40)
    throw Error(Errc::resource_limit, "Q<2^k> with k = " + std::to_string(k) +
                                          " exceeds the group order cap");
  const std::size_t order = std::size_t{1} << k;
  check_cap(order, limits, "Q" + std::to_string(order));
  return make_dicyclic(order / 4, limits).renamed("Q" + std::to_string(order));
}

GroupTable make_semidirect(std::size_t n, std::size_t m, std::size_t k,
                           const GroupLimits &limits)
{
  const std::string name = "SD(" + std::to_string(n) + "," + std::to_string(m) + "," +
                           std::to_string(k) + ")";
  if (n == 0 || m == 0 || k == 0)
    throw Error(Errc::invalid_parameter, name + ": parameters must be positive");
  if (std::gcd(k, n) != 1)
    throw Error(Errc::invalid_parameter,
                name + ": action requires gcd(k, n) = 1, got gcd(" + std::to_string(k) +
                    ", " + std::to_string(n) + ") = " + std::to_string(std::gcd(k, n)));
  std::size_t km = 1 % n;
  for (std::size_t i = 0; i < m; ++i)
    km = km * (k % n) % n;
  if (km != 1 % n)
    throw Error(Errc::invalid_parameter,
                name + ": action requires k^m = 1 (mod n), got " + std::to_string(k) + "^" +
                    std::to_string(m) + " = " + std::to_string(km) + " (mod " +
                    std::to_string(n) + ")");
  const std::size_t order = n * m;
  check_cap(order, limits, name);

  std::vector<std::size_t> kpow(m);
  kpow[0] = 1 % n;
  for (std::size_t b = 1; b < m; ++b)
    kpow[b] = kpow[b - 1] * (k % n) % n;

  // (a,b)(c,d) = (a + c k^b, b + d)
  std::vector<Element> mul(order * order);
  std::vector<Element> inv(order);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % n, b = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t c = y % n, d = y / n;
      const std::size_t first = (a + c * kpow[b]) % n;
      mul[x * order + y] = static_cast<Element>(((b + d) % m) * n + first);
    }
    names[x] = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      if (mul[x * order + y] == 0) {
        inv[x] = static_cast<Element>(y);
        break;
      }
  std::map<Element, std::string> labels;
  if (n > 1)
    labels[1] = "a";
  if (m > 1)
    labels[static_cast<Element>(n)] = "b";
  return GroupTable(name, order, std::move(mul), 0, std::move(inv), std::move(names),
                    std::move(labels));
}

Permutation permutation_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<Element>> &cycles)
{
  Permutation p(degree);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<bool> seen(degree, false);
  for (const auto &cycle : cycles) {
    for (auto x : cycle) {
      if (x >= degree)
        throw Error(Errc::invalid_parameter,
                    "cycle point " + std::to_string(x) + " outside degree " + std::to_string(degree));
      if (seen[x])
        throw Error(Errc::invalid_parameter, "cycles are not disjoint at " + std::to_string(x));
      seen[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return p;
}

std::string cycle_string(const Permutation &p)
{
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start)
      continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first)
        out += " ";
      out += std::to_string(x);
      first = false;
      x = p[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace
{

struct PermHash
{
  std::size_t operator()(const Permutation &p) const noexcept
  {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p)
      h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

} // namespace

GroupTable from_permutations(const std::vector<Permutation> &generators,
                             const GroupLimits &limits, std::string name)
{
  const std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto &g : generators) {
    if (g.size() != degree)
      throw Error(Errc::invalid_parameter, "generators act on domains of different size");
    std::vector<bool> hit(degree, false);
    for (auto x : g) {
      if (x >= degree || hit[x])
        throw Error(Errc::invalid_parameter, "generator " + cycle_string(g) +
                                                 " is not a bijection");
      hit[x] = true;
    }
  }

  auto compose = [degree](const Permutation &p, const Permutation &q) {
    Permutation r(degree);
    for (std::size_t x = 0; x < degree; ++x)
      r[x] = q[p[x]];
    return r;
  };

  Permutation id(degree);
  std::iota(id.begin(), id.end(), Element{0});
  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, Element, PermHash> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto &g : generators) {
      Permutation next = compose(elements[head], g);
      if (index.contains(next))
        continue;
      if (elements.size() + 1 > limits.max_order)
        throw Error(Errc::resource_limit, "permutation closure exceeds the group order cap " +
                                              std::to_string(limits.max_order));
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> mul(n * n);
  std::vector<Element> inv(n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      mul[i * n + j] = index.at(compose(elements[i], elements[j]));
    Permutation inverse(degree);
    for (std::size_t x = 0; x < degree; ++x)
      inverse[elements[i][x]] = static_cast<Element>(x);
    inv[i] = index.at(inverse);
    names[i] = cycle_string(elements[i]);
  }

  if (name.empty()) {
    name = "<";
    for (std::size_t i = 0; i < generators.size(); ++i)
      name += (i ? ", " : "") + cycle_string(generators[i]);
    name += ">";
  }
  return GroupTable(std::move(name), n, std::move(mul), 0, std::move(inv), std::move(names));
}

GroupTable make_alternating(std::size_t n, const GroupLimits &limits)
{
  if (n == 0)
    throw Error(Errc::invalid_parameter, "A<n> requires n >= 1");
  std::vector<Permutation> gens;
  for (Element j = 2; j < n; ++j)
    gens.push_back(permutation_from_cycles(n, {{0, 1, j}}));
  return from_permutations(gens, limits, "A" + std::to_string(n));
}

GroupTable make_symmetric(std::size_t n, const GroupLimits &limits)
{
  if (n == 0)
    throw Error(Errc::invalid_parameter, "S<n> requires n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(permutation_from_cycles(n, {{0, 1}}));
    std::vector<Element> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Element{0});
    if (n >= 3)
      gens.push_back(permutation_from_cycles(n, {cycle}));
  }
  return from_permutations(gens, limits, "S" + std::to_string(n));
}

GroupTable direct_product(const GroupTable &g, const GroupTable &h, const GroupLimits &limits)
{
  const std::size_t a = g.order(), b = h.order(), n = a * b;
  std::string name = g.name() + "x" + h.name();
  check_cap(n, limits, name);

  std::vector<Element> mul(n * n);
  std::vector<Element> inv(n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Element xi = static_cast<Element>(x / b), xj = static_cast<Element>(x % b);
    for (std::size_t y = 0; y < n; ++y) {
      const Element yi = static_cast<Element>(y / b), yj = static_cast<Element>(y % b);
      mul[x * n + y] = static_cast<Element>(g.mul(xi, yi) * b + h.mul(xj, yj));
    }
    inv[x] = static_cast<Element>(g.inv(xi) * b + h.inv(xj));
    names[x] = "(" + g.element_name(xi) + "," + h.element_name(xj) + ")";
  }
  const Element identity = static_cast<Element>(g.identity() * b + h.identity());
  return GroupTable(std::move(name), n, std::move(mul), identity, std::move(inv),
                    std::move(names));
}

std::size_t element_order(const GroupTable &g, Element x)
{
  if (x >= g.order())
    throw Error(Errc::invalid_parameter, "element index " + std::to_string(x) +
                                             " out of range for order " + std::to_string(g.order()));
  std::size_t t = 1;
  Element p = x;
  while (p != g.identity()) {
    p = g.mul(p, x);
    if (++t > g.order())
      throw Error(Errc::internal, "element has no finite order; table is not a group");
  }
  return t;
}

std::map<std::size_t, std::size_t> order_census(const GroupTable &g)
{
  std::map<std::size_t, std::size_t> census;
  for (Element x = 0; x < g.order(); ++x)
    ++census[element_order(g, x)];
  return census;
}

ValidationReport validate(const GroupTable &g)
{
  ValidationReport report;
  const std::size_t n = g.order();
  const auto &mul = g.table();
  const Element e = g.identity();

  auto fail = [&report](std::string axiom, Element x, Element y, Element z, std::string detail) {
    report.failures.push_back({std::move(axiom), {x, y, z}, std::move(detail)});
  };

  bool closed = true;
  for (std::size_t x = 0; x < n && closed; ++x)
    for (std::size_t y = 0; y < n && closed; ++y)
      if (mul[x * n + y] >= n) {
        closed = false;
        fail("closure", static_cast<Element>(x), static_cast<Element>(y), mul[x * n + y],
             "table entry out of range");
      }
  if (e >= n) {
    fail("identity", e, e, e, "identity index out of range");
    return report;
  }
  if (!closed)
    return report;

  for (Element x = 0; x < n; ++x) {
    if (g.mul(e, x) != x || g.mul(x, e) != x) {
      fail("identity", x, e, g.mul(x, e) != x ? g.mul(x, e) : g.mul(e, x),
           "e*x = x = x*e fails");
      break;
    }
  }

  for (Element x = 0; x < n; ++x) {
    const Element y = g.inv(x);
    if (y >= n || g.mul(x, y) != e || g.mul(y, x) != e) {
      fail("inverse", x, y, y < n ? g.mul(x, y) : y, "x * inv(x) = e fails");
      break;
    }
  }

  std::vector<Element> zs;
  if (n <= 256) {
    zs.resize(n);
    std::iota(zs.begin(), zs.end(), Element{0});
  } else {
    report.associativity_exhaustive = false;
    for (std::size_t i = 0; i < 16; ++i)
      zs.push_back(static_cast<Element>((i * 2654435761ULL) % n));
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = g.mul(x, y);
      for (auto z : zs)
        if (g.mul(xy, z) != g.mul(x, g.mul(y, z))) {
          fail("associativity", x, y, z, "(xy)z != x(yz)");
          return report;
        }
    }
  return report;
}

} // namespace comax
