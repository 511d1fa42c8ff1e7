#include "cycgraph/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "cycgraph/number_theory.hpp"

namespace cycgraph {

const char* to_string(GroupErrorKind kind) {
  switch (kind) {
    case GroupErrorKind::bad_shape: return "BadShape";
    case GroupErrorKind::not_latin_square: return "NotLatinSquare";
    case GroupErrorKind::no_identity: return "NoIdentity";
    case GroupErrorKind::no_inverse: return "NoInverse";
    case GroupErrorKind::not_associative: return "NotAssociative";
    case GroupErrorKind::order_cap_exceeded: return "OrderCapExceeded";
    case GroupErrorKind::invalid_permutation: return "InvalidPermutation";
    case GroupErrorKind::invalid_parameter: return "InvalidParameter";
    case GroupErrorKind::parse_error: return "ParseError";
    case GroupErrorKind::io_error: return "IoError";
  }
  return "Unknown";
}

struct FiniteGroup::Rep {
  std::size_t order = 0;
  Element identity = 0;
  std::string descriptor;
  std::vector<std::uint16_t> table;
  Rule rule;
};

namespace {

// Tables are stored as 16-bit entries.
constexpr std::size_t kMaxTableOrder = 65535;

void check_cap(std::uint64_t order, const GroupLimits& limits, const std::string& what) {
  if (order > limits.order_cap)
    throw GroupError(GroupErrorKind::order_cap_exceeded,
                     what + " has order " + std::to_string(order) + " above cap " +
                         std::to_string(limits.order_cap));
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, Element identity, Rule rule, std::string descriptor,
                         const GroupLimits& limits) {
  auto rep = std::make_shared<Rep>();
  rep->order = order;
  rep->identity = identity;
  rep->descriptor = std::move(descriptor);
  if (order <= std::min(limits.table_limit, kMaxTableOrder)) {
    rep->table.resize(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        rep->table[a * order + b] =
            static_cast<std::uint16_t>(rule(static_cast<Element>(a), static_cast<Element>(b)));
  } else {
    rep->rule = std::move(rule);
  }
  rep_ = std::move(rep);
}

FiniteGroup FiniteGroup::from_table(std::size_t order, Element identity,
                                    std::vector<std::uint16_t> table, std::string descriptor) {
  auto rep = std::make_shared<Rep>();
  rep->order = order;
  rep->identity = identity;
  rep->descriptor = std::move(descriptor);
  rep->table = std::move(table);
  return FiniteGroup(std::shared_ptr<const Rep>(std::move(rep)));
}

std::size_t FiniteGroup::order() const { return rep_->order; }
Element FiniteGroup::identity() const { return rep_->identity; }
const std::string& FiniteGroup::descriptor() const { return rep_->descriptor; }
bool FiniteGroup::has_table() const { return !rep_->table.empty(); }

Element FiniteGroup::mul(Element a, Element b) const {
  if (!rep_->table.empty()) return rep_->table[static_cast<std::size_t>(a) * rep_->order + b];
  return rep_->rule(a, b);
}

Element FiniteGroup::inverse(Element a) const {
  Element x = a;
  Element prev = identity();
  while (x != identity()) {
    prev = x;
    x = mul(x, a);
  }
  return prev;
}

Element FiniteGroup::power(Element a, std::uint64_t k) const {
  Element result = identity();
  Element base = a;
  while (k) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::span<const std::uint16_t> FiniteGroup::row(Element a) const {
  if (rep_->table.empty()) return {};
  return {rep_->table.data() + static_cast<std::size_t>(a) * rep_->order, rep_->order};
}

void validate(const FiniteGroup& g, const GroupLimits& limits) {
  const std::size_t n = g.order();
  if (n == 0) throw GroupError(GroupErrorKind::bad_shape, "empty table");

  std::vector<std::uint8_t> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      Element c = g.mul(static_cast<Element>(a), static_cast<Element>(b));
      if (c >= n || seen[c])
        throw GroupError(GroupErrorKind::not_latin_square,
                         "row " + std::to_string(a) + " repeats or overflows at column " +
                             std::to_string(b));
      seen[c] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      Element c = g.mul(static_cast<Element>(a), static_cast<Element>(b));
      if (seen[c])
        throw GroupError(GroupErrorKind::not_latin_square,
                         "column " + std::to_string(b) + " repeats at row " + std::to_string(a));
      seen[c] = 1;
    }
  }

  const Element e = g.identity();
  if (e >= n) throw GroupError(GroupErrorKind::no_identity, "identity index out of range");
  for (std::size_t x = 0; x < n; ++x) {
    auto xe = static_cast<Element>(x);
    if (g.mul(e, xe) != xe || g.mul(xe, e) != xe)
      throw GroupError(GroupErrorKind::no_identity,
                       "element " + std::to_string(e) + " is not an identity at " +
                           std::to_string(x));
  }

  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y)
      found = g.mul(static_cast<Element>(x), static_cast<Element>(y)) == e;
    if (!found)
      throw GroupError(GroupErrorKind::no_inverse, "element " + std::to_string(x) + " has no inverse");
  }

  if (n > limits.associativity_cap) return;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Element ab = g.mul(static_cast<Element>(a), static_cast<Element>(b));
      for (std::size_t c = 0; c < n; ++c) {
        auto ce = static_cast<Element>(c);
        if (g.mul(ab, ce) != g.mul(static_cast<Element>(a), g.mul(static_cast<Element>(b), ce)))
          throw GroupError(GroupErrorKind::not_associative,
                           "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                               std::to_string(c) + " != " + std::to_string(a) + "*(" +
                               std::to_string(b) + "*" + std::to_string(c) + ")");
      }
    }
}

FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                              std::string descriptor, const GroupLimits& limits) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupError(GroupErrorKind::bad_shape, "empty table");
  check_cap(n, limits, descriptor);
  if (n > kMaxTableOrder)
    throw GroupError(GroupErrorKind::bad_shape, "table order above 65535 is unsupported");
  std::vector<std::uint16_t> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw GroupError(GroupErrorKind::bad_shape,
                       "row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                           " entries, expected " + std::to_string(n));
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n)
        throw GroupError(GroupErrorKind::bad_shape,
                         "entry (" + std::to_string(a) + "," + std::to_string(b) +
                             ") out of range");
      flat[a * n + b] = static_cast<std::uint16_t>(table[a][b]);
    }
  }

  // The identity is the element whose row is the identity map; validation
  // reports NoIdentity if none exists.
  Element identity = static_cast<Element>(n);
  for (std::size_t a = 0; a < n && identity == n; ++a) {
    bool is_id = true;
    for (std::size_t b = 0; b < n && is_id; ++b) is_id = flat[a * n + b] == b;
    if (is_id) identity = static_cast<Element>(a);
  }

  // Shape and Latin checks come before the identity check, so validate with
  // a placeholder identity first when none was found.
  auto g = FiniteGroup::from_table(n, identity == n ? 0 : identity, std::move(flat),
                                   std::move(descriptor));
  if (identity == n) {
    // Latin failures take precedence over a missing identity.
    try {
      validate(g, GroupLimits{.order_cap = limits.order_cap, .associativity_cap = 0});
    } catch (const GroupError& err) {
      if (err.kind() == GroupErrorKind::not_latin_square) throw;
    }
    throw GroupError(GroupErrorKind::no_identity, "no row of the table is the identity map");
  }
  validate(g, limits);
  return g;
}

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (Element x : p) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

void check_permutation(const Permutation& p, std::size_t degree) {
  if (p.size() != degree)
    throw GroupError(GroupErrorKind::invalid_permutation,
                     "permutation has degree " + std::to_string(p.size()) + ", expected " +
                         std::to_string(degree));
  std::vector<std::uint8_t> hit(degree);
  for (Element x : p) {
    if (x >= degree || hit[x])
      throw GroupError(GroupErrorKind::invalid_permutation, "not a permutation");
    hit[x] = 1;
  }
}

// (x*y)(i) = y(x(i)): apply x first.
Permutation compose(const Permutation& x, const Permutation& y) {
  Permutation r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
  return r;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<Element> cycle;
  bool open = false;
  std::vector<std::uint8_t> used(degree);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw GroupError(GroupErrorKind::parse_error,
                     "cycle notation '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      if (open) fail("nested '('");
      open = true;
      cycle.clear();
      ++i;
    } else if (c == ')') {
      if (!open) fail("unbalanced ')'");
      open = false;
      for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) fail("point outside a cycle");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      if (v >= degree) fail("point " + std::to_string(v) + " out of range");
      if (used[v]) fail("point " + std::to_string(v) + " repeated");
      used[v] = 1;
      cycle.push_back(static_cast<Element>(v));
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (open) fail("unterminated cycle");
  return p;
}

FiniteGroup from_permutation_generators(std::size_t degree, std::vector<Permutation> gens,
                                        std::string descriptor, const GroupLimits& limits) {
  for (const auto& g : gens) check_permutation(g, degree);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Permutation id(degree);
  std::iota(id.begin(), id.end(), Element{0});

  auto elements = std::make_shared<std::vector<Permutation>>();
  auto index = std::make_shared<std::unordered_map<Permutation, Element, PermHash>>();
  elements->push_back(id);
  index->emplace(id, 0);
  for (std::size_t head = 0; head < elements->size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = compose((*elements)[head], g);
      if (index->count(next)) continue;
      if (elements->size() + 1 > limits.order_cap)
        throw GroupError(GroupErrorKind::order_cap_exceeded,
                         descriptor + ": closure exceeds order cap " +
                             std::to_string(limits.order_cap));
      index->emplace(next, static_cast<Element>(elements->size()));
      elements->push_back(std::move(next));
    }
  }

  const std::size_t n = elements->size();
  auto rule = [elements, index](Element a, Element b) {
    return index->at(compose((*elements)[a], (*elements)[b]));
  };
  return FiniteGroup(n, 0, rule, std::move(descriptor), limits);
}

FiniteGroup cyclic(std::size_t n, const GroupLimits& limits) {
  if (n < 1) throw GroupError(GroupErrorKind::invalid_parameter, "Z(n) needs n >= 1");
  std::string name = "Z(" + std::to_string(n) + ")";
  check_cap(n, limits, name);
  if (n <= std::min(limits.table_limit, kMaxTableOrder)) {
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      std::uint16_t* row = table.data() + a * n;
      for (std::size_t b = 0; b < n - a; ++b) row[b] = static_cast<std::uint16_t>(a + b);
      for (std::size_t b = n - a; b < n; ++b) row[b] = static_cast<std::uint16_t>(a + b - n);
    }
    return FiniteGroup::from_table(n, 0, std::move(table), std::move(name));
  }
  return FiniteGroup(n, 0, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); },
                     std::move(name), limits);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const GroupLimits& limits) {
  const std::size_t n = g.order() * h.order();
  std::string name = g.descriptor() + "x" + h.descriptor();
  check_cap(n, limits, name);
  const auto m = static_cast<Element>(h.order());
  const Element identity = g.identity() * m + h.identity();
  return FiniteGroup(
      n, identity,
      [g, h, m](Element a, Element b) { return g.mul(a / m, b / m) * m + h.mul(a % m, b % m); },
      std::move(name), limits);
}

FiniteGroup dihedral(std::size_t n, const GroupLimits& limits) {
  if (n < 1) throw GroupError(GroupErrorKind::invalid_parameter, "D(n) needs n >= 1");
  std::string name = "D(" + std::to_string(n) + ")";
  check_cap(2 * n, limits, name);
  // Element r^i s^j has index i + n*j; s r s = r^-1.
  const auto nn = static_cast<Element>(n);
  return FiniteGroup(
      2 * n, 0,
      [nn](Element a, Element b) {
        Element i = a % nn, s = a / nn, j = b % nn, t = b / nn;
        Element k = s == 0 ? (i + j) % nn : (i + nn - j) % nn;
        return k + nn * ((s + t) & 1U);
      },
      std::move(name), limits);
}

FiniteGroup dicyclic(std::size_t m, const GroupLimits& limits) {
  if (m < 2) throw GroupError(GroupErrorKind::invalid_parameter, "Dic(m) needs m >= 2");
  bool pow2 = (m & (m - 1)) == 0;
  std::string name = pow2 ? "Q(" + std::to_string(4 * m) + ")" : "Dic(" + std::to_string(m) + ")";
  check_cap(4 * m, limits, name);
  // Element a^i x^s has index i + 2m*s with a^(2m) = 1, x^2 = a^m, x a = a^-1 x.
  const auto two_m = static_cast<Element>(2 * m);
  const auto mm = static_cast<Element>(m);
  return FiniteGroup(
      4 * m, 0,
      [two_m, mm](Element a, Element b) {
        Element i = a % two_m, s = a / two_m, j = b % two_m, t = b / two_m;
        if (s == 0) return (i + j) % two_m + two_m * t;
        Element k = (i + two_m - j) % two_m;
        if (t == 0) return k + two_m;
        return (k + mm) % two_m;
      },
      std::move(name), limits);
}

namespace {

Permutation cycle_perm(std::size_t degree, std::initializer_list<std::size_t> pts) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<std::size_t> v(pts);
  for (std::size_t k = 0; k < v.size(); ++k) p[v[k]] = static_cast<Element>(v[(k + 1) % v.size()]);
  return p;
}

Permutation rotation(std::size_t degree, std::size_t from) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), Element{0});
  for (std::size_t k = from; k < degree; ++k)
    p[k] = static_cast<Element>(k + 1 < degree ? k + 1 : from);
  return p;
}

std::uint64_t factorial_capped(std::size_t n, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= k;
    if (f > cap) return cap + 1;
  }
  return f;
}

}  // namespace

FiniteGroup symmetric(std::size_t n, const GroupLimits& limits) {
  if (n < 1) throw GroupError(GroupErrorKind::invalid_parameter, "S(n) needs n >= 1");
  std::string name = "S(" + std::to_string(n) + ")";
  check_cap(factorial_capped(n, limits.order_cap), limits, name);
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(cycle_perm(n, {0, 1}));
    if (n >= 3) gens.push_back(rotation(n, 0));
  }
  return from_permutation_generators(n, std::move(gens), std::move(name), limits);
}

FiniteGroup alternating(std::size_t n, const GroupLimits& limits) {
  if (n < 1) throw GroupError(GroupErrorKind::invalid_parameter, "A(n) needs n >= 1");
  std::string name = "A(" + std::to_string(n) + ")";
  check_cap(n < 2 ? 1 : factorial_capped(n, 2 * limits.order_cap) / 2, limits, name);
  std::vector<Permutation> gens;
  if (n >= 3) {
    gens.push_back(cycle_perm(n, {0, 1, 2}));
    // An n-cycle is even for odd n; otherwise rotate the points 1..n-1.
    if (n >= 4) gens.push_back(rotation(n, n % 2 == 1 ? 0 : 1));
  }
  return from_permutation_generators(n, std::move(gens), std::move(name), limits);
}

FiniteGroup elementary_abelian(std::size_t p, std::size_t k, const GroupLimits& limits) {
  if (!is_prime(p) || k < 1)
    throw GroupError(GroupErrorKind::invalid_parameter, "Z(p)^k needs p prime, k >= 1");
  std::string name = "Z(" + std::to_string(p) + ")^" + std::to_string(k);
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    if (n > limits.order_cap) check_cap(n, limits, name);
  }
  const auto pe = static_cast<Element>(p);
  return FiniteGroup(
      n, 0,
      [pe](Element a, Element b) {
        Element r = 0, place = 1;
        while (a || b) {
          r += ((a % pe + b % pe) % pe) * place;
          a /= pe;
          b /= pe;
          place *= pe;
        }
        return r;
      },
      std::move(name), limits);
}

FiniteGroup relabel(const FiniteGroup& g, std::span<const Element> perm) {
  const std::size_t n = g.order();
  Permutation p(perm.begin(), perm.end());
  check_permutation(p, n);
  std::vector<Element> inv(n);
  for (std::size_t x = 0; x < n; ++x) inv[p[x]] = static_cast<Element>(x);
  const Element e = p[g.identity()];
  return FiniteGroup(
      n, e,
      [g, p = std::move(p), inv = std::move(inv)](Element a, Element b) {
        return p[g.mul(inv[a], inv[b])];
      },
      g.descriptor(), GroupLimits{.order_cap = n, .table_limit = g.has_table() ? n : 0});
}

std::size_t element_order(const FiniteGroup& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

FiniteGroup read_cayley_file(const std::string& path, const GroupLimits& limits) {
  std::ifstream in(path);
  if (!in) throw GroupError(GroupErrorKind::io_error, "cannot open " + path);
  long long n = 0;
  if (!(in >> n) || n < 1)
    throw GroupError(GroupErrorKind::parse_error, path + ": first line must be the order n >= 1");
  check_cap(static_cast<std::uint64_t>(n), limits, path);
  std::vector<std::vector<Element>> table(static_cast<std::size_t>(n),
                                          std::vector<Element>(static_cast<std::size_t>(n)));
  for (auto& row : table)
    for (auto& v : row) {
      long long x = 0;
      if (!(in >> x))
        throw GroupError(GroupErrorKind::parse_error, path + ": expected " +
                                                          std::to_string(n * n) + " entries");
      if (x < 0 || x >= n)
        throw GroupError(GroupErrorKind::bad_shape, path + ": entry " + std::to_string(x) +
                                                        " out of range");
      v = static_cast<Element>(x);
    }
  std::string extra;
  if (in >> extra) throw GroupError(GroupErrorKind::bad_shape, path + ": trailing data");
  return from_cayley_table(table, "cayley-file:" + path, limits);
}

FiniteGroup read_perm_file(const std::string& path, const GroupLimits& limits) {
  std::ifstream in(path);
  if (!in) throw GroupError(GroupErrorKind::io_error, "cannot open " + path);
  std::string line;
  long long degree = -1;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!(ls >> degree) || degree < 1)
      throw GroupError(GroupErrorKind::parse_error, path + ": first line must be the degree");
    break;
  }
  if (degree < 1) throw GroupError(GroupErrorKind::parse_error, path + ": missing degree");
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(parse_cycles(line, static_cast<std::size_t>(degree)));
  }
  return from_permutation_generators(static_cast<std::size_t>(degree), std::move(gens),
                                     "perm-file:" + path, limits);
}

void write_cayley_file(const FiniteGroup& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GroupError(GroupErrorKind::io_error, "cannot write " + path);
  const std::size_t n = g.order();
  out << n << '\n';
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << g.mul(static_cast<Element>(a), static_cast<Element>(b));
    }
    out << '\n';
  }
  if (!out) throw GroupError(GroupErrorKind::io_error, "write failed: " + path);
}

}  // namespace cycgraph
