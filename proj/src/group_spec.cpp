#include "cycgraph/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>

#include "cycgraph/number_theory.hpp"

namespace cycgraph {

const char* to_string(Family f) {
  switch (f) {
    case Family::cyclic: return "cyclic";
    case Family::direct_product: return "direct_product";
    case Family::dihedral: return "dihedral";
    case Family::dicyclic: return "dicyclic";
    case Family::symmetric: return "symmetric";
    case Family::alternating: return "alternating";
    case Family::elementary_abelian: return "elementary_abelian";
    case Family::cayley_file: return "cayley_file";
    case Family::perm_file: return "perm_file";
  }
  return "unknown";
}

GroupSpec GroupSpec::Cyclic(std::uint64_t n) { return {Family::cyclic, {n}, {}, {}}; }
GroupSpec GroupSpec::Dihedral(std::uint64_t n) { return {Family::dihedral, {n}, {}, {}}; }
GroupSpec GroupSpec::Dicyclic(std::uint64_t m) { return {Family::dicyclic, {m}, {}, {}}; }
GroupSpec GroupSpec::Symmetric(std::uint64_t n) { return {Family::symmetric, {n}, {}, {}}; }
GroupSpec GroupSpec::Alternating(std::uint64_t n) { return {Family::alternating, {n}, {}, {}}; }
GroupSpec GroupSpec::ElementaryAbelian(std::uint64_t p, std::uint64_t k) {
  return {Family::elementary_abelian, {p, k}, {}, {}};
}

GroupSpec GroupSpec::Product(std::vector<GroupSpec> factors) {
  std::vector<GroupSpec> flat;
  for (auto& f : factors) {
    if (f.family == Family::direct_product)
      flat.insert(flat.end(), f.factors.begin(), f.factors.end());
    else
      flat.push_back(std::move(f));
  }
  if (flat.size() == 1) return flat.front();
  return {Family::direct_product, {}, std::move(flat), {}};
}

std::string GroupSpec::to_string() const {
  auto p = [this](std::size_t i) { return std::to_string(params.at(i)); };
  switch (family) {
    case Family::cyclic: return "Z(" + p(0) + ")";
    case Family::dihedral: return "D(" + p(0) + ")";
    case Family::dicyclic: {
      std::uint64_t m = params.at(0);
      if (m >= 2 && (m & (m - 1)) == 0) return "Q(" + std::to_string(4 * m) + ")";
      return "Dic(" + p(0) + ")";
    }
    case Family::symmetric: return "S(" + p(0) + ")";
    case Family::alternating: return "A(" + p(0) + ")";
    case Family::elementary_abelian: return "Z(" + p(0) + ")^" + p(1);
    case Family::cayley_file: return "file:cayley:" + path;
    case Family::perm_file: return "file:perm:" + path;
    case Family::direct_product: {
      std::string s;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "x";
        s += factors[i].to_string();
      }
      return s;
    }
  }
  return "?";
}

namespace {

bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return __builtin_mul_overflow(a, b, &out);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : src_(text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  GroupSpec parse() {
    for (auto [prefix, fam] : {std::pair{"file:cayley:", Family::cayley_file},
                               std::pair{"file:perm:", Family::perm_file}}) {
      std::string_view pre(prefix);
      std::string_view trimmed = trim(src_);
      if (trimmed.substr(0, pre.size()) == pre) {
        GroupSpec g;
        g.family = fam;
        g.path = std::string(trimmed.substr(pre.size()));
        if (g.path.empty()) fail("missing file path");
        return g;
      }
    }
    std::vector<GroupSpec> factors;
    factors.push_back(power());
    while (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      factors.push_back(power());
    }
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return GroupSpec::Product(std::move(factors));
  }

 private:
  static std::string_view trim(std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw GroupError(GroupErrorKind::parse_error,
                     "group spec '" + std::string(src_) + "': " + why);
  }

  bool accept(std::string_view tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t number() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(s_[pos_++] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("number too large");
      v = v * 10 + d;
    }
    return v;
  }

  std::uint64_t paren_number() {
    expect('(');
    std::uint64_t v = number();
    expect(')');
    return v;
  }

  std::uint64_t at_least(std::uint64_t lo, const char* what) {
    std::uint64_t v = paren_number();
    if (v < lo) fail(std::string(what) + " requires parameter >= " + std::to_string(lo));
    return v;
  }

  GroupSpec atom() {
    if (accept("Z")) return GroupSpec::Cyclic(at_least(1, "Z(n)"));
    if (accept("Dic")) return GroupSpec::Dicyclic(at_least(2, "Dic(m)"));
    if (accept("D")) return GroupSpec::Dihedral(at_least(1, "D(n)"));
    if (accept("S")) return GroupSpec::Symmetric(at_least(1, "S(n)"));
    if (accept("A")) return GroupSpec::Alternating(at_least(2, "A(n)"));
    if (accept("Q")) {
      expect('(');
      std::uint64_t v = number();
      if (accept("^")) {
        if (v != 2) fail("Q(b^a) requires base 2");
        std::uint64_t a = number();
        if (a < 3 || a > 62) fail("Q(2^a) requires 3 <= a <= 62");
        v = std::uint64_t{1} << a;
      }
      expect(')');
      if (v < 8 || (v & (v - 1)) != 0) fail("Q(n) requires n a power of two >= 8");
      return GroupSpec::Dicyclic(v / 4);
    }
    fail("unknown group family at '" + s_.substr(pos_) + "'");
  }

  GroupSpec power() {
    GroupSpec base = atom();
    if (!accept("^")) return base;
    std::uint64_t k = number();
    if (k < 1) fail("exponent must be >= 1");
    if (k > 64) fail("exponent too large");
    if (base.family == Family::cyclic && is_prime(base.params[0]))
      return GroupSpec::ElementaryAbelian(base.params[0], k);
    return GroupSpec::Product(std::vector<GroupSpec>(k, base));
  }

  std::string_view src_;
  std::string s_;
  std::size_t pos_ = 0;
};

std::vector<std::uint64_t> invariants_from_cyclic_orders(const std::vector<std::uint64_t>& orders) {
  std::map<std::uint64_t, std::vector<unsigned>> by_prime;
  for (auto d : orders)
    for (auto [p, e] : factorize(d)) by_prime[p].push_back(e);
  std::size_t len = 0;
  for (auto& [p, es] : by_prime) {
    std::sort(es.rbegin(), es.rend());
    len = std::max(len, es.size());
  }
  std::vector<std::uint64_t> inv(len, 1);
  for (auto& [p, es] : by_prime)
    for (std::size_t i = 0; i < es.size(); ++i)
      for (unsigned k = 0; k < es[i]; ++k) inv[i] *= p;
  return inv;
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) { return Parser(text).parse(); }

std::optional<std::uint64_t> GroupSpec::expected_order() const {
  std::uint64_t out = 0;
  switch (family) {
    case Family::cyclic: return params.at(0);
    case Family::dihedral:
      if (mul_overflows(2, params.at(0), out)) return std::nullopt;
      return out;
    case Family::dicyclic:
      if (mul_overflows(4, params.at(0), out)) return std::nullopt;
      return out;
    case Family::symmetric:
    case Family::alternating: {
      std::uint64_t f = 1;
      for (std::uint64_t k = 2; k <= params.at(0); ++k)
        if (mul_overflows(f, k, f)) return std::nullopt;
      if (family == Family::alternating && params.at(0) >= 2) f /= 2;
      return f;
    }
    case Family::elementary_abelian: {
      std::uint64_t f = 1;
      for (std::uint64_t k = 0; k < params.at(1); ++k)
        if (mul_overflows(f, params.at(0), f)) return std::nullopt;
      return f;
    }
    case Family::direct_product: {
      std::uint64_t f = 1;
      for (const auto& g : factors) {
        auto o = g.expected_order();
        if (!o || mul_overflows(f, *o, f)) return std::nullopt;
      }
      return f;
    }
    case Family::cayley_file:
    case Family::perm_file: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::vector<std::uint64_t>> GroupSpec::abelian_invariants() const {
  std::vector<std::uint64_t> orders;
  switch (family) {
    case Family::cyclic: orders = {params.at(0)}; break;
    case Family::elementary_abelian: orders.assign(params.at(1), params.at(0)); break;
    case Family::dihedral:
      if (params.at(0) == 1) orders = {2};
      else if (params.at(0) == 2) orders = {2, 2};
      else return std::nullopt;
      break;
    case Family::symmetric:
      if (params.at(0) > 2) return std::nullopt;
      orders = {params.at(0) == 2 ? 2U : 1U};
      break;
    case Family::alternating:
      if (params.at(0) > 3) return std::nullopt;
      orders = {params.at(0) == 3 ? 3U : 1U};
      break;
    case Family::direct_product:
      for (const auto& f : factors) {
        auto inv = f.abelian_invariants();
        if (!inv) return std::nullopt;
        orders.insert(orders.end(), inv->begin(), inv->end());
      }
      break;
    case Family::dicyclic:
    case Family::cayley_file:
    case Family::perm_file: return std::nullopt;
  }
  return invariants_from_cyclic_orders(orders);
}

FiniteGroup realize(const GroupSpec& spec, const GroupLimits& limits) {
  if (auto order = spec.expected_order(); spec.family != Family::cayley_file &&
                                          spec.family != Family::perm_file &&
                                          (!order || *order > limits.order_cap))
    throw GroupError(GroupErrorKind::order_cap_exceeded,
                     spec.to_string() + " exceeds order cap " + std::to_string(limits.order_cap));
  auto param = [&](std::size_t i) { return static_cast<std::size_t>(spec.params.at(i)); };
  switch (spec.family) {
    case Family::cyclic: return cyclic(param(0), limits);
    case Family::dihedral: return dihedral(param(0), limits);
    case Family::dicyclic: return dicyclic(param(0), limits);
    case Family::symmetric: return symmetric(param(0), limits);
    case Family::alternating: return alternating(param(0), limits);
    case Family::elementary_abelian: return elementary_abelian(param(0), param(1), limits);
    case Family::cayley_file: return read_cayley_file(spec.path, limits);
    case Family::perm_file: return read_perm_file(spec.path, limits);
    case Family::direct_product: {
      if (spec.factors.empty())
        throw GroupError(GroupErrorKind::invalid_parameter, "empty direct product");
      FiniteGroup g = realize(spec.factors.front(), limits);
      for (std::size_t i = 1; i < spec.factors.size(); ++i)
        g = direct_product(g, realize(spec.factors[i], limits), limits);
      return g;
    }
  }
  throw GroupError(GroupErrorKind::invalid_parameter, "unknown family");
}

std::vector<GroupSpec> abelian_groups_of_order(std::uint64_t n) {
  if (n <= 1) return {GroupSpec::Cyclic(1)};
  auto f = factorize(n);
  std::vector<std::vector<std::vector<unsigned>>> choices;
  for (auto [p, e] : f) choices.push_back(integer_partitions(e));

  std::vector<GroupSpec> out;
  std::vector<std::size_t> pick(f.size(), 0);
  while (true) {
    std::vector<std::uint64_t> orders;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (unsigned e : choices[i][pick[i]]) {
        std::uint64_t q = 1;
        for (unsigned k = 0; k < e; ++k) q *= f[i].first;
        orders.push_back(q);
      }
    auto inv = invariants_from_cyclic_orders(orders);
    if (inv.size() == 1) {
      out.push_back(GroupSpec::Cyclic(n));
    } else if (is_prime(inv.front()) &&
               std::all_of(inv.begin(), inv.end(), [&](auto d) { return d == inv.front(); })) {
      out.push_back(GroupSpec::ElementaryAbelian(inv.front(), inv.size()));
    } else {
      std::vector<GroupSpec> factors;
      for (auto d : inv) factors.push_back(GroupSpec::Cyclic(d));
      out.push_back(GroupSpec::Product(std::move(factors)));
    }

    // Odometer over the per-prime partition choices, last prime fastest.
    std::size_t i = f.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace cycgraph
