#include "infhecke/groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <queue>
#include <regex>
#include <sstream>

namespace infhecke {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Lexicographic rank of a permutation in one-line notation.
std::uint64_t permutation_rank(const std::uint8_t* perm, int n) {
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (perm[j] < perm[i]) ++smaller;
    }
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  return rank;
}

int parse_int(const std::string& s) {
  if (s.empty() || s.size() > 6) throw group_error("invalid integer in group spec: '" + s + "'");
  return std::stoi(s);
}

}  // namespace

bool is_two_reflection(int m, int p) {
  // Diagonal reflections diag(ζ^a, 1, ..., 1) exist for every nonzero a ≡ 0
  // (mod p); they all have order 2 only when p = m or p = m/2.
  return p == m || 2 * p == m;
}

std::string GroupDescriptor::family_name() const {
  switch (family) {
    case Family::symmetric: return "symmetric";
    case Family::coxeter_a: return "A";
    case Family::coxeter_b: return "B";
    case Family::coxeter_d: return "D";
    case Family::dihedral: return "I2";
    case Family::general: return "G";
  }
  return "G";
}

std::string GroupDescriptor::name() const {
  switch (family) {
    case Family::symmetric: return "S" + std::to_string(label);
    case Family::coxeter_a: return "A" + std::to_string(label);
    case Family::coxeter_b: return "B" + std::to_string(label);
    case Family::coxeter_d: return "D" + std::to_string(label);
    case Family::dihedral: return "I2(" + std::to_string(label) + ")";
    case Family::general:
      return "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
  }
  return {};
}

int GroupDescriptor::rank() const { return m == 1 ? n - 1 : n; }

GroupDescriptor parse_group(std::string_view spec) {
  std::string text;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  static const std::regex simple(R"(([SABD])(\d+))");
  static const std::regex dihedral(R"(I2\((\d+)\))");
  static const std::regex general(R"(G\((\d+),(\d+),(\d+)\))");

  GroupDescriptor d;
  std::smatch match;
  if (std::regex_match(text, match, simple)) {
    int k = parse_int(match[2]);
    d.label = k;
    switch (match[1].str()[0]) {
      case 'S':
        d.family = Family::symmetric;
        d.m = d.p = 1;
        d.n = k;
        if (k < 2) throw group_error("S<n> needs n >= 2");
        break;
      case 'A':
        d.family = Family::coxeter_a;
        d.m = d.p = 1;
        d.n = k + 1;
        if (k < 1) throw group_error("A<n> needs n >= 1");
        break;
      case 'B':
        d.family = Family::coxeter_b;
        d.m = 2;
        d.p = 1;
        d.n = k;
        if (k < 2) throw group_error("B<n> needs n >= 2");
        break;
      default:
        d.family = Family::coxeter_d;
        d.m = d.p = 2;
        d.n = k;
        if (k < 2) throw group_error("D<n> needs n >= 2");
        break;
    }
  } else if (std::regex_match(text, match, dihedral)) {
    int m = parse_int(match[1]);
    if (m < 2 || m > 255) throw group_error("I2(m) needs 2 <= m <= 255");
    d.family = Family::dihedral;
    d.label = m;
    d.m = d.p = m;
    d.n = 2;
  } else if (std::regex_match(text, match, general)) {
    d.family = Family::general;
    d.m = parse_int(match[1]);
    d.p = parse_int(match[2]);
    d.n = parse_int(match[3]);
    d.label = d.n;
    if (d.m < 1 || d.p < 1 || d.n < 1) throw group_error("G(m,p,n) parameters must be positive");
    if (d.m > 255) throw group_error("G(m,p,n) needs m <= 255");
    if (d.m % d.p != 0) throw group_error("G(m,p,n) needs p to divide m");
  } else {
    throw group_error("malformed group spec '" + std::string(spec) +
                      "' (expected S<n>, A<n>, B<n>, D<n>, I2(<m>) or G(<m>,<p>,<n>))");
  }
  if (d.n > kMaxDegree) throw group_error("degree n must be at most " + std::to_string(kMaxDegree));
  if (!is_two_reflection(d.m, d.p)) {
    throw group_error(d.name() + " contains reflections of order > 2");
  }
  return d;
}

WreathElement WreathElement::identity(int n) {
  WreathElement e;
  e.perm.resize(static_cast<std::size_t>(n));
  std::iota(e.perm.begin(), e.perm.end(), std::uint8_t{0});
  e.colors.assign(static_cast<std::size_t>(n), 0);
  return e;
}

WreathElement multiply(const WreathElement& a, const WreathElement& b, int m) {
  const std::size_t n = a.perm.size();
  WreathElement r;
  r.perm.resize(n);
  r.colors.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    r.perm[k] = a.perm[b.perm[k]];
    r.colors[k] = static_cast<std::uint8_t>((a.colors[b.perm[k]] + b.colors[k]) % m);
  }
  return r;
}

WreathElement inverse(const WreathElement& a, int m) {
  const std::size_t n = a.perm.size();
  WreathElement r;
  r.perm.resize(n);
  r.colors.resize(n);
  for (std::size_t k = 0; k < n; ++k) r.perm[a.perm[k]] = static_cast<std::uint8_t>(k);
  // (σ,c)^{-1} = (σ^{-1}, -c∘σ^{-1})
  for (std::size_t k = 0; k < n; ++k) {
    r.colors[k] = static_cast<std::uint8_t>((m - a.colors[r.perm[k]] % m) % m);
  }
  return r;
}

int permutation_sign(std::span<const std::uint8_t> perm) {
  std::array<bool, 256> seen{};
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

namespace {

// Calls f(length, total color) for every cycle of g.
template <class F>
void for_each_cycle(const WreathElement& g, F&& f) {
  std::array<bool, 256> seen{};
  for (std::size_t i = 0; i < g.perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    int total = 0;
    for (std::size_t j = i; !seen[j]; j = g.perm[j]) {
      seen[j] = true;
      ++len;
      total += g.colors[j];
    }
    f(len, total);
  }
}

}  // namespace

int fixed_dimension(const WreathElement& g, int m) {
  int fixed = 0;
  for_each_cycle(g, [&](int, int total) {
    if (total % m == 0) ++fixed;
  });
  return fixed;
}

int element_order(const WreathElement& g, int m) {
  // A cycle of length L and total color t is a monomial block whose L-th
  // power is the scalar ζ^t.
  long order = 1;
  for_each_cycle(g, [&](int len, int total) {
    long scalar_order = m / std::gcd(total % m, m);
    order = std::lcm(order, static_cast<long>(len) * scalar_order);
  });
  return static_cast<int>(order);
}

std::string to_string(const WreathElement& g) {
  std::string out;
  std::array<bool, 256> seen{};
  bool colored = std::any_of(g.colors.begin(), g.colors.end(), [](auto c) { return c != 0; });
  for (std::size_t i = 0; i < g.perm.size(); ++i) {
    if (seen[i] || g.perm[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = g.perm[j]) {
      seen[j] = true;
      if (out.back() != '(') out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  if (out.empty()) out = "()";
  if (colored) {
    out += "[";
    for (std::size_t i = 0; i < g.colors.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(g.colors[i]);
    }
    out += "]";
  }
  return out;
}

WreathElement parse_element(std::string_view text, int n) {
  WreathElement g = WreathElement::identity(n);
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) || (!s.empty() && s.back() != ' ')) s += c;
  }
  auto fail = [&]() -> WreathElement { throw group_error("malformed element: " + std::string(text)); };
  std::size_t pos = 0;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  while (pos < s.size() && s[pos] == '(') {
    auto close = s.find(')', pos);
    if (close == std::string::npos) return fail();
    std::istringstream body(s.substr(pos + 1, close - pos - 1));
    std::vector<int> cycle;
    for (int x; body >> x;) {
      if (x < 1 || x > n || used[static_cast<std::size_t>(x - 1)]) return fail();
      used[static_cast<std::size_t>(x - 1)] = true;
      cycle.push_back(x - 1);
    }
    if (!body.eof()) return fail();
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      g.perm[static_cast<std::size_t>(cycle[k])] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    }
    pos = close + 1;
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  if (pos < s.size() && s[pos] == '[') {
    auto close = s.find(']', pos);
    if (close == std::string::npos || close + 1 != s.size()) return fail();
    std::string body = s.substr(pos + 1, close - pos - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::size_t i = 0;
    for (int c; in >> c; ++i) {
      if (i >= g.colors.size() || c < 0 || c > 255) return fail();
      g.colors[i] = static_cast<std::uint8_t>(c);
    }
    if (!in.eof() || i != g.colors.size()) return fail();
    pos = close + 1;
  }
  if (pos != s.size()) return fail();
  return g;
}

ReflectionGroup ReflectionGroup::build(const GroupDescriptor& descriptor, std::size_t element_cap) {
  const int n = descriptor.n;
  const int m = descriptor.m;
  const int p = descriptor.p;
  if (n < 1 || n > kMaxDegree || m < 1 || p < 1 || m % p != 0) {
    throw group_error("invalid group descriptor " + descriptor.name());
  }
  if (!is_two_reflection(m, p)) throw group_error(descriptor.name() + " contains reflections of order > 2");

  double expected = static_cast<double>(factorial(n));
  for (int i = 0; i < n; ++i) expected *= m;
  expected /= p;
  if (expected > static_cast<double>(element_cap)) {
    throw resource_error(descriptor.name() + " has order " + std::to_string(static_cast<long long>(expected)) +
                         ", above the element cap " + std::to_string(element_cap));
  }

  ReflectionGroup g;
  g.descriptor_ = descriptor;
  g.color_weights_.assign(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) {
    g.color_weights_[static_cast<std::size_t>(i)] =
        g.color_weights_[static_cast<std::size_t>(i + 1)] * static_cast<std::uint64_t>(m);
  }
  const std::uint64_t color_space = g.color_weights_[0] * static_cast<std::uint64_t>(m);
  const std::uint64_t code_space = factorial(n) * color_space;

  std::vector<std::uint8_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  std::vector<std::uint8_t> colors(static_cast<std::size_t>(n));
  do {
    std::fill(colors.begin(), colors.end(), 0);
    for (std::uint64_t c = 0; c < color_space; ++c) {
      std::uint64_t rest = c;
      int total = 0;
      for (int i = n - 1; i >= 0; --i) {
        colors[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rest % static_cast<std::uint64_t>(m));
        total += colors[static_cast<std::size_t>(i)];
        rest /= static_cast<std::uint64_t>(m);
      }
      if (total % p != 0) continue;
      g.perms_.insert(g.perms_.end(), perm.begin(), perm.end());
      g.colors_.insert(g.colors_.end(), colors.begin(), colors.end());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::size_t order = g.perms_.size() / static_cast<std::size_t>(n);
  if (code_space <= (std::uint64_t{1} << 26)) {
    g.dense_index_.assign(code_space, -1);
  }
  for (std::size_t i = 0; i < order; ++i) {
    std::uint64_t code = g.code_of(&g.perms_[i * n], &g.colors_[i * n]);
    if (!g.dense_index_.empty()) {
      g.dense_index_[code] = static_cast<int>(i);
    } else {
      g.sparse_index_.emplace(code, static_cast<int>(i));
    }
  }

  g.inverses_.resize(order);
  g.signs_.resize(order);
  g.orders_.resize(order);
  g.codims_.resize(order);
  g.is_reflection_.assign(order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    WreathElement e = g.element(static_cast<int>(i));
    g.inverses_[i] = g.index_of(infhecke::inverse(e, m));
    int color_sum = 0;
    for (auto c : e.colors) color_sum += c;
    color_sum %= m;
    // Color sums lie in {0, m/2} for admissible groups.
    int flip = (p == m || color_sum == 0) ? 0 : 1;
    g.signs_[i] = permutation_sign(e.perm) * (flip ? -1 : 1);
    g.orders_[i] = infhecke::element_order(e, m);
    g.codims_[i] = n - fixed_dimension(e, m);
    if (g.codims_[i] == 1) {
      if (g.orders_[i] != 2) throw group_error(descriptor.name() + " contains reflections of order > 2");
      g.is_reflection_[i] = 1;
      g.reflections_.push_back(static_cast<int>(i));
    }
  }
  return g;
}

std::uint64_t ReflectionGroup::code_of(const std::uint8_t* perm, const std::uint8_t* colors) const {
  const int n = descriptor_.n;
  std::uint64_t code = permutation_rank(perm, n);
  std::uint64_t color_code = 0;
  for (int i = 0; i < n; ++i) color_code += colors[i] * color_weights_[static_cast<std::size_t>(i)];
  return code * color_weights_[0] * static_cast<std::uint64_t>(descriptor_.m) + color_code;
}

int ReflectionGroup::lookup(std::uint64_t code) const {
  if (!dense_index_.empty()) return code < dense_index_.size() ? dense_index_[code] : -1;
  auto it = sparse_index_.find(code);
  return it == sparse_index_.end() ? -1 : it->second;
}

WreathElement ReflectionGroup::element(int i) const {
  const auto n = static_cast<std::size_t>(descriptor_.n);
  const auto off = static_cast<std::size_t>(i) * n;
  WreathElement e;
  e.perm.assign(perms_.begin() + static_cast<std::ptrdiff_t>(off),
                perms_.begin() + static_cast<std::ptrdiff_t>(off + n));
  e.colors.assign(colors_.begin() + static_cast<std::ptrdiff_t>(off),
                  colors_.begin() + static_cast<std::ptrdiff_t>(off + n));
  return e;
}

int ReflectionGroup::index_of(const WreathElement& g) const {
  const auto n = static_cast<std::size_t>(descriptor_.n);
  if (g.perm.size() != n || g.colors.size() != n) return -1;
  std::array<bool, 256> seen{};
  int total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (g.perm[k] >= n || seen[g.perm[k]] || g.colors[k] >= descriptor_.m) return -1;
    seen[g.perm[k]] = true;
    total += g.colors[k];
  }
  if (total % descriptor_.p != 0) return -1;
  return lookup(code_of(g.perm.data(), g.colors.data()));
}

int ReflectionGroup::multiply(int i, int j) const {
  const int n = descriptor_.n;
  const int m = descriptor_.m;
  const std::uint8_t* a = &perms_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)];
  const std::uint8_t* ac = &colors_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)];
  const std::uint8_t* b = &perms_[static_cast<std::size_t>(j) * static_cast<std::size_t>(n)];
  const std::uint8_t* bc = &colors_[static_cast<std::size_t>(j) * static_cast<std::size_t>(n)];
  std::array<std::uint8_t, kMaxDegree> perm{};
  std::array<std::uint8_t, kMaxDegree> colors{};
  for (int k = 0; k < n; ++k) {
    perm[static_cast<std::size_t>(k)] = a[b[k]];
    colors[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((ac[b[k]] + bc[k]) % m);
  }
  return lookup(code_of(perm.data(), colors.data()));
}

Subgroup make_subgroup(const ReflectionGroup& group, std::vector<int> elements) {
  Subgroup s;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  s.elements = std::move(elements);
  s.position.assign(group.order(), -1);
  for (std::size_t k = 0; k < s.elements.size(); ++k) {
    s.position[static_cast<std::size_t>(s.elements[k])] = static_cast<int>(k);
  }
  return s;
}

Subgroup rotation_subgroup(const ReflectionGroup& group) {
  std::vector<int> elements;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (group.sign(static_cast<int>(i)) == 1) elements.push_back(static_cast<int>(i));
  }
  return make_subgroup(group, std::move(elements));
}

std::vector<std::vector<int>> conjugacy_partition(const ReflectionGroup& group, std::span<const int> subset,
                                                  std::span<const int> conjugators) {
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<int> label(group.order(), -1);
  std::vector<std::vector<int>> classes;
  for (int x : sorted) {
    if (label[static_cast<std::size_t>(x)] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    classes.emplace_back();
    std::vector<int> frontier{x};
    label[static_cast<std::size_t>(x)] = id;
    while (!frontier.empty()) {
      int y = frontier.back();
      frontier.pop_back();
      for (int c : conjugators) {
        int z = group.conjugate(c, y);
        if (label[static_cast<std::size_t>(z)] < 0) {
          label[static_cast<std::size_t>(z)] = id;
          frontier.push_back(z);
        }
      }
    }
  }
  for (int x : sorted) classes[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])].push_back(x);
  return classes;
}

std::vector<std::vector<int>> reflection_classes(const ReflectionGroup& group) {
  // The reflections generate the group, so they suffice as conjugators.
  return conjugacy_partition(group, group.reflections(), group.reflections());
}

std::vector<int> generated_subgroup(const ReflectionGroup& group, std::span<const int> generators) {
  std::vector<std::uint8_t> in(group.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    int x = members[head];
    for (int g : generators) {
      int y = group.multiply(x, g);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> reflection_lengths(const ReflectionGroup& group) {
  std::vector<int> dist(group.order(), -1);
  std::queue<int> queue;
  dist[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop();
    for (int s : group.reflections()) {
      int y = group.multiply(x, s);
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

int reflection_length_diameter(const ReflectionGroup& group) {
  auto dist = reflection_lengths(group);
  if (std::find(dist.begin(), dist.end(), -1) != dist.end()) {
    throw group_error(group.descriptor().name() + " is not generated by its reflections");
  }
  return *std::max_element(dist.begin(), dist.end());
}

std::vector<int> simple_reflections(const ReflectionGroup& group) {
  const auto& d = group.descriptor();
  const int n = d.n;
  auto transposition = [&](int i, int j, std::uint8_t ci, std::uint8_t cj) {
    WreathElement e = WreathElement::identity(n);
    std::swap(e.perm[static_cast<std::size_t>(i)], e.perm[static_cast<std::size_t>(j)]);
    e.colors[static_cast<std::size_t>(i)] = ci;
    e.colors[static_cast<std::size_t>(j)] = cj;
    return group.index_of(e);
  };
  std::vector<int> out;
  if (n == 2 && d.p == d.m) {
    out.push_back(transposition(0, 1, 0, 0));
    if (d.m > 1) out.push_back(transposition(0, 1, 1, static_cast<std::uint8_t>(d.m - 1)));
    return out;
  }
  for (int i = 0; i + 1 < n; ++i) out.push_back(transposition(i, i + 1, 0, 0));
  if (d.m == 1) return out;
  if (d.m == 2 && d.p == 1) {
    WreathElement flip = WreathElement::identity(n);
    flip.colors[static_cast<std::size_t>(n - 1)] = 1;
    out.push_back(group.index_of(flip));
    return out;
  }
  if (d.m == 2 && d.p == 2 && n >= 3) {
    out.push_back(transposition(n - 2, n - 1, 1, 1));
    return out;
  }
  throw group_error(d.name() + " has no standard Coxeter generating set");
}

std::vector<int> noncommuting_products(const ReflectionGroup& group, std::span<const int> reflections) {
  std::vector<std::uint8_t> seen(group.order(), 0);
  for (int s : reflections) {
    for (int u : reflections) {
      int su = group.multiply(s, u);
      if (su != group.multiply(u, s)) seen[static_cast<std::size_t>(su)] = 1;
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> noncommuting_products(const ReflectionGroup& group) {
  return noncommuting_products(group, group.reflections());
}

nlohmann::json describe(const ReflectionGroup& group) {
  const auto& d = group.descriptor();
  return {
      {"group", d.name()},
      {"family", d.family_name()},
      {"params", {{"m", d.m}, {"p", d.p}, {"n", d.n}}},
      {"order", group.order()},
      {"reflections", group.reflections().size()},
      {"reflection_classes", reflection_classes(group).size()},
  };
}

}  // namespace infhecke
