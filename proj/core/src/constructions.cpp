#include "galcluster/constructions.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "galcluster/errors.hpp"
#include "galcluster/group_ops.hpp"

namespace galcluster {

namespace {

using std::uint64_t;

[[noreturn]] void reject(const std::string& what) { throw DomainError(what); }

uint64_t factorial(unsigned n) {
  uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

uint64_t pow_checked(uint64_t base, unsigned exp, uint64_t ceiling) {
  uint64_t v = 1;
  for (unsigned i = 0; i < exp; ++i) {
    v *= base;
    if (v > ceiling) return ceiling + 1;
  }
  return v;
}

void require_cap(uint64_t order, const Limits& limits, const char* what) {
  if (order > limits.element_cap) {
    throw CapExceeded(std::string(what) + " has order " + std::to_string(order) +
                      ", above the element cap of " + std::to_string(limits.element_cap));
  }
}

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod) {
  uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

uint64_t mod_inverse(uint64_t a, uint64_t p) { return mod_pow(a, p - 2, p); }

// Cycle from a list of 1-based points.
Permutation cycle(std::size_t degree, std::initializer_list<Point> points) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::vector<Point> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i) images[pts[i] - 1] = pts[(i + 1) % pts.size()] - 1;
  return Permutation::from_images(std::move(images));
}

// The cycle (first first+1 ... last), 1-based.
Permutation long_cycle(std::size_t degree, Point first, Point last) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (Point x = first; x < last; ++x) images[x - 1] = x;
  images[last - 1] = first - 1;
  return Permutation::from_images(std::move(images));
}

// Generators of Alt({first..last}) (1-based): the 3-cycles (first first+1 j).
std::vector<Permutation> alternating_generators(std::size_t degree, Point first, Point last) {
  std::vector<Permutation> gens;
  for (Point j = first + 2; j <= last; ++j) gens.push_back(cycle(degree, {first, first + 1, j}));
  return gens;
}

PermGroup symmetric_group(unsigned n, const Limits& limits) {
  return PermGroup(n, {cycle(n, {1, 2}), long_cycle(n, 1, n)}, limits);
}

// --- 2x2 matrices over F_p ------------------------------------------------

struct Mat2 {
  uint64_t a, b, c, d;
};

// Moebius action on P^1(F_p): x in F_p is point x, infinity is point p.
Permutation projective_action(const Mat2& m, unsigned p) {
  std::vector<Point> images(p + 1);
  for (uint64_t x = 0; x < p; ++x) {
    const uint64_t num = (m.a * x + m.b) % p;
    const uint64_t den = (m.c * x + m.d) % p;
    images[x] = den == 0 ? p : static_cast<Point>(num * mod_inverse(den, p) % p);
  }
  images[p] = m.c % p == 0 ? p : static_cast<Point>(m.a * mod_inverse(m.c, p) % p);
  return Permutation::from_images(std::move(images));
}

// Linear action on the nonzero column vectors (x, y), point x*p + y - 1.
Permutation vector_action(const Mat2& m, unsigned p) {
  const std::size_t degree = static_cast<std::size_t>(p) * p - 1;
  std::vector<Point> images(degree);
  for (uint64_t x = 0; x < p; ++x) {
    for (uint64_t y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      const uint64_t nx = (m.a * x + m.b * y) % p;
      const uint64_t ny = (m.c * x + m.d * y) % p;
      images[x * p + y - 1] = static_cast<Point>(nx * p + ny - 1);
    }
  }
  return Permutation::from_images(std::move(images));
}

Mat2 diagonal(uint64_t c, unsigned p) { return {c % p, 0, 0, mod_inverse(c % p, p)}; }

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

unsigned smallest_primitive_root(unsigned p) {
  if (!is_prime(p)) reject(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  std::vector<uint64_t> prime_factors;
  uint64_t m = p - 1;
  for (uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  for (unsigned g = 2; g < p; ++g) {
    bool generates = true;
    for (uint64_t q : prime_factors) {
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  reject("no primitive root modulo " + std::to_string(p));
}

// ---------------------------------------------------------------------------
// Validation

namespace {

struct Validator {
  void operator()(const family::Semidirect& f) const {
    if (f.r < 2) reject("semidirect: r >= 2 required (r = 1 is the sn_tuple family)");
    if (f.s < 2) reject("semidirect: s >= 2 required");
  }
  void operator()(const family::SnTuple& f) const {
    if (f.n <= 2) reject("sn_tuple: n > 2 required");
    if (f.k < 1 || f.k > f.n - 2) reject("sn_tuple: 1 <= k <= n-2 required");
  }
  void operator()(const family::AltProduct& f) const {
    if (f.n <= 2) reject("alt_product: n > 2 required");
    if (f.k < 1 || f.k > f.n - 1) reject("alt_product: 1 <= k <= n-1 required");
  }
  void operator()(const family::Dihedral4&) const {}
  void operator()(const family::Psl2Max& f) const {
    if (!is_prime(f.p) || f.p < 5) reject("psl2_max: p must be a prime >= 5");
  }
  void operator()(const family::Psl2BorelImage& f) const {
    if (!is_prime(f.p) || f.p < 5) reject("psl2_borel_image: p must be a prime >= 5");
    if (f.r < 3) reject("psl2_borel_image: r >= 3 required");
    if ((f.p - 1) % (2 * f.r) != 0) reject("psl2_borel_image: 2r must divide p-1");
  }
  void operator()(const family::Borel& f) const {
    if (!is_prime(f.p) || f.p < 3) reject("borel: p must be an odd prime");
    if (f.r < 1 || (f.p - 1) % f.r != 0) reject("borel: r must divide p-1");
    if (f.p - 1 <= 2 * f.r) reject("borel: p-1 > 2r required");
  }
  void operator()(const family::CyclicGalois& f) const {
    if (f.n < 2) reject("cyclic_galois: n >= 2 required");
  }
  void operator()(const family::AnSquare& f) const {
    if (f.n < 5) reject("an_square: n >= 5 required (A_n must be simple)");
  }
};

}  // namespace

void validate(const FamilySpec& spec) { std::visit(Validator{}, spec); }

// ---------------------------------------------------------------------------
// Builders

ExtensionModel build_semidirect(unsigned r, unsigned s, Limits limits) {
  validate(family::Semidirect{r, s});
  require_cap(pow_checked(r, s, limits.element_cap) * s, limits, "(Z/r)^s x| Z/s");

  // ((a), b) sends (i, x) to (i - b, x + a_{i-b}); point (i, x) is i*r + x.
  // This is a left action for the law (a, b)(c, d) = (a + b.c, b + d) with
  // (b.c)_i = c_{i+b}.
  const std::size_t degree = static_cast<std::size_t>(r) * s;
  auto translation = [&](unsigned j) {
    std::vector<Point> images(degree);
    for (std::size_t p = 0; p < degree; ++p) images[p] = static_cast<Point>(p);
    for (unsigned x = 0; x < r; ++x) images[j * r + x] = j * r + (x + 1) % r;
    return Permutation::from_images(std::move(images));
  };
  std::vector<Point> shift(degree);
  for (unsigned i = 0; i < s; ++i) {
    for (unsigned x = 0; x < r; ++x) shift[i * r + x] = ((i + s - 1) % s) * r + x;
  }

  PermGroup g(degree, {translation(0), Permutation::from_images(std::move(shift))}, limits);
  std::vector<Permutation> h_gens;
  for (unsigned j = 0; j + 1 < s; ++j) h_gens.push_back(translation(j));
  PermGroup h(degree, std::move(h_gens), limits);

  const CosetAction action(SubgroupRel(g, h));
  return ExtensionModel(action.image(), action.image_of(h));
}

ExtensionModel build_sn_tuple(unsigned n, unsigned k, Limits limits) {
  validate(family::SnTuple{n, k});
  require_cap(factorial(n), limits, "S_n");
  PermGroup h(n, {cycle(n, {k + 1, k + 2}), long_cycle(n, k + 1, n)}, limits);
  return ExtensionModel(symmetric_group(n, limits), std::move(h));
}

ExtensionModel build_alt_product(unsigned n, unsigned k, Limits limits) {
  validate(family::AltProduct{n, k});
  require_cap(factorial(n), limits, "S_n");
  auto gens = alternating_generators(n, 1, k);
  for (auto& x : alternating_generators(n, k + 1, n)) gens.push_back(std::move(x));
  return ExtensionModel(symmetric_group(n, limits), PermGroup(n, std::move(gens), limits));
}

ExtensionModel build_dihedral4(Limits limits) {
  PermGroup g(4, {cycle(4, {1, 2, 3, 4}), cycle(4, {1, 3})}, limits);
  return ExtensionModel(g, point_stabilizer(g, 0));
}

ExtensionModel build_psl2_max(unsigned p, Limits limits) {
  validate(family::Psl2Max{p});
  require_cap(uint64_t{p} * (p - 1) * (p + 1) / 2, limits, "PSL_2(F_p)");
  const Permutation t = projective_action({1, 1, 0, 1}, p);
  const Permutation w = projective_action({0, p - 1, 1, 0}, p);
  return ExtensionModel(PermGroup(p + 1, {t, w}, limits), PermGroup(p + 1, {t}, limits));
}

ExtensionModel build_psl2_borel_image(unsigned p, unsigned r, Limits limits) {
  validate(family::Psl2BorelImage{p, r});
  require_cap(uint64_t{p} * (p - 1) * (p + 1) / 2, limits, "PSL_2(F_p)");
  const unsigned k = (p - 1) / r;
  const uint64_t c = mod_pow(smallest_primitive_root(p), (p - 1) / k, p);
  const Permutation t = projective_action({1, 1, 0, 1}, p);
  const Permutation w = projective_action({0, p - 1, 1, 0}, p);
  const Permutation torus = projective_action(diagonal(c, p), p);
  return ExtensionModel(PermGroup(p + 1, {t, w}, limits), PermGroup(p + 1, {t, torus}, limits));
}

ExtensionModel build_borel(unsigned p, unsigned r, Limits limits) {
  validate(family::Borel{p, r});
  require_cap(uint64_t{p} * (p - 1), limits, "B_2(F_p)");
  const unsigned g = smallest_primitive_root(p);
  const uint64_t c = mod_pow(g, r, p);
  const Permutation unipotent = vector_action({1, 1, 0, 1}, p);
  const Permutation torus = vector_action(diagonal(g, p), p);
  const std::size_t degree = static_cast<std::size_t>(p) * p - 1;
  return ExtensionModel(PermGroup(degree, {unipotent, torus}, limits),
                        PermGroup(degree, {vector_action(diagonal(c, p), p)}, limits));
}

ExtensionModel build_cyclic_galois(unsigned n, Limits limits) {
  validate(family::CyclicGalois{n});
  require_cap(n, limits, "Z/n");
  return ExtensionModel(PermGroup(n, {long_cycle(n, 1, n)}, limits), PermGroup::trivial(n, limits));
}

ExtensionModel build_an_square(unsigned n, Limits limits) {
  validate(family::AnSquare{n});
  const uint64_t half = factorial(n) / 2;
  require_cap(half * half, limits, "A_n x A_n");
  PermGroup an(n, alternating_generators(n, 1, n), limits);
  PermGroup stab(n, alternating_generators(n, 2, n), limits);
  return ExtensionModel(direct_product(an, an), direct_product(stab, stab));
}

namespace {

struct Builder {
  Limits limits;
  ExtensionModel operator()(const family::Semidirect& f) const { return build_semidirect(f.r, f.s, limits); }
  ExtensionModel operator()(const family::SnTuple& f) const { return build_sn_tuple(f.n, f.k, limits); }
  ExtensionModel operator()(const family::AltProduct& f) const { return build_alt_product(f.n, f.k, limits); }
  ExtensionModel operator()(const family::Dihedral4&) const { return build_dihedral4(limits); }
  ExtensionModel operator()(const family::Psl2Max& f) const { return build_psl2_max(f.p, limits); }
  ExtensionModel operator()(const family::Psl2BorelImage& f) const {
    return build_psl2_borel_image(f.p, f.r, limits);
  }
  ExtensionModel operator()(const family::Borel& f) const { return build_borel(f.p, f.r, limits); }
  ExtensionModel operator()(const family::CyclicGalois& f) const { return build_cyclic_galois(f.n, limits); }
  ExtensionModel operator()(const family::AnSquare& f) const { return build_an_square(f.n, limits); }
};

}  // namespace

ExtensionModel build(const FamilySpec& spec, Limits limits) { return std::visit(Builder{limits}, spec); }

// ---------------------------------------------------------------------------
// Family syntax

namespace {

using Params = std::map<std::string, unsigned, std::less<>>;

struct Entry {
  const char* name;
  std::vector<const char*> keys;
  FamilySpec (*make)(const Params&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"semidirect", {"r", "s"}, [](const Params& p) -> FamilySpec { return family::Semidirect{p.at("r"), p.at("s")}; }},
      {"sn_tuple", {"n", "k"}, [](const Params& p) -> FamilySpec { return family::SnTuple{p.at("n"), p.at("k")}; }},
      {"alt_product", {"n", "k"}, [](const Params& p) -> FamilySpec { return family::AltProduct{p.at("n"), p.at("k")}; }},
      {"dihedral4", {}, [](const Params&) -> FamilySpec { return family::Dihedral4{}; }},
      {"psl2_max", {"p"}, [](const Params& p) -> FamilySpec { return family::Psl2Max{p.at("p")}; }},
      {"psl2_borel_image", {"p", "r"}, [](const Params& p) -> FamilySpec { return family::Psl2BorelImage{p.at("p"), p.at("r")}; }},
      {"borel", {"p", "r"}, [](const Params& p) -> FamilySpec { return family::Borel{p.at("p"), p.at("r")}; }},
      {"cyclic_galois", {"n"}, [](const Params& p) -> FamilySpec { return family::CyclicGalois{p.at("n")}; }},
      {"an_square", {"n"}, [](const Params& p) -> FamilySpec { return family::AnSquare{p.at("n")}; }},
  };
  return entries;
}

struct Formatter {
  std::string operator()(const family::Semidirect& f) const { return "semidirect r=" + std::to_string(f.r) + " s=" + std::to_string(f.s); }
  std::string operator()(const family::SnTuple& f) const { return "sn_tuple n=" + std::to_string(f.n) + " k=" + std::to_string(f.k); }
  std::string operator()(const family::AltProduct& f) const { return "alt_product n=" + std::to_string(f.n) + " k=" + std::to_string(f.k); }
  std::string operator()(const family::Dihedral4&) const { return "dihedral4"; }
  std::string operator()(const family::Psl2Max& f) const { return "psl2_max p=" + std::to_string(f.p); }
  std::string operator()(const family::Psl2BorelImage& f) const { return "psl2_borel_image p=" + std::to_string(f.p) + " r=" + std::to_string(f.r); }
  std::string operator()(const family::Borel& f) const { return "borel p=" + std::to_string(f.p) + " r=" + std::to_string(f.r); }
  std::string operator()(const family::CyclicGalois& f) const { return "cyclic_galois n=" + std::to_string(f.n); }
  std::string operator()(const family::AnSquare& f) const { return "an_square n=" + std::to_string(f.n); }
};

}  // namespace

FamilySpec parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw ParseError("empty family description");

  std::string name = tokens.front();
  if (name.starts_with("family=")) name = name.substr(7);
  const Entry* entry = nullptr;
  for (const auto& e : registry()) {
    if (name == e.name) entry = &e;
  }
  if (entry == nullptr) throw ParseError("unknown family \"" + name + "\"");

  Params params;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got \"" + tok + "\"");
    const std::string key = tok.substr(0, eq);
    const std::string value = tok.substr(eq + 1);
    bool known = false;
    for (const char* k : entry->keys) known = known || key == k;
    if (!known) throw ParseError("family " + name + " has no parameter \"" + key + "\"");
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) {
      throw ParseError("parameter " + key + " must be a non-negative integer, got \"" + value + "\"");
    }
    if (!params.emplace(key, v).second) throw ParseError("parameter " + key + " given twice");
  }
  for (const char* k : entry->keys) {
    if (!params.contains(k)) throw ParseError("family " + name + " requires parameter " + k);
  }
  return entry->make(params);
}

std::string format_family(const FamilySpec& spec) { return std::visit(Formatter{}, spec); }

std::string family_name(const FamilySpec& spec) {
  const std::string full = format_family(spec);
  return full.substr(0, full.find(' '));
}

}  // namespace galcluster
