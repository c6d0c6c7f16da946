#include "engel/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace engel {

namespace {

Permutation perm_power(const Permutation& g, uint64_t e) {
  Permutation acc(g.degree());
  Permutation base = g;
  while (e) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

Group make_group(int degree, std::vector<Permutation> gens, std::string label,
                 const GroupOptions& opts, uint64_t expected_order) {
  Group G = Group::from_generators(degree, std::move(gens), std::move(label),
                                   opts);
  if (G.order() != expected_order)
    throw MathError("construction of " + G.label() + " has order " +
                    std::to_string(G.order()) + ", expected " +
                    std::to_string(expected_order));
  return G;
}

Group build_cyclic(int n, const std::string& label, const GroupOptions& opts) {
  if (n < 1) throw Error("cyclic group needs n >= 1");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return make_group(n, {Permutation(std::move(img))}, label, opts,
                    uint64_t(n));
}

Group build_dihedral(int n, const std::string& label,
                     const GroupOptions& opts) {
  if (n < 3) throw Error("dihedral group needs n >= 3");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return make_group(
      n, {Permutation(std::move(rot)), Permutation(std::move(refl))}, label,
      opts, 2 * uint64_t(n));
}

uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= uint64_t(i);
  return f;
}

Group build_symmetric(int n, const std::string& label,
                      const GroupOptions& opts) {
  if (n < 1) throw Error("symmetric group needs n >= 1");
  std::vector<Permutation> gens;
  if (n == 1) {
    gens.emplace_back(1);
  } else {
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    gens.emplace_back(std::move(t));
    if (n > 2) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
      gens.emplace_back(std::move(c));
    }
  }
  return make_group(n, std::move(gens), label, opts, factorial(n));
}

Group build_alternating(int n, const std::string& label,
                        const GroupOptions& opts) {
  if (n < 3) throw Error("alternating group needs n >= 3");
  std::vector<Permutation> gens;
  std::vector<int> three(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  gens.emplace_back(std::move(three));
  if (n > 3) {
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    } else {
      for (int i = 1; i < n; ++i) c[i] = 1 + (i % (n - 1));
    }
    gens.emplace_back(std::move(c));
  }
  return make_group(n, std::move(gens), label, opts, factorial(n) / 2);
}

Group build_elementary_abelian(int p, int k, const std::string& label,
                               const GroupOptions& opts) {
  if (!is_prime(uint64_t(p)) || k < 1)
    throw Error("elementary abelian group needs a prime p and k >= 1");
  uint64_t order = 1;
  for (int i = 0; i < k; ++i) order *= uint64_t(p);
  int degree = p * k;
  std::vector<Permutation> gens;
  for (int b = 0; b < k; ++b) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < p; ++i) img[b * p + i] = b * p + (i + 1) % p;
    gens.emplace_back(std::move(img));
  }
  return make_group(degree, std::move(gens), label, opts, order);
}

Group build_quaternion(int order, const std::string& label,
                       const GroupOptions& opts) {
  int k = exact_log(2, uint64_t(order));
  if (k < 3) throw Error("generalized quaternion group needs order 2^k, k>=3");
  int half = order / 2, q = order / 4;
  // regular action on pairs (i,j) <-> a^i b^j, index i + half*j
  std::vector<int> ga(order), gb(order);
  for (int i = 0; i < half; ++i) {
    ga[i] = (i + 1) % half;              // (i,0) a = (i+1,0)
    ga[half + i] = half + (i - 1 + half) % half;  // (i,1) a = (i-1,1)
    gb[i] = half + i;                    // (i,0) b = (i,1)
    gb[half + i] = (i + q) % half;       // (i,1) b = (i+q,0)
  }
  return make_group(
      order, {Permutation(std::move(ga)), Permutation(std::move(gb))}, label,
      opts, uint64_t(order));
}

// row vector times matrix over F_p
std::pair<int, int> vec_mat(int x, int y, const int m[2][2], int p) {
  return {(x * m[0][0] + y * m[1][0]) % p, (x * m[0][1] + y * m[1][1]) % p};
}

Permutation sl2_perm(const int m[2][2], int p) {
  int degree = p * p - 1;
  std::vector<int> img(degree);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      auto [xx, yy] = vec_mat(x, y, m, p);
      img[x * p + y - 1] = xx * p + yy - 1;
    }
  return Permutation(std::move(img));
}

Group build_sl2(int p, const std::string& label, const GroupOptions& opts) {
  if (!is_prime(uint64_t(p))) throw Error("SL2 needs a prime");
  const int u[2][2] = {{1, 1}, {0, 1}};
  const int l[2][2] = {{1, 0}, {1, 1}};
  uint64_t order = uint64_t(p) * (p - 1) * (p + 1);
  return make_group(p * p - 1, {sl2_perm(u, p), sl2_perm(l, p)}, label, opts,
                    order);
}

// projective line: t in 0..p-1 is the line through (t,1); p is (1,0)
Permutation psl2_perm(const int m[2][2], int p) {
  std::vector<int> img(p + 1);
  auto line_of = [&](int x, int y) {
    if (y % p == 0) return p;
    // x * y^-1 mod p
    int yin = 1;
    for (int t = 1; t < p; ++t)
      if ((y * t) % p == 1) {
        yin = t;
        break;
      }
    return (x * yin) % p;
  };
  for (int t = 0; t < p; ++t) {
    auto [xx, yy] = vec_mat(t, 1, m, p);
    img[t] = line_of(xx, yy);
  }
  auto [xx, yy] = vec_mat(1, 0, m, p);
  img[p] = line_of(xx, yy);
  return Permutation(std::move(img));
}

Group build_psl2(int p, const std::string& label, const GroupOptions& opts) {
  if (!is_prime(uint64_t(p))) throw Error("PSL2 needs a prime");
  const int u[2][2] = {{1, 1}, {0, 1}};
  const int l[2][2] = {{1, 0}, {1, 1}};
  uint64_t order = uint64_t(p) * (p - 1) * (p + 1) / (p == 2 ? 1 : 2);
  return make_group(p + 1, {psl2_perm(u, p), psl2_perm(l, p)}, label, opts,
                    order);
}

struct SemidirectParts {
  Group group;
  std::vector<Permutation> base_gens;  // one per cyclic factor
  Permutation complement_gen;
  HallComplements hall;  // filled when gcd(|A|, m) = 1
};

SemidirectParts build_semidirect(const std::vector<int>& factors, int m,
                                 const BaseAction& action,
                                 const std::string& label,
                                 const GroupOptions& opts) {
  if (factors.empty() || m < 1)
    throw Error("semidirect product needs base factors and complement order");
  uint64_t asize = 1;
  for (int f : factors) {
    if (f < 2) throw Error("base factor must be >= 2");
    asize *= uint64_t(f);
  }
  const int A = int(asize);
  const int degree = A + m;
  const int k = int(factors.size());

  auto coords_of = [&](int idx) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) {
      c[i] = idx % factors[i];
      idx /= factors[i];
    }
    return c;
  };
  auto index_of = [&](const std::vector<int>& c) {
    int idx = 0;
    for (int i = k; i-- > 0;) idx = idx * factors[i] + c[i];
    return idx;
  };

  auto apply_action = [&](const std::vector<int>& c) {
    std::vector<int> out(k, 0);
    if (action.kind == BaseAction::Kind::Power) {
      for (int i = 0; i < k; ++i) {
        long long e = action.power % factors[i];
        if (e < 0) e += factors[i];
        out[i] = int((e * c[i]) % factors[i]);
      }
    } else {
      if (int(action.matrix.size()) != k)
        throw Error("action matrix size does not match the base rank");
      int p = factors[0];
      for (int f : factors)
        if (f != p || !is_prime(uint64_t(p)))
          throw Error("matrix action needs an elementary abelian base");
      for (int j = 0; j < k; ++j) {
        long long s = 0;
        for (int i = 0; i < k; ++i) s += (long long)c[i] * action.matrix[i][j];
        out[j] = int(s % p);
      }
    }
    return out;
  };

  std::vector<Permutation> gens;
  std::vector<Permutation> base_gens;
  for (int i = 0; i < k; ++i) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (int a = 0; a < A; ++a) {
      auto c = coords_of(a);
      c[i] = (c[i] + 1) % factors[i];
      img[a] = index_of(c);
    }
    base_gens.emplace_back(std::move(img));
    gens.push_back(base_gens.back());
  }
  std::vector<int> bimg(degree);
  for (int a = 0; a < A; ++a) bimg[a] = index_of(apply_action(coords_of(a)));
  for (int j = 0; j < m; ++j) bimg[A + j] = A + (j + 1) % m;
  Permutation b(std::move(bimg));  // throws if the action is not a bijection

  // the action must have order dividing m
  if (!perm_power(b, uint64_t(m)).is_identity())
    throw Error("base action order does not divide the complement order");
  gens.push_back(b);

  SemidirectParts parts{
      make_group(degree, std::move(gens), label, opts, asize * uint64_t(m)),
      std::move(base_gens), b, {}};

  if (std::gcd(asize, uint64_t(m)) == 1) {
    uint64_t total = asize * uint64_t(m);
    for (int q : prime_divisors(total)) {
      std::vector<Permutation> hgens;
      for (int i = 0; i < k; ++i) {
        uint64_t e = p_part(uint64_t(factors[i]), uint64_t(q));
        Permutation g = perm_power(parts.base_gens[i], e);
        if (!g.is_identity()) hgens.push_back(std::move(g));
      }
      Permutation gb = perm_power(b, p_part(uint64_t(m), uint64_t(q)));
      if (!gb.is_identity()) hgens.push_back(std::move(gb));
      if (hgens.empty()) hgens.emplace_back(degree);
      Subgroup Hq = Subgroup::closure(parts.group, hgens);
      if (Hq.order() != total / p_part(total, uint64_t(q)))
        throw MathError("Hall complement metadata has the wrong order in " +
                        label);
      parts.hall[q] = hgens;
    }
  }
  return parts;
}

Group splice_product(const Group& L, const Group& R, const std::string& label,
                     const GroupOptions& opts) {
  int dl = L.degree(), dr = R.degree();
  std::vector<Permutation> gens;
  for (const auto& g : L.generators()) {
    std::vector<int> img(dl + dr);
    for (int i = 0; i < dl; ++i) img[i] = g[i];
    for (int i = 0; i < dr; ++i) img[dl + i] = dl + i;
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : R.generators()) {
    std::vector<int> img(dl + dr);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < dr; ++i) img[dl + i] = dl + g[i];
    gens.emplace_back(std::move(img));
  }
  return make_group(dl + dr, std::move(gens), label, opts,
                    L.order() * R.order());
}

}  // namespace

CatalogEntry build(const GroupRecipe& recipe, const GroupOptions& opts) {
  CatalogEntry e;
  e.recipe = recipe;
  const std::string& lbl = recipe.label;
  switch (recipe.kind) {
    case RecipeKind::Cyclic:
      e.group = build_cyclic(recipe.n, lbl, opts);
      break;
    case RecipeKind::Dihedral:
      e.group = build_dihedral(recipe.n, lbl, opts);
      break;
    case RecipeKind::Symmetric:
      e.group = build_symmetric(recipe.n, lbl, opts);
      break;
    case RecipeKind::Alternating:
      e.group = build_alternating(recipe.n, lbl, opts);
      break;
    case RecipeKind::ElementaryAbelian:
      e.group = build_elementary_abelian(recipe.p, recipe.k, lbl, opts);
      break;
    case RecipeKind::Quaternion:
      e.group = build_quaternion(recipe.n, lbl, opts);
      break;
    case RecipeKind::SL2:
      e.group = build_sl2(recipe.n, lbl, opts);
      break;
    case RecipeKind::PSL2:
      e.group = build_psl2(recipe.n, lbl, opts);
      break;
    case RecipeKind::Semidirect: {
      SemidirectParts parts =
          build_semidirect(recipe.base_factors, recipe.complement_order,
                           recipe.action, lbl, opts);
      e.group = parts.group;
      if (!parts.hall.empty()) e.hall = std::move(parts.hall);
      break;
    }
    case RecipeKind::DirectProduct: {
      if (!recipe.left || !recipe.right)
        throw Error("direct product needs two factors");
      CatalogEntry l = build(*recipe.left, opts);
      CatalogEntry r = build(*recipe.right, opts);
      e.group = splice_product(l.group, r.group, lbl, opts);
      break;
    }
    case RecipeKind::FromFile:
      e.group = load_group(recipe.path, opts);
      break;
  }
  return e;
}

CatalogEntry elementary_abelian_inverted(int r, const GroupOptions& opts) {
  if (r < 0) throw Error("rank parameter must be >= 0");
  GroupRecipe rec;
  rec.kind = RecipeKind::Semidirect;
  rec.base_factors.assign(size_t(r) + 1, 3);
  rec.complement_order = 2;
  rec.action.kind = BaseAction::Kind::Power;
  rec.action.power = -1;
  rec.label = "Ab" + std::to_string(r);
  CatalogEntry e = build(rec, opts);
  // the involution must invert without nontrivial fixed points
  const auto& b = e.group.generators().back();
  uint64_t asize = e.group.order() / 2;
  int fixed = 0;
  for (int i = 0; i < int(asize); ++i)
    if (b[i] == i) ++fixed;
  if (fixed != 1)
    throw MathError("inverting involution has nontrivial fixed points");
  e.expected_r_star = r + 1;
  e.expected_residual_rank = r + 1;
  return e;
}

Sl2DiagonalPair sl2_diagonal_pair(int p, const GroupOptions& opts) {
  if (!is_prime(uint64_t(p)) || p < 5)
    throw Error("the diagonal pair needs a prime p >= 5 (no unit of order > 2 "
                "below that)");
  Sl2DiagonalPair out;
  out.group = build_sl2(p, "SL2(" + std::to_string(p) + ")", opts);
  const int zeta = 2;  // smallest unit with zeta^2 != 1 once p >= 5
  int zinv = 1;
  for (int t = 1; t < p; ++t)
    if ((zeta * t) % p == 1) {
      zinv = t;
      break;
    }
  const int d[2][2] = {{zinv, 0}, {0, zeta}};
  out.diagonal = sl2_perm(d, p);
  const int u[2][2] = {{1, 1}, {0, 1}};
  out.unipotent = Subgroup::closure(out.group, {sl2_perm(u, p)});
  if (out.unipotent.order() != uint64_t(p))
    throw MathError("unipotent subgroup has the wrong order");

  const Enumeration& E = out.group.elements();
  int gi = E.index_of(out.diagonal);
  std::vector<int> comms;
  for (int t : out.unipotent.indices()) {
    int c = E.conj(t, gi);
    if (!out.unipotent.contains_index(c))
      throw MathError("diagonal element does not normalize the unipotents");
    if (t != 0 && c == t)
      throw MathError("diagonal element has a nontrivial fixed point");
    comms.push_back(E.comm(t, gi));
  }
  auto [idx, gens] = closure_of_set(E, comms);
  if (idx != out.unipotent.indices())
    throw MathError("[T,g] != T in the diagonal pair");
  return out;
}

Group load_group(const std::string& path, const GroupOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file " + path);
  int degree = -1;
  std::string label;
  std::vector<std::string> gen_texts;
  std::vector<int> gen_lines;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> Error {
    return Error(path + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    size_t s = line.find_first_not_of(" \t\r");
    if (s == std::string::npos) continue;
    if (line[s] == '#') continue;
    size_t colon = line.find(':', s);
    if (colon == std::string::npos) throw fail("expected 'key: value'");
    std::string key = line.substr(s, colon - s);
    std::string value = line.substr(colon + 1);
    size_t vs = value.find_first_not_of(" \t");
    size_t ve = value.find_last_not_of(" \t\r");
    value = vs == std::string::npos ? "" : value.substr(vs, ve - vs + 1);
    if (key == "degree") {
      if (degree >= 0) throw fail("duplicate degree line");
      try {
        degree = std::stoi(value);
      } catch (...) {
        throw fail("bad degree '" + value + "'");
      }
      if (degree < 1) throw fail("degree must be >= 1");
    } else if (key == "gen") {
      if (degree < 0) throw fail("gen before degree");
      gen_texts.push_back(value);
      gen_lines.push_back(lineno);
    } else if (key == "label") {
      label = value;
    } else {
      throw fail("unknown key '" + key + "'");
    }
  }
  lineno = 0;
  if (degree < 0) throw Error(path + ": missing degree line");
  if (gen_texts.empty()) throw Error(path + ": no generators");
  std::vector<Permutation> gens;
  for (size_t i = 0; i < gen_texts.size(); ++i) {
    try {
      gens.push_back(Permutation::from_cycles(degree, gen_texts[i]));
    } catch (const Error& e) {
      throw Error(path + ":" + std::to_string(gen_lines[i]) + ": " + e.what());
    }
  }
  if (label.empty())
    label = std::filesystem::path(path).stem().string();
  return Group::from_generators(degree, std::move(gens), std::move(label),
                                opts);
}

void save_group(const Group& G, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write group file " + path);
  if (!G.label().empty()) out << "label: " << G.label() << "\n";
  out << "degree: " << G.degree() << "\n";
  for (const auto& g : G.generators()) out << "gen: " << g.cycles() << "\n";
  if (!out) throw Error("write failed on " + path);
}

namespace {

GroupRecipe simple(RecipeKind kind, int n, std::string label) {
  GroupRecipe r;
  r.kind = kind;
  r.n = n;
  r.label = std::move(label);
  return r;
}

GroupRecipe elem(int p, int k) {
  GroupRecipe r;
  r.kind = RecipeKind::ElementaryAbelian;
  r.p = p;
  r.k = k;
  r.label = "E" + std::to_string(p) + "^" + std::to_string(k);
  return r;
}

GroupRecipe product(GroupRecipe l, GroupRecipe r) {
  GroupRecipe pr;
  pr.kind = RecipeKind::DirectProduct;
  pr.label = l.label + "x" + r.label;
  pr.left = std::make_shared<GroupRecipe>(std::move(l));
  pr.right = std::make_shared<GroupRecipe>(std::move(r));
  return pr;
}

GroupRecipe power_semi(int base, int m, long long e) {
  GroupRecipe r;
  r.kind = RecipeKind::Semidirect;
  r.base_factors = {base};
  r.complement_order = m;
  r.action.kind = BaseAction::Kind::Power;
  r.action.power = e;
  r.label = "C" + std::to_string(base) + ":C" + std::to_string(m);
  return r;
}

GroupRecipe matrix_semi(int p, int k, int m,
                        std::vector<std::vector<int>> mat) {
  GroupRecipe r;
  r.kind = RecipeKind::Semidirect;
  r.base_factors.assign(size_t(k), p);
  r.complement_order = m;
  r.action.kind = BaseAction::Kind::Matrix;
  r.action.matrix = std::move(mat);
  r.label = "E" + std::to_string(p) + "^" + std::to_string(k) + ":C" +
            std::to_string(m);
  return r;
}

GroupRecipe inverter(int r) {
  GroupRecipe rec;
  rec.kind = RecipeKind::Semidirect;
  rec.base_factors.assign(size_t(r) + 1, 3);
  rec.complement_order = 2;
  rec.action.kind = BaseAction::Kind::Power;
  rec.action.power = -1;
  rec.label = "Ab" + std::to_string(r);
  return rec;
}

}  // namespace

std::vector<GroupRecipe> default_recipes() {
  std::vector<GroupRecipe> out;
  for (int n = 1; n <= 60; ++n)
    out.push_back(simple(RecipeKind::Cyclic, n, "C" + std::to_string(n)));
  for (int n = 3; n <= 30; ++n)
    out.push_back(simple(RecipeKind::Dihedral, n, "D" + std::to_string(n)));
  for (int n = 3; n <= 6; ++n)
    out.push_back(simple(RecipeKind::Symmetric, n, "S" + std::to_string(n)));
  for (int n = 3; n <= 6; ++n)
    out.push_back(simple(RecipeKind::Alternating, n, "A" + std::to_string(n)));
  for (int p : {2, 3, 5})
    for (int k = 1; k <= 4; ++k) out.push_back(elem(p, k));
  for (int n : {8, 16, 32})
    out.push_back(simple(RecipeKind::Quaternion, n, "Q" + std::to_string(n)));
  for (int r = 0; r <= 3; ++r) out.push_back(inverter(r));
  for (int p : {5, 7, 11}) {
    out.push_back(simple(RecipeKind::SL2, p, "SL2(" + std::to_string(p) + ")"));
    out.push_back(
        simple(RecipeKind::PSL2, p, "PSL2(" + std::to_string(p) + ")"));
  }
  // direct products of small pairs
  out.push_back(product(simple(RecipeKind::Cyclic, 2, "C2"),
                        simple(RecipeKind::Cyclic, 4, "C4")));
  out.push_back(product(simple(RecipeKind::Cyclic, 2, "C2"),
                        simple(RecipeKind::Cyclic, 6, "C6")));
  out.push_back(product(simple(RecipeKind::Cyclic, 2, "C2"),
                        simple(RecipeKind::Symmetric, 3, "S3")));
  out.push_back(product(simple(RecipeKind::Cyclic, 3, "C3"),
                        simple(RecipeKind::Symmetric, 3, "S3")));
  out.push_back(product(simple(RecipeKind::Symmetric, 3, "S3"),
                        simple(RecipeKind::Symmetric, 3, "S3")));
  out.push_back(product(simple(RecipeKind::Cyclic, 2, "C2"),
                        simple(RecipeKind::Dihedral, 4, "D4")));
  out.push_back(product(simple(RecipeKind::Cyclic, 3, "C3"),
                        simple(RecipeKind::Dihedral, 4, "D4")));
  out.push_back(product(simple(RecipeKind::Cyclic, 2, "C2"),
                        simple(RecipeKind::Alternating, 4, "A4")));
  out.push_back(product(simple(RecipeKind::Cyclic, 2, "C2"),
                        simple(RecipeKind::Quaternion, 8, "Q8")));
  out.push_back(product(simple(RecipeKind::Cyclic, 5, "C5"),
                        simple(RecipeKind::Symmetric, 3, "S3")));
  // fixed semidirect products with nontrivial actions
  out.push_back(power_semi(5, 4, 2));
  out.push_back(power_semi(7, 3, 2));
  out.push_back(power_semi(7, 6, 3));
  out.push_back(power_semi(9, 3, 4));
  out.push_back(power_semi(11, 5, 3));
  out.push_back(power_semi(13, 4, 5));
  out.push_back(power_semi(15, 4, 2));
  out.push_back(matrix_semi(3, 2, 4, {{0, 1}, {2, 0}}));
  out.push_back(matrix_semi(2, 3, 7, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}));
  out.push_back(matrix_semi(5, 2, 3, {{0, 1}, {4, 4}}));
  return out;
}

std::vector<CatalogEntry> default_catalog(uint64_t max_order,
                                          const GroupOptions& opts) {
  std::vector<CatalogEntry> out;
  for (const auto& rec : default_recipes()) {
    CatalogEntry e = rec.label.rfind("Ab", 0) == 0
                         ? elementary_abelian_inverted(
                               std::stoi(rec.label.substr(2)), opts)
                         : build(rec, opts);
    if (e.group.order() <= max_order) out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) {
              uint64_t oa = a.group.order(), ob = b.group.order();
              if (oa != ob) return oa < ob;
              return a.group.label() < b.group.label();
            });
  return out;
}

CatalogEntry entry_from_spec(const std::string& spec,
                             const GroupOptions& opts) {
  if (std::filesystem::exists(spec)) {
    CatalogEntry e;
    e.recipe.kind = RecipeKind::FromFile;
    e.recipe.path = spec;
    e.group = load_group(spec, opts);
    e.recipe.label = e.group.label();
    return e;
  }
  for (const auto& rec : default_recipes()) {
    if (rec.label == spec) {
      if (spec.rfind("Ab", 0) == 0)
        return elementary_abelian_inverted(std::stoi(spec.substr(2)), opts);
      return build(rec, opts);
    }
  }
  throw Error("'" + spec +
              "' is neither an existing file nor a catalog label");
}

}  // namespace engel
