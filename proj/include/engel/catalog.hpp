#ifndef ENGEL_CATALOG_HPP
#define ENGEL_CATALOG_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "engel/rank.hpp"

namespace engel {

enum class RecipeKind {
  Cyclic,
  Dihedral,
  Symmetric,
  Alternating,
  ElementaryAbelian,
  DirectProduct,
  Semidirect,
  SL2,
  PSL2,
  Quaternion,
  FromFile,
};

// Automorphism of the abelian base of a semidirect product: either the
// power map x -> x^e or a matrix over F_p (elementary abelian base only).
struct BaseAction {
  enum class Kind { Power, Matrix } kind = Kind::Power;
  long long power = 1;
  std::vector<std::vector<int>> matrix;
};

struct GroupRecipe {
  RecipeKind kind = RecipeKind::Cyclic;
  int n = 0;                      // cyclic/dihedral/symmetric/alternating n,
                                  // quaternion order, sl2/psl2 prime
  int p = 0, k = 0;               // elementary abelian p^k
  std::vector<int> base_factors;  // semidirect: cyclic factor orders
  int complement_order = 0;       // semidirect
  BaseAction action;              // semidirect
  std::shared_ptr<GroupRecipe> left, right;  // direct product
  std::string path;               // from-file
  std::string label;
};

struct CatalogEntry {
  GroupRecipe recipe;
  Group group;
  std::optional<HallComplements> hall;  // per-prime Hall complements, when
                                        // the construction provides them
  std::optional<int> expected_r_star;
  std::optional<int> expected_residual_rank;
};

CatalogEntry build(const GroupRecipe& recipe, const GroupOptions& opts = {});

// Elementary abelian 3-group of rank r+1 extended by an inverting
// involution; the family realizing sink subgroups of every rank.
CatalogEntry elementary_abelian_inverted(int r, const GroupOptions& opts = {});

// SL2(p) with the diagonal element diag(z^-1, z), z of multiplicative order
// > 2, acting fixed-point-freely on the unipotent upper-triangular subgroup.
// Needs p >= 5.
struct Sl2DiagonalPair {
  Group group;
  Permutation diagonal{1};
  Subgroup unipotent;
};
Sl2DiagonalPair sl2_diagonal_pair(int p, const GroupOptions& opts = {});

// Text format: `degree: <n>`, then one `gen: <cycles>` per line; optional
// `label: <text>` and `#` comments. Points are 1-based.
Group load_group(const std::string& path, const GroupOptions& opts = {});
void save_group(const Group& G, const std::string& path);

// All built-in recipes of the default catalog, labels unique.
std::vector<GroupRecipe> default_recipes();

// Built entries with order <= max_order, sorted by (order, label).
std::vector<CatalogEntry> default_catalog(uint64_t max_order = 2000,
                                          const GroupOptions& opts = {});

// Resolves a --group argument: an existing file path, or a catalog label.
CatalogEntry entry_from_spec(const std::string& spec,
                             const GroupOptions& opts = {});

}  // namespace engel

#endif
