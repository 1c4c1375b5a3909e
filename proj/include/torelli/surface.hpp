#pragma once

#include <memory>
#include <string>
#include <vector>

#include "torelli/group.hpp"

namespace torelli {

class Hyperbolic;

// Closed oriented surface with a one-vertex triangulation.
// Half-edge h = 3 * t + s is side s of triangle t, running from corner s to corner s + 1
// (corners counterclockwise). Crossing half-edge h means leaving triangle t through side s.
class Surface {
 public:
  // Fan triangulation of the 4g-gon with side word a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1.
  // Built once per genus; later calls return the same instance.
  static std::shared_ptr<const Surface> build(int genus);

  ~Surface();
  Surface(const Surface&) = delete;
  Surface& operator=(const Surface&) = delete;

  int genus() const { return genus_; }
  int num_triangles() const { return static_cast<int>(gluing_.size()) / 3; }
  int num_half_edges() const { return static_cast<int>(gluing_.size()); }
  int num_edges() const { return static_cast<int>(lower_.size()); }

  static int triangle_of(int h) { return h / 3; }
  static int side_of(int h) { return h % 3; }
  static int half_edge(int t, int s) { return 3 * t + ((s % 3) + 3) % 3; }

  int partner(int h) const { return gluing_[h]; }
  int edge_of(int h) const { return edge_[h]; }
  // The lower-indexed half-edge of an edge fixes the edge's canonical direction.
  int lower_half(int e) const { return lower_[e]; }
  bool is_lower(int h) const { return lower_[edge_[h]] == h; }

  const std::vector<int>& gluing() const { return gluing_; }

  // Generator letter read when crossing h; 0 for edges in the dual spanning tree.
  Letter letter(int h) const { return letter_[h]; }
  const SurfaceGroup& group() const { return group_; }
  Word word_of(const std::vector<int>& half_edges) const;

  // Undirected edge ids that are dual-tree edges (not generators).
  bool is_tree_edge(int e) const { return letter_[lower_[e]] == 0; }

  const Hyperbolic& geometry() const { return *geometry_; }

  // Symplectic basis alpha_1, beta_1, ..., alpha_g, beta_g as normal coordinates,
  // and its change of basis from generator coordinates (abelianized letters).
  const std::vector<std::vector<int>>& basis_coords() const { return basis_coords_; }
  const std::vector<int>& basis_directions() const { return basis_dirs_; }
  std::vector<int> symplectic_coordinates(const std::vector<int>& generator_counts) const;
  // Algebraic intersection matrix of the generator dual loops.
  const std::vector<std::vector<int>>& generator_form() const { return gen_form_; }

  std::string hash() const { return hash_; }

 private:
  static std::shared_ptr<const Surface> construct(int genus);
  Surface() = default;
  void finish_combinatorics();
  void compute_basis();

  int genus_ = 0;
  std::vector<int> gluing_;
  std::vector<int> edge_;
  std::vector<int> lower_;
  std::vector<Letter> letter_;
  SurfaceGroup group_;
  std::unique_ptr<Hyperbolic> geometry_;
  std::vector<std::vector<int>> gen_form_;
  std::vector<std::vector<int>> to_symplectic_;  // rows: symplectic coords from generator coords
  std::vector<std::vector<int>> basis_coords_;
  std::vector<int> basis_dirs_;
  std::string hash_;
};

using SurfacePtr = std::shared_ptr<const Surface>;

// Order in which an edge path meets edges: exit half-edges, cyclic.
using EdgePath = std::vector<int>;

bool is_valid_edge_path(const Surface& s, const EdgePath& p);
EdgePath reverse_path(const Surface& s, const EdgePath& p);
// Cancels backtracks h, partner(h); cyclic version also across the seam.
EdgePath reduce_path(const Surface& s, const EdgePath& p, bool cyclic);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace torelli
