#pragma once

#include <array>
#include <map>
#include <vector>

namespace torelli {

// Letters are +-(i + 1) for generator i.
using Letter = int;
using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word concat(const Word& a, const Word& b);

// One-relator group with a cyclically reduced relator whose pieces all have length 1.
// Every word problem instance is decided by Dehn's algorithm.
class SurfaceGroup {
 public:
  SurfaceGroup() = default;
  SurfaceGroup(int rank, Word relator);

  int rank() const { return rank_; }
  const Word& relator() const { return relator_; }

  // Shortest-form reduction of a linear word; the element is unchanged.
  Word reduce(const Word& w) const;
  // Reduction of a cyclic word; the conjugacy class is unchanged.
  Word reduce_cyclic(const Word& w) const;

  bool is_identity(const Word& w) const { return reduce(w).empty(); }
  bool is_trivial_loop(const Word& w) const { return reduce_cyclic(w).empty(); }

 private:
  struct Slot {
    int form = -1;  // 0 relator, 1 inverse relator
    int pos = 0;
  };
  const Word& form(int f) const { return f == 0 ? relator_ : inv_relator_; }
  Slot lookup(Letter x, Letter y) const;
  int index(Letter x) const { return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1; }

  int rank_ = 0;
  Word relator_;
  Word inv_relator_;
  std::vector<Slot> table_;  // indexed by index(x) * 2 * rank + index(y)
};

}  // namespace torelli
