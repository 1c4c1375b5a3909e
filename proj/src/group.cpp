#include "torelli/group.hpp"

#include <algorithm>

#include "torelli/error.hpp"

namespace torelli {

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& x : r) x = -x;
  return r;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + lo, r.begin() + hi);
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

SurfaceGroup::SurfaceGroup(int rank, Word relator)
    : rank_(rank), relator_(std::move(relator)) {
  inv_relator_ = inverse(relator_);
  const int n = static_cast<int>(relator_.size());
  require(n >= 3 && cyclic_reduce(relator_).size() == relator_.size(),
          "relator must be cyclically reduced");
  table_.assign(4 * rank_ * rank_, Slot{});
  for (int f = 0; f < 2; ++f) {
    const Word& r = form(f);
    for (int j = 0; j < n; ++j) {
      Letter x = r[j], y = r[(j + 1) % n];
      require(x != 0 && std::abs(x) <= rank_, "relator letter out of range");
      Slot& s = table_[index(x) * 2 * rank_ + index(y)];
      // A repeated two-letter subword would be a piece of length 2.
      require(s.form < 0, "relator has a piece of length >= 2");
      s = Slot{f, j};
    }
  }
}

SurfaceGroup::Slot SurfaceGroup::lookup(Letter x, Letter y) const {
  return table_[index(x) * 2 * rank_ + index(y)];
}

Word SurfaceGroup::reduce(const Word& input) const {
  const int n = static_cast<int>(relator_.size());
  Word w = free_reduce(input);
  bool changed = true;
  while (changed) {
    changed = false;
    const int len = static_cast<int>(w.size());
    for (int i = 0; i + 1 < len; ++i) {
      Slot s = lookup(w[i], w[i + 1]);
      if (s.form < 0) continue;
      const Word& r = form(s.form);
      int m = 2;
      while (i + m < len && m < n && w[i + m] == r[(s.pos + m) % n]) ++m;
      if (2 * m <= n) continue;
      Word repl;
      for (int k = n - 1; k >= m; --k) repl.push_back(-r[(s.pos + k) % n]);
      Word next(w.begin(), w.begin() + i);
      next.insert(next.end(), repl.begin(), repl.end());
      next.insert(next.end(), w.begin() + i + m, w.end());
      w = free_reduce(next);
      changed = true;
      break;
    }
  }
  return w;
}

Word SurfaceGroup::reduce_cyclic(const Word& input) const {
  const int n = static_cast<int>(relator_.size());
  Word w = cyclic_reduce(input);
  bool changed = true;
  while (changed && !w.empty()) {
    changed = false;
    const int len = static_cast<int>(w.size());
    if (len < 2) break;
    for (int i = 0; i < len; ++i) {
      Slot s = lookup(w[i], w[(i + 1) % len]);
      if (s.form < 0) continue;
      const Word& r = form(s.form);
      int m = 2;
      while (m < len && m < n && w[(i + m) % len] == r[(s.pos + m) % n]) ++m;
      if (2 * m <= n) continue;
      Word next;
      for (int k = n - 1; k >= m; --k) next.push_back(-r[(s.pos + k) % n]);
      for (int k = m; k < len; ++k) next.push_back(w[(i + k) % len]);
      w = cyclic_reduce(next);
      changed = true;
      break;
    }
  }
  return w;
}

}  // namespace torelli
