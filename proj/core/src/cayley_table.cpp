#include "glsg/cayley_table.hpp"

#include <algorithm>
#include <numeric>

namespace glsg {

CayleyTable::CayleyTable(int order, std::vector<int> entries)
    : n_(order), entries_(std::move(entries)) {
  if (n_ < 1) {
    throw NotSquareError("order=" + std::to_string(n_));
  }
  if (entries_.size() != static_cast<std::size_t>(n_) * n_) {
    throw NotSquareError("entries=" + std::to_string(entries_.size()) +
                         " expected=" + std::to_string(static_cast<long long>(n_) * n_));
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      int v = entries_[i * n_ + j];
      if (v < 1 || v > n_) {
        throw EntryOutOfRangeError(i + 1, j + 1, v);
      }
    }
  }
}

bool CayleyTable::operator<(const CayleyTable& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  return entries_ < other.entries_;
}

bool find_associativity_witness(int n, const std::vector<int>& entries, int& wi, int& wj,
                                int& wk) {
  auto at = [&](int a, int b) { return entries[(a - 1) * n + (b - 1)]; };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int ij = at(i, j);
      for (int k = 1; k <= n; ++k) {
        if (at(ij, k) != at(i, at(j, k))) {
          wi = i;
          wj = j;
          wk = k;
          return true;
        }
      }
    }
  }
  return false;
}

CayleyTable validate_table(const std::vector<std::vector<int>>& raw) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) {
    throw NotSquareError("rows=0");
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw[i].size()) != n) {
      throw NotSquareError(n, i + 1, static_cast<int>(raw[i].size()));
    }
  }
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int v = raw[i][j];
      if (v < 1 || v > n) {
        throw EntryOutOfRangeError(i + 1, j + 1, v);
      }
      flat[i * n + j] = v;
    }
  }
  int wi, wj, wk;
  if (find_associativity_witness(n, flat, wi, wj, wk)) {
    throw NotAssociativeError(wi, wj, wk);
  }
  return CayleyTable(n, std::move(flat));
}

CayleyTable transpose(const CayleyTable& t) {
  const int n = t.order();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[i * n + j] = t.entries()[j * n + i];
    }
  }
  return CayleyTable(n, std::move(out));
}

CayleyTable relabel(const CayleyTable& t, const std::vector<int>& perm) {
  const int n = t.order();
  if (static_cast<int>(perm.size()) != n) {
    throw ParseError("relabel: perm size=" + std::to_string(perm.size()) +
                     " order=" + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v - 1]) {
      throw ParseError("relabel: not a permutation of 1.." + std::to_string(n));
    }
    seen[v - 1] = true;
  }
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      out[(perm[i - 1] - 1) * n + (perm[j - 1] - 1)] = perm[t.product(i, j) - 1];
    }
  }
  return CayleyTable(n, std::move(out));
}

Canonicalizer::Canonicalizer(int n)
    : n_(n),
      new_to_old_(n),
      old_to_new_(n),
      trans_(static_cast<std::size_t>(n) * n),
      cand_(static_cast<std::size_t>(n) * n) {}

// Builds the relabeled grid cell by cell in row-major order, comparing
// against the incumbent as it goes. Returns true (with cand_ complete)
// only when the candidate is strictly smaller; ties and losses abort at
// the first deciding cell.
bool Canonicalizer::try_candidate(const std::vector<int>& src, std::vector<int>& best) {
  const int n = n_;
  bool strictly_less = best.empty();
  int idx = 0;
  for (int r = 0; r < n; ++r) {
    const int* src_row = src.data() + new_to_old_[r] * n;
    for (int c = 0; c < n; ++c, ++idx) {
      const int val = old_to_new_[src_row[new_to_old_[c]] - 1] + 1;
      if (!strictly_less) {
        const int incumbent = best[idx];
        if (val > incumbent) return false;
        if (val < incumbent) strictly_less = true;
      }
      cand_[idx] = val;
    }
  }
  return strictly_less;
}

void Canonicalizer::run(const std::vector<int>& entries, std::vector<int>& out) {
  const int n = n_;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      trans_[i * n + j] = entries[j * n + i];
    }
  }
  std::vector<int> best;
  for (int first = 0; first < n; ++first) {
    // cell (1,1) of the candidate is 1 exactly when the element mapped to
    // label 1 is idempotent (the diagonal is shared with the transpose); a
    // finite semigroup always has an idempotent, so once the incumbent
    // starts with 1 every non-idempotent choice loses at the first cell
    // and its whole (n-1)! block can be dropped
    if (!best.empty() && best[0] == 1 && entries[first * n + first] != first + 1) {
      continue;
    }
    new_to_old_[0] = first;
    int fill = 1;
    for (int rest = 0; rest < n; ++rest) {
      if (rest != first) new_to_old_[fill++] = rest;
    }
    do {
      for (int r = 0; r < n; ++r) old_to_new_[new_to_old_[r]] = r;
      if (try_candidate(entries, best)) best = cand_;
      if (try_candidate(trans_, best)) best = cand_;
    } while (std::next_permutation(new_to_old_.begin() + 1, new_to_old_.end()));
  }
  out = std::move(best);
}

CayleyTable canonical_form(const CayleyTable& t) {
  Canonicalizer canon(t.order());
  std::vector<int> out;
  canon.run(t.entries(), out);
  return CayleyTable(t.order(), std::move(out));
}

bool is_cancellative(const CayleyTable& t) {
  const int n = t.order();
  std::vector<bool> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < n; ++j) {
      int v = t.entries()[i * n + j];
      if (seen[v - 1]) return false;
      seen[v - 1] = true;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (int i = 0; i < n; ++i) {
      int v = t.entries()[i * n + j];
      if (seen[v - 1]) return false;
      seen[v - 1] = true;
    }
  }
  return true;
}

}  // namespace glsg
