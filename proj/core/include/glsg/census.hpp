#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "glsg/cayley_table.hpp"

namespace glsg {

inline constexpr int kDefaultMaxEnumerationOrder = 5;
inline constexpr int kMaxEnumerationOrder = 6;

struct CensusRow {
  int order = 0;
  long long labeled_total = 0;    // associative tables on labeled elements
  long long canonical_total = 0;  // classes up to isomorphism + anti-isomorphism
  long long regular_count = 0;    // classes whose graph is regular
  double percentage = 0.0;        // regular_count / canonical_total * 100
};

struct CensusProgress {
  int order = 0;
  long long subtrees_done = 0;
  long long subtrees_total = 0;
  long long labeled_so_far = 0;
  long long classes_so_far = 0;
};

struct CensusOptions {
  bool allow_order_6 = false;
  int threads = 0;                   // 0 = hardware concurrency
  std::string checkpoint_path;       // empty = no checkpointing
  int checkpoint_interval = 0;       // subtrees between saves; 0 = every ~5s
  // Called after every completed subtree and, inside large subtrees, every
  // 1024 visited tables. Return false to stop: the checkpoint is saved
  // (when a path is set, covering completed subtrees only) and census
  // raises Cancelled.
  std::function<bool(const CensusProgress&)> progress;
};

/// Visits every associative n x n table exactly once, in lexicographic
/// order, by depth-first cell assignment with incremental associativity
/// pruning: after each cell only the triples whose four lookups are all
/// assigned get checked, so a violation backtracks at the earliest possible
/// cell. Returns the number of tables visited. visit may be empty.
long long enumerate_labeled(int n, const std::function<void(const CayleyTable&)>& visit,
                            bool allow_order_6 = false);

/// Enumerates order n, deduplicates by canonical form (isomorphism and
/// anti-isomorphism), and counts the classes whose graph is regular.
///
/// The search tree splits at the first table row; subtrees are independent
/// and may run on separate threads, merging into shared sets under a lock.
/// Results are deterministic regardless of thread count.
///
/// Checkpoint file (written atomically while running, resumed when the path
/// exists): byte 0 version (1), byte 1 order, then little-endian packed
/// state -- u64 labeled total, u32 bitmap byte count + completed-subtree
/// bitmap (bit per row-1 prefix id, mixed-radix row encoding), u32 count +
/// packed canonical tables (two cells per byte, cell values minus one), u32
/// count + packed regular tables each followed by a u16 constant degree.
CensusRow census(int n, const CensusOptions& options = {});

/// One CensusRow per order 1..max_order.
std::vector<CensusRow> census_report(int max_order, const CensusOptions& options = {});

struct RegularWitness {
  CayleyTable table;  // canonical form
  int degree = 0;     // the constant graph degree
};

/// Canonical tables of every regular class of order n, in lexicographic
/// table order.
std::vector<RegularWitness> regular_witnesses(int n, const CensusOptions& options = {});

struct CensusResult {
  CensusRow row;
  std::vector<RegularWitness> witnesses;
};

/// Counts and witnesses from a single enumeration pass.
CensusResult census_with_witnesses(int n, const CensusOptions& options = {});

/// Seeded reservoir sample of `samples` labeled tables of order n; each is
/// relabeled by a random permutation and must keep its canonical form.
/// Returns the number of failures (0 = pass).
long long canonical_spot_check(int n, int samples, std::uint64_t seed,
                               bool allow_order_6 = false);

std::string format_percentage(double percentage);
std::string format_census_text(const std::vector<CensusRow>& rows);
std::string format_census_csv(const std::vector<CensusRow>& rows);

}  // namespace glsg
