#include "glsg/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "glsg/invariants.hpp"

namespace glsg {

namespace {

// Depth-first assignment of table cells in row-major order; values 1..n,
// 0 = unassigned. Assigned cells are also indexed by value so constraint
// checks touch only the cells that can participate.
class TableSearch {
 public:
  explicit TableSearch(int n)
      : n_(n), cells_(static_cast<std::size_t>(n) * n, 0), occurrences_(n) {
    for (auto& list : occurrences_) list.reserve(static_cast<std::size_t>(n) * n);
  }

  int at(int a, int b) const { return cells_[(a - 1) * n_ + (b - 1)]; }  // 1-based

  void place(int pos, int v) {
    cells_[pos] = v;
    occurrences_[v - 1].push_back(pos);
  }

  void displace(int pos) {
    occurrences_[cells_[pos] - 1].pop_back();
    cells_[pos] = 0;
  }

  // Checks exactly the associativity triples whose four product lookups all
  // became assigned with the assignment of cell (i,j). Any failure here is
  // final for the whole subtree, since the involved cells are fixed.
  bool consistent_after(int i, int j) const {
    const int n = n_;
    const int v = at(i, j);
    // (i,j,c): the new cell is the product i*j
    for (int c = 1; c <= n; ++c) {
      const int y = at(j, c);
      if (!y) continue;
      const int lhs = at(v, c);
      const int rhs = at(i, y);
      if (lhs && rhs && lhs != rhs) return false;
    }
    // (a,i,j): the new cell is the product i*j on the right side
    for (int a = 1; a <= n; ++a) {
      const int x = at(a, i);
      if (!x) continue;
      const int lhs = at(x, j);
      const int rhs = at(a, v);
      if (lhs && rhs && lhs != rhs) return false;
    }
    // the new cell evaluates (a*b)*j for triples (a,b,j) with a*b = i
    for (const int cell : occurrences_[i - 1]) {
      const int a = cell / n + 1;
      const int b = cell % n + 1;
      const int y = at(b, j);
      if (!y) continue;
      const int rhs = at(a, y);
      if (rhs && rhs != v) return false;
    }
    // the new cell evaluates i*(b*c) for triples (i,b,c) with b*c = j
    for (const int cell : occurrences_[j - 1]) {
      const int b = cell / n + 1;
      const int c = cell % n + 1;
      const int x = at(i, b);
      if (!x) continue;
      const int lhs = at(x, c);
      if (lhs && lhs != v) return false;
    }
    return true;
  }

  // Pins the first row to the given values; false when the prefix itself is
  // already inconsistent.
  bool set_first_row(const std::vector<int>& row) {
    for (int j = 0; j < n_; ++j) {
      place(j, row[j]);
      if (!consistent_after(1, j + 1)) {
        for (int back = j; back >= 0; --back) displace(back);
        return false;
      }
    }
    return true;
  }

  // sink returns false to abort the search; run reports whether it finished
  template <typename Sink>
  bool run(int start_pos, Sink&& sink) {
    return dfs(start_pos, sink);
  }

  const std::vector<int>& cells() const { return cells_; }

 private:
  template <typename Sink>
  bool dfs(int pos, Sink& sink) {
    if (pos == n_ * n_) {
      return sink(cells_);
    }
    const int i = pos / n_ + 1;
    const int j = pos % n_ + 1;
    for (int v = 1; v <= n_; ++v) {
      place(pos, v);
      const bool keep_going = !consistent_after(i, j) || dfs(pos + 1, sink);
      displace(pos);
      if (!keep_going) return false;
    }
    return true;
  }

  int n_;
  std::vector<int> cells_;
  std::vector<std::vector<int>> occurrences_;
};

void check_order(int n, bool allow_order_6) {
  if (n < 1) throw ParseError("enumeration: order must be positive");
  if (n > kMaxEnumerationOrder) throw OrderTooLargeError(n, kMaxEnumerationOrder);
  if (n > kDefaultMaxEnumerationOrder && !allow_order_6) {
    throw OrderTooLargeError(n, kDefaultMaxEnumerationOrder);
  }
}

struct Row1Job {
  long long id = 0;  // mixed-radix encoding of the row, most significant first
  std::vector<int> row;
};

// All first-row assignments that survive the incremental checks.
std::vector<Row1Job> first_row_jobs(int n) {
  std::vector<Row1Job> jobs;
  TableSearch search(n);
  std::vector<int> row(n, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      long long id = 0;
      for (int v : row) id = id * n + (v - 1);
      jobs.push_back(Row1Job{id, row});
      return;
    }
    for (int v = 1; v <= n; ++v) {
      search.place(j, v);
      row[j] = v;
      if (search.consistent_after(1, j + 1)) rec(j + 1);
      search.displace(j);
    }
  };
  rec(0);
  return jobs;
}

std::string pack_key(const std::vector<int>& cells) {
  std::string key(cells.size(), '\0');
  for (std::size_t c = 0; c < cells.size(); ++c) key[c] = static_cast<char>(cells[c]);
  return key;
}

std::vector<int> unpack_key(const std::string& key) {
  std::vector<int> cells(key.size());
  for (std::size_t c = 0; c < key.size(); ++c) cells[c] = static_cast<int>(key[c]);
  return cells;
}

struct Accum {
  long long labeled = 0;
  std::unordered_set<std::string> canonical;
  std::map<std::string, int> regular;  // canonical key -> constant degree

  void merge(Accum&& other) {
    labeled += other.labeled;
    for (auto& key : other.canonical) canonical.insert(key);
    for (auto& [key, degree] : other.regular) regular.emplace(key, degree);
  }
};

// --- checkpoint serialization -------------------------------------------

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

class Reader {
 public:
  explicit Reader(const std::string& data) : data_(data) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(take(1)[0]); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(raw(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(raw(4)); }
  std::uint64_t u64() { return raw(8); }
  std::string bytes(std::size_t count) { return std::string(take(count), count); }

 private:
  std::uint64_t raw(int width) {
    const char* p = take(width);
    std::uint64_t v = 0;
    for (int b = 0; b < width; ++b) {
      v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(p[b])) << (8 * b);
    }
    return v;
  }

  const char* take(std::size_t count) {
    if (pos_ + count > data_.size()) throw CheckpointError("truncated file");
    const char* p = data_.data() + pos_;
    pos_ += count;
    return p;
  }

  const std::string& data_;
  std::size_t pos_ = 0;
};

std::string pack_nibbles(const std::string& key) {
  std::string out((key.size() + 1) / 2, '\0');
  for (std::size_t c = 0; c < key.size(); ++c) {
    const int nibble = key[c] - 1;
    out[c / 2] |= static_cast<char>(c % 2 == 0 ? nibble : nibble << 4);
  }
  return out;
}

std::string unpack_nibbles(const std::string& packed, std::size_t cell_count) {
  std::string key(cell_count, '\0');
  for (std::size_t c = 0; c < cell_count; ++c) {
    const int byte = static_cast<std::uint8_t>(packed[c / 2]);
    key[c] = static_cast<char>((c % 2 == 0 ? byte & 0xf : byte >> 4) + 1);
  }
  return key;
}

constexpr std::uint8_t kCheckpointVersion = 1;

void save_checkpoint(const std::string& path, int n, const std::vector<std::uint8_t>& bitmap,
                     const Accum& accum) {
  std::string blob;
  blob.push_back(static_cast<char>(kCheckpointVersion));
  blob.push_back(static_cast<char>(n));
  put_u64(blob, static_cast<std::uint64_t>(accum.labeled));
  put_u32(blob, static_cast<std::uint32_t>(bitmap.size()));
  blob.append(reinterpret_cast<const char*>(bitmap.data()), bitmap.size());
  put_u32(blob, static_cast<std::uint32_t>(accum.canonical.size()));
  for (const std::string& key : accum.canonical) blob += pack_nibbles(key);
  put_u32(blob, static_cast<std::uint32_t>(accum.regular.size()));
  for (const auto& [key, degree] : accum.regular) {
    blob += pack_nibbles(key);
    put_u16(blob, static_cast<std::uint16_t>(degree));
  }

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError("cannot write " + tmp);
    out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw CheckpointError("cannot rename " + tmp);
  }
}

bool load_checkpoint(const std::string& path, int n, std::size_t bitmap_bytes,
                     std::vector<std::uint8_t>& bitmap, Accum& accum) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string data = buf.str();
  Reader reader(data);
  if (reader.u8() != kCheckpointVersion) throw CheckpointError("bad version");
  if (reader.u8() != static_cast<std::uint8_t>(n)) throw CheckpointError("order mismatch");
  accum.labeled = static_cast<long long>(reader.u64());
  const std::uint32_t stored_bytes = reader.u32();
  if (stored_bytes != bitmap_bytes) throw CheckpointError("bitmap size mismatch");
  const std::string bm = reader.bytes(stored_bytes);
  bitmap.assign(bm.begin(), bm.end());
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  const std::size_t packed = (cells + 1) / 2;
  const std::uint32_t canonical_count = reader.u32();
  for (std::uint32_t r = 0; r < canonical_count; ++r) {
    accum.canonical.insert(unpack_nibbles(reader.bytes(packed), cells));
  }
  const std::uint32_t regular_count = reader.u32();
  for (std::uint32_t r = 0; r < regular_count; ++r) {
    std::string key = unpack_nibbles(reader.bytes(packed), cells);
    const int degree = reader.u16();
    accum.regular.emplace(std::move(key), degree);
  }
  return true;
}

// --- census core ----------------------------------------------------------

CensusResult run_census(int n, const CensusOptions& options) {
  check_order(n, options.allow_order_6);

  const std::vector<Row1Job> jobs = first_row_jobs(n);
  long long prefix_total = 1;
  for (int r = 0; r < n; ++r) prefix_total *= n;
  const std::size_t bitmap_bytes = static_cast<std::size_t>((prefix_total + 7) / 8);

  std::vector<std::uint8_t> bitmap(bitmap_bytes, 0);
  Accum global;
  if (!options.checkpoint_path.empty()) {
    load_checkpoint(options.checkpoint_path, n, bitmap_bytes, bitmap, global);
  }
  auto is_done = [&](long long id) {
    return (bitmap[static_cast<std::size_t>(id) / 8] >> (id % 8)) & 1;
  };
  auto mark_done = [&](long long id) {
    bitmap[static_cast<std::size_t>(id) / 8] |= static_cast<std::uint8_t>(1u << (id % 8));
  };

  std::vector<const Row1Job*> pending;
  long long done = 0;
  for (const Row1Job& job : jobs) {
    if (is_done(job.id)) {
      ++done;
    } else {
      pending.push_back(&job);
    }
  }

  unsigned hw = std::thread::hardware_concurrency();
  std::size_t thread_count = options.threads > 0 ? static_cast<std::size_t>(options.threads)
                                                 : std::max(1u, hw);
  thread_count = std::min(thread_count, std::max<std::size_t>(pending.size(), 1));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex merge_mutex;
  auto last_save = std::chrono::steady_clock::now();
  long long since_save = 0;

  auto maybe_save = [&](bool force) {
    if (options.checkpoint_path.empty()) return;
    ++since_save;
    const bool interval_due =
        options.checkpoint_interval > 0 && since_save >= options.checkpoint_interval;
    const bool time_due = options.checkpoint_interval == 0 &&
                          std::chrono::steady_clock::now() - last_save > std::chrono::seconds(5);
    if (force || interval_due || time_due) {
      save_checkpoint(options.checkpoint_path, n, bitmap, global);
      last_save = std::chrono::steady_clock::now();
      since_save = 0;
    }
  };

  auto report = [&](long long extra_labeled) {
    // caller holds merge_mutex
    CensusProgress p;
    p.order = n;
    p.subtrees_done = done;
    p.subtrees_total = static_cast<long long>(jobs.size());
    p.labeled_so_far = global.labeled + extra_labeled;
    p.classes_so_far = static_cast<long long>(global.canonical.size());
    if (!options.progress(p)) stop.store(true, std::memory_order_relaxed);
  };

  auto worker = [&]() {
    Canonicalizer canon(n);
    std::vector<int> canon_out;
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= pending.size()) break;
      const Row1Job& job = *pending[idx];

      Accum local;
      TableSearch search(n);
      bool completed = true;
      if (search.set_first_row(job.row)) {
        completed = search.run(n, [&](const std::vector<int>& cells) {
          ++local.labeled;
          // keep large subtrees responsive: heartbeat the progress stream
          // and honor cancellation without waiting for the subtree to end
          if ((local.labeled & 0x3ff) == 0) {
            if (stop.load(std::memory_order_relaxed)) return false;
            if (options.progress) {
              std::lock_guard<std::mutex> lock(merge_mutex);
              report(local.labeled);
              if (stop.load(std::memory_order_relaxed)) return false;
            }
          }
          canon.run(cells, canon_out);
          std::string key = pack_key(canon_out);
          if (local.canonical.insert(key).second) {
            const RegularityResult reg = is_regular_glsg(n, canon_out);
            if (reg.regular) local.regular.emplace(std::move(key), reg.degree_set[0]);
          }
          return true;
        });
      }
      if (!completed) break;  // aborted mid-subtree: discard the partial accumulator

      std::lock_guard<std::mutex> lock(merge_mutex);
      global.merge(std::move(local));
      mark_done(job.id);
      ++done;
      if (options.progress) report(0);
      maybe_save(false);
    }
  };

  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(thread_count);
    for (std::size_t t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  if (stop.load()) {
    maybe_save(true);
    throw CancelledError();
  }
  maybe_save(true);

  CensusResult state;
  state.row.order = n;
  state.row.labeled_total = global.labeled;
  state.row.canonical_total = static_cast<long long>(global.canonical.size());
  state.row.regular_count = static_cast<long long>(global.regular.size());
  state.row.percentage = state.row.canonical_total == 0
                             ? 0.0
                             : 100.0 * static_cast<double>(state.row.regular_count) /
                                   static_cast<double>(state.row.canonical_total);
  for (const auto& [key, degree] : global.regular) {
    state.witnesses.push_back(RegularWitness{CayleyTable(n, unpack_key(key)), degree});
  }
  return state;
}

}  // namespace

long long enumerate_labeled(int n, const std::function<void(const CayleyTable&)>& visit,
                            bool allow_order_6) {
  check_order(n, allow_order_6);
  long long count = 0;
  TableSearch search(n);
  search.run(0, [&](const std::vector<int>& cells) {
    ++count;
    if (visit) visit(CayleyTable(n, cells));
    return true;
  });
  return count;
}

CensusRow census(int n, const CensusOptions& options) { return run_census(n, options).row; }

std::vector<CensusRow> census_report(int max_order, const CensusOptions& options) {
  if (max_order < 1) throw ParseError("census: max order must be positive");
  std::vector<CensusRow> rows;
  for (int n = 1; n <= max_order; ++n) {
    CensusOptions per_order = options;
    // a checkpoint file tracks a single order; reserve it for the last
    // (long-running) one
    if (n != max_order) per_order.checkpoint_path.clear();
    rows.push_back(census(n, per_order));
  }
  return rows;
}

std::vector<RegularWitness> regular_witnesses(int n, const CensusOptions& options) {
  return run_census(n, options).witnesses;
}

CensusResult census_with_witnesses(int n, const CensusOptions& options) {
  return run_census(n, options);
}

long long canonical_spot_check(int n, int samples, std::uint64_t seed, bool allow_order_6) {
  if (samples < 1) return 0;
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> reservoir;
  reservoir.reserve(samples);
  long long seen = 0;
  enumerate_labeled(
      n,
      [&](const CayleyTable& t) {
        ++seen;
        if (static_cast<int>(reservoir.size()) < samples) {
          reservoir.push_back(t.entries());
        } else {
          const std::uint64_t slot = rng() % static_cast<std::uint64_t>(seen);
          if (slot < static_cast<std::uint64_t>(samples)) {
            reservoir[static_cast<std::size_t>(slot)] = t.entries();
          }
        }
      },
      allow_order_6);

  std::vector<int> perm(n);
  long long failures = 0;
  Canonicalizer canon(n);
  for (const std::vector<int>& cells : reservoir) {
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    const CayleyTable table(n, cells);
    std::vector<int> direct, relabeled;
    canon.run(table.entries(), direct);
    canon.run(relabel(table, perm).entries(), relabeled);
    if (direct != relabeled) ++failures;
  }
  return failures;
}

std::string format_percentage(double percentage) {
  char buf[32];
  std::snprintf(buf, sizeof buf, percentage >= 1.0 ? "%.1f" : "%.2f", percentage);
  return buf;
}

std::string format_census_text(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "order  labeled    classes  regular  percent\n";
  for (const CensusRow& row : rows) {
    char line[128];
    std::snprintf(line, sizeof line, "%-5d  %-9lld  %-7lld  %-7lld  %s\n", row.order,
                  row.labeled_total, row.canonical_total, row.regular_count,
                  format_percentage(row.percentage).c_str());
    out << line;
  }
  return out.str();
}

std::string format_census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  for (const CensusRow& row : rows) {
    out << row.order << ',' << row.canonical_total << ',' << row.regular_count << ','
        << format_percentage(row.percentage) << '\n';
  }
  return out.str();
}

}  // namespace glsg
