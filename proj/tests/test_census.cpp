#include <doctest.h>

#include <cstdio>
#include <set>
#include <unistd.h>

#include "glsg/census.hpp"
#include "glsg/graph.hpp"
#include "glsg/invariants.hpp"
#include "test_util.hpp"

using namespace glsg;

namespace {

// Full-scan oracle: every n^(n*n) grid, kept iff associative. Feasible for
// n <= 3 only.
std::set<std::vector<int>> naive_associative_tables(int n) {
  std::set<std::vector<int>> tables;
  const int cells = n * n;
  std::vector<int> grid(cells, 1);
  while (true) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int c = 0; c < cells; ++c) rows[c / n][c % n] = grid[c];
    if (!test::associativity_witness(rows)) tables.insert(grid);
    int pos = cells - 1;
    while (pos >= 0 && grid[pos] == n) grid[pos--] = 1;
    if (pos < 0) break;
    ++grid[pos];
  }
  return tables;
}

std::string temp_path(const char* name) {
  return std::string("/tmp/glsg_test_") + name + "_" + std::to_string(::getpid());
}

}  // namespace

TEST_CASE("pruned enumerator equals the full-scan oracle for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::vector<int>> visited;
    const long long count =
        enumerate_labeled(n, [&](const CayleyTable& t) { visited.insert(t.entries()); });
    CHECK(count == static_cast<long long>(visited.size()));
    CHECK(visited == naive_associative_tables(n));
  }
}

TEST_CASE("labeled counts at small orders") {
  CHECK(enumerate_labeled(1, nullptr) == 1);
  CHECK(enumerate_labeled(2, nullptr) == 8);
  CHECK(enumerate_labeled(3, nullptr) == 113);
  CHECK(enumerate_labeled(4, nullptr) == 3492);
}

TEST_CASE("enumeration order gates") {
  CHECK_THROWS_AS(enumerate_labeled(6, nullptr), OrderTooLargeError);
  CHECK_THROWS_AS(enumerate_labeled(7, nullptr, true), OrderTooLargeError);
  CHECK_THROWS_AS(enumerate_labeled(0, nullptr), ParseError);
  CHECK_THROWS_AS(census(6), OrderTooLargeError);
}

TEST_CASE("census rows for orders 1..4") {
  const std::vector<CensusRow> rows = census_report(4);
  REQUIRE(rows.size() == 4);

  CHECK(rows[0].labeled_total == 1);
  CHECK(rows[0].canonical_total == 1);
  CHECK(rows[0].regular_count == 1);
  CHECK(format_percentage(rows[0].percentage) == "100.0");

  CHECK(rows[1].labeled_total == 8);
  CHECK(rows[1].canonical_total == 4);
  CHECK(rows[1].regular_count == 3);
  CHECK(format_percentage(rows[1].percentage) == "75.0");

  CHECK(rows[2].labeled_total == 113);
  CHECK(rows[2].canonical_total == 18);
  CHECK(rows[2].regular_count == 3);
  CHECK(format_percentage(rows[2].percentage) == "16.7");

  CHECK(rows[3].labeled_total == 3492);
  CHECK(rows[3].canonical_total == 126);
  CHECK(rows[3].regular_count == 8);
  CHECK(format_percentage(rows[3].percentage) == "6.3");
}

TEST_CASE("order-1 and order-2 witnesses are the known tables") {
  const auto w1 = regular_witnesses(1);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0].table == CayleyTable(1, {1}));
  CHECK(w1[0].degree == 0);

  const auto w2 = regular_witnesses(2);
  REQUIRE(w2.size() == 3);
  CHECK(w2[0].table == CayleyTable(2, {1, 1, 1, 1}));  // null
  CHECK(w2[0].degree == 1);
  CHECK(w2[1].table == CayleyTable(2, {1, 1, 2, 2}));  // left-zero class
  CHECK(w2[1].degree == 1);
  CHECK(w2[2].table == CayleyTable(2, {1, 2, 2, 1}));  // group of order 2
  CHECK(w2[2].degree == 3);
}

TEST_CASE("order-3 witnesses are the three known families") {
  const auto witnesses = regular_witnesses(3);
  REQUIRE(witnesses.size() == 3);
  std::set<std::vector<int>> tables;
  for (const RegularWitness& w : witnesses) tables.insert(w.table.entries());
  CHECK(tables.count(canonical_form(make_null(3)).entries()) == 1);
  CHECK(tables.count(canonical_form(make_left_zero(3)).entries()) == 1);
  CHECK(tables.count(canonical_form(make_cyclic_group(3)).entries()) == 1);
}

TEST_CASE("known regular families appear among order-4 witnesses") {
  const auto witnesses = regular_witnesses(4);
  REQUIRE(witnesses.size() == 8);
  std::set<std::vector<int>> tables;
  for (const RegularWitness& w : witnesses) tables.insert(w.table.entries());
  CHECK(tables.count(canonical_form(make_null(4)).entries()) == 1);
  CHECK(tables.count(canonical_form(make_left_zero(4)).entries()) == 1);
  CHECK(tables.count(canonical_form(make_cyclic_group(4)).entries()) == 1);
  CHECK(tables.count(canonical_form(make_rectangular_band(2, 2)).entries()) == 1);
}

TEST_CASE("every witness is regular and the graph oracle agrees") {
  for (int n = 1; n <= 4; ++n) {
    for (const RegularWitness& w : regular_witnesses(n)) {
      const RegularityResult reg = is_regular_glsg(w.table);
      CHECK(reg.regular);
      CHECK(reg.degree_set == std::vector<int>{w.degree});
      for (int d : naive_degrees(build_graph(w.table))) CHECK(d == w.degree);
    }
  }
}

TEST_CASE("census results are identical across thread counts") {
  CensusOptions single;
  single.threads = 1;
  CensusOptions quad;
  quad.threads = 4;
  const CensusResult a = census_with_witnesses(4, single);
  const CensusResult b = census_with_witnesses(4, quad);
  CHECK(a.row.labeled_total == b.row.labeled_total);
  CHECK(a.row.canonical_total == b.row.canonical_total);
  CHECK(a.row.regular_count == b.row.regular_count);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t w = 0; w < a.witnesses.size(); ++w) {
    CHECK(a.witnesses[w].table == b.witnesses[w].table);
    CHECK(a.witnesses[w].degree == b.witnesses[w].degree);
  }
}

TEST_CASE("canonical forms survive random relabelings") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(canonical_spot_check(n, 1000, 0xfeedULL + n) == 0);
  }
}

TEST_CASE("cancellative tables in the census have no alternative factors") {
  long long cancellative_seen = 0;
  for (int n = 2; n <= 4; ++n) {
    enumerate_labeled(n, [&](const CayleyTable& t) {
      if (!is_cancellative(t)) return;
      ++cancellative_seen;
      const InvariantSet inv = compute_invariants(t);
      for (int v : inv.nr) CHECK(v == 0);
      for (int v : inv.nc) CHECK(v == 0);
    });
  }
  CHECK(cancellative_seen > 0);
}

TEST_CASE("formula degrees equal oracle degrees on every labeled table up to order 3") {
  for (int n = 1; n <= 3; ++n) {
    enumerate_labeled(n, [&](const CayleyTable& t) {
      CHECK(naive_degrees(build_graph(t)) == compute_invariants(t).deg);
    });
  }
}

TEST_CASE("a blocking delta rules out regularity on every table up to order 4") {
  for (int n = 1; n <= 4; ++n) {
    enumerate_labeled(n, [&](const CayleyTable& t) {
      if (delta_obstruction(t).blocked) CHECK_FALSE(is_regular_glsg(t).regular);
    });
  }
}

TEST_CASE("checkpointed census matches a fresh run and resumes cleanly") {
  const std::string path = temp_path("ckpt");
  std::remove(path.c_str());

  CensusOptions opts;
  opts.checkpoint_path = path;
  opts.checkpoint_interval = 1;
  const CensusRow fresh = census(4, CensusOptions{});
  const CensusRow checkpointed = census(4, opts);
  CHECK(checkpointed.labeled_total == fresh.labeled_total);
  CHECK(checkpointed.canonical_total == fresh.canonical_total);
  CHECK(checkpointed.regular_count == fresh.regular_count);

  // the finished checkpoint short-circuits a rerun to the same answer
  long long calls = 0;
  CensusOptions resume = opts;
  resume.progress = [&](const CensusProgress&) {
    ++calls;
    return true;
  };
  const CensusRow resumed = census(4, resume);
  CHECK(calls == 0);
  CHECK(resumed.canonical_total == fresh.canonical_total);
  CHECK(resumed.regular_count == fresh.regular_count);
  std::remove(path.c_str());
}

TEST_CASE("a cancelled census resumes from its checkpoint") {
  const std::string path = temp_path("cancel");
  std::remove(path.c_str());

  CensusOptions opts;
  opts.checkpoint_path = path;
  opts.checkpoint_interval = 1;
  opts.threads = 1;
  long long subtrees = 0;
  opts.progress = [&](const CensusProgress&) { return ++subtrees < 3; };
  CHECK_THROWS_AS(census(4, opts), CancelledError);

  CensusOptions resume;
  resume.checkpoint_path = path;
  resume.threads = 1;
  const CensusRow row = census(4, resume);
  const CensusRow fresh = census(4, CensusOptions{});
  CHECK(row.labeled_total == fresh.labeled_total);
  CHECK(row.canonical_total == fresh.canonical_total);
  CHECK(row.regular_count == fresh.regular_count);
  std::remove(path.c_str());
}

TEST_CASE("large subtrees heartbeat the progress stream and cancel promptly") {
  // the first order-5 subtree (first row all ones) holds 33825 tables, so
  // with one thread the very first callback is an in-subtree heartbeat
  CensusOptions opts;
  opts.threads = 1;
  CensusProgress first;
  bool seen = false;
  opts.progress = [&](const CensusProgress& p) {
    if (!seen) {
      first = p;
      seen = true;
    }
    return false;
  };
  CHECK_THROWS_AS(census(5, opts), CancelledError);
  REQUIRE(seen);
  CHECK(first.subtrees_done == 0);
  CHECK(first.labeled_so_far == 1024);
  CHECK(first.classes_so_far == 0);
  CHECK(first.subtrees_total > 0);
}

TEST_CASE("checkpoint order mismatch is rejected") {
  const std::string path = temp_path("mismatch");
  std::remove(path.c_str());
  CensusOptions opts;
  opts.checkpoint_path = path;
  census(3, opts);
  CHECK_THROWS_AS(census(4, opts), CheckpointError);
  std::remove(path.c_str());
}

TEST_CASE("census text and csv formats") {
  const std::vector<CensusRow> rows = census_report(2);
  CHECK(format_census_csv(rows) == "1,1,1,100.0\n2,4,3,75.0\n");
  const std::string text = format_census_text(rows);
  CHECK(text.find("order") == 0);
  CHECK(text.find("100.0") != std::string::npos);
}

TEST_CASE("percentage formatting at the reference counts") {
  CHECK(format_percentage(100.0) == "100.0");
  CHECK(format_percentage(75.0) == "75.0");
  CHECK(format_percentage(100.0 * 3 / 18) == "16.7");
  CHECK(format_percentage(100.0 * 8 / 126) == "6.3");
  CHECK(format_percentage(100.0 * 3 / 1160) == "0.26");
  CHECK(format_percentage(100.0 * 12 / 15973) == "0.08");
}
