#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <map>
#include <random>

#include "brute.hpp"
#include "dijoin/classes.hpp"
#include "dijoin/dicuts.hpp"
#include "dijoin/fixtures.hpp"
#include "dijoin/oracle.hpp"
#include "dijoin/text_format.hpp"

using namespace dijoin;

namespace {

std::int64_t brute_max(const Digraph& d, const std::vector<Dicut>& cls, const Capacity* c,
                       std::int64_t upper) {
  std::vector<int> elements;
  std::vector<std::int64_t> caps;
  for (const Edge& e : d.edges()) {
    std::int64_t ce = c ? (*c)[e.id] : 1;
    if (ce == 0) continue;
    elements.push_back(index(e.id));
    caps.push_back(ce);
  }
  std::vector<std::vector<int>> targets;
  for (const Dicut& b : cls) {
    std::vector<int> t;
    for (EdgeId e : b.edges) t.push_back(index(e));
    targets.push_back(t);
  }
  return brute::max_disjoint_hitting(elements, caps, targets, upper);
}

void check_witness(const Digraph& d, const std::vector<Dicut>& cls, const Capacity* c,
                   const WoodallReport& r) {
  CHECK(static_cast<std::int64_t>(r.witness.size()) == r.max_packing);
  std::vector<std::int64_t> used(d.edge_id_bound(), 0);
  for (const EdgeSet& f : r.witness) {
    for (EdgeId e : f) ++used[index(e)];
    for (const Dicut& b : cls) CHECK(intersects(f, b.edges));
  }
  for (const Edge& e : d.edges()) CHECK(used[index(e.id)] <= (c ? (*c)[e.id] : 1));
}

}  // namespace

TEST_CASE("oracle examples") {
  Fixture diamond = fixture("diamond");
  WoodallReport r = max_disjoint_dijoins(diamond.graph, enumerate_dicuts(diamond.graph));
  CHECK(r.min_size == 2);
  CHECK(r.max_packing == 2);
  CHECK(r.woodall);

  Fixture path = fixture("path3");
  WoodallReport p = max_disjoint_dijoins(path.graph, enumerate_dicuts(path.graph));
  CHECK(p.min_size == 1);
  CHECK(p.max_packing == 1);
  REQUIRE(p.witness.size() == 1);
  CHECK(p.witness[0].size() == 2);

  try {
    max_disjoint_dijoins(path.graph, {});
    FAIL("expected EmptyClass");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyClass);
  }
}

TEST_CASE("the Schrijver fixture is not woodall") {
  auto start = std::chrono::steady_clock::now();
  Fixture f = fixture("schrijver");
  WoodallReport r = check_woodall(f.graph, f.cls, &f.capacity);
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(r.min_size == 2);
  CHECK(r.max_packing == 1);
  CHECK_FALSE(r.woodall);
  CHECK(seconds < 10.0);
  check_witness(f.graph, f.cls.resolve(f.graph), &f.capacity, r);
}

TEST_CASE("oracle element cap") {
  Fixture f = fixture("ladder(6)");
  OracleCaps caps;
  caps.max_elements = 4;
  CHECK_THROWS_AS(max_disjoint_dijoins(f.graph, f.cls.resolve(f.graph), nullptr, caps),
                  Error);
}

TEST_CASE("find_hitting_slots on a small family") {
  auto slots = find_hitting_slots({1, 2, 3}, {1, 1, 1}, {{1, 2}, {2, 3}, {1, 3}}, 2);
  CHECK_FALSE(slots.has_value());
  auto one = find_hitting_slots({1, 2, 3}, {1, 1, 1}, {{1, 2}, {2, 3}, {1, 3}}, 1);
  CHECK(one.has_value());
  auto doubled = find_hitting_slots({1}, {2}, {{1}}, 2);
  REQUIRE(doubled.has_value());
  CHECK(*doubled == std::vector<std::vector<int>>{{1}, {1}});
}

TEST_CASE("oracle matches exhaustive slot assignment") {
  for (const Digraph& d : exhaustive_catalogue(4)) {
    for (const auto& cls : {enumerate_dicuts(d), enumerate_dibonds(d)}) {
      if (cls.empty()) continue;
      WoodallReport r = max_disjoint_dijoins(d, cls);
      CHECK(r.max_packing == brute_max(d, cls, nullptr, r.min_size));
      check_witness(d, cls, nullptr, r);
    }
  }
}

TEST_CASE("capacitated oracle matches exhaustive slot assignment") {
  std::mt19937_64 rng(21);
  for (const Digraph& d : exhaustive_catalogue(3)) {
    auto cls = enumerate_dicuts(d);
    if (cls.empty()) continue;
    Capacity c(d);
    for (const Edge& e : d.edges()) c.set(e.id, static_cast<std::int64_t>(rng() % 4));
    WoodallReport r = max_disjoint_dijoins(d, cls, &c);
    if (r.min_size == 0) {
      CHECK(r.max_packing == 0);
      continue;
    }
    CHECK(r.max_packing == brute_max(d, cls, &c, r.min_size));
    check_witness(d, cls, &c, r);
  }
}

TEST_CASE("check_woodall runs the constructive packings") {
  Fixture ladder = fixture("ladder(4)");
  WoodallReport r = check_woodall(ladder.graph, ladder.cls);
  REQUIRE(r.constructive_k.has_value());
  CHECK(*r.constructive_k == r.max_packing);
  CHECK(r.woodall);

  Fixture diamond = fixture("diamond");
  WoodallReport m = check_woodall(diamond.graph, DicutClass::of(ClassKind::kMin));
  REQUIRE(m.constructive_k.has_value());
  CHECK(*m.constructive_k == 2);

  WoodallReport all = check_woodall(diamond.graph, DicutClass::of(ClassKind::kAll));
  CHECK_FALSE(all.constructive_k.has_value());
  CHECK(all.woodall);
}

TEST_CASE("fixtures") {
  Fixture par = fixture("parallel2");
  CHECK(par.graph.edge_count() == 2);
  auto bonds = par.cls.resolve(par.graph);
  REQUIRE(bonds.size() == 1);
  CHECK(bonds[0].size() == 2);

  for (int n = 1; n <= 6; ++n) {
    Fixture f = fixture("ladder(" + std::to_string(n) + ")");
    CHECK(f.graph.vertex_count() == static_cast<std::size_t>(2 * n));
    CHECK(f.graph.edge_count() == static_cast<std::size_t>(3 * n - 2));
    auto cls = f.cls.resolve(f.graph);
    CHECK(find_nested_representation(f.graph, cls).has_value());
    for (const Dicut& b : cls) CHECK(b.size() >= (n >= 2 ? 2u : 1u));
  }
  CHECK(fixture("ladder-3").graph.edge_count() == fixture("ladder3").graph.edge_count());

  for (const char* bad : {"nope", "ladder(0)", "ladder(13)", "ladder(x)"}) {
    try {
      fixture(bad);
      FAIL("expected UnknownFixture");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kUnknownFixture);
    }
  }
}

TEST_CASE("fixtures survive the text format") {
  for (std::string name : fixture_names()) {
    if (name == "ladder(n)") name = "ladder(5)";
    Fixture f = fixture(name);
    std::string text = write_digraph(f.graph, &f.capacity);
    DigraphFile back = parse_digraph(text);
    CHECK(write_digraph(back.graph, &back.capacity) == text);
    CHECK(back.graph.vertex_count() == f.graph.vertex_count());
    CHECK(back.capacity.total(back.graph.edge_ids()) == f.capacity.total(f.graph.edge_ids()));
  }
}

TEST_CASE("catalogue counts and shape") {
  std::map<std::size_t, int> multi;
  for (const Digraph& d : exhaustive_catalogue(4)) {
    ++multi[d.edge_count()];
    CHECK(is_weakly_connected(d));
  }
  CHECK(multi == std::map<std::size_t, int>{{1, 1}, {2, 5}, {3, 18}, {4, 91}});

  std::map<std::size_t, int> simple;
  for (const Digraph& d : exhaustive_catalogue(5, true)) ++simple[d.edge_count()];
  CHECK(simple == std::map<std::size_t, int>{{1, 1}, {2, 3}, {3, 10}, {4, 39}, {5, 169}});
}

TEST_CASE("random instances are reproducible and within bounds") {
  auto a = random_instances(100, 8, 10, kDefaultSeed);
  auto b = random_instances(100, 8, 10, kDefaultSeed);
  REQUIRE(a.size() == 100);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(write_digraph(a[i]) == write_digraph(b[i]));
    CHECK(is_weakly_connected(a[i]));
    CHECK(a[i].vertex_count() >= 2);
    CHECK(a[i].vertex_count() <= 8);
    CHECK(a[i].edge_count() <= 10);
  }
}
