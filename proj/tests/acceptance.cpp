// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "dijoin/classes.hpp"
#include "dijoin/dicuts.hpp"
#include "dijoin/fixtures.hpp"
#include "dijoin/hypergraph.hpp"
#include "dijoin/oracle.hpp"
#include "dijoin/packing.hpp"
#include "dijoin/reductions.hpp"
#include "dijoin/text_format.hpp"

using namespace dijoin;

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = what();
  }
};

std::string describe(const Digraph& d) {
  std::string text = write_digraph(d);
  for (char& ch : text) {
    if (ch == '\n') ch = ';';
  }
  return text;
}

struct Instance {
  Digraph graph;
  std::vector<Dicut> dicuts;
};

std::vector<Instance> catalogue() {
  std::vector<Instance> out;
  for (Digraph& d : exhaustive_catalogue(7)) out.push_back({std::move(d), {}});
  for (Digraph& d : random_instances(500, 8, 10, kDefaultSeed)) {
    out.push_back({std::move(d), {}});
  }
  for (Instance& i : out) i.dicuts = enumerate_dicuts(i.graph);
  return out;
}

std::int64_t min_size(const std::vector<Dicut>& cls) {
  std::size_t m = cls.front().size();
  for (const Dicut& b : cls) m = std::min(m, b.size());
  return static_cast<std::int64_t>(m);
}

bool report(int number, const char* title, const Tally& t, double seconds,
            double limit = 0, const std::string& extra = "") {
  bool ok = t.failed == 0 && t.checked > 0 && (limit == 0 || seconds < limit);
  std::printf("criterion %d: %s  %s: %zu checks, %zu failed, %.1f s", number,
              ok ? "PASS" : "FAIL", title, t.checked, t.failed, seconds);
  if (limit > 0) std::printf(" (limit %.0f s)", limit);
  if (!extra.empty()) std::printf(", %s", extra.c_str());
  std::printf("\n");
  if (t.failed > 0) std::printf("  first failure: %s\n", t.first.c_str());
  std::fflush(stdout);
  return ok;
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Packs a nested class and compares with the oracle where it applies.
void nested_case(Tally& t, const Digraph& d, const std::vector<Dicut>& cls,
                 const std::string& label, bool oracle) {
  try {
    Packing p = pack_nested(d, cls);
    t.expect(p.k == min_size(cls) && verify_packing(d, cls, p).ok,
             [&] { return label + " packing wrong on " + describe(d); });
    if (oracle) {
      WoodallReport r = max_disjoint_dijoins(d, cls);
      t.expect(r.max_packing == p.k,
               [&] { return label + " oracle disagrees on " + describe(d); });
    }
  } catch (const Error& e) {
    t.expect(false, [&] { return label + " threw " + e.what() + " on " + describe(d); });
  }
}

bool criterion1(const std::vector<Instance>& cat) {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  std::size_t classes = 0;
  for (const Instance& in : cat) {
    if (in.dicuts.empty()) continue;
    auto atomic = DicutClass::of(ClassKind::kAtomic).resolve(in.graph);
    if (!atomic.empty()) {
      ++classes;
      nested_case(t, in.graph, atomic, "atomic class", true);
    }
    for (const Dicut& b : in.dicuts) {
      ++classes;
      nested_case(t, in.graph, {b}, "single-dicut class", true);
    }
  }
  for (int n = 1; n <= 12; ++n) {
    Fixture f = fixture("ladder(" + std::to_string(n) + ")");
    ++classes;
    // Within the oracle's element cap for n <= 5; beyond that a verified
    // packing of min-size many dijoins is itself optimal.
    nested_case(t, f.graph, f.cls.resolve(f.graph), f.name, f.graph.edge_count() <= 14);
  }
  return report(1, "nested-class packing", t, since(start), 60,
                std::to_string(classes) + " classes");
}

bool criterion2(const std::vector<Instance>& cat) {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  std::size_t skipped = 0;
  for (const Instance& in : cat) {
    if (in.dicuts.empty()) {
      ++skipped;
      continue;
    }
    Capacity c(in.graph);
    Packing p = pack_min(in.graph, c);
    std::int64_t m = min_size(in.dicuts);
    WoodallReport r = max_disjoint_dijoins(in.graph, p.cls);
    t.expect(p.k == m && r.max_packing == m && verify_packing(in.graph, p.cls, p).ok,
             [&] { return "B_min packing wrong on " + describe(in.graph); });
  }
  return report(2, "B_min packing", t, since(start), 120,
                std::to_string(skipped) + " instances without dicuts skipped");
}

bool criterion3(const std::vector<Instance>& cat) {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  std::mt19937_64 rng(kDefaultSeed);
  for (const Instance& in : cat) {
    Capacity unit(in.graph);
    Capacity random(in.graph);
    for (const Edge& e : in.graph.edges()) {
      random.set(e.id, static_cast<std::int64_t>(rng() % 4));
    }
    for (std::size_t i = 0; i < in.dicuts.size(); ++i) {
      for (std::size_t j = i + 1; j < in.dicuts.size(); ++j) {
        const Dicut& a = in.dicuts[i];
        const Dicut& b = in.dicuts[j];
        if (!crossing(in.graph, a, b)) continue;
        Dicut m = meet(in.graph, a, b);
        Dicut v = join(in.graph, a, b);
        for (const Capacity* c : {&unit, &random}) {
          t.expect(c->total(a.edges) + c->total(b.edges) ==
                       c->total(m.edges) + c->total(v.edges),
                   [&] { return "identity fails on " + describe(in.graph); });
        }
      }
    }
  }
  return report(3, "submodular identity", t, since(start));
}

bool criterion4(const std::vector<Instance>& cat) {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  std::size_t over_cap = 0;
  auto check = [&](const Digraph& d, const std::vector<Dicut>& cls) {
    if (cls.empty() || !find_nested_representation(d, cls)) return;
    try {
      t.expect(check_balanced_exhaustive(dicut_hypergraph(d, cls)).balanced,
               [&] { return "unbalanced nested class on " + describe(d); });
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooLarge) throw;
      ++over_cap;
    }
  };
  for (const Instance& in : cat) {
    if (in.dicuts.empty()) continue;
    check(in.graph, DicutClass::of(ClassKind::kAtomic).resolve(in.graph));
    check(in.graph, in.dicuts);
    check(in.graph, enumerate_dibonds(in.graph));
    check(in.graph, min_dicut_class(in.graph, Capacity(in.graph)));
    for (const Dicut& b : in.dicuts) check(in.graph, {b});
  }
  for (int n = 1; n <= 12; ++n) {
    Fixture f = fixture("ladder(" + std::to_string(n) + ")");
    check(f.graph, f.cls.resolve(f.graph));
  }
  Hypergraph triangle = Hypergraph::from_edges({{1, 2}, {2, 3}, {1, 3}});
  BalanceVerdict v = check_balanced_exhaustive(triangle);
  t.expect(!v.balanced && v.witness && v.witness->odd() && v.witness->length() >= 3 &&
               is_berge_cycle(triangle, *v.witness) && !is_improper(triangle, *v.witness),
           [] { return std::string("no proper odd Berge-cycle for the triangle"); });
  return report(4, "balancedness", t, since(start),
                0, std::to_string(over_cap) + " classes over the exhaustive cap");
}

bool criterion5() {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  std::mt19937_64 rng(kDefaultSeed);
  std::size_t balanced = 0;
  for (int sample = 0; sample < 20000; ++sample) {
    int n = std::uniform_int_distribution<int>(1, 8)(rng);
    int m = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<std::vector<int>> edges;
    for (int j = 0; j < m; ++j) {
      std::vector<int> e;
      while (e.empty()) {
        for (int x = 0; x < n; ++x) {
          if (rng() % 2) e.push_back(x);
        }
      }
      edges.push_back(e);
    }
    std::vector<int> ground(n);
    for (int x = 0; x < n; ++x) ground[x] = x;
    Hypergraph h = Hypergraph::make(ground, edges);
    if (!check_balanced_exhaustive(h).balanced) continue;
    ++balanced;
    TransversalPacking p = pack_transversals(h);
    bool ok = p.transversals.size() == h.min_edge_size();
    std::vector<int> used;
    for (const auto& tr : p.transversals) {
      ok = ok && h.is_transversal(tr);
      used.insert(used.end(), tr.begin(), tr.end());
    }
    std::sort(used.begin(), used.end());
    ok = ok && std::adjacent_find(used.begin(), used.end()) == used.end();
    for (std::size_t i = 1; i < p.progress.size(); ++i) {
      ok = ok && p.progress[i] > p.progress[i - 1];
    }
    ok = ok && max_disjoint_transversals(h).size() == p.transversals.size();
    t.expect(ok, [&] {
      std::ostringstream s;
      s << "hypergraph";
      for (const auto& e : h.hyperedges) {
        s << " {";
        for (int x : e) s << x << ' ';
        s << '}';
      }
      return s.str();
    });
  }
  return report(5, "Berge packing engine", t, since(start), 0,
                std::to_string(balanced) + " balanced of 20000 sampled");
}

bool criterion6() {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  Fixture f = fixture("schrijver");
  WoodallReport r = check_woodall(f.graph, f.cls, &f.capacity);
  t.expect(r.min_size == 2, [&] { return "min capacity " + std::to_string(r.min_size); });
  t.expect(r.max_packing == 1, [&] { return "max packing " + std::to_string(r.max_packing); });
  t.expect(!r.woodall, [] { return std::string("verdict yes"); });
  return report(6, "Schrijver fixture", t, since(start), 10,
                "min " + std::to_string(r.min_size) + ", max " +
                    std::to_string(r.max_packing) + ", woodall " +
                    (r.woodall ? "yes" : "no"));
}

bool criterion7(const std::vector<Instance>& cat) {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  for (const Instance& in : cat) {
    if (in.dicuts.empty() || !bridges(in.graph).empty()) continue;
    RobbinsDijoins r = robbins_two_dijoins(in.graph);
    bool ok = !intersects(r.agree, r.disagree);
    for (const Dicut& b : in.dicuts) {
      ok = ok && intersects(r.agree, b.edges) && intersects(r.disagree, b.edges);
    }
    t.expect(ok, [&] { return "robbins halves fail on " + describe(in.graph); });
  }
  return report(7, "Robbins construction", t, since(start));
}

// c-disjoint family meeting every class dicut.
bool c_disjoint(const std::vector<EdgeSet>& family, const std::vector<Dicut>& cls,
                const Capacity* c, std::size_t bound) {
  std::vector<std::int64_t> used(bound, 0);
  for (const EdgeSet& f : family) {
    for (EdgeId e : f) {
      if (++used[index(e)] > (c ? (*c)[e] : 1)) return false;
    }
    for (const Dicut& b : cls) {
      if (!intersects(f, b.edges)) return false;
    }
  }
  return true;
}

bool criterion8(const std::vector<Instance>& cat) {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  std::mt19937_64 rng(kDefaultSeed);
  std::size_t with_tilde = 0;
  for (const Instance& in : cat) {
    if (in.dicuts.empty()) continue;
    const Digraph& d = in.graph;
    // Capacities in {0,1,2}, lowered until the hat digraph fits the oracle.
    Capacity c(d);
    std::int64_t total = 0;
    for (const Edge& e : d.edges()) {
      c.set(e.id, static_cast<std::int64_t>(rng() % 3));
      total += c[e.id];
    }
    for (const Edge& e : d.edges()) {
      while (total > 14 && c[e.id] > 0) {
        c.set(e.id, c[e.id] - 1);
        --total;
      }
    }
    for (const auto& cls : {in.dicuts, min_dicut_class(d, c)}) {
      EquivalenceReport r = capacitated_equivalence_check(d, c, cls, 8);
      if (r.tilde) ++with_tilde;
      t.expect(r.agree && r.tilde.has_value(),
               [&] { return "verdicts disagree on " + describe(d); });

      HatResult h = hat_transform(d, c, cls);
      t.expect(c_disjoint(h.lift(r.direct.witness), h.cls, nullptr, h.graph.edge_id_bound()),
               [&] { return "lift fails on " + describe(d); });
      std::vector<EdgeSet> traced;
      for (const EdgeSet& f : r.hat.witness) traced.push_back(h.trace(f));
      t.expect(c_disjoint(traced, cls, &c, d.edge_id_bound()),
               [&] { return "trace fails on " + describe(d); });
    }
  }
  return report(8, "capacity reductions", t, since(start), 0,
                std::to_string(with_tilde) + " three-way comparisons");
}

bool criterion9(const std::vector<Instance>& cat) {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  for (const Instance& in : cat) {
    const Digraph& d = in.graph;
    std::vector<std::vector<Dicut>> classes{in.dicuts, enumerate_dibonds(d)};
    for (ClassKind k : {ClassKind::kAtomic, ClassKind::kSourceSink}) {
      classes.push_back(DicutClass::of(k).resolve(d));
    }
    if (!in.dicuts.empty()) classes.push_back(min_dicut_class(d, Capacity(d)));
    for (const auto& cls : classes) {
      Contraction q = quotient(d, cls);
      for (const Dicut& b : cls) {
        Dicut p = q.project(b);
        bool ok = p.edges == b.edges;
        try {
          check_dicut(q.graph, p);
        } catch (const Error&) {
          ok = false;
        }
        t.expect(ok, [&] { return "dicut lost in the quotient of " + describe(d); });
      }
    }
    Contraction full = quotient(d, enumerate_dicuts(d, {.include_empty = true}));
    t.expect(is_acyclic(full.graph),
             [&] { return "full quotient has a cycle for " + describe(d); });
  }
  return report(9, "quotient", t, since(start));
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  std::vector<Instance> cat = catalogue();
  std::printf("catalogue: %zu digraphs (all with <= 7 edges, 500 random with <= 10), %.1f s\n",
              cat.size(), since(start));
  bool ok = true;
  ok &= criterion1(cat);
  ok &= criterion2(cat);
  ok &= criterion3(cat);
  ok &= criterion4(cat);
  ok &= criterion5();
  ok &= criterion6();
  ok &= criterion7(cat);
  ok &= criterion8(cat);
  ok &= criterion9(cat);
  std::printf("acceptance: %s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}
