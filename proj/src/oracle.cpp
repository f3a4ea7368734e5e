#include "dijoin/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "dijoin/packing.hpp"

namespace dijoin {
namespace {

class SlotSearch {
 public:
  SlotSearch(std::vector<std::int64_t> reach, std::vector<std::vector<int>> sets,
             std::int64_t k, std::uint64_t max_nodes)
      : reach_(std::move(reach)),
        k_(static_cast<int>(k)),
        max_nodes_(max_nodes),
        missing_(sets.size(), static_cast<int>(k)),
        hits_(sets.size() * static_cast<std::size_t>(k), 0),
        member_of_(reach_.size()),
        slots_of_(reach_.size()) {
    // Remaining reach of each set after each of its elements.
    for (std::size_t h = 0; h < sets.size(); ++h) {
      std::vector<int> pos = sets[h];
      std::sort(pos.begin(), pos.end());
      std::int64_t rest = 0;
      for (int p : pos) rest += reach_[p];
      for (int p : pos) {
        rest -= reach_[p];
        member_of_[p].push_back({static_cast<int>(h), rest});
      }
    }
  }

  bool run() { return step(0, 0); }

  std::vector<std::vector<int>> slots() const {
    std::vector<std::vector<int>> out(k_);
    for (std::size_t p = 0; p < slots_of_.size(); ++p) {
      for (int s : slots_of_[p]) out[s].push_back(static_cast<int>(p));
    }
    return out;
  }

 private:
  struct Membership {
    int set;
    std::int64_t rest;
  };

  bool step(std::size_t p, int used) {
    if (p == reach_.size()) return true;
    const int r = static_cast<int>(std::min<std::int64_t>(reach_[p], k_));
    // t fresh slots (used, used+1, ...) plus r - t of the used ones.
    for (int t = std::min(r, k_ - used); t >= 0; --t) {
      if (r - t > used) break;
      std::vector<int> pick(r - t);
      for (int i = 0; i < r - t; ++i) pick[i] = i;
      while (true) {
        if (++nodes_ > max_nodes_) {
          throw Error(ErrorCode::kCapExceeded, "oracle node cap exceeded");
        }
        auto& chosen = slots_of_[p];
        chosen = pick;
        for (int i = 0; i < t; ++i) chosen.push_back(used + i);
        if (apply(p) && step(p + 1, used + t)) return true;
        undo(p);
        if (!next_combination(pick, used)) break;
      }
    }
    slots_of_[p].clear();
    return false;
  }

  static bool next_combination(std::vector<int>& pick, int n) {
    const int r = static_cast<int>(pick.size());
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    return true;
  }

  bool apply(std::size_t p) {
    bool ok = true;
    for (const Membership& m : member_of_[p]) {
      for (int s : slots_of_[p]) {
        if (hits_[static_cast<std::size_t>(m.set) * k_ + s]++ == 0) {
          --missing_[m.set];
        }
      }
      if (missing_[m.set] > m.rest) ok = false;
    }
    return ok;
  }

  void undo(std::size_t p) {
    for (const Membership& m : member_of_[p]) {
      for (int s : slots_of_[p]) {
        if (--hits_[static_cast<std::size_t>(m.set) * k_ + s] == 0) {
          ++missing_[m.set];
        }
      }
    }
  }

  std::vector<std::int64_t> reach_;
  int k_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<int> missing_;
  std::vector<int> hits_;  // per (set, slot)
  std::vector<std::vector<Membership>> member_of_;
  std::vector<std::vector<int>> slots_of_;
};

}  // namespace

std::optional<std::vector<std::vector<int>>> find_hitting_slots(
    const std::vector<int>& elements, const std::vector<std::int64_t>& multiplicity,
    const std::vector<std::vector<int>>& sets, std::int64_t k,
    const OracleCaps& caps) {
  if (k <= 0) return std::vector<std::vector<int>>{};
  std::vector<int> ids;
  std::vector<std::int64_t> reach;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (multiplicity[i] <= 0) continue;
    ids.push_back(elements[i]);
    reach.push_back(std::min(multiplicity[i], k));
  }
  if (ids.size() > caps.max_elements) {
    throw Error(ErrorCode::kCapExceeded,
                "oracle limited to " + std::to_string(caps.max_elements) +
                    " positive elements");
  }
  if (k > std::numeric_limits<int>::max() / 2) {
    throw Error(ErrorCode::kCapExceeded, "oracle slot count too large");
  }
  std::vector<std::vector<int>> dense;
  for (const auto& set : sets) {
    std::vector<int> pos;
    std::int64_t total = 0;
    for (int x : set) {
      auto it = std::find(ids.begin(), ids.end(), x);
      if (it == ids.end()) continue;
      pos.push_back(static_cast<int>(it - ids.begin()));
      total += reach[pos.back()];
    }
    if (total < k) return std::nullopt;
    dense.push_back(std::move(pos));
  }
  SlotSearch search(reach, std::move(dense), k, caps.max_nodes);
  if (!search.run()) return std::nullopt;
  auto slots = search.slots();
  for (auto& slot : slots) {
    for (int& p : slot) p = ids[p];
  }
  return slots;
}

WoodallReport max_disjoint_dijoins(const Digraph& d, const std::vector<Dicut>& cls,
                                   const Capacity* c, const OracleCaps& caps) {
  if (cls.empty()) throw Error(ErrorCode::kEmptyClass, "empty dicut class");
  Capacity unit(d);
  const Capacity& cap = c ? *c : unit;
  cap.check_defined_on(d);

  WoodallReport report;
  report.min_size = std::numeric_limits<std::int64_t>::max();
  std::set<EdgeSet> distinct;
  for (const Dicut& b : cls) {
    report.min_size = std::min(report.min_size, cap.total(b.edges));
    distinct.insert(b.edges);
  }

  std::vector<int> elements;
  std::vector<std::int64_t> multiplicity;
  for (const Edge& e : d.edges()) {
    elements.push_back(index(e.id));
    multiplicity.push_back(cap[e.id]);
  }
  std::vector<std::vector<int>> sets;
  for (const EdgeSet& s : distinct) {
    std::vector<int> set;
    for (EdgeId e : s) set.push_back(index(e));
    sets.push_back(std::move(set));
  }

  for (std::int64_t k = report.min_size; k >= 0; --k) {
    auto slots = find_hitting_slots(elements, multiplicity, sets, k, caps);
    if (!slots) continue;
    report.max_packing = k;
    for (const auto& slot : *slots) {
      EdgeSet f;
      for (int e : slot) f.push_back(static_cast<EdgeId>(e));
      std::sort(f.begin(), f.end());
      report.witness.push_back(std::move(f));
    }
    break;
  }
  if (report.max_packing > report.min_size) {
    throw Error(ErrorCode::kInternal, "oracle exceeded the minimum capacity");
  }
  report.woodall = report.max_packing == report.min_size;
  return report;
}

WoodallReport check_woodall(const Digraph& d, const DicutClass& cls,
                            const Capacity* c, const OracleCaps& caps) {
  std::vector<Dicut> resolved = cls.resolve(d, c);
  WoodallReport report = max_disjoint_dijoins(d, resolved, c, caps);

  std::optional<Packing> constructive;
  if (cls.kind() == ClassKind::kMin) {
    constructive = pack_min(d, c ? *c : Capacity(d));
  } else if (c == nullptr || c->is_unit(d)) {
    std::optional<NestedRepresentation> nested;
    try {
      nested = find_nested_representation(d, resolved);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooLarge) throw;
    }
    if (nested) constructive = pack_nested(d, resolved);
  }
  if (constructive) {
    report.constructive_k = static_cast<std::int64_t>(constructive->dijoins.size());
    if (*report.constructive_k != report.max_packing) {
      throw Error(ErrorCode::kInternal,
                  "constructive packing size " +
                      std::to_string(*report.constructive_k) +
                      " disagrees with oracle maximum " +
                      std::to_string(report.max_packing));
    }
  }
  return report;
}

std::vector<std::vector<int>> max_disjoint_transversals(const Hypergraph& h,
                                                        const OracleCaps& caps) {
  if (h.hyperedges.empty()) return {};
  std::vector<std::int64_t> ones(h.ground.size(), 1);
  for (auto k = static_cast<std::int64_t>(h.min_edge_size()); k > 0; --k) {
    if (auto slots = find_hitting_slots(h.ground, ones, h.hyperedges, k, caps)) {
      return *slots;
    }
  }
  return {};
}

}  // namespace dijoin
