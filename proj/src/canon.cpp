#include "mfs/canon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mfs/graph.hpp"

namespace mfs {

namespace {

void check_family(Family f) {
  if (f.size != 3 && f.size != 4) {
    throw Error("motif size must be 3 or 4, got " + std::to_string(f.size));
  }
}

// pair_bit lookup per family, -1 on the diagonal.
struct PairIndex {
  std::array<std::array<int, 4>, 4> bit{};
  std::vector<std::pair<int, int>> pairs;
};

PairIndex make_index(Family f) {
  PairIndex idx;
  for (auto& row : idx.bit) row.fill(-1);
  for (int i = 0; i < f.size; ++i) {
    for (int j = 0; j < f.size; ++j) {
      if (i == j || (!f.directed && j < i)) continue;
      idx.bit[i][j] = static_cast<int>(idx.pairs.size());
      if (!f.directed) idx.bit[j][i] = idx.bit[i][j];
      idx.pairs.emplace_back(i, j);
    }
  }
  return idx;
}

const PairIndex& index_for(Family f) {
  static const std::array<PairIndex, 4> kIndex{
      make_index(kAllFamilies[0]), make_index(kAllFamilies[1]), make_index(kAllFamilies[2]),
      make_index(kAllFamilies[3])};
  check_family(f);
  return kIndex[(f.size - 3) * 2 + (f.directed ? 1 : 0)];
}

}  // namespace

int pair_count(Family f) { return static_cast<int>(index_for(f).pairs.size()); }

int pair_bit(Family f, int i, int j) {
  const auto& idx = index_for(f);
  if (i < 0 || j < 0 || i >= f.size || j >= f.size || i == j) {
    throw Error("invalid vertex pair for motif size " + std::to_string(f.size));
  }
  return idx.bit[i][j];
}

std::uint32_t code_space(Family f) { return 1u << pair_count(f); }

std::string bit_order_description(Family f) {
  const auto& idx = index_for(f);
  std::string out;
  for (std::size_t b = 0; b < idx.pairs.size(); ++b) {
    if (b) out += ' ';
    out += '(' + std::to_string(idx.pairs[b].first) + ',' + std::to_string(idx.pairs[b].second) +
           ')';
  }
  return out;
}

std::uint32_t permute_code(Family f, std::uint32_t code, std::span<const int> perm) {
  const auto& idx = index_for(f);
  std::uint32_t out = 0;
  for (std::size_t b = 0; b < idx.pairs.size(); ++b) {
    if (code & (1u << b)) {
      auto [i, j] = idx.pairs[b];
      out |= 1u << idx.bit[perm[i]][perm[j]];
    }
  }
  return out;
}

std::array<std::array<bool, 4>, 4> undirected_adjacency(Family f, std::uint32_t code) {
  const auto& idx = index_for(f);
  std::array<std::array<bool, 4>, 4> adj{};
  for (std::size_t b = 0; b < idx.pairs.size(); ++b) {
    if (code & (1u << b)) {
      auto [i, j] = idx.pairs[b];
      adj[i][j] = adj[j][i] = true;
    }
  }
  return adj;
}

bool code_connected(Family f, std::uint32_t code) {
  auto adj = undirected_adjacency(f, code);
  unsigned seen = 1u;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int u = 0; u < f.size; ++u) {
      if (!(seen & (1u << u))) continue;
      for (int v = 0; v < f.size; ++v) {
        if (adj[u][v] && !(seen & (1u << v))) {
          seen |= 1u << v;
          grew = true;
        }
      }
    }
  }
  return seen == (1u << f.size) - 1;
}

ArrcodeTable ArrcodeTable::build(Family f) {
  check_family(f);
  ArrcodeTable t;
  t.family_ = f;
  const std::uint32_t space = code_space(f);

  std::vector<int> perm(f.size);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::uint32_t> minimal(space);
  for (std::uint32_t code = 0; code < space; ++code) {
    std::uint32_t best = code;
    for (const auto& p : perms) best = std::min(best, permute_code(f, code, p));
    minimal[code] = best;
  }

  // Canonical codes are exactly the fixed points of minimization; ascending
  // iteration numbers them in ascending order.
  std::map<std::uint32_t, int> id_of;
  for (std::uint32_t code = 0; code < space; ++code) {
    if (minimal[code] == code) {
      MotifClass c;
      c.family = f;
      c.class_id = static_cast<int>(t.classes_.size());
      c.canonical_code = code;
      c.connected = code_connected(f, code);
      id_of.emplace(code, c.class_id);
      t.classes_.push_back(c);
    }
  }
  t.entries_.resize(space);
  for (std::uint32_t code = 0; code < space; ++code) {
    int id = id_of.at(minimal[code]);
    t.entries_[code] = static_cast<std::uint16_t>(id);
    ++t.classes_[id].orbit_size;
  }
  return t;
}

int ArrcodeTable::classify(std::uint32_t code) const {
  if (code >= entries_.size()) {
    throw Error("code " + std::to_string(code) + " outside arrcode table of size " +
                std::to_string(entries_.size()));
  }
  return entries_[code];
}

std::size_t ArrcodeTable::connected_count() const {
  return static_cast<std::size_t>(
      std::count_if(classes_.begin(), classes_.end(), [](const auto& c) { return c.connected; }));
}

std::vector<int> ArrcodeTable::connected_class_ids() const {
  std::vector<int> ids;
  for (const auto& c : classes_) {
    if (c.connected) ids.push_back(c.class_id);
  }
  return ids;
}

const ArrcodeTable& arrcode(Family f) {
  check_family(f);
  static const std::array<ArrcodeTable, 4> kTables{
      ArrcodeTable::build(kAllFamilies[0]), ArrcodeTable::build(kAllFamilies[1]),
      ArrcodeTable::build(kAllFamilies[2]), ArrcodeTable::build(kAllFamilies[3])};
  return kTables[(f.size - 3) * 2 + (f.directed ? 1 : 0)];
}

ClassCounts class_counts(Family f) {
  const auto& t = arrcode(f);
  return {t.class_count(), t.connected_count()};
}

}  // namespace mfs
