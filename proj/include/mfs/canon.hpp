#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mfs {

// Subgraph codes
// --------------
// A subgraph on k ordered vertices (k = 3 or 4) is encoded as a bitmask with
// one bit per vertex pair. Pairs are listed in lexicographic order and bit 0 is
// the first pair:
//
//   undirected, k=3: (0,1) (0,2) (1,2)                       -> 3 bits
//   undirected, k=4: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)     -> 6 bits
//   directed,   k=3: (0,1) (0,2) (1,0) (1,2) (2,0) (2,1)     -> 6 bits
//   directed,   k=4: (0,1) (0,2) (0,3) (1,0) (1,2) (1,3)
//                    (2,0) (2,1) (2,3) (3,0) (3,1) (3,2)     -> 12 bits
//
// For directed codes the bit for (i,j) is the arc i->j.

struct Family {
  int size = 3;
  bool directed = false;

  friend bool operator==(const Family&, const Family&) = default;
};

inline constexpr std::array<Family, 4> kAllFamilies{
    Family{3, false}, Family{3, true}, Family{4, false}, Family{4, true}};

int pair_count(Family f);
// Bit index of the pair (i,j); for undirected families (i,j) and (j,i) agree.
int pair_bit(Family f, int i, int j);
std::uint32_t code_space(Family f);  // 1 << pair_count
std::string bit_order_description(Family f);

// Code of the same graph after relabeling vertex v as perm[v].
std::uint32_t permute_code(Family f, std::uint32_t code, std::span<const int> perm);
// Weak connectivity of the graph a code describes.
bool code_connected(Family f, std::uint32_t code);
// Undirected 4x4 adjacency of a code (orientation dropped).
std::array<std::array<bool, 4>, 4> undirected_adjacency(Family f, std::uint32_t code);

struct MotifClass {
  Family family;
  int class_id = 0;
  std::uint32_t canonical_code = 0;  // minimum over all vertex permutations
  bool connected = false;
  std::uint32_t orbit_size = 0;      // raw codes mapping to this class
};

// Lookup from every raw code of a family to its isomorphism class. Classes are
// numbered in ascending order of canonical code.
class ArrcodeTable {
 public:
  static ArrcodeTable build(Family f);

  Family family() const { return family_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const std::uint16_t> entries() const { return entries_; }
  std::span<const MotifClass> classes() const { return classes_; }
  const MotifClass& motif(int class_id) const { return classes_.at(class_id); }

  // Throws mfs::Error when code is outside the table.
  int classify(std::uint32_t code) const;
  int classify_unchecked(std::uint32_t code) const { return entries_[code]; }

  std::size_t class_count() const { return classes_.size(); }
  std::size_t connected_count() const;
  std::vector<int> connected_class_ids() const;

 private:
  Family family_;
  std::vector<std::uint16_t> entries_;
  std::vector<MotifClass> classes_;
};

// Memoized, built on first use; safe to call from multiple threads.
const ArrcodeTable& arrcode(Family f);

struct ClassCounts {
  std::size_t total = 0;
  std::size_t connected = 0;
};
ClassCounts class_counts(Family f);

}  // namespace mfs
