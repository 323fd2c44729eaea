#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace oddholes {

// A set of vertex indices in 0..63, stored as one machine word.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  // {0, 1, ..., n-1}
  static VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  bool contains(int v) const { return bits_ >> v & 1; }
  void add(int v) { bits_ |= std::uint64_t{1} << v; }
  void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  int min() const { return std::countr_zero(bits_); }

  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  bool operator==(const VertexSet&) const = default;

  std::uint64_t bits() const { return bits_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = bits_; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Orders sets by their sorted vertex sequences, e.g. {1,4} before {2,3}
// and {1,2} before {1,2,3}.
bool lex_less(VertexSet a, VertexSet b);

}  // namespace oddholes
