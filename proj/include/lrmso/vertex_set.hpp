#pragma once

// VertexSet: fixed-universe subset of {0, ..., n-1}, packed into 64-bit words.
// This is the universal currency for cut sides X and their complements,
// suffixes, seed components, parameter halves, and quantified set values.
// All binary operations require operands over the same universe size.

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace lrmso {

class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe)
      : n_(universe), words_((universe + 63) / 64, 0) {
    assert(universe >= 0);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int w = 0; w < static_cast<int>(s.words_.size()); ++w)
      s.words_[w] = ~0ULL;
    s.clear_tail();
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
  }

  static VertexSet of(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int v) const {
    assert(v >= 0 && v < n_);
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  void add(int v) {
    assert(v >= 0 && v < n_);
    words_[v >> 6] |= 1ULL << (v & 63);
  }

  void remove(int v) {
    assert(v >= 0 && v < n_);
    words_[v >> 6] &= ~(1ULL << (v & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const = default;

  VertexSet operator|(const VertexSet& o) const {
    VertexSet r = with(o);
    for (std::size_t i = 0; i < r.words_.size(); ++i)
      r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r = with(o);
    for (std::size_t i = 0; i < r.words_.size(); ++i)
      r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  VertexSet operator^(const VertexSet& o) const {
    VertexSet r = with(o);
    for (std::size_t i = 0; i < r.words_.size(); ++i)
      r.words_[i] = words_[i] ^ o.words_[i];
    return r;
  }

  // Set difference: members of *this that are not in o.
  VertexSet minus(const VertexSet& o) const {
    VertexSet r = with(o);
    for (std::size_t i = 0; i < r.words_.size(); ++i)
      r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }

  VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
  VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
  VertexSet& operator^=(const VertexSet& o) { return *this = *this ^ o; }

  VertexSet complement() const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.clear_tail();
    return r;
  }

  bool subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // Smallest member, or -1 when empty.
  int first() const { return next(0); }

  // Smallest member >= from, or -1.
  int next(int from) const {
    if (from >= n_) return -1;
    if (from < 0) from = 0;
    std::size_t w = static_cast<std::size_t>(from) >> 6;
    std::uint64_t cur = words_[w] & (~0ULL << (from & 63));
    while (true) {
      if (cur) return static_cast<int>(w * 64 + std::countr_zero(cur));
      if (++w >= words_.size()) return -1;
      cur = words_[w];
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  // Canonical order: lexicographic on the ascending member sequence, so
  // {} < {0} < {0,1} < {0,2} < {1}. Used wherever set families are sorted.
  bool operator<(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t a = words_[i], b = o.words_[i];
      if (a == b) continue;
      std::uint64_t diff = a ^ b;
      int d = static_cast<int>(i * 64 + std::countr_zero(diff));
      bool we_hold = contains(d);
      // Both sequences agree below d. The holder's next element is d, the
      // other's is its next member beyond d — or nothing, in which case the
      // other sequence is a strict prefix and sorts first.
      const VertexSet& other = we_hold ? o : *this;
      if (other.next(d + 1) >= 0) return we_hold;
      return !we_hold;
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>()(n_);
    for (std::uint64_t w : words_)
      h ^= std::hash<std::uint64_t>()(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    return h;
  }

  std::string str() const {
    std::string out = "{";
    bool sep = false;
    for (int v = first(); v >= 0; v = next(v + 1)) {
      if (sep) out += ",";
      out += std::to_string(v);
      sep = true;
    }
    return out + "}";
  }

 private:
  VertexSet with(const VertexSet& o) const {
    assert(n_ == o.n_);
    (void)o;
    return VertexSet(n_);
  }

  void clear_tail() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (1ULL << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace lrmso
