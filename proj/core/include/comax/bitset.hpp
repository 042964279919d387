#ifndef COMAX_BITSET_HPP
#define COMAX_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace comax
{

/**
 * A dynamically sized bitset over indices 0..size()-1.
 *
 * Element sets of subgroups and adjacency rows of graphs are both stored
 * this way, so that intersections and containment tests are word-parallel.
 * Bits at positions >= size() are always zero.
 */
class Bitset
{
public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;

  explicit Bitset(std::size_t size)
  : _size(size), _words((size + word_bits - 1) / word_bits, 0)
  {}

  std::size_t size() const { return _size; }

  void set(std::size_t i) { _words[i / word_bits] |= Word{1} << (i % word_bits); }
  void reset(std::size_t i) { _words[i / word_bits] &= ~(Word{1} << (i % word_bits)); }

  bool test(std::size_t i) const
  { return (_words[i / word_bits] >> (i % word_bits)) & 1U; }

  void set_all()
  {
    for (auto &w : _words)
      w = ~Word{0};
    trim();
  }

  void clear()
  {
    for (auto &w : _words)
      w = 0;
  }

  std::size_t count() const
  {
    std::size_t c = 0;
    for (auto w : _words)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const
  {
    for (auto w : _words)
      if (w)
        return true;
    return false;
  }

  bool none() const { return !any(); }

  /// First set index, or npos.
  std::size_t first() const { return next(0); }

  /// First set index >= from, or npos.
  std::size_t next(std::size_t from) const
  {
    if (from >= _size)
      return npos;
    std::size_t wi = from / word_bits;
    Word w = _words[wi] & (~Word{0} << (from % word_bits));
    while (true) {
      if (w)
        return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == _words.size())
        return npos;
      w = _words[wi];
    }
  }

  template <typename F>
  void for_each(F &&f) const
  {
    for (std::size_t wi = 0; wi < _words.size(); ++wi) {
      Word w = _words[wi];
      while (w) {
        f(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const
  {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  Bitset &operator&=(const Bitset &o)
  {
    for (std::size_t i = 0; i < _words.size(); ++i)
      _words[i] &= o._words[i];
    return *this;
  }

  Bitset &operator|=(const Bitset &o)
  {
    for (std::size_t i = 0; i < _words.size(); ++i)
      _words[i] |= o._words[i];
    return *this;
  }

  /// this &= ~o
  Bitset &subtract(const Bitset &o)
  {
    for (std::size_t i = 0; i < _words.size(); ++i)
      _words[i] &= ~o._words[i];
    return *this;
  }

  Bitset complement() const
  {
    Bitset out = *this;
    for (auto &w : out._words)
      w = ~w;
    out.trim();
    return out;
  }

  friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset &b) { return a |= b; }

  std::size_t intersection_count(const Bitset &o) const
  {
    std::size_t c = 0;
    for (std::size_t i = 0; i < _words.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(_words[i] & o._words[i]));
    return c;
  }

  bool intersects(const Bitset &o) const
  {
    for (std::size_t i = 0; i < _words.size(); ++i)
      if (_words[i] & o._words[i])
        return true;
    return false;
  }

  bool is_subset_of(const Bitset &o) const
  {
    for (std::size_t i = 0; i < _words.size(); ++i)
      if (_words[i] & ~o._words[i])
        return false;
    return true;
  }

  /**
   * Ordering of two sets by their ascending index lists compared
   * lexicographically. Only meaningful for sets of equal cardinality, which
   * is how subgroup canonical order uses it.
   */
  bool lex_less(const Bitset &o) const
  {
    for (std::size_t i = 0; i < _words.size(); ++i) {
      Word diff = _words[i] ^ o._words[i];
      if (diff) {
        Word low = diff & (~diff + 1);
        return (_words[i] & low) != 0;
      }
    }
    return false;
  }

  const std::vector<Word> &words() const { return _words; }

  friend bool operator==(const Bitset &, const Bitset &) = default;

private:
  void trim()
  {
    if (_size % word_bits && !_words.empty())
      _words.back() &= (Word{1} << (_size % word_bits)) - 1;
  }

  std::size_t _size = 0;
  std::vector<Word> _words;
};

struct BitsetHash
{
  std::size_t operator()(const Bitset &b) const noexcept
  {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ b.size();
    for (auto w : b.words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

} // namespace comax

#endif // COMAX_BITSET_HPP
