#include "cdlat/bitset.hpp"

#include <algorithm>
#include <utility>

namespace cdlat {

std::vector<std::uint32_t> Bitset::elements() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
  return out;
}

std::size_t Bitset::hash() const noexcept {
  // splitmix-style mixing per word
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
  for (Word w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

std::string Bitset::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t bytes = (size_ + 7) / 8;
  std::string out;
  out.reserve(bytes * 2);
  for (std::size_t k = 0; k < bytes; ++k) {
    const auto byte = static_cast<unsigned>((words_[k / 8] >> ((k % 8) * 8)) & 0xffU);
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xfU]);
  }
  return out;
}

namespace {
int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

bool Bitset::from_hex(std::string_view hex, std::size_t size, Bitset& out) {
  const std::size_t bytes = (size + 7) / 8;
  if (hex.size() != bytes * 2) return false;
  Bitset b(size);
  for (std::size_t k = 0; k < bytes; ++k) {
    const int hi = hex_value(hex[2 * k]);
    const int lo = hex_value(hex[2 * k + 1]);
    if (hi < 0 || lo < 0) return false;
    const auto byte = static_cast<Word>(hi * 16 + lo);
    b.words_[k / 8] |= byte << ((k % 8) * 8);
  }
  if (size % kWordBits != 0 && !b.words_.empty()) {
    const Word mask = (Word{1} << (size % kWordBits)) - 1;
    if (b.words_.back() & ~mask) return false;
  }
  out = std::move(b);
  return true;
}

bool lex_less(const Bitset& a, const Bitset& b) noexcept {
  const auto& wa = a.words();
  const auto& wb = b.words();
  const std::size_t n = std::min(wa.size(), wb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Bitset::Word diff = wa[i] ^ wb[i];
    if (diff) {
      const Bitset::Word low = diff & (~diff + 1);
      return (wb[i] & low) != 0;
    }
  }
  return wa.size() < wb.size();
}

}  // namespace cdlat
