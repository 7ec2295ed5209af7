#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qpi {

/* MSB-first bit packing: the first bit written lands in the most significant
 * bit of the first byte; the final byte is zero-padded. */
class BitWriter {
 public:
  void put(bool bit) {
    if (used_ == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<uint8_t>(1u << (7 - used_));
    used_ = (used_ + 1) & 7;
  }

  /* Low `width` bits of v, most significant first. */
  void put_uint(uint64_t v, int width) {
    for (int k = width - 1; k >= 0; --k) put((v >> k) & 1u);
  }

  size_t bit_count() const { return bytes_.empty() ? 0 : (bytes_.size() - 1) * 8 + (used_ == 0 ? 8 : used_); }
  const std::vector<uint8_t>& bytes() const { return bytes_; }

 private:
  std::vector<uint8_t> bytes_;
  int used_ = 0;  // bits used in the last byte, 0 meaning full/empty
};

class BitReader {
 public:
  BitReader(const uint8_t* data, size_t bit_count) : data_(data), bits_(bit_count) {}

  bool get() {
    if (pos_ >= bits_) throw std::out_of_range("bit stream exhausted");
    bool b = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
    ++pos_;
    return b;
  }

  uint64_t get_uint(int width) {
    uint64_t v = 0;
    for (int k = 0; k < width; ++k) v = (v << 1) | (get() ? 1u : 0u);
    return v;
  }

  size_t remaining() const { return bits_ - pos_; }

 private:
  const uint8_t* data_;
  size_t bits_;
  size_t pos_ = 0;
};

}  // namespace qpi
