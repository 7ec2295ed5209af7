#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpi/rational.hpp"

namespace qpi {

enum class ProtocolId : uint8_t {
  pm1_coset = 1,
  pm1_random_key = 2,
  pm1_improved = 3,
  joint = 4,
  perfect = 5,
  hard = 6,
  rou = 7,
  zpm1 = 8,
};

const char* protocol_name(ProtocolId id);

/* Binary transcript of one protocol session (one published query, one or
 * more users). Layout, all integers little-endian:
 *
 *   magic "QPI1" | protocol id u8
 *   n u16 | t u16 | m u16 | q u16 | p u16
 *   set count u16 | per element: numerator i16, denominator u16
 *   user count u16
 *   query bit count u32 | packed query bits (MSB-first, zero-padded to byte)
 *   per user: answers, decoded, direct sections, each:
 *     value count u32 | complex flag u8 | values f64 (re,im pairs if complex)
 *
 * Query-bit wire order by protocol: pm1 coset — syndrome rows; pm1 basic —
 * masked entries by index; pm1 improved — block tails, blocks ascending;
 * joint/perfect — partition rank (width ceil(log2 S(n,t)), MSB-first), then
 * per syndrome row the m coefficients x^0..x^{m-1}; hard — masked tails,
 * anchor rows ascending then blocks ascending; rou/zpm1 — masked exponent
 * symbols at ceil(log2 p) bits each, MSB-first, blocks ascending. */
struct Transcript {
  ProtocolId protocol = ProtocolId::pm1_coset;
  int n = 0, t = 0, m = 0, q = 0, p = 0;
  std::vector<Rational> set;
  std::vector<uint8_t> query_bits;  // one 0/1 entry per wire bit

  struct ValueSection {
    bool complex_values = false;
    std::vector<double> re;
    std::vector<double> im;  // parallel to re when complex
  };
  struct UserSection {
    ValueSection answers, decoded, direct;
  };
  std::vector<UserSection> users;

  int d_bits() const { return static_cast<int>(query_bits.size()); }

  std::vector<uint8_t> serialize() const;
  static Transcript parse(const std::vector<uint8_t>& bytes);

  /* Bytes of everything after the params header (query + user sections);
   * used to compare protocol payloads across protocol families. */
  std::vector<uint8_t> payload_bytes() const;
};

void write_file(const std::string& path, const std::vector<uint8_t>& bytes);
std::vector<uint8_t> read_file(const std::string& path);

}  // namespace qpi
