#include "qpi/transcript.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

#include "qpi/bitio.hpp"

namespace qpi {

const char* protocol_name(ProtocolId id) {
  switch (id) {
    case ProtocolId::pm1_coset: return "pm1_coset";
    case ProtocolId::pm1_random_key: return "pm1_random_key";
    case ProtocolId::pm1_improved: return "pm1_improved";
    case ProtocolId::joint: return "joint";
    case ProtocolId::perfect: return "perfect";
    case ProtocolId::hard: return "hard";
    case ProtocolId::rou: return "rou";
    case ProtocolId::zpm1: return "zpm1";
  }
  throw std::invalid_argument("unknown protocol id");
}

namespace {

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xff));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<uint8_t>((v >> (8 * k)) & 0xff));
}

void put_f64(std::vector<uint8_t>& out, double v) {
  uint64_t bits;
  static_assert(sizeof(bits) == sizeof(v));
  std::memcpy(&bits, &v, sizeof(bits));
  for (int k = 0; k < 8; ++k) out.push_back(static_cast<uint8_t>((bits >> (8 * k)) & 0xff));
}

struct Cursor {
  const std::vector<uint8_t>& b;
  size_t pos = 0;

  uint8_t u8() {
    if (pos + 1 > b.size()) throw std::invalid_argument("transcript truncated");
    return b[pos++];
  }
  uint16_t u16() {
    uint16_t lo = u8(), hi = u8();
    return static_cast<uint16_t>(lo | (hi << 8));
  }
  uint32_t u32() {
    uint32_t v = 0;
    for (int k = 0; k < 4; ++k) v |= static_cast<uint32_t>(u8()) << (8 * k);
    return v;
  }
  double f64() {
    uint64_t bits = 0;
    for (int k = 0; k < 8; ++k) bits |= static_cast<uint64_t>(u8()) << (8 * k);
    double v;
    std::memcpy(&v, &bits, sizeof(v));
    return v;
  }
};

void put_section(std::vector<uint8_t>& out, const Transcript::ValueSection& s) {
  put_u32(out, static_cast<uint32_t>(s.re.size()));
  out.push_back(s.complex_values ? 1 : 0);
  for (size_t i = 0; i < s.re.size(); ++i) {
    put_f64(out, s.re[i]);
    if (s.complex_values) put_f64(out, s.im[i]);
  }
}

Transcript::ValueSection get_section(Cursor& c) {
  Transcript::ValueSection s;
  uint32_t count = c.u32();
  s.complex_values = c.u8() != 0;
  for (uint32_t i = 0; i < count; ++i) {
    s.re.push_back(c.f64());
    if (s.complex_values) s.im.push_back(c.f64());
  }
  return s;
}

}  // namespace

std::vector<uint8_t> Transcript::payload_bytes() const {
  std::vector<uint8_t> out;
  put_u32(out, static_cast<uint32_t>(query_bits.size()));
  BitWriter bw;
  for (uint8_t bit : query_bits) bw.put(bit != 0);
  out.insert(out.end(), bw.bytes().begin(), bw.bytes().end());
  for (const UserSection& u : users) {
    put_section(out, u.answers);
    put_section(out, u.decoded);
    put_section(out, u.direct);
  }
  return out;
}

std::vector<uint8_t> Transcript::serialize() const {
  std::vector<uint8_t> out = {'Q', 'P', 'I', '1'};
  out.push_back(static_cast<uint8_t>(protocol));
  for (int v : {n, t, m, q, p}) {
    if (v < 0 || v > 0xffff) throw std::invalid_argument("param out of u16 range");
    put_u16(out, static_cast<uint16_t>(v));
  }
  put_u16(out, static_cast<uint16_t>(set.size()));
  for (const Rational& r : set) {
    mpz_class num = r.get_num(), den = r.get_den();
    if (num < -32768 || num > 32767 || den < 1 || den > 65535)
      throw std::invalid_argument("set element out of i16/u16 range");
    put_u16(out, static_cast<uint16_t>(static_cast<int16_t>(num.get_si())));
    put_u16(out, static_cast<uint16_t>(den.get_ui()));
  }
  put_u16(out, static_cast<uint16_t>(users.size()));
  std::vector<uint8_t> payload = payload_bytes();
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Transcript Transcript::parse(const std::vector<uint8_t>& bytes) {
  Cursor c{bytes};
  if (bytes.size() < 5 || bytes[0] != 'Q' || bytes[1] != 'P' || bytes[2] != 'I' || bytes[3] != '1')
    throw std::invalid_argument("bad transcript magic");
  c.pos = 4;
  Transcript t;
  t.protocol = static_cast<ProtocolId>(c.u8());
  protocol_name(t.protocol);  // validates the id
  t.n = c.u16();
  t.t = c.u16();
  t.m = c.u16();
  t.q = c.u16();
  t.p = c.u16();
  uint16_t k = c.u16();
  for (uint16_t i = 0; i < k; ++i) {
    int16_t num = static_cast<int16_t>(c.u16());
    uint16_t den = c.u16();
    if (den == 0) throw std::invalid_argument("set element denominator is zero");
    Rational v(static_cast<long>(num), static_cast<unsigned long>(den));
    v.canonicalize();
    t.set.push_back(v);
  }
  uint16_t user_count = c.u16();
  uint32_t bit_count = c.u32();
  size_t nbytes = (bit_count + 7) / 8;
  if (c.pos + nbytes > bytes.size()) throw std::invalid_argument("transcript truncated");
  BitReader br(bytes.data() + c.pos, bit_count);
  for (uint32_t i = 0; i < bit_count; ++i) t.query_bits.push_back(br.get() ? 1 : 0);
  c.pos += nbytes;
  for (uint16_t u = 0; u < user_count; ++u) {
    UserSection s;
    s.answers = get_section(c);
    s.decoded = get_section(c);
    s.direct = get_section(c);
    t.users.push_back(std::move(s));
  }
  if (c.pos != bytes.size()) throw std::invalid_argument("trailing bytes in transcript");
  return t;
}

void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  return std::vector<uint8_t>((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
}

}  // namespace qpi
