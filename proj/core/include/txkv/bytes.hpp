#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <string_view>

namespace txkv {

// Values and keys are opaque byte strings.
using Bytes = std::string;

// Big-endian binary writer used by the WAL, the node-to-node envelope and
// resync snapshots. All multi-byte integers on disk and on the wire are
// big-endian.
class BinWriter {
 public:
  void u8(uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u16(uint16_t v) {
    u8(static_cast<uint8_t>(v >> 8));
    u8(static_cast<uint8_t>(v));
  }
  void u32(uint32_t v) {
    u16(static_cast<uint16_t>(v >> 16));
    u16(static_cast<uint16_t>(v));
  }
  void u64(uint64_t v) {
    u32(static_cast<uint32_t>(v >> 32));
    u32(static_cast<uint32_t>(v));
  }
  void raw(std::string_view bytes) { out_.append(bytes); }
  // 4-byte length prefix followed by the bytes.
  void blob(std::string_view bytes) {
    u32(static_cast<uint32_t>(bytes.size()));
    raw(bytes);
  }

  const Bytes& bytes() const { return out_; }
  Bytes take() { return std::move(out_); }
  size_t size() const { return out_.size(); }
  // Patches a previously written u32 at `pos` (for length back-fill).
  void patch_u32(size_t pos, uint32_t v) {
    out_[pos] = static_cast<char>(v >> 24);
    out_[pos + 1] = static_cast<char>(v >> 16);
    out_[pos + 2] = static_cast<char>(v >> 8);
    out_[pos + 3] = static_cast<char>(v);
  }

 private:
  Bytes out_;
};

struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class BinReader {
 public:
  explicit BinReader(std::string_view in) : in_(in) {}

  bool empty() const { return pos_ >= in_.size(); }
  size_t remaining() const { return in_.size() - pos_; }
  size_t pos() const { return pos_; }

  uint8_t u8() {
    need(1);
    return static_cast<uint8_t>(in_[pos_++]);
  }
  uint16_t u16() { return static_cast<uint16_t>(u8()) << 8 | u8(); }
  uint32_t u32() { return static_cast<uint32_t>(u16()) << 16 | u16(); }
  uint64_t u64() { return static_cast<uint64_t>(u32()) << 32 | u32(); }
  std::string_view raw(size_t n) {
    need(n);
    std::string_view v = in_.substr(pos_, n);
    pos_ += n;
    return v;
  }
  Bytes blob() {
    uint32_t n = u32();
    if (n > remaining()) throw DecodeError("blob length exceeds input");
    return Bytes(raw(n));
  }

 private:
  void need(size_t n) {
    if (remaining() < n) throw DecodeError("input truncated");
  }
  std::string_view in_;
  size_t pos_ = 0;
};

// Escapes a byte string for single-line text output (trace files, CLI):
// printable ASCII except backslash/space/comma/equals kept verbatim, the
// rest rendered as \xNN.
inline std::string escape_bytes(std::string_view in) {
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(in.size());
  for (unsigned char c : in) {
    if (c > 0x20 && c < 0x7f && c != '\\' && c != ',' && c != '=') {
      out.push_back(static_cast<char>(c));
    } else {
      out += "\\x";
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 0xf]);
    }
  }
  return out;
}

}  // namespace txkv
