#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace membrane {

using Digest = std::array<std::uint8_t, 32>;

inline constexpr Digest kZeroDigest{};

Digest sha256(const std::uint8_t* data, std::size_t len);
Digest sha256(const std::vector<std::uint8_t>& data);

std::string to_hex(const Digest& d);

// Canonical byte encoder used for every hashed or persisted structure.
// Conventions are fixed: big-endian fixed-width integers, u64 length
// prefixes for strings and sequences, map entries sorted by key.
class ByteWriter {
  public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u32be(std::uint32_t v);
    void u64be(std::uint64_t v);
    void i64be(std::int64_t v);
    void raw(const std::uint8_t* data, std::size_t len);
    void bytes(const std::vector<std::uint8_t>& v);   // length-prefixed
    void str(const std::string& s);                   // length-prefixed
    void digest(const Digest& d) { raw(d.data(), d.size()); }

    const std::vector<std::uint8_t>& data() const { return buf_; }
    std::vector<std::uint8_t> take() { return std::move(buf_); }

  private:
    std::vector<std::uint8_t> buf_;
};

// Cursor-style reader matching ByteWriter's conventions. Throws
// membrane::Error on truncated input.
class ByteReader {
  public:
    explicit ByteReader(const std::vector<std::uint8_t>& buf) : buf_(buf) {}

    std::uint8_t u8();
    std::uint32_t u32be();
    std::uint64_t u64be();
    std::int64_t i64be();
    std::vector<std::uint8_t> bytes();
    std::string str();
    Digest digest();
    bool done() const { return pos_ == buf_.size(); }

  private:
    void need(std::size_t n) const;
    const std::vector<std::uint8_t>& buf_;
    std::size_t pos_ = 0;
};

}  // namespace membrane
