#include "membrane/digest.hpp"

#include <openssl/evp.h>

#include "membrane/errors.hpp"

namespace membrane {

Digest sha256(const std::uint8_t* data, std::size_t len) {
    Digest out{};
    unsigned int out_len = 0;
    if (EVP_Digest(data, len, out.data(), &out_len, EVP_sha256(), nullptr) != 1 ||
        out_len != out.size()) {
        throw Error("sha256: digest computation failed");
    }
    return out;
}

Digest sha256(const std::vector<std::uint8_t>& data) {
    return sha256(data.data(), data.size());
}

std::string to_hex(const Digest& d) {
    static const char* hex = "0123456789abcdef";
    std::string s;
    s.reserve(d.size() * 2);
    for (std::uint8_t b : d) {
        s.push_back(hex[b >> 4]);
        s.push_back(hex[b & 0x0f]);
    }
    return s;
}

void ByteWriter::u32be(std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) {
        buf_.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
    }
}

void ByteWriter::u64be(std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        buf_.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
    }
}

void ByteWriter::i64be(std::int64_t v) { u64be(static_cast<std::uint64_t>(v)); }

void ByteWriter::raw(const std::uint8_t* data, std::size_t len) {
    buf_.insert(buf_.end(), data, data + len);
}

void ByteWriter::bytes(const std::vector<std::uint8_t>& v) {
    u64be(v.size());
    raw(v.data(), v.size());
}

void ByteWriter::str(const std::string& s) {
    u64be(s.size());
    raw(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}

void ByteReader::need(std::size_t n) const {
    if (pos_ + n > buf_.size()) {
        throw Error("byte reader: truncated input");
    }
}

std::uint8_t ByteReader::u8() {
    need(1);
    return buf_[pos_++];
}

std::uint32_t ByteReader::u32be() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | buf_[pos_++];
    return v;
}

std::uint64_t ByteReader::u64be() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | buf_[pos_++];
    return v;
}

std::int64_t ByteReader::i64be() { return static_cast<std::int64_t>(u64be()); }

std::vector<std::uint8_t> ByteReader::bytes() {
    std::uint64_t n = u64be();
    need(n);
    std::vector<std::uint8_t> v(buf_.begin() + pos_, buf_.begin() + pos_ + n);
    pos_ += n;
    return v;
}

std::string ByteReader::str() {
    std::uint64_t n = u64be();
    need(n);
    std::string s(reinterpret_cast<const char*>(buf_.data() + pos_), n);
    pos_ += n;
    return s;
}

Digest ByteReader::digest() {
    need(32);
    Digest d{};
    std::copy(buf_.begin() + pos_, buf_.begin() + pos_ + 32, d.begin());
    pos_ += 32;
    return d;
}

}  // namespace membrane
