// Copyright 2026 The dcjpeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dcjpeg/jpeg_stream.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>

#include "dcjpeg/errors.hpp"

namespace dcjpeg {

const std::array<int, 64> kZigzagToNatural = {
    0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,   //
    12, 19, 26, 33, 40, 48, 41, 34, 27, 20, 13, 6,  7,  14, 21, 28,  //
    35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23, 30, 37, 44, 51,  //
    58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63};

namespace {

constexpr std::uint8_t kSOI = 0xD8;
constexpr std::uint8_t kEOI = 0xD9;
constexpr std::uint8_t kSOF0 = 0xC0;
constexpr std::uint8_t kSOF1 = 0xC1;
constexpr std::uint8_t kDHT = 0xC4;
constexpr std::uint8_t kDQT = 0xDB;
constexpr std::uint8_t kDRI = 0xDD;
constexpr std::uint8_t kSOS = 0xDA;
constexpr std::uint8_t kAPP0 = 0xE0;
constexpr std::uint8_t kCOM = 0xFE;

// Annex K.3 luminance tables.
constexpr std::array<std::uint8_t, 16> kDcLumaBits = {0, 1, 5, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0};
constexpr std::array<std::uint8_t, 12> kDcLumaValues = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
constexpr std::array<std::uint8_t, 16> kAcLumaBits = {0, 2, 1, 3, 3, 2, 4, 3, 5, 5, 4, 4, 0, 0, 1, 125};
constexpr std::array<std::uint8_t, 162> kAcLumaValues = {
    0x01, 0x02, 0x03, 0x00, 0x04, 0x11, 0x05, 0x12, 0x21, 0x31, 0x41, 0x06, 0x13, 0x51, 0x61, 0x07,
    0x22, 0x71, 0x14, 0x32, 0x81, 0x91, 0xA1, 0x08, 0x23, 0x42, 0xB1, 0xC1, 0x15, 0x52, 0xD1, 0xF0,
    0x24, 0x33, 0x62, 0x72, 0x82, 0x09, 0x0A, 0x16, 0x17, 0x18, 0x19, 0x1A, 0x25, 0x26, 0x27, 0x28,
    0x29, 0x2A, 0x34, 0x35, 0x36, 0x37, 0x38, 0x39, 0x3A, 0x43, 0x44, 0x45, 0x46, 0x47, 0x48, 0x49,
    0x4A, 0x53, 0x54, 0x55, 0x56, 0x57, 0x58, 0x59, 0x5A, 0x63, 0x64, 0x65, 0x66, 0x67, 0x68, 0x69,
    0x6A, 0x73, 0x74, 0x75, 0x76, 0x77, 0x78, 0x79, 0x7A, 0x83, 0x84, 0x85, 0x86, 0x87, 0x88, 0x89,
    0x8A, 0x92, 0x93, 0x94, 0x95, 0x96, 0x97, 0x98, 0x99, 0x9A, 0xA2, 0xA3, 0xA4, 0xA5, 0xA6, 0xA7,
    0xA8, 0xA9, 0xAA, 0xB2, 0xB3, 0xB4, 0xB5, 0xB6, 0xB7, 0xB8, 0xB9, 0xBA, 0xC2, 0xC3, 0xC4, 0xC5,
    0xC6, 0xC7, 0xC8, 0xC9, 0xCA, 0xD2, 0xD3, 0xD4, 0xD5, 0xD6, 0xD7, 0xD8, 0xD9, 0xDA, 0xE1, 0xE2,
    0xE3, 0xE4, 0xE5, 0xE6, 0xE7, 0xE8, 0xE9, 0xEA, 0xF1, 0xF2, 0xF3, 0xF4, 0xF5, 0xF6, 0xF7, 0xF8,
    0xF9, 0xFA};

constexpr int kMaxDcCategory = 11;
constexpr int kMaxAcCategory = 10;

struct HuffmanSpec {
  std::array<std::uint8_t, 16> bits{};
  std::vector<std::uint8_t> values;
};

HuffmanSpec dc_luma_spec() {
  return {kDcLumaBits, {kDcLumaValues.begin(), kDcLumaValues.end()}};
}
HuffmanSpec ac_luma_spec() {
  return {kAcLumaBits, {kAcLumaValues.begin(), kAcLumaValues.end()}};
}

// Canonical code assignment (Annex C).
struct HuffmanEncoder {
  std::array<std::uint16_t, 256> code{};
  std::array<std::uint8_t, 256> length{};

  explicit HuffmanEncoder(const HuffmanSpec& spec) {
    std::uint16_t next = 0;
    std::size_t k = 0;
    for (int len = 1; len <= 16; ++len) {
      for (int i = 0; i < spec.bits[len - 1]; ++i, ++k) {
        code[spec.values[k]] = next++;
        length[spec.values[k]] = static_cast<std::uint8_t>(len);
      }
      next <<= 1;
    }
  }
};

// Decoding tables of Annex F.2.2.3.
class HuffmanDecoder {
 public:
  HuffmanDecoder() = default;
  explicit HuffmanDecoder(const HuffmanSpec& spec) : values_(spec.values) {
    int code = 0;
    int k = 0;
    for (int len = 1; len <= 16; ++len) {
      const int count = spec.bits[len - 1];
      if (count == 0) {
        max_code_[len] = -1;
      } else {
        val_ptr_[len] = k;
        min_code_[len] = code;
        code += count;
        k += count;
        max_code_[len] = code - 1;
      }
      if (code > (1 << len)) throw ParseError("Huffman table over-subscribed");
      code <<= 1;
    }
    defined_ = true;
  }

  bool defined() const { return defined_; }

  template <typename BitSource>
  std::uint8_t decode(BitSource& src) const {
    int code = 0;
    for (int len = 1; len <= 16; ++len) {
      code = (code << 1) | src.bit();
      if (code <= max_code_[len]) {
        return values_[static_cast<std::size_t>(val_ptr_[len] + code - min_code_[len])];
      }
    }
    throw HuffmanError("invalid Huffman code in scan");
  }

 private:
  std::array<int, 17> max_code_{};
  std::array<int, 17> min_code_{};
  std::array<int, 17> val_ptr_{};
  std::vector<std::uint8_t> values_;
  bool defined_ = false;
};

class BitWriter {
 public:
  explicit BitWriter(std::vector<std::uint8_t>& out) : out_(out) {}

  void put(std::uint32_t bits, int count) {
    for (int i = count - 1; i >= 0; --i) {
      acc_ = static_cast<std::uint8_t>((acc_ << 1) | ((bits >> i) & 1u));
      if (++filled_ == 8) emit();
    }
  }

  // Pads the last partial byte with 1-bits.
  void flush() {
    while (filled_ != 0) put(1, 1);
  }

 private:
  void emit() {
    out_.push_back(acc_);
    if (acc_ == 0xFF) out_.push_back(0x00);
    acc_ = 0;
    filled_ = 0;
  }

  std::vector<std::uint8_t>& out_;
  std::uint8_t acc_ = 0;
  int filled_ = 0;
};

class BitReader {
 public:
  BitReader(std::span<const std::uint8_t> data, std::size_t pos) : data_(data), pos_(pos) {}

  int bit() {
    if (left_ == 0) load();
    --left_;
    return (byte_ >> left_) & 1;
  }

  int bits(int count) {
    int v = 0;
    for (int i = 0; i < count; ++i) v = (v << 1) | bit();
    return v;
  }

  // Drops remaining bits of the current byte; used at restart markers and scan end.
  void align() { left_ = 0; }
  std::size_t pos() const { return pos_; }
  void skip_to(std::size_t pos) { pos_ = pos; }

 private:
  void load() {
    if (pos_ >= data_.size()) throw TruncationError("entropy-coded data ends prematurely");
    const std::uint8_t b = data_[pos_];
    if (b == 0xFF) {
      if (pos_ + 1 >= data_.size()) throw TruncationError("entropy-coded data ends prematurely");
      if (data_[pos_ + 1] != 0x00) throw TruncationError("marker reached before end of scan");
      pos_ += 2;
    } else {
      pos_ += 1;
    }
    byte_ = b;
    left_ = 8;
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_;
  std::uint8_t byte_ = 0;
  int left_ = 0;
};

int category(int v) {
  int magnitude = v < 0 ? -v : v;
  int n = 0;
  while (magnitude != 0) {
    magnitude >>= 1;
    ++n;
  }
  return n;
}

// Low `cat` bits of the JPEG one's-complement representation.
std::uint32_t magnitude_bits(int v, int cat) {
  return static_cast<std::uint32_t>(v < 0 ? v + (1 << cat) - 1 : v);
}

int extend(int bits, int cat) {
  return cat == 0 ? 0 : (bits < (1 << (cat - 1)) ? bits - (1 << cat) + 1 : bits);
}

void put_u16(std::vector<std::uint8_t>& out, int v) {
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

void put_marker(std::vector<std::uint8_t>& out, std::uint8_t marker) {
  out.push_back(0xFF);
  out.push_back(marker);
}

void put_huffman_table(std::vector<std::uint8_t>& out, std::uint8_t class_id, const HuffmanSpec& spec) {
  out.push_back(class_id);
  out.insert(out.end(), spec.bits.begin(), spec.bits.end());
  out.insert(out.end(), spec.values.begin(), spec.values.end());
}

void encode_block(BitWriter& writer, const CoeffBlock& block, int& previous_dc,
                  const HuffmanEncoder& dc_table, const HuffmanEncoder& ac_table) {
  const int dc = block(0, 0);
  const int diff = dc - previous_dc;
  previous_dc = dc;
  const int dc_cat = category(diff);
  if (dc_cat > kMaxDcCategory) {
    throw CapacityError("DC difference " + std::to_string(diff) + " exceeds baseline range");
  }
  writer.put(dc_table.code[dc_cat], dc_table.length[dc_cat]);
  writer.put(magnitude_bits(diff, dc_cat), dc_cat);

  int run = 0;
  for (int k = 1; k < 64; ++k) {
    const int v = block.data()[kZigzagToNatural[k]];
    if (v == 0) {
      ++run;
      continue;
    }
    while (run > 15) {
      writer.put(ac_table.code[0xF0], ac_table.length[0xF0]);
      run -= 16;
    }
    const int cat = category(v);
    if (cat > kMaxAcCategory) {
      throw CapacityError("AC coefficient " + std::to_string(v) + " exceeds baseline range");
    }
    const int symbol = (run << 4) | cat;
    writer.put(ac_table.code[symbol], ac_table.length[symbol]);
    writer.put(magnitude_bits(v, cat), cat);
    run = 0;
  }
  if (run > 0) writer.put(ac_table.code[0x00], ac_table.length[0x00]);
}

class SegmentReader {
 public:
  explicit SegmentReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t byte() {
    if (pos_ >= data_.size()) throw TruncationError("stream ends inside a segment");
    return data_[pos_++];
  }
  int u16() {
    const int hi = byte();
    return (hi << 8) | byte();
  }

  // Next marker code, skipping fill bytes.
  std::uint8_t marker() {
    if (byte() != 0xFF) throw ParseError("expected a marker");
    std::uint8_t code = byte();
    while (code == 0xFF) code = byte();
    return code;
  }

  std::span<const std::uint8_t> segment() {
    const int length = u16();
    if (length < 2) throw ParseError("segment length below 2");
    if (pos_ + static_cast<std::size_t>(length - 2) > data_.size()) {
      throw TruncationError("segment extends past end of stream");
    }
    auto body = data_.subspan(pos_, static_cast<std::size_t>(length - 2));
    pos_ += body.size();
    return body;
  }

  std::size_t pos_ = 0;

 private:
  std::span<const std::uint8_t> data_;
};

struct FrameInfo {
  int width = 0;
  int height = 0;
  int component_id = 0;
  int quant_id = 0;
};

void parse_dqt(std::span<const std::uint8_t> body, std::array<std::optional<QuantTable>, 4>& tables) {
  std::size_t p = 0;
  while (p < body.size()) {
    const int precision = body[p] >> 4;
    const int id = body[p] & 0x0F;
    ++p;
    if (id > 3 || precision > 1) throw ParseError("bad DQT table header");
    const std::size_t entry = precision == 0 ? 1 : 2;
    if (p + 64 * entry > body.size()) throw ParseError("DQT segment too short");
    QuantTable table;
    for (int k = 0; k < 64; ++k) {
      int v = body[p];
      if (entry == 2) v = (v << 8) | body[p + 1];
      if (v == 0) throw ParseError("zero quantization divisor");
      table.divisors.data()[kZigzagToNatural[k]] = v;
      p += entry;
    }
    tables[id] = table;
  }
}

void parse_dht(std::span<const std::uint8_t> body, std::array<HuffmanDecoder, 4>& dc,
               std::array<HuffmanDecoder, 4>& ac) {
  std::size_t p = 0;
  while (p < body.size()) {
    const int table_class = body[p] >> 4;
    const int id = body[p] & 0x0F;
    ++p;
    if (table_class > 1 || id > 3) throw ParseError("bad DHT table header");
    if (p + 16 > body.size()) throw ParseError("DHT segment too short");
    HuffmanSpec spec;
    std::size_t total = 0;
    for (int i = 0; i < 16; ++i) {
      spec.bits[i] = body[p + i];
      total += spec.bits[i];
    }
    p += 16;
    if (total > 256 || p + total > body.size()) throw ParseError("DHT value list too short");
    spec.values.assign(body.begin() + static_cast<std::ptrdiff_t>(p),
                       body.begin() + static_cast<std::ptrdiff_t>(p + total));
    p += total;
    (table_class == 0 ? dc : ac)[id] = HuffmanDecoder(spec);
  }
}

FrameInfo parse_sof(std::span<const std::uint8_t> body) {
  if (body.size() < 6) throw ParseError("SOF segment too short");
  if (body[0] != 8) throw ParseError("only 8-bit sample precision is supported");
  FrameInfo frame;
  frame.height = (body[1] << 8) | body[2];
  frame.width = (body[3] << 8) | body[4];
  const int components = body[5];
  if (components != 1) throw ParseError("only single-component (grayscale) frames are supported");
  if (body.size() < 9) throw ParseError("SOF segment too short");
  if (frame.width == 0 || frame.height == 0) throw ParseError("frame has zero width or height");
  frame.component_id = body[6];
  frame.quant_id = body[8];
  if (frame.quant_id > 3) throw ParseError("bad quantization table id");
  return frame;
}

}  // namespace

EncodedJpeg encode_baseline(const CoeffGrid& grid) {
  if (grid.block_rows <= 0 || grid.block_cols <= 0 ||
      grid.blocks.size() != static_cast<std::size_t>(grid.block_rows) * grid.block_cols) {
    throw DimensionError("coefficient grid is empty or inconsistent");
  }
  const int width = grid.width > 0 ? grid.width : 8 * grid.block_cols;
  const int height = grid.height > 0 ? grid.height : 8 * grid.block_rows;
  if ((width + 7) / 8 != grid.block_cols || (height + 7) / 8 != grid.block_rows || width > 65535 ||
      height > 65535) {
    throw DimensionError("image size does not match the block grid");
  }
  if (grid.quant.divisors.maxCoeff() > 255 || grid.quant.divisors.minCoeff() < 1) {
    throw CapacityError("quantization divisors must lie in [1, 255] for baseline");
  }

  EncodedJpeg out;
  auto& b = out.bytes;
  put_marker(b, kSOI);

  put_marker(b, kAPP0);
  put_u16(b, 16);
  for (char c : {'J', 'F', 'I', 'F', '\0'}) b.push_back(static_cast<std::uint8_t>(c));
  b.insert(b.end(), {1, 1, 0});  // version 1.01, no density units
  put_u16(b, 1);
  put_u16(b, 1);
  b.insert(b.end(), {0, 0});  // no thumbnail

  put_marker(b, kDQT);
  put_u16(b, 2 + 1 + 64);
  b.push_back(0x00);
  for (int k = 0; k < 64; ++k) {
    b.push_back(static_cast<std::uint8_t>(grid.quant.divisors.data()[kZigzagToNatural[k]]));
  }

  put_marker(b, kSOF0);
  put_u16(b, 11);
  b.push_back(8);
  put_u16(b, height);
  put_u16(b, width);
  b.insert(b.end(), {1, 1, 0x11, 0});

  const HuffmanSpec dc_spec = dc_luma_spec();
  const HuffmanSpec ac_spec = ac_luma_spec();
  put_marker(b, kDHT);
  put_u16(b, static_cast<int>(2 + 17 + dc_spec.values.size() + 17 + ac_spec.values.size()));
  put_huffman_table(b, 0x00, dc_spec);
  put_huffman_table(b, 0x10, ac_spec);

  put_marker(b, kSOS);
  put_u16(b, 8);
  b.insert(b.end(), {1, 1, 0x00, 0, 63, 0});

  const std::size_t scan_start = b.size();
  const HuffmanEncoder dc_table(dc_spec);
  const HuffmanEncoder ac_table(ac_spec);
  BitWriter writer(b);
  int previous_dc = 0;
  for (const auto& block : grid.blocks) encode_block(writer, block, previous_dc, dc_table, ac_table);
  writer.flush();
  out.scan_len = b.size() - scan_start;

  put_marker(b, kEOI);
  return out;
}

CoeffGrid decode_baseline(std::span<const std::uint8_t> bytes) {
  SegmentReader reader(bytes);
  if (bytes.size() < 2 || bytes[0] != 0xFF || bytes[1] != kSOI) {
    throw ParseError("missing SOI marker");
  }
  reader.pos_ = 2;

  std::array<std::optional<QuantTable>, 4> quant_tables;
  std::array<HuffmanDecoder, 4> dc_tables;
  std::array<HuffmanDecoder, 4> ac_tables;
  std::optional<FrameInfo> frame;
  int restart_interval = 0;

  for (;;) {
    const std::uint8_t marker = reader.marker();
    if (marker == kEOI) throw ParseError("EOI before any scan");
    if (marker == kSOI || marker == 0x01 || (marker >= 0xD0 && marker <= 0xD7)) {
      throw ParseError("unexpected standalone marker");
    }
    const auto body = reader.segment();
    if (marker == kDQT) {
      parse_dqt(body, quant_tables);
    } else if (marker == kDHT) {
      parse_dht(body, dc_tables, ac_tables);
    } else if (marker == kSOF0 || marker == kSOF1) {
      frame = parse_sof(body);
    } else if ((marker & 0xF0) == 0xC0 && marker != 0xC4 && marker != 0xC8 && marker != 0xCC) {
      throw ParseError("unsupported frame type (only baseline sequential)");
    } else if (marker == kDRI) {
      if (body.size() < 2) throw ParseError("DRI segment too short");
      restart_interval = (body[0] << 8) | body[1];
    } else if (marker == kSOS) {
      if (!frame) throw ParseError("SOS before SOF");
      if (body.size() < 6 || body[0] != 1) throw ParseError("only single-component scans are supported");
      if (body[1] != frame->component_id) throw ParseError("scan references an unknown component");
      const int dc_id = body[2] >> 4;
      const int ac_id = body[2] & 0x0F;
      if (dc_id > 3 || ac_id > 3 || !dc_tables[dc_id].defined() || !ac_tables[ac_id].defined()) {
        throw ParseError("scan references an undefined Huffman table");
      }
      if (body[3] != 0 || body[4] != 63 || body[5] != 0) throw ParseError("not a sequential scan");
      if (!quant_tables[frame->quant_id]) throw ParseError("frame references an undefined DQT table");

      CoeffGrid grid;
      grid.width = frame->width;
      grid.height = frame->height;
      grid.block_cols = (frame->width + 7) / 8;
      grid.block_rows = (frame->height + 7) / 8;
      grid.quant = *quant_tables[frame->quant_id];
      grid.blocks.assign(static_cast<std::size_t>(grid.block_rows) * grid.block_cols,
                         CoeffBlock::Zero());

      const HuffmanDecoder& dc_table = dc_tables[dc_id];
      const HuffmanDecoder& ac_table = ac_tables[ac_id];
      BitReader bits(bytes, reader.pos_);
      int previous_dc = 0;
      int next_restart = 0;
      for (std::size_t n = 0; n < grid.blocks.size(); ++n) {
        if (restart_interval > 0 && n > 0 && n % static_cast<std::size_t>(restart_interval) == 0) {
          bits.align();
          std::size_t p = bits.pos();
          if (p + 1 >= bytes.size()) throw TruncationError("missing restart marker");
          if (bytes[p] != 0xFF || bytes[p + 1] != 0xD0 + next_restart) {
            throw ParseError("expected restart marker");
          }
          bits.skip_to(p + 2);
          next_restart = (next_restart + 1) & 7;
          previous_dc = 0;
        }
        CoeffBlock& block = grid.blocks[n];
        const int dc_cat = dc_table.decode(bits);
        if (dc_cat > kMaxDcCategory) throw HuffmanError("DC category out of range");
        previous_dc += extend(bits.bits(dc_cat), dc_cat);
        block(0, 0) = previous_dc;
        for (int k = 1; k < 64;) {
          const int symbol = ac_table.decode(bits);
          const int run = symbol >> 4;
          const int cat = symbol & 0x0F;
          if (cat == 0) {
            if (run != 15) break;  // EOB
            k += 16;
            continue;
          }
          k += run;
          if (k > 63) throw HuffmanError("AC run exceeds block");
          block.data()[kZigzagToNatural[k]] = extend(bits.bits(cat), cat);
          ++k;
        }
      }
      bits.align();
      std::size_t p = bits.pos();
      while (p + 1 < bytes.size() && bytes[p] == 0xFF && bytes[p + 1] == 0xFF) ++p;
      if (p + 1 >= bytes.size()) throw TruncationError("missing EOI marker");
      if (bytes[p] != 0xFF || bytes[p + 1] != kEOI) {
        throw ParseError("expected EOI after the scan (multi-scan streams are unsupported)");
      }
      return grid;
    }
    // APPn, COM and other informational segments are skipped.
  }
}

EncodedJpeg parse_encoded(std::vector<std::uint8_t> bytes) {
  EncodedJpeg out;
  SegmentReader reader(bytes);
  if (bytes.size() < 4 || bytes[0] != 0xFF || bytes[1] != kSOI) throw ParseError("missing SOI marker");
  reader.pos_ = 2;
  for (;;) {
    const std::uint8_t marker = reader.marker();
    if (marker == kEOI) throw ParseError("EOI before any scan");
    reader.segment();
    if (marker == kSOS) break;
  }
  std::size_t end = bytes.size();
  if (end < reader.pos_ + 2 || bytes[end - 2] != 0xFF || bytes[end - 1] != kEOI) {
    throw TruncationError("stream does not end with EOI");
  }
  out.scan_len = end - 2 - reader.pos_;
  out.bytes = std::move(bytes);
  return out;
}

EncodedJpeg read_jpeg(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_encoded(std::move(bytes));
}

void write_jpeg(const EncodedJpeg& jpeg, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing " + path.string());
  out.write(reinterpret_cast<const char*>(jpeg.bytes.data()),
            static_cast<std::streamsize>(jpeg.bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

CoeffGrid drop_dc(const CoeffGrid& grid) {
  CoeffGrid out = grid;
  const int last_row = grid.block_rows - 1;
  const int last_col = grid.block_cols - 1;
  for (int r = 0; r < grid.block_rows; ++r) {
    for (int c = 0; c < grid.block_cols; ++c) {
      const bool corner = (r == 0 || r == last_row) && (c == 0 || c == last_col);
      if (!corner) out.at(r, c)(0, 0) = 0;
    }
  }
  return out;
}

CornerDcs extract_corner_dcs(const CoeffGrid& grid) {
  const int last_row = grid.block_rows - 1;
  const int last_col = grid.block_cols - 1;
  return {grid.dc(0, 0), grid.dc(0, last_col), grid.dc(last_row, 0), grid.dc(last_row, last_col)};
}

CompressionRatio compression_ratio(const EncodedJpeg& original, const EncodedJpeg& dropped) {
  CompressionRatio ratio;
  ratio.total = static_cast<double>(dropped.total_len()) / static_cast<double>(original.total_len());
  ratio.scan = original.scan_len == 0
                   ? 1.0
                   : static_cast<double>(dropped.scan_len) / static_cast<double>(original.scan_len);
  return ratio;
}

}  // namespace dcjpeg
