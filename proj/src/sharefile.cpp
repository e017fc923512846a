#include "staircase/sharefile.hpp"

#include <cstring>
#include <string>

namespace staircase {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 3; i >= 0; --i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 7; i >= 0; --i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

class reader {
 public:
  explicit reader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8() { return take(1)[0]; }
  std::uint16_t u16() {
    auto b = take(2);
    return static_cast<std::uint16_t>((std::uint16_t{b[0]} << 8) | b[1]);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (std::uint8_t b : take(4)) v = (v << 8) | b;
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (std::uint8_t b : take(8)) v = (v << 8) | b;
    return v;
  }
  std::size_t offset() const { return off_; }

 private:
  std::span<const std::uint8_t> take(std::size_t n) {
    if (off_ + n > data_.size()) {
      throw format_error("share file truncated in header");
    }
    auto s = data_.subspan(off_, n);
    off_ += n;
    return s;
  }

  std::span<const std::uint8_t> data_;
  std::size_t off_ = 0;
};

}  // namespace

std::vector<std::uint8_t> encode_header(const share_file_header& h) {
  std::vector<std::uint8_t> out;
  out.insert(out.end(), share_magic, share_magic + 4);
  out.push_back(share_version);
  out.push_back(static_cast<std::uint8_t>(h.kind));
  out.push_back(static_cast<std::uint8_t>(h.fkind));
  put_u16(out, h.modulus);
  put_u16(out, h.n);
  put_u16(out, h.k);
  put_u16(out, h.z);
  put_u16(out, h.d);
  if (h.kind == scheme_kind::delta) {
    put_u16(out, static_cast<std::uint16_t>(h.delta.size()));
    for (std::uint16_t v : h.delta) put_u16(out, v);
  } else {
    put_u16(out, 0);
  }
  put_u16(out, h.threshold);
  put_u16(out, h.index);
  put_u16(out, h.eval_point);
  put_u64(out, h.secret_bytes);
  put_u32(out, h.blocks);
  return out;
}

share_file_header parse_header(std::span<const std::uint8_t> data,
                               std::size_t& header_size) {
  reader r(data);
  if (data.size() < 4 || std::memcmp(data.data(), share_magic, 4) != 0) {
    throw format_error("bad magic: not a share file");
  }
  r.u32();  // magic
  const std::uint8_t version = r.u8();
  if (version != share_version) {
    throw format_error("unsupported share file version " +
                       std::to_string(version));
  }
  share_file_header h;
  const std::uint8_t kind = r.u8();
  if (kind > 2) throw format_error("unknown scheme kind");
  h.kind = static_cast<scheme_kind>(kind);
  const std::uint8_t fkind = r.u8();
  if (fkind > 1) throw format_error("unknown field kind");
  h.fkind = static_cast<field_kind>(fkind);
  h.modulus = r.u16();
  h.n = r.u16();
  h.k = r.u16();
  h.z = r.u16();
  h.d = r.u16();
  const std::uint16_t delta_count = r.u16();
  if (h.kind != scheme_kind::delta && delta_count != 0) {
    throw format_error("delta values present for a non-delta scheme");
  }
  for (std::uint16_t i = 0; i < delta_count; ++i) h.delta.push_back(r.u16());
  h.threshold = r.u16();
  h.index = r.u16();
  h.eval_point = r.u16();
  h.secret_bytes = r.u64();
  h.blocks = r.u32();
  header_size = r.offset();
  return h;
}

field_spec spec_from_header(const share_file_header& h) {
  if (h.fkind == field_kind::binary8) {
    if (h.modulus != binary8_modulus) {
      throw format_error("binary8 share with a foreign polynomial");
    }
    return field_spec::binary8();
  }
  field_spec spec = field_spec::prime(h.modulus);
  try {
    field probe(spec);
  } catch (const param_error& e) {
    throw format_error(std::string("invalid field in header: ") + e.what());
  }
  return spec;
}

scheme_params params_from_header(const share_file_header& h) {
  try {
    switch (h.kind) {
      case scheme_kind::fixed:
        return params_fixed(h.n, h.k, h.z, h.d);
      case scheme_kind::universal:
        return params_universal(h.n, h.k, h.z);
      case scheme_kind::delta: {
        std::vector<std::uint32_t> delta(h.delta.begin(), h.delta.end());
        return params_delta(h.n, h.k, h.z, std::move(delta));
      }
    }
  } catch (const param_error& e) {
    throw format_error(std::string("invalid scheme parameters in header: ") +
                       e.what());
  }
  throw format_error("unknown scheme kind");
}

std::size_t symbol_width(field_kind k) {
  return k == field_kind::binary8 ? 1 : 2;
}

}  // namespace staircase
