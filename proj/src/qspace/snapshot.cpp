#include "qns/snapshot.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include "qns/errors.hpp"

namespace qns {
namespace {

constexpr char kMagic[4] = {'Q', 'N', 'S', 'F'};

template <typename T>
void put(std::vector<std::uint8_t>& out, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  std::uint8_t bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(std::begin(bytes), std::end(bytes));
  out.insert(out.end(), std::begin(bytes), std::end(bytes));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  template <typename T>
  T get(const char* what) {
    if (bytes_.size() - pos_ < sizeof(T)) throw FormatError(std::string("QNSF: truncated while reading ") + what);
    std::uint8_t raw[sizeof(T)];
    std::memcpy(raw, bytes_.data() + pos_, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(std::begin(raw), std::end(raw));
    pos_ += sizeof(T);
    T v;
    std::memcpy(&v, raw, sizeof(T));
    return v;
  }

  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> encode_snapshot(std::span<const QElement> fields) {
  if (fields.empty()) throw PreconditionError("encode_snapshot: no fields");
  for (const auto& f : fields) require_compatible(fields.front(), f, "encode_snapshot");
  const auto& g = fields.front().grid();
  const auto& theta = fields.front().theta();

  std::vector<std::uint8_t> out;
  out.reserve(32 + 8 * theta.entries().size() + fields.size() * g.size() * 16);
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put<std::uint32_t>(out, kQnsfVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(g.dim()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(g.half_width()));
  put<double>(out, g.box_length());
  for (double t : theta.entries()) put<double>(out, t);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(fields.size()));
  for (const auto& f : fields) {
    for (const auto& c : f.coeffs()) {
      put<double>(out, c.real());
      put<double>(out, c.imag());
    }
  }
  return out;
}

std::vector<QElement> decode_snapshot(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) throw FormatError("QNSF: bad magic");
  Reader r(bytes.subspan(4));
  const auto version = r.get<std::uint32_t>("version");
  if (version != kQnsfVersion) throw FormatError("QNSF: unsupported version " + std::to_string(version));
  const auto d = r.get<std::uint32_t>("dimension");
  const auto K = r.get<std::uint32_t>("half-width");
  const double L = r.get<double>("box length");
  if (d < 2 || d > 8 || K < 1 || K > (1u << 16) || !(L > 0.0) || !std::isfinite(L)) {
    throw FormatError("QNSF: implausible header (d=" + std::to_string(d) + ", K=" + std::to_string(K) + ")");
  }
  std::vector<double> theta(static_cast<std::size_t>(d * d));
  for (auto& t : theta) t = r.get<double>("theta");
  const auto count = r.get<std::uint32_t>("field count");

  FrequencyGrid grid(static_cast<int>(d), static_cast<int>(K), L);
  ThetaMatrix th = [&] {
    try {
      return ThetaMatrix(static_cast<int>(d), theta);
    } catch (const PreconditionError& e) {
      throw FormatError(std::string("QNSF: ") + e.what());
    }
  }();
  if (r.remaining() / 16 / grid.size() < count) throw FormatError("QNSF: truncated field data");

  std::vector<QElement> fields;
  fields.reserve(count);
  for (std::uint32_t f = 0; f < count; ++f) {
    std::vector<Complex> c(grid.size());
    for (auto& v : c) {
      const double re = r.get<double>("coefficient");
      const double im = r.get<double>("coefficient");
      v = Complex(re, im);
    }
    fields.emplace_back(grid, th, std::move(c));
  }
  if (r.remaining() != 0) throw FormatError("QNSF: trailing bytes after field data");
  return fields;
}

void save_snapshot(const std::filesystem::path& path, std::span<const QElement> fields) {
  const auto bytes = encode_snapshot(fields);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("save_snapshot: cannot open " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("save_snapshot: write failed for " + path.string());
}

std::vector<QElement> load_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_snapshot: cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_snapshot(bytes);
}

}  // namespace qns
