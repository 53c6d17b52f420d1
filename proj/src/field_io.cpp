#include "torus/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace torus {

namespace {

static_assert(std::endian::native == std::endian::little,
              "PFLD1 writer assumes a little-endian host");

constexpr char kMagic[5] = {'P', 'F', 'L', 'D', '1'};

struct Header {
  std::uint32_t n;
  std::uint32_t ncomp;
  std::uint8_t flag;
};

void write_header(std::ofstream& os, const Header& h) {
  os.write(kMagic, 5);
  os.write(reinterpret_cast<const char*>(&h.n), 4);
  os.write(reinterpret_cast<const char*>(&h.ncomp), 4);
  os.write(reinterpret_cast<const char*>(&h.flag), 1);
}

Header read_header(std::ifstream& is, const std::string& path) {
  char magic[5];
  Header h{};
  is.read(magic, 5);
  if (!is || std::memcmp(magic, kMagic, 5) != 0)
    throw io_error("not a PFLD1 file: " + path);
  is.read(reinterpret_cast<char*>(&h.n), 4);
  is.read(reinterpret_cast<char*>(&h.ncomp), 4);
  is.read(reinterpret_cast<char*>(&h.flag), 1);
  if (!is) throw io_error("truncated PFLD1 header: " + path);
  return h;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw io_error("cannot open for writing: " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("cannot open: " + path);
  return is;
}

}  // namespace

void save_spectral(const SpectralField& F, const std::string& path) {
  auto os = open_out(path);
  write_header(os, {std::uint32_t(F.grid().n), std::uint32_t(F.ncomp()), 0});
  for (int c = 0; c < F.ncomp(); ++c)
    os.write(reinterpret_cast<const char*>(F.comp(c).data()),
             std::streamsize(F.grid().size3()) * 16);
  if (!os) throw io_error("write failed: " + path);
}

void save_real(const RealField& f, const std::string& path) {
  auto os = open_out(path);
  write_header(os, {std::uint32_t(f.grid().n), std::uint32_t(f.ncomp()), 1});
  for (int c = 0; c < f.ncomp(); ++c)
    os.write(reinterpret_cast<const char*>(f.comp(c).data()),
             std::streamsize(f.grid().size3()) * 8);
  if (!os) throw io_error("write failed: " + path);
}

int pfld_domain_flag(const std::string& path) {
  auto is = open_in(path);
  return read_header(is, path).flag;
}

SpectralField load_spectral(const std::string& path) {
  auto is = open_in(path);
  const Header h = read_header(is, path);
  if (h.flag != 0) throw io_error("PFLD1 file is not spectral: " + path);
  SpectralField F(Grid(int(h.n)), int(h.ncomp));
  for (int c = 0; c < F.ncomp(); ++c) {
    is.read(reinterpret_cast<char*>(F.comp(c).data()),
            std::streamsize(F.grid().size3()) * 16);
    if (!is) throw io_error("truncated PFLD1 payload: " + path);
  }
  return F;
}

RealField load_real(const std::string& path) {
  auto is = open_in(path);
  const Header h = read_header(is, path);
  if (h.flag != 1) throw io_error("PFLD1 file is not real-sampled: " + path);
  RealField f(Grid(int(h.n)), int(h.ncomp));
  for (int c = 0; c < f.ncomp(); ++c) {
    is.read(reinterpret_cast<char*>(f.comp(c).data()),
            std::streamsize(f.grid().size3()) * 8);
    if (!is) throw io_error("truncated PFLD1 payload: " + path);
  }
  return f;
}

void write_meta(const std::string& path, const std::string& json_text) {
  auto os = open_out(path + ".meta.json");
  os << json_text << "\n";
}

}  // namespace torus
