#include "gevlab/field_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "gevlab/csv.hpp"

namespace gevlab {

namespace {

constexpr char kMagic[4] = {'G', 'V', 'L', 'F'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ofstream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T take(std::ifstream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!in) throw std::runtime_error("field_io: truncated file");
  return v;
}

}  // namespace

void write_field(const std::string& path, const SpectralField& f, double time) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_field: cannot open " + path);
  out.write(kMagic, 4);
  put(out, kVersion);
  put(out, static_cast<std::uint8_t>(f.geometry().domain));
  put(out, static_cast<std::uint8_t>(f.components()));
  for (int c = 0; c < f.components(); ++c)
    put(out, static_cast<std::uint8_t>(f.parity(c) == Parity::Odd ? 1 : 0));
  for (int a = 0; a < 3; ++a) put(out, static_cast<std::int32_t>(f.geometry().kmax[a]));
  put(out, f.geometry().slab_depth);
  put(out, time);
  for (int c = 0; c < f.components(); ++c)
    for (const cdouble& v : f.data(c)) {
      put(out, v.real());
      put(out, v.imag());
    }
  if (!out) throw std::runtime_error("write_field: write failed for " + path);
}

FieldSnapshot read_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_field: cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("read_field: not a field snapshot: " + path);
  if (take<std::uint32_t>(in) != kVersion) throw std::runtime_error("read_field: unknown version");
  const auto domain = static_cast<Domain>(take<std::uint8_t>(in));
  const int ncomp = take<std::uint8_t>(in);
  std::vector<Parity> parity;
  for (int c = 0; c < ncomp; ++c)
    parity.push_back(take<std::uint8_t>(in) ? Parity::Odd : Parity::Even);
  Geometry g;
  g.domain = domain;
  for (int a = 0; a < 3; ++a) g.kmax[a] = take<std::int32_t>(in);
  g.slab_depth = take<double>(in);
  FieldSnapshot snap{SpectralField(g, ncomp, parity), take<double>(in)};
  for (int c = 0; c < ncomp; ++c)
    for (cdouble& v : snap.field.data(c)) {
      const double re = take<double>(in);
      const double im = take<double>(in);
      v = {re, im};
    }
  return snap;
}

void write_seminorm_csv(const SeminormTable& t, const std::string& path) {
  CsvWriter w(path);
  if (t.sup.empty()) {
    w.header({"m", "l2_seminorm"});
    for (int m = 0; m <= t.m_max; ++m) {
      w.field(m).field(t.l2[static_cast<std::size_t>(m)]);
      w.end_row();
    }
  } else {
    w.header({"m", "l2_seminorm", "sup_seminorm"});
    for (int m = 0; m <= t.m_max; ++m) {
      w.field(m).field(t.l2[static_cast<std::size_t>(m)]).field(t.sup[static_cast<std::size_t>(m)]);
      w.end_row();
    }
  }
}

}  // namespace gevlab
