/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/net/serialize.hpp"

#include <span>

#include "hda/binio.hpp"
#include "hda/errors.hpp"

namespace hda::net {

namespace {

constexpr char kMagic[4] = {'F', 'N', 'N', '1'};
constexpr std::uint8_t kVersion = 1;

void write_vector(io::BinWriter& w, const Vector& v) {
  w.f64s(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

Vector read_vector(io::BinReader& r, std::int64_t n, const std::string& what) {
  if (static_cast<std::size_t>(n) * sizeof(double) > r.remaining())
    r.fail("truncated while reading " + what);
  Vector v(n);
  r.f64s(std::span<double>(v.data(), static_cast<std::size_t>(n)));
  return v;
}

}  // namespace

std::vector<std::uint8_t> serialize(const NetParams& params) {
  io::BinWriter w;
  w.raw(kMagic, 4);
  w.u8(kVersion);
  const auto& dims = params.layer_dims();
  w.u32(static_cast<std::uint32_t>(dims.size()));
  for (int d : dims) w.u32(static_cast<std::uint32_t>(d));
  for (int l = 0; l < params.n_layers(); ++l)
    w.u8(static_cast<std::uint8_t>(params.activation(l)));
  for (int l = 0; l < params.n_layers(); ++l) {
    const Matrix& m = params.weight(l);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) w.f64(m(i, j));
    write_vector(w, params.bias(l));
  }
  const NormStats& s = params.norm();
  w.u32(static_cast<std::uint32_t>(s.in_mean.size()));
  write_vector(w, s.in_mean);
  write_vector(w, s.in_std);
  w.u32(static_cast<std::uint32_t>(s.out_mean.size()));
  write_vector(w, s.out_mean);
  write_vector(w, s.out_std);
  w.u32(static_cast<std::uint32_t>(s.n_extra));
  return w.bytes();
}

NetParams deserialize(const std::vector<std::uint8_t>& bytes, const std::string& name) {
  io::BinReader r(bytes, name);
  char magic[4];
  for (char& c : magic) c = static_cast<char>(r.u8());
  if (std::string_view(magic, 4) != std::string_view(kMagic, 4))
    r.fail("bad magic, not an FNN1 parameter file");
  if (r.u8() != kVersion) r.fail("unsupported FNN1 version");

  const std::uint32_t n_dims = r.u32();
  if (n_dims < 2 || n_dims > 64) r.fail("implausible layer count " + std::to_string(n_dims));
  std::vector<int> dims(n_dims);
  for (auto& d : dims) {
    d = static_cast<int>(r.u32());
    if (d < 1) r.fail("non-positive layer dimension");
  }
  NetParams params(dims);
  for (int l = 0; l < params.n_layers(); ++l) {
    const std::uint8_t tag = r.u8();
    const Activation expected = params.activation(l);
    if (tag != static_cast<std::uint8_t>(expected))
      r.fail("unexpected activation tag for layer " + std::to_string(l));
  }
  for (int l = 0; l < params.n_layers(); ++l) {
    Matrix& m = params.weight(l);
    const std::int64_t need = m.size() + params.bias(l).size();
    if (static_cast<std::size_t>(need) * sizeof(double) > r.remaining())
      r.fail("declared dims exceed file contents at layer " + std::to_string(l));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = r.f64();
    params.bias(l) = read_vector(r, params.bias(l).size(), "bias of layer " + std::to_string(l));
  }

  NormStats s;
  const std::uint32_t in_dim = r.u32();
  if (static_cast<int>(in_dim) != params.input_dim())
    r.fail("normalization input channels do not match layer 0");
  s.in_mean = read_vector(r, in_dim, "input means");
  s.in_std = read_vector(r, in_dim, "input stds");
  const std::uint32_t out_dim = r.u32();
  if (static_cast<int>(out_dim) != params.output_dim())
    r.fail("normalization output channels do not match last layer");
  s.out_mean = read_vector(r, out_dim, "output means");
  s.out_std = read_vector(r, out_dim, "output stds");
  s.n_extra = static_cast<int>(r.u32());
  if (s.n_extra < 0 || s.n_extra > static_cast<int>(in_dim)) r.fail("invalid extra-predictor count");
  s.validate();
  params.norm() = s;
  if (!r.at_end()) r.fail("trailing bytes after parameter payload");
  return params;
}

void save_net(const NetParams& params, const std::string& path) {
  io::BinWriter w;
  const auto bytes = serialize(params);
  w.raw(bytes.data(), bytes.size());
  w.to_file(path);
}

NetParams load_net(const std::string& path) {
  return deserialize(io::BinReader::from_file(path).bytes(), path);
}

}  // namespace hda::net
