/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/io/archive.hpp"

#include <span>

#include "hda/binio.hpp"
#include "hda/io/field_io.hpp"
#include "hda/net/serialize.hpp"

namespace hda::io {

namespace {

using assim::Vector;

void write_vec(BinWriter& w, const Vector& v) {
  w.u32(static_cast<std::uint32_t>(v.size()));
  w.f64s(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

Vector read_vec(BinReader& r) {
  const std::uint32_t n = r.u32();
  if (static_cast<std::size_t>(n) * sizeof(double) > r.remaining())
    r.fail("vector length exceeds file size");
  Vector v(n);
  r.f64s(std::span<double>(v.data(), n));
  return v;
}

void write_model_config(BinWriter& w, const dyn::ModelConfig& m) {
  w.u32(static_cast<std::uint32_t>(m.n_sites));
  w.u32(static_cast<std::uint32_t>(m.n_fast));
  w.f64(m.forcing);
  w.f64(m.h);
  w.f64(m.c);
  w.f64(m.b);
  w.f64(m.dt);
  w.u32(static_cast<std::uint32_t>(m.steps_per_window));
}

dyn::ModelConfig read_model_config(BinReader& r) {
  dyn::ModelConfig m;
  m.n_sites = static_cast<int>(r.u32());
  m.n_fast = static_cast<int>(r.u32());
  m.forcing = r.f64();
  m.h = r.f64();
  m.c = r.f64();
  m.b = r.f64();
  m.dt = r.f64();
  m.steps_per_window = static_cast<int>(r.u32());
  return m;
}

void write_obs(BinWriter& w, const assim::WindowObs& obs) {
  w.u32(static_cast<std::uint32_t>(obs.batches.size()));
  for (const auto& b : obs.batches) {
    w.u32(static_cast<std::uint32_t>(b.step));
    w.u32(static_cast<std::uint32_t>(b.sites.size()));
    for (int s : b.sites) w.u32(static_cast<std::uint32_t>(s));
    w.f64s(std::span<const double>(b.values.data(), static_cast<std::size_t>(b.values.size())));
  }
}

assim::WindowObs read_obs(BinReader& r) {
  assim::WindowObs obs;
  const std::uint32_t n_batches = r.u32();
  if (n_batches > 1u << 20) r.fail("implausible observation batch count");
  for (std::uint32_t k = 0; k < n_batches; ++k) {
    assim::WindowObs::Batch b;
    b.step = static_cast<int>(r.u32());
    const std::uint32_t n_sites = r.u32();
    if (static_cast<std::size_t>(n_sites) * 12 > r.remaining())
      r.fail("observation batch exceeds file size");
    b.sites.resize(n_sites);
    for (auto& s : b.sites) s = static_cast<int>(r.u32());
    b.values.resize(n_sites);
    r.f64s(std::span<double>(b.values.data(), n_sites));
    obs.batches.push_back(std::move(b));
  }
  return obs;
}

void write_seeds(BinWriter& w, const std::vector<std::pair<std::string, std::uint64_t>>& seeds) {
  w.u32(static_cast<std::uint32_t>(seeds.size()));
  for (const auto& [name, value] : seeds) {
    w.str(name);
    w.u64(value);
  }
}

std::vector<std::pair<std::string, std::uint64_t>> read_seeds(BinReader& r) {
  std::vector<std::pair<std::string, std::uint64_t>> seeds;
  const std::uint32_t n = r.u32();
  if (n > 1024) r.fail("implausible seed count");
  for (std::uint32_t k = 0; k < n; ++k) {
    std::string name = r.str();
    const std::uint64_t value = r.u64();
    seeds.emplace_back(std::move(name), value);
  }
  return seeds;
}

void write_obs_config(BinWriter& w, const assim::ObsConfig& cfg) {
  w.f64(cfg.sigma_obs);
  w.u32(static_cast<std::uint32_t>(cfg.batches.size()));
  for (const auto& b : cfg.batches) {
    w.u32(static_cast<std::uint32_t>(b.step));
    w.u32(static_cast<std::uint32_t>(b.sites.size()));
    for (int s : b.sites) w.u32(static_cast<std::uint32_t>(s));
  }
}

assim::ObsConfig read_obs_config(BinReader& r) {
  assim::ObsConfig cfg;
  cfg.sigma_obs = r.f64();
  const std::uint32_t n = r.u32();
  if (n > 1u << 20) r.fail("implausible observation config size");
  for (std::uint32_t k = 0; k < n; ++k) {
    assim::ObsConfig::Batch b;
    b.step = static_cast<int>(r.u32());
    const std::uint32_t m = r.u32();
    if (static_cast<std::size_t>(m) * 4 > r.remaining()) r.fail("batch exceeds file size");
    b.sites.resize(m);
    for (auto& s : b.sites) s = static_cast<int>(r.u32());
    cfg.batches.push_back(std::move(b));
  }
  return cfg;
}

}  // namespace

void save_nature(const assim::NatureRun& run, const std::string& path) {
  BinWriter w;
  write_header(w, FileKind::NatureRun);
  write_model_config(w, run.model);
  write_obs_config(w, run.obs_cfg);
  w.u64(run.state_seed);
  w.u64(run.obs_seed);
  w.str(run.config_text);
  w.u32(static_cast<std::uint32_t>(run.obs.size()));
  for (const auto& state : run.window_starts) write_vec(w, state);
  for (const auto& obs : run.obs) write_obs(w, obs);
  w.to_file(path);
}

assim::NatureRun load_nature(const std::string& path) {
  BinReader r = BinReader::from_file(path);
  if (read_header(r) != FileKind::NatureRun) r.fail("not a nature-run file");
  assim::NatureRun run;
  run.model = read_model_config(r);
  run.obs_cfg = read_obs_config(r);
  run.state_seed = r.u64();
  run.obs_seed = r.u64();
  run.config_text = r.str();
  const std::uint32_t n_windows = r.u32();
  for (std::uint32_t k = 0; k < n_windows + 1; ++k) run.window_starts.push_back(read_vec(r));
  for (std::uint32_t k = 0; k < n_windows; ++k) run.obs.push_back(read_obs(r));
  if (!r.at_end()) r.fail("trailing bytes");
  return run;
}

void save_archive(const assim::CycleArchive& archive, const std::string& path) {
  BinWriter w;
  write_header(w, FileKind::CycleArchive);
  w.u8(static_cast<std::uint8_t>(archive.mode));
  write_model_config(w, archive.model);
  write_seeds(w, archive.seeds);
  w.str(archive.config_text);
  if (archive.corr) {
    w.u8(1);
    w.u8(static_cast<std::uint8_t>(archive.corr->mode));
    w.f64(archive.corr->forcing_scale);
    w.u32(static_cast<std::uint32_t>(archive.corr->stencil));
    w.f64(archive.corr->t_cycle);
    const auto net_bytes = net::serialize(archive.corr->net);
    w.u32(static_cast<std::uint32_t>(net_bytes.size()));
    w.raw(net_bytes.data(), net_bytes.size());
  } else {
    w.u8(0);
  }
  w.u32(static_cast<std::uint32_t>(archive.records.size()));
  for (const auto& rec : archive.records) {
    w.f64(rec.t0);
    write_vec(w, rec.background);
    write_vec(w, rec.analysis);
    write_vec(w, rec.increment);
    write_vec(w, rec.forcing);
    write_obs(w, rec.obs);
    write_vec(w, rec.params);
  }
  w.to_file(path);
}

assim::CycleArchive load_archive(const std::string& path) {
  BinReader r = BinReader::from_file(path);
  if (read_header(r) != FileKind::CycleArchive) r.fail("not a cycle-archive file");
  assim::CycleArchive archive;
  archive.mode = static_cast<assim::CycleMode>(r.u8());
  archive.model = read_model_config(r);
  archive.seeds = read_seeds(r);
  archive.config_text = r.str();
  if (r.u8() == 1) {
    dyn::HybridConfig corr;
    corr.mode = static_cast<dyn::CorrectionMode>(r.u8());
    corr.forcing_scale = r.f64();
    corr.stencil = static_cast<int>(r.u32());
    corr.t_cycle = r.f64();
    const std::uint32_t n_bytes = r.u32();
    if (n_bytes > r.remaining()) r.fail("embedded network exceeds file size");
    std::vector<std::uint8_t> net_bytes(n_bytes);
    for (auto& b : net_bytes) b = r.u8();
    corr.net = net::deserialize(net_bytes, path + " (embedded network)");
    archive.corr = std::move(corr);
  }
  const std::uint32_t n_records = r.u32();
  for (std::uint32_t k = 0; k < n_records; ++k) {
    assim::CycleRecord rec;
    rec.t0 = r.f64();
    rec.background = read_vec(r);
    rec.analysis = read_vec(r);
    rec.increment = read_vec(r);
    rec.forcing = read_vec(r);
    rec.obs = read_obs(r);
    rec.params = read_vec(r);
    archive.records.push_back(std::move(rec));
  }
  if (!r.at_end()) r.fail("trailing bytes");
  return archive;
}

}  // namespace hda::io
