#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "srl/errors.hpp"
#include "srl/numerics/store.hpp"

namespace srl {

// Versioned binary checkpoint: a free-form metadata string (model config and
// vocabularies as JSON) followed by the parameter tensors as raw IEEE doubles
// in column-major order. Raw bytes round-trip bit-exactly.

namespace detail {

constexpr char kCheckpointMagic[8] = {'S', 'R', 'L', 'C', 'K', 'P', 'T', '\0'};
constexpr std::uint32_t kCheckpointVersion = 1;

inline void write_u64(std::ostream& out, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 8);
}

inline std::uint64_t read_u64(std::istream& in) {
  char buf[8];
  in.read(buf, 8);
  if (!in) throw DataError("checkpoint: truncated file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
  return v;
}

inline void write_string(std::ostream& out, const std::string& s) {
  write_u64(out, s.size());
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::string read_string(std::istream& in) {
  const std::uint64_t n = read_u64(in);
  std::string s(n, '\0');
  in.read(s.data(), static_cast<std::streamsize>(n));
  if (!in) throw DataError("checkpoint: truncated string");
  return s;
}

}  // namespace detail

inline void save_checkpoint(const std::string& path, const ParameterStore& store,
                            const std::string& metadata) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("checkpoint: cannot write " + path);
  out.write(detail::kCheckpointMagic, 8);
  detail::write_u64(out, detail::kCheckpointVersion);
  detail::write_string(out, metadata);
  detail::write_u64(out, static_cast<std::uint64_t>(store.size()));
  for (int i = 0; i < store.size(); ++i) {
    const auto& slot = store.slot(i);
    detail::write_string(out, slot.name);
    detail::write_u64(out, static_cast<std::uint64_t>(slot.tensor.rows()));
    detail::write_u64(out, static_cast<std::uint64_t>(slot.tensor.cols()));
    out.write(reinterpret_cast<const char*>(slot.tensor.value.data()),
              static_cast<std::streamsize>(sizeof(double) * slot.tensor.value.size()));
  }
  if (!out) throw DataError("checkpoint: write failed for " + path);
}

struct CheckpointData {
  std::string metadata;
  std::vector<std::pair<std::string, MatX>> tensors;
};

inline CheckpointData load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("checkpoint: cannot open " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, detail::kCheckpointMagic, 8) != 0)
    throw DataError("checkpoint: bad magic in " + path);
  const std::uint64_t version = detail::read_u64(in);
  if (version != detail::kCheckpointVersion)
    throw DataError("checkpoint: unsupported version " + std::to_string(version));
  CheckpointData data;
  data.metadata = detail::read_string(in);
  const std::uint64_t count = detail::read_u64(in);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::string name = detail::read_string(in);
    const auto rows = static_cast<Eigen::Index>(detail::read_u64(in));
    const auto cols = static_cast<Eigen::Index>(detail::read_u64(in));
    MatX m(rows, cols);
    in.read(reinterpret_cast<char*>(m.data()),
            static_cast<std::streamsize>(sizeof(double) * m.size()));
    if (!in) throw DataError("checkpoint: truncated tensor " + name);
    data.tensors.emplace_back(std::move(name), std::move(m));
  }
  return data;
}

// Copies loaded tensors into an already-built store; shapes must agree.
inline void restore_from_checkpoint(ParameterStore& store, const CheckpointData& data) {
  if (static_cast<int>(data.tensors.size()) != store.size())
    throw ConfigError("checkpoint: parameter count mismatch (checkpoint " +
                      std::to_string(data.tensors.size()) + ", model " +
                      std::to_string(store.size()) + ")");
  for (const auto& [name, m] : data.tensors) {
    auto& t = store.get(name);
    if (t.rows() != m.rows() || t.cols() != m.cols())
      throw ConfigError("checkpoint: shape mismatch for " + name);
    t.value = m;
  }
}

}  // namespace srl
