#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "trajformer/config.hpp"
#include "trajformer/model.hpp"
#include "trajformer/training.hpp"

namespace trajformer {

/// A trained model plus what is needed to use or resume it.
///
/// File layout (little-endian):
///   "TRJFCKPT" | u32 version | string settings | u64 n_arrays | n × (string name, tensor)
/// where string = u64 length + bytes, tensor = u32 rank + u64 dims + f64 values.
/// The settings block is key=value text (the run config plus checkpoint.* keys). Arrays are
/// named param/<name>, stats/{feature,offset}_{mean,std}, adam/{m,v}/<name>, history/{train,val}.
struct Checkpoint {
  RunConfig config;  // context.enabled and model.* describe this model
  std::string train_dataset;
  ModelParams params;
  ModelStats stats;
  AdamState adam;
  std::vector<EpochLog> history;  // wall_seconds is not persisted

  std::string method() const { return config.context.enabled ? "context_tf" : "vanilla_tf"; }
};

inline constexpr std::uint32_t kCheckpointVersion = 1;

std::string serialize_checkpoint(const Checkpoint& ckpt);
Checkpoint deserialize_checkpoint(std::string_view bytes, const std::string& origin = "checkpoint");

/// Atomic write (temporary file + rename).
void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace trajformer
