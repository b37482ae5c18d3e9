// On-disk cache of coefficient tables. Each table is stored as the JSON
// document of the pq command under the SHA-256 of its key (canonical
// parameters, backend, n_max and, for the real backend, the precision).
#pragma once

#include "mgl/serialization.hpp"

#include <filesystem>
#include <string>

namespace mgl::cli {

std::string cache_key(const MeasureParams& params, Backend backend, int n_max, unsigned digits);
std::string sha256_hex(const std::string& text);

// Directory from the flag, else MGL_CACHE_DIR, else $XDG_CACHE_HOME/mgl or
// $HOME/.cache/mgl.
std::filesystem::path cache_directory(const std::string& flag);

// Routes compute_pq and compute_pq_real through the cache in `dir` (created
// when missing). Tables in `seed` are served first; an exact seed also
// serves shorter exact requests with its prefix. An empty dir disables the
// disk store.
void install_table_cache(const std::filesystem::path& dir, std::vector<PQTable> seed = {});

}  // namespace mgl::cli
