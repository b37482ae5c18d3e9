#include "cache.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

namespace mgl::cli {

std::string cache_key(const MeasureParams& params, Backend backend, int n_max, unsigned digits) {
  std::string key = params.canonical() + "|" + to_string(backend) + "|" + std::to_string(n_max);
  if (backend == Backend::high_precision_real) key += "|" + std::to_string(digits);
  return key;
}

std::string sha256_hex(const std::string& text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

std::filesystem::path cache_directory(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("MGL_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "mgl";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "mgl";
  return {};
}

namespace {

struct Store {
  std::filesystem::path dir;
  std::map<std::string, PQTable> memory;
  std::vector<PQTable> seed;

  std::filesystem::path file(const std::string& key) const { return dir / (sha256_hex(key) + ".json"); }

  std::optional<PQTable> from_seed(const MeasureParams& params, Backend backend, int n_max,
                                   unsigned digits) const {
    for (const PQTable& t : seed) {
      if (t.params.canonical() != params.canonical() || t.backend != backend) continue;
      if (backend == Backend::exact_rational && t.n_max >= n_max) {
        PQTable prefix = t;
        prefix.params = params;
        prefix.n_max = n_max;
        prefix.p_exact.resize(static_cast<std::size_t>(n_max) + 1);
        prefix.q_exact.resize(static_cast<std::size_t>(n_max) + 1);
        prefix.err_units.resize(static_cast<std::size_t>(n_max) + 1);
        return prefix;
      }
      if (t.n_max == n_max && t.digits == digits) return t;
    }
    return std::nullopt;
  }

  std::optional<PQTable> load(const MeasureParams& params, Backend backend, int n_max, unsigned digits) {
    if (auto s = from_seed(params, backend, n_max, digits)) return s;
    const std::string key = cache_key(params, backend, n_max, digits);
    if (const auto it = memory.find(key); it != memory.end()) return it->second;
    if (dir.empty()) return std::nullopt;
    std::ifstream in(file(key));
    if (!in) return std::nullopt;
    try {
      PQTable t = pq_table_from_json(Json::parse(in));
      if (cache_key(t.params, t.backend, t.n_max, t.digits) != key) return std::nullopt;
      t.params = params;
      memory.emplace(key, t);
      return t;
    } catch (const std::exception&) {
      return std::nullopt;  // unreadable entries are recomputed and overwritten
    }
  }

  void save(const PQTable& t) {
    const std::string key = cache_key(t.params, t.backend, t.n_max, t.digits);
    memory.emplace(key, t);
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const std::filesystem::path target = file(key);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << to_json(t).dump() << "\n";
      if (!out) return;
    }
    std::filesystem::rename(tmp, target, ec);
  }
};

}  // namespace

void install_table_cache(const std::filesystem::path& dir, std::vector<PQTable> seed) {
  auto store = std::make_shared<Store>();
  store->dir = dir;
  store->seed = std::move(seed);
  TableCache cache;
  cache.load = [store](const MeasureParams& p, Backend b, int n, unsigned d) { return store->load(p, b, n, d); };
  cache.save = [store](const PQTable& t) { store->save(t); };
  set_table_cache(std::move(cache));
}

}  // namespace mgl::cli
