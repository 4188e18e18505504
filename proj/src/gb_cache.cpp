#include "socle/gb_cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <openssl/evp.h>
#include <unistd.h>

#include "socle/error.hpp"
#include "socle/text.hpp"

namespace socle {

namespace {

constexpr std::string_view kMagic = "socle-lab-gb/1";

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw ComputationError("sha256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

GbCache& GbCache::global() {
  static GbCache* cache = [] {
    auto* c = new GbCache();
    if (const char* env = std::getenv("SOCLE_LAB_CACHE_DIR"); env && *env) c->set_disk_directory(env);
    return c;
  }();
  return *cache;
}

void GbCache::set_disk_directory(std::optional<std::filesystem::path> dir) {
  std::lock_guard lock(mutex_);
  dir_ = std::move(dir);
}

std::optional<std::filesystem::path> GbCache::disk_directory() const {
  std::lock_guard lock(mutex_);
  return dir_;
}

std::string GbCache::canonical_key(std::span<const Polynomial> gens, const PolyRing& ring) {
  std::vector<std::string> lines;
  for (const auto& g : gens) {
    if (!g.is_zero()) lines.push_back(g.monic().to_string());
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::string key = ring.id();
  for (const auto& l : lines) {
    key += "\n";
    key += l;
  }
  return key;
}

std::filesystem::path GbCache::entry_path(const std::string& key) const {
  std::lock_guard lock(mutex_);
  if (!dir_) return {};
  return *dir_ / (sha256_hex(key) + ".gb");
}

std::shared_ptr<const GroebnerBasis> GbCache::get_or_compute(std::span<const Polynomial> gens,
                                                             const PolyRingPtr& ring,
                                                             const std::function<GroebnerBasis()>& compute) {
  std::string key = canonical_key(gens, *ring);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memory_.find(key); it != memory_.end()) {
      ++stats_.memory_hits;
      return it->second;
    }
  }
  std::shared_ptr<const GroebnerBasis> result = load(key, ring);
  bool from_disk = result != nullptr;
  if (!result) result = std::make_shared<const GroebnerBasis>(compute());

  std::lock_guard lock(mutex_);
  auto [it, inserted] = memory_.emplace(key, result);
  if (inserted) {
    if (from_disk) {
      ++stats_.disk_hits;
    } else {
      ++stats_.computed;
      if (dir_) store(key, *result);
    }
  }
  return it->second;
}

std::shared_ptr<const GroebnerBasis> GbCache::load(const std::string& key, const PolyRingPtr& ring) {
  std::filesystem::path path = entry_path(key);
  if (path.empty()) return nullptr;
  std::ifstream in(path);
  if (!in) return nullptr;

  auto reject = [&]() -> std::shared_ptr<const GroebnerBasis> {
    std::lock_guard lock(mutex_);
    ++stats_.rejected_files;
    return nullptr;
  };

  std::string magic, ring_line, key_line, content_line;
  if (!std::getline(in, magic) || magic != kMagic) return reject();
  if (!std::getline(in, ring_line) || ring_line != "ring " + ring->id()) return reject();
  if (!std::getline(in, key_line) || key_line != "key-sha256 " + sha256_hex(key)) return reject();
  if (!std::getline(in, content_line) || content_line.rfind("content-sha256 ", 0) != 0) return reject();
  std::stringstream body;
  body << in.rdbuf();
  std::string text = body.str();
  if (content_line.substr(15) != sha256_hex(text)) return reject();

  try {
    std::vector<Polynomial> elements;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      elements.push_back(parse_polynomial(line, ring));
    }
    auto basis = std::make_shared<const GroebnerBasis>(ring, std::move(elements));
    if (basis->serialize() != text) return reject();
    return basis;
  } catch (const Error&) {
    return reject();
  }
}

void GbCache::store(const std::string& key, const GroebnerBasis& basis) const {
  // Called with mutex_ held; dir_ is stable for the duration.
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  if (ec) return;
  std::string text = basis.serialize();
  std::string digest = sha256_hex(key);
  std::filesystem::path final_path = *dir_ / (digest + ".gb");
  std::ostringstream tmp_name;
  tmp_name << digest << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id());
  std::filesystem::path tmp_path = *dir_ / tmp_name.str();
  {
    std::ofstream out(tmp_path, std::ios::trunc);
    if (!out) return;
    out << kMagic << "\n"
        << "ring " << basis.ring()->id() << "\n"
        << "key-sha256 " << digest << "\n"
        << "content-sha256 " << sha256_hex(text) << "\n"
        << text;
    if (!out) {
      std::filesystem::remove(tmp_path, ec);
      return;
    }
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) std::filesystem::remove(tmp_path, ec);
}

void GbCache::clear_memory() {
  std::lock_guard lock(mutex_);
  memory_.clear();
}

GbCache::Stats GbCache::stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

}  // namespace socle
