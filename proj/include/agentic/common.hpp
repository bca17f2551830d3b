#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace agentic {

// FNV-1a, 64-bit. Used for feature hashing, replay-request keys, content
// fingerprints and config hashes. The constants are the published ones, so
// feature indices are stable across runs and platforms.
inline uint64_t fnv1a64(std::string_view data, uint64_t seed = 14695981039346656037ULL) {
  uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= static_cast<uint64_t>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

inline uint64_t fnv1a64_bytes(const void* data, size_t n,
                              uint64_t seed = 14695981039346656037ULL) {
  return fnv1a64(std::string_view(static_cast<const char*>(data), n), seed);
}

// Deterministic RNG: mt19937_64 (sequence fixed by the standard) plus
// hand-rolled transforms. std::uniform_*_distribution is implementation
// defined, so it never touches anything whose bytes get compared.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Unbiased integer in [0, n).
  uint64_t below(uint64_t n) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Box-Muller standard normal.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Sample k distinct positions from [0, n) in draw order.
  std::vector<size_t> sample_without_replacement(size_t n, size_t k) {
    std::vector<size_t> pool(n);
    for (size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<size_t> out;
    out.reserve(k);
    for (size_t i = 0; i < k && i < n; ++i) {
      size_t j = i + static_cast<size_t>(below(n - i));
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Derives a stream seed from a base seed and a string tag, so that work items
// labeled by (question id, turn, ...) draw from independent streams no matter
// which thread processes them.
inline uint64_t derive_seed(uint64_t base, std::string_view tag) {
  uint64_t h = fnv1a64(tag);
  return base ^ (h + 0x9e3779b97f4a7c15ULL + (base << 6) + (base >> 2));
}

std::string read_text_file(const std::string& path);
void write_text_file_atomic(const std::string& path, const std::string& content);
std::vector<std::string> read_lines(const std::string& path);

std::string trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);

}  // namespace agentic
