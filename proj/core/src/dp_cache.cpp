#include "cpap/dp_cache.hpp"

#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

namespace cpap::dp {

namespace {

constexpr char kMagic[8] = {'C', 'P', 'A', 'P', 'D', 'P', 'S', '\0'};

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

template <typename T>
void put(std::string& out, T value) {
  char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  out.append(buf, sizeof(T));
}

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  template <typename T>
  T get() {
    need(sizeof(T));
    T value;
    std::memcpy(&value, data_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return value;
  }
  std::string_view bytes(std::size_t n) {
    need(n);
    auto view = data_.substr(pos_, n);
    pos_ += n;
    return view;
  }
  [[nodiscard]] bool done() const { return pos_ == data_.size(); }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > data_.size()) fail(ErrorKind::io, "truncated cache file");
  }
  std::string_view data_;
  std::size_t pos_ = 0;
};

std::string encode(const Pattern& pat, const CountSeries& series) {
  std::string body(kMagic, sizeof kMagic);
  put<std::uint32_t>(body, kCacheFormatVersion);
  const std::string name = pat.str();
  put<std::uint32_t>(body, static_cast<std::uint32_t>(name.size()));
  body += name;
  put<std::uint32_t>(body, static_cast<std::uint32_t>(series.order()));
  for (const Integer& c : series.counts) {
    std::size_t words = 0;
    std::string limbs((mpz_sizeinbase(c.get_mpz_t(), 2) + 7) / 8 + 1, '\0');
    mpz_export(limbs.data(), &words, 1, 1, 0, 0, c.get_mpz_t());
    limbs.resize(words);
    put<std::uint32_t>(body, static_cast<std::uint32_t>(words));
    body += limbs;
  }
  put<std::uint64_t>(body, fnv1a(body));
  return body;
}

CountSeries decode(std::string_view data, const Pattern& pat) {
  if (data.size() < sizeof kMagic + sizeof(std::uint64_t)) fail(ErrorKind::io, "cache file too short");
  const auto body = data.substr(0, data.size() - sizeof(std::uint64_t));
  std::uint64_t stored = 0;
  std::memcpy(&stored, data.data() + body.size(), sizeof stored);
  if (stored != fnv1a(body)) fail(ErrorKind::io, "cache checksum mismatch");

  Reader in(body);
  if (in.bytes(sizeof kMagic) != std::string_view(kMagic, sizeof kMagic)) fail(ErrorKind::io, "bad cache magic");
  if (in.get<std::uint32_t>() != kCacheFormatVersion) fail(ErrorKind::io, "cache format version mismatch");
  const auto name_len = in.get<std::uint32_t>();
  if (in.bytes(name_len) != pat.str()) fail(ErrorKind::io, "cache file belongs to another pattern");
  const auto order = in.get<std::uint32_t>();
  CountSeries series;
  series.provenance = "dp:" + pat.str();
  for (std::uint32_t n = 0; n <= order; ++n) {
    const auto len = in.get<std::uint32_t>();
    const auto raw = in.bytes(len);
    Integer c;
    mpz_import(c.get_mpz_t(), raw.size(), 1, 1, 0, 0, raw.data());
    series.counts.push_back(c);
  }
  if (!in.done()) fail(ErrorKind::io, "trailing bytes in cache file");
  series.validate();
  return series;
}

}  // namespace

SeriesCache::SeriesCache(std::filesystem::path dir, WarningSink warn) : dir_(std::move(dir)), warn_(std::move(warn)) {}

std::filesystem::path SeriesCache::file_for(const Pattern& pat) const {
  std::string stem = pat.str();
  for (char& c : stem) {
    if (c == ',') c = '_';
  }
  return dir_ / ("dp-" + stem + "-v" + std::to_string(kCacheFormatVersion) + ".bin");
}

void SeriesCache::warn(const std::string& message) const {
  if (warn_) {
    warn_(message);
  } else {
    std::cerr << "warning: " << message << '\n';
  }
}

std::optional<CountSeries> SeriesCache::load(const Pattern& pat, unsigned N) const {
  const auto path = file_for(pat);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    CountSeries series = decode(data, pat);
    if (series.order() < N) return std::nullopt;
    return series.truncated(N);
  } catch (const Error& e) {
    warn("ignoring corrupted cache file " + path.string() + ": " + e.what());
    return std::nullopt;
  }
}

void SeriesCache::store(const Pattern& pat, const CountSeries& series) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) fail(ErrorKind::io, "cannot create cache directory " + dir_.string() + ": " + ec.message());
  if (auto existing = load(pat, static_cast<unsigned>(series.order()) + 1)) return;

  const auto path = file_for(pat);
  std::ostringstream tmp_name;
  tmp_name << path.string() << ".tmp" << std::hex << std::random_device{}();
  const std::filesystem::path tmp = tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    const std::string bytes = encode(pat, series);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) fail(ErrorKind::io, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    fail(ErrorKind::io, "cannot move cache file into place: " + path.string());
  }
}

CountSeries cached_count_series(const Pattern& pat, unsigned N, const SeriesCache* cache, const DpOptions& options) {
  if (cache != nullptr) {
    if (auto hit = cache->load(pat, N)) return *hit;
  }
  CountSeries series = count_series(pat, N, options);
  if (cache != nullptr) cache->store(pat, series);
  return series;
}

}  // namespace cpap::dp
