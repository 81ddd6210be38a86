#include "tautring/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <fstream>
#include <sstream>

#include "tautring/records.hpp"

namespace tautring {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kMagic = "tautring-cache 1";

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string_view next_line(std::string_view& text) {
  auto nl = text.find('\n');
  if (nl == std::string_view::npos) throw UsageError("cache entry truncated");
  std::string_view line = text.substr(0, nl);
  text.remove_prefix(nl + 1);
  return line;
}

std::string_view field_value(std::string_view line, std::string_view name) {
  if (line.substr(0, name.size()) != name || line.size() < name.size() + 1 || line[name.size()] != ' ')
    throw UsageError("cache entry: expected '" + std::string(name) + "'");
  return line.substr(name.size() + 1);
}

std::string order_line(const MonomialOrder& order) {
  std::string out = order.grading == MonomialOrder::Grading::Weights ? "weights" : "ones";
  for (auto i : order.permutation) out += " " + std::to_string(i);
  return out;
}

MonomialOrder parse_order_line(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string grading;
  in >> grading;
  MonomialOrder order;
  if (grading == "weights")
    order.grading = MonomialOrder::Grading::Weights;
  else if (grading != "ones")
    throw UsageError("cache entry: bad grading '" + grading + "'");
  std::size_t i;
  while (in >> i) order.permutation.push_back(i);
  if (!in.eof()) throw UsageError("cache entry: bad permutation");
  return order;
}

std::string body_of(const CacheEntry& e) {
  const auto& r = e.request;
  std::string out = "key " + e.key + "\n";
  out += "p1 " + to_string(r.p1) + "\n";
  out += "p2 " + (r.p2 ? to_string(*r.p2) : std::string("signature")) + "\n";
  out += "kmax " + std::to_string(r.k_max) + "\n";
  out += "p4_mode " + std::string(to_string(r.p4_mode)) + "\n";
  out += "field " + to_string(r.field) + "\n";
  out += "order " + order_line(r.order) + "\n";
  out += "record " + to_csv_row(e.record) + "\n";
  out += "basis\n";
  out += e.basis_text;
  return out;
}

CacheEntry parse_body(std::string_view body) {
  CacheEntry e;
  e.key = std::string(field_value(next_line(body), "key"));
  auto& r = e.request;
  r.p1 = parse_rational(field_value(next_line(body), "p1"));
  auto p2 = field_value(next_line(body), "p2");
  if (p2 != "signature") r.p2 = parse_rational(p2);
  r.k_max = std::stoi(std::string(field_value(next_line(body), "kmax")));
  r.p4_mode = parse_p4_mode(field_value(next_line(body), "p4_mode"));
  r.field = parse_field(field_value(next_line(body), "field"));
  r.order = parse_order_line(field_value(next_line(body), "order"));
  std::string csv(csv_header());
  csv += "\n";
  csv += field_value(next_line(body), "record");
  auto records = parse_csv(csv);
  if (records.size() != 1) throw UsageError("cache entry: bad record");
  e.record = records.front();
  if (next_line(body) != "basis") throw UsageError("cache entry: expected 'basis'");
  e.basis_text = std::string(body);
  return e;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw InvariantError("SHA-256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string request_descriptor(const FiberRequest& request, const std::vector<Polynomial>& generators) {
  std::string out = "fiber-dimension\n";
  out += "p1 " + to_string(request.p1) + "\n";
  out += "p2 " + (request.p2 ? to_string(*request.p2) : std::string("signature")) + "\n";
  out += "kmax " + std::to_string(request.k_max) + "\n";
  out += "p4_mode " + std::string(to_string(request.p4_mode)) + "\n";
  out += "field " + to_string(request.field) + "\n";
  out += "ring";
  auto ring = base_ring();
  for (std::size_t i = 0; i < ring->size(); ++i) out += " " + ring->name(i) + ":" + std::to_string(ring->weight(i));
  out += "\norder " + describe(request.order) + "\n";
  for (const auto& g : generators) out += render(g) + "\n";
  return out;
}

std::string serialize_entry(const CacheEntry& entry) {
  std::string body = body_of(entry);
  return std::string(kMagic) + "\nchecksum " + sha256_hex(body) + "\n" + body;
}

CacheEntry parse_entry(std::string_view text) {
  if (next_line(text) != kMagic) throw UsageError("cache entry: bad magic line");
  auto checksum = field_value(next_line(text), "checksum");
  if (sha256_hex(text) != checksum) throw UsageError("cache entry: checksum mismatch");
  return parse_body(text);
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

fs::path ResultCache::path_for(const std::string& key) const { return dir_ / (key + ".entry"); }

std::optional<CacheEntry> ResultCache::load(const std::string& key, std::string* warning) const {
  auto path = path_for(key);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  try {
    auto entry = parse_entry(read_file(path));
    if (entry.key != key) throw UsageError("cache entry: key does not match file name");
    return entry;
  } catch (const std::exception& e) {
    if (warning) *warning = "damaged cache entry " + path.string() + " (" + e.what() + "), recomputing";
    fs::remove(path, ec);
    return std::nullopt;
  }
}

void ResultCache::store(const CacheEntry& entry) const {
  static std::atomic<unsigned long> counter{0};
  auto final_path = path_for(entry.key);
  auto tmp = dir_ / (".tmp-" + entry.key + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << serialize_entry(entry);
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("cannot write cache file " + tmp.string());
    }
  }
  fs::rename(tmp, final_path);
}

std::unique_lock<std::mutex> ResultCache::lock(const std::string& key) {
  std::mutex* m;
  {
    std::lock_guard guard(map_mutex_);
    auto& slot = key_mutexes_[key];
    if (!slot) slot = std::make_unique<std::mutex>();
    m = slot.get();
  }
  return std::unique_lock(*m);
}

ResultCache::ScanReport ResultCache::scan() const {
  ScanReport report;
  std::vector<fs::path> paths;
  for (const auto& de : fs::directory_iterator(dir_))
    if (de.is_regular_file() && de.path().extension() == ".entry") paths.push_back(de.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& path : paths) {
    ++report.entries;
    std::string text = read_file(path);
    try {
      auto entry = parse_entry(text);
      if (entry.key != path.stem().string()) throw UsageError("cache entry: key does not match file name");
    } catch (const std::exception& e) {
      report.warnings.push_back("damaged cache entry " + path.string() + " (" + e.what() + ")");
      // The body may still name the request even though it cannot be trusted.
      try {
        std::string_view body = text;
        next_line(body);
        next_line(body);
        report.damaged.push_back(parse_body(body).request);
      } catch (const std::exception&) {
      }
      std::error_code ec;
      fs::remove(path, ec);
    }
  }
  return report;
}

}  // namespace tautring
