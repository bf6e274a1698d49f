#include "bprec/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

namespace bprec {
namespace {

struct RawRating {
  int user;
  int item;
  int rating;
};

bool parse_int(std::string_view field, int& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !field.empty();
}

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

// Dense index = rank of the original id among all observed ids. Keeps the
// dense order aligned with the original id order regardless of file order.
std::vector<int> rank_labels(const std::set<int>& labels) {
  return {labels.begin(), labels.end()};
}

RatingMatrix build_from_raw(const std::vector<RawRating>& raw) {
  std::set<int> user_set, item_set;
  for (const RawRating& r : raw) {
    user_set.insert(r.user);
    item_set.insert(r.item);
  }
  std::vector<int> user_labels = rank_labels(user_set);
  std::vector<int> item_labels = rank_labels(item_set);
  std::map<int, int> user_idx, item_idx;
  for (std::size_t i = 0; i < user_labels.size(); ++i) user_idx[user_labels[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < item_labels.size(); ++i) item_idx[item_labels[i]] = static_cast<int>(i);

  std::vector<RatingEntry> entries;
  entries.reserve(raw.size());
  for (const RawRating& r : raw) entries.push_back({user_idx[r.user], item_idx[r.item], r.rating});
  return RatingMatrix::from_entries(static_cast<int>(user_labels.size()), static_cast<int>(item_labels.size()),
                                    std::move(entries), std::move(user_labels), std::move(item_labels));
}

}  // namespace

RatingMatrix parse_ratings(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open ratings file: " + path);

  std::vector<RawRating> raw;
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line, '\t');
    if (fields.size() != 4) throw ParseError(path, lineno, "expected 4 tab-separated fields");
    int user = 0, item = 0, rating = 0, timestamp = 0;
    if (!parse_int(fields[0], user) || !parse_int(fields[1], item) || !parse_int(fields[2], rating) ||
        !parse_int(fields[3], timestamp))
      throw ParseError(path, lineno, "malformed record");
    if (!RatingScale::contains(rating))
      throw ParseError(path, lineno, "rating " + std::to_string(rating) + " outside 1..5");
    if (user < 0 || item < 0) throw ParseError(path, lineno, "negative id");
    std::uint64_t key = (static_cast<std::uint64_t>(user) << 32) | static_cast<std::uint32_t>(item);
    if (!seen.insert(key).second)
      throw ParseError(path, lineno,
                       "duplicate rating for user " + std::to_string(user) + ", item " + std::to_string(item));
    raw.push_back({user, item, rating});
  }
  return build_from_raw(raw);
}

ItemCatalog parse_items(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open items file: " + path);

  constexpr int kMetaFields = 5;  // id|title|release|video-release|url
  std::vector<ItemCatalog::Item> items;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line, '|');
    if (static_cast<int>(fields.size()) != kMetaFields + kNumGenres)
      throw ParseError(path, lineno,
                       "expected " + std::to_string(kNumGenres) + " genre flags, got " +
                           std::to_string(static_cast<int>(fields.size()) - kMetaFields));
    int label = 0;
    if (!parse_int(fields[0], label)) throw ParseError(path, lineno, "malformed item id");
    GenreMask mask = 0;
    for (int g = 0; g < kNumGenres; ++g) {
      std::string_view f = fields[kMetaFields + g];
      if (f == "1")
        mask |= (1u << g);
      else if (f != "0")
        throw ParseError(path, lineno, "genre flag must be 0 or 1");
    }
    items.push_back({label, std::string(fields[1]), mask});
  }
  try {
    return ItemCatalog(std::move(items));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

MovieLensData load_movielens(const std::string& dir) {
  MovieLensData data;
  data.ratings = parse_ratings(dir + "/u.data");
  data.catalog = parse_items(dir + "/u.item");
  return data;
}

namespace {

// Portable bounded uniform draw, independent of std::uniform_int_distribution
// so split output is stable across standard libraries.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
  while (true) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

Split split(const RatingMatrix& matrix, const SplitSpec& spec) {
  if (matrix.empty()) throw std::invalid_argument("cannot split an empty matrix");
  if (!(spec.train_fraction >= 0.0 && spec.train_fraction <= 1.0))
    throw std::invalid_argument("train_fraction outside [0,1]");

  const std::size_t n = matrix.num_ratings();
  std::vector<std::uint32_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);

  std::mt19937_64 rng(spec.seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(bounded_draw(rng, i + 1));
    std::swap(order[i], order[j]);
  }

  const auto train_count = static_cast<std::size_t>(std::llround(spec.train_fraction * static_cast<double>(n)));
  const std::vector<RatingEntry>& all = matrix.entries();

  std::vector<RatingEntry> train_entries, test_entries;
  train_entries.reserve(train_count);
  test_entries.reserve(n - train_count);
  for (std::size_t i = 0; i < n; ++i) {
    (i < train_count ? train_entries : test_entries).push_back(all[order[i]]);
  }
  auto by_key = [](const RatingEntry& a, const RatingEntry& b) {
    return a.user != b.user ? a.user < b.user : a.item < b.item;
  };
  std::sort(test_entries.begin(), test_entries.end(), by_key);

  Split out;
  out.train = RatingMatrix::from_entries(matrix.num_users(), matrix.num_items(), std::move(train_entries),
                                         matrix.user_labels(), matrix.item_labels());
  out.test = std::move(test_entries);
  return out;
}

void write_ratings_csv(const RatingMatrix& dims, const std::vector<RatingEntry>& entries, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "user,item,rating\n";
  for (const RatingEntry& e : entries)
    out << dims.user_label(e.user) << ',' << dims.item_label(e.item) << ',' << e.rating << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_ratings_csv(const RatingMatrix& matrix, const std::string& path) {
  write_ratings_csv(matrix, matrix.entries(), path);
}

RatingMatrix read_ratings_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<RawRating> raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (line.empty()) continue;
    if (lineno == 1 && line == "user,item,rating") continue;
    auto fields = split_fields(line, ',');
    if (fields.size() != 3) throw ParseError(path, lineno, "expected user,item,rating");
    int user = 0, item = 0, rating = 0;
    if (!parse_int(fields[0], user) || !parse_int(fields[1], item) || !parse_int(fields[2], rating))
      throw ParseError(path, lineno, "malformed record");
    if (!RatingScale::contains(rating)) throw ParseError(path, lineno, "rating outside 1..5");
    raw.push_back({user, item, rating});
  }
  return build_from_raw(raw);
}

}  // namespace bprec
