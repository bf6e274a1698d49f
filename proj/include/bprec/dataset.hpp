#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bprec/item_catalog.hpp"
#include "bprec/rating_matrix.hpp"

namespace bprec {

/// Raised for malformed input files; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, int line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parse a MovieLens 100K `u.data` file: one `user<TAB>item<TAB>rating<TAB>timestamp`
/// record per line. Ids are remapped to dense 0-based indices ordered by
/// original id; timestamps are discarded.
RatingMatrix parse_ratings(const std::string& path);

/// Parse a MovieLens 100K `u.item` file: pipe-separated metadata followed by
/// 19 binary genre flags. Items whose flags are all zero get the "unknown"
/// genre.
ItemCatalog parse_items(const std::string& path);

struct MovieLensData {
  RatingMatrix ratings;
  ItemCatalog catalog;
};

/// Load `u.data` and `u.item` from a directory.
MovieLensData load_movielens(const std::string& dir);

struct SplitSpec {
  double train_fraction = 0.8;
  std::uint64_t seed = 0;
};

struct Split {
  RatingMatrix train;                // same dimensions and labels as the input
  std::vector<RatingEntry> test;     // held-out entries with their true ratings
};

/// Seeded global random split over rating records. The train matrix keeps the
/// full dimensions so users or items that lose all ratings stay addressable.
Split split(const RatingMatrix& matrix, const SplitSpec& spec);

/// Snapshot format: `user,item,rating` CSV in original ids, one header line.
void write_ratings_csv(const RatingMatrix& matrix, const std::string& path);
void write_ratings_csv(const RatingMatrix& dims, const std::vector<RatingEntry>& entries, const std::string& path);
RatingMatrix read_ratings_csv(const std::string& path);

}  // namespace bprec
