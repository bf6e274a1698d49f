#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bprec/rating_matrix.hpp"

namespace bprec {

/// Genre flags as a 19-bit mask; bit 0 is the "unknown" genre.
using GenreMask = std::uint32_t;

constexpr int kNumGenres = 19;
constexpr GenreMask kUnknownGenre = 1u;

/// Per-item genre sets and titles, keyed by the original item id.
class ItemCatalog {
 public:
  struct Item {
    int label;  // original id
    std::string title;
    GenreMask genres;  // never zero; itemless flags collapse to "unknown"
  };

  ItemCatalog() = default;
  explicit ItemCatalog(std::vector<Item> items);

  std::size_t size() const { return items_.size(); }
  const std::vector<Item>& items() const { return items_; }

  /// Genre mask for an original item id; kUnknownGenre for ids not listed.
  GenreMask genres_of_label(int label) const;
  const std::string* title_of_label(int label) const;

  static const std::vector<std::string>& genre_names();

 private:
  std::vector<Item> items_;
  std::vector<int> order_;  // indices sorted by label, for lookup
  int find(int label) const;
};

/// Genre mask per dense item index of `matrix`, taken from the catalog by
/// original id. Items missing from the catalog get the "unknown" genre.
std::vector<GenreMask> aligned_genre_masks(const ItemCatalog& catalog, const RatingMatrix& matrix);

}  // namespace bprec
