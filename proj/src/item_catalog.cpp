#include "bprec/item_catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace bprec {

ItemCatalog::ItemCatalog(std::vector<Item> items) : items_(std::move(items)) {
  for (Item& it : items_) {
    if (it.genres == 0) it.genres = kUnknownGenre;
  }
  order_.resize(items_.size());
  for (std::size_t i = 0; i < items_.size(); ++i) order_[i] = static_cast<int>(i);
  std::sort(order_.begin(), order_.end(), [&](int a, int b) { return items_[a].label < items_[b].label; });
  for (std::size_t i = 1; i < order_.size(); ++i) {
    if (items_[order_[i - 1]].label == items_[order_[i]].label)
      throw std::invalid_argument("duplicate item id in catalog: " + std::to_string(items_[order_[i]].label));
  }
}

int ItemCatalog::find(int label) const {
  auto it = std::lower_bound(order_.begin(), order_.end(), label,
                             [&](int idx, int l) { return items_[idx].label < l; });
  if (it == order_.end() || items_[*it].label != label) return -1;
  return *it;
}

GenreMask ItemCatalog::genres_of_label(int label) const {
  int idx = find(label);
  return idx < 0 ? kUnknownGenre : items_[idx].genres;
}

const std::string* ItemCatalog::title_of_label(int label) const {
  int idx = find(label);
  return idx < 0 ? nullptr : &items_[idx].title;
}

const std::vector<std::string>& ItemCatalog::genre_names() {
  static const std::vector<std::string> names = {
      "unknown", "Action",   "Adventure", "Animation", "Children's", "Comedy",  "Crime",
      "Documentary", "Drama", "Fantasy",  "Film-Noir", "Horror",     "Musical", "Mystery",
      "Romance", "Sci-Fi",   "Thriller",  "War",       "Western"};
  return names;
}

std::vector<GenreMask> aligned_genre_masks(const ItemCatalog& catalog, const RatingMatrix& matrix) {
  std::vector<GenreMask> masks(matrix.num_items(), kUnknownGenre);
  for (int i = 0; i < matrix.num_items(); ++i) masks[i] = catalog.genres_of_label(matrix.item_label(i));
  return masks;
}

}  // namespace bprec
