#include "bprec/rating_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bprec {

RatingMatrix RatingMatrix::from_entries(int num_users, int num_items, std::vector<RatingEntry> entries,
                                        std::vector<int> user_labels, std::vector<int> item_labels) {
  if (num_users < 0 || num_items < 0) throw std::invalid_argument("negative matrix dimension");
  if (!user_labels.empty() && static_cast<int>(user_labels.size()) != num_users)
    throw std::invalid_argument("user label table size mismatch");
  if (!item_labels.empty() && static_cast<int>(item_labels.size()) != num_items)
    throw std::invalid_argument("item label table size mismatch");

  std::sort(entries.begin(), entries.end(), [](const RatingEntry& a, const RatingEntry& b) {
    return a.user != b.user ? a.user < b.user : a.item < b.item;
  });

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const RatingEntry& e = entries[i];
    if (e.user < 0 || e.user >= num_users) throw std::invalid_argument("user id out of range");
    if (e.item < 0 || e.item >= num_items) throw std::invalid_argument("item id out of range");
    if (!RatingScale::contains(e.rating))
      throw std::invalid_argument("rating out of scale: " + std::to_string(e.rating));
    if (i > 0 && entries[i - 1].user == e.user && entries[i - 1].item == e.item)
      throw std::invalid_argument("duplicate rating for user " + std::to_string(e.user) + ", item " +
                                  std::to_string(e.item));
  }

  RatingMatrix m;
  m.num_users_ = num_users;
  m.num_items_ = num_items;
  m.entries_ = std::move(entries);
  m.user_labels_ = std::move(user_labels);
  m.item_labels_ = std::move(item_labels);

  m.user_ptr_.assign(num_users + 1, 0);
  m.item_ptr_.assign(num_items + 1, 0);
  for (const RatingEntry& e : m.entries_) {
    ++m.user_ptr_[e.user + 1];
    ++m.item_ptr_[e.item + 1];
  }
  for (int u = 0; u < num_users; ++u) m.user_ptr_[u + 1] += m.user_ptr_[u];
  for (int i = 0; i < num_items; ++i) m.item_ptr_[i + 1] += m.item_ptr_[i];

  m.user_adj_.resize(m.entries_.size());
  m.item_adj_.resize(m.entries_.size());
  std::vector<int> upos(m.user_ptr_.begin(), m.user_ptr_.end() - 1);
  std::vector<int> ipos(m.item_ptr_.begin(), m.item_ptr_.end() - 1);
  for (const RatingEntry& e : m.entries_) {
    m.user_adj_[upos[e.user]++] = {e.item, e.rating};
    m.item_adj_[ipos[e.item]++] = {e.user, e.rating};
  }
  // entries_ are (user,item)-sorted, so user_adj_ slices are item-sorted and
  // item_adj_ slices are user-sorted.

  for (int u = 0; u < static_cast<int>(m.user_labels_.size()); ++u) m.user_lookup_.emplace(m.user_labels_[u], u);
  for (int i = 0; i < static_cast<int>(m.item_labels_.size()); ++i) m.item_lookup_.emplace(m.item_labels_[i], i);
  return m;
}

double RatingMatrix::global_mean() const {
  if (entries_.empty()) return 0.0;
  double s = 0.0;
  for (const RatingEntry& e : entries_) s += e.rating;
  return s / static_cast<double>(entries_.size());
}

double RatingMatrix::item_mean(int item, double fallback) const {
  auto raters = users_of(item);
  if (raters.empty()) return fallback;
  double s = 0.0;
  for (const UserRating& r : raters) s += r.rating;
  return s / static_cast<double>(raters.size());
}

int RatingMatrix::user_index(int label) const {
  if (user_labels_.empty()) return label >= 0 && label < num_users_ ? label : -1;
  auto it = user_lookup_.find(label);
  return it == user_lookup_.end() ? -1 : it->second;
}

int RatingMatrix::item_index(int label) const {
  if (item_labels_.empty()) return label >= 0 && label < num_items_ ? label : -1;
  auto it = item_lookup_.find(label);
  return it == item_lookup_.end() ? -1 : it->second;
}

}  // namespace bprec
