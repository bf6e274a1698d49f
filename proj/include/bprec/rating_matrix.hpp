#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "bprec/types.hpp"

namespace bprec {

/// One observed rating, in dense 0-based ids.
struct RatingEntry {
  int user;
  int item;
  int rating;

  friend bool operator==(const RatingEntry&, const RatingEntry&) = default;
};

struct ItemRating {
  int item;
  int rating;
};

struct UserRating {
  int user;
  int rating;
};

/// Immutable sparse user-item rating matrix with adjacency stored from both
/// sides (items per user, users per item). Safe to share across threads once
/// built. Dense indices map back to the original file ids through the label
/// tables.
class RatingMatrix {
 public:
  RatingMatrix() = default;

  /// Validates ratings, rejects duplicate (user,item) pairs and out-of-range
  /// ids, then builds both adjacency views. Label vectors may be empty, in
  /// which case labels are the identity.
  static RatingMatrix from_entries(int num_users, int num_items, std::vector<RatingEntry> entries,
                                   std::vector<int> user_labels = {}, std::vector<int> item_labels = {});

  int num_users() const { return num_users_; }
  int num_items() const { return num_items_; }
  std::size_t num_ratings() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Entries sorted by (user, item).
  const std::vector<RatingEntry>& entries() const { return entries_; }

  std::span<const ItemRating> items_of(int user) const {
    return {user_adj_.data() + user_ptr_[user], user_adj_.data() + user_ptr_[user + 1]};
  }
  std::span<const UserRating> users_of(int item) const {
    return {item_adj_.data() + item_ptr_[item], item_adj_.data() + item_ptr_[item + 1]};
  }

  int user_degree(int user) const { return user_ptr_[user + 1] - user_ptr_[user]; }
  int item_degree(int item) const { return item_ptr_[item + 1] - item_ptr_[item]; }

  /// Mean of all stored ratings; 0 for an empty matrix.
  double global_mean() const;
  /// Mean rating of one item, or fallback when the item has no ratings.
  double item_mean(int item, double fallback) const;

  int user_label(int user) const { return user_labels_.empty() ? user : user_labels_[user]; }
  int item_label(int item) const { return item_labels_.empty() ? item : item_labels_[item]; }
  const std::vector<int>& user_labels() const { return user_labels_; }
  const std::vector<int>& item_labels() const { return item_labels_; }

  /// Dense index for an original id; -1 when unknown.
  int user_index(int label) const;
  int item_index(int label) const;

 private:
  int num_users_ = 0;
  int num_items_ = 0;
  std::vector<RatingEntry> entries_;
  std::vector<int> user_ptr_;
  std::vector<ItemRating> user_adj_;
  std::vector<int> item_ptr_;
  std::vector<UserRating> item_adj_;
  std::vector<int> user_labels_;
  std::vector<int> item_labels_;
  std::unordered_map<int, int> user_lookup_;
  std::unordered_map<int, int> item_lookup_;
};

}  // namespace bprec
