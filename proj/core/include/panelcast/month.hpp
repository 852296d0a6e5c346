#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace panelcast {

// First-of-month date. Stored as a flat month count so arithmetic and
// ordering are plain integer operations.
class Month {
 public:
  Month() = default;
  Month(int year, int month);

  // Accepts "YYYY-MM" or "YYYY-MM-DD" (day ignored).
  static Month parse(std::string_view text);

  int year() const { return index_ >= 0 ? index_ / 12 : -((-index_ - 1) / 12) - 1; }
  int month() const { return index_ - year() * 12 + 1; }
  int index() const { return index_; }
  static Month from_index(int index);

  std::string str() const;  // "YYYY-MM"

  Month operator+(int months) const { return from_index(index_ + months); }
  Month operator-(int months) const { return from_index(index_ - months); }
  int operator-(Month other) const { return index_ - other.index_; }
  Month& operator++() { ++index_; return *this; }

  auto operator<=>(const Month&) const = default;

 private:
  int index_ = 0;  // months since 0000-01
};

}  // namespace panelcast
