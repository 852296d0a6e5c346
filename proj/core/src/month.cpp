#include "panelcast/month.hpp"

#include <cstdio>

#include "panelcast/errors.hpp"

namespace panelcast {

Month::Month(int year, int month) {
  if (month < 1 || month > 12) {
    throw DataError("month out of range: " + std::to_string(month));
  }
  index_ = year * 12 + (month - 1);
}

Month Month::from_index(int index) {
  Month m;
  m.index_ = index;
  return m;
}

Month Month::parse(std::string_view text) {
  // YYYY-MM with optional -DD suffix.
  auto fail = [&] { throw DataError("unparseable month stamp: '" + std::string(text) + "'"); };
  if (text.size() != 7 && text.size() != 10) fail();
  if (text[4] != '-') fail();
  if (text.size() == 10 && text[7] != '-') fail();
  for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u}) {
    if (text[i] < '0' || text[i] > '9') fail();
  }
  if (text.size() == 10) {
    for (size_t i : {8u, 9u}) {
      if (text[i] < '0' || text[i] > '9') fail();
    }
  }
  const int year = (text[0] - '0') * 1000 + (text[1] - '0') * 100 + (text[2] - '0') * 10 + (text[3] - '0');
  const int month = (text[5] - '0') * 10 + (text[6] - '0');
  if (month < 1 || month > 12) fail();
  return Month(year, month);
}

std::string Month::str() const {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", year(), month());
  return buf;
}

}  // namespace panelcast
