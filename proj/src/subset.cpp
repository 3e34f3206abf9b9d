#include "ordolab/subset.hpp"

#include <stdexcept>
#include <string>

namespace ordolab {

namespace {
void check_element(int element) {
  if (element < 0 || static_cast<std::size_t>(element) >= Subset::kCapacity) {
    throw std::out_of_range("subset element " + std::to_string(element) +
                            " outside capacity");
  }
}
}  // namespace

Subset::Subset(std::initializer_list<int> elements) {
  for (int e : elements) {
    check_element(e);
    insert(e);
  }
}

Subset Subset::from_mask(std::uint64_t mask) {
  Subset s;
  s.words_[0] = mask;
  return s;
}

Subset Subset::full(std::size_t size) {
  if (size > kCapacity) {
    throw std::out_of_range("ground of " + std::to_string(size) +
                            " elements exceeds subset capacity");
  }
  Subset s;
  for (std::size_t i = 0; i < kWords; ++i) {
    const std::size_t lo = i * 64;
    if (size >= lo + 64) {
      s.words_[i] = ~std::uint64_t{0};
    } else if (size > lo) {
      s.words_[i] = (std::uint64_t{1} << (size - lo)) - 1;
    }
  }
  return s;
}

Subset Subset::from_elements(const std::vector<int>& elements) {
  Subset s;
  for (int e : elements) {
    check_element(e);
    s.insert(e);
  }
  return s;
}

std::size_t Subset::extent() const {
  for (std::size_t i = kWords; i-- > 0;) {
    if (words_[i] != 0) {
      return i * 64 + 64 - static_cast<std::size_t>(std::countl_zero(words_[i]));
    }
  }
  return 0;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int e) { out.push_back(e); });
  return out;
}

}  // namespace ordolab
