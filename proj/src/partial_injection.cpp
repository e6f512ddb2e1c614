#include "groupcode/partial_injection.hpp"

#include <algorithm>

#include "groupcode/error.hpp"

namespace groupcode {

PartialInjection::PartialInjection(std::vector<Point> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto y : image_) {
    if (y == kUndefined) {
      continue;
    }
    if (y >= image_.size()) {
      throw Error("partial injection: image point out of range");
    }
    if (hit[y]) {
      throw Error("partial injection: map is not injective");
    }
    hit[y] = true;
  }
}

PartialInjection PartialInjection::from_pairs(std::size_t                              n,
                                              std::span<std::pair<Point, Point> const> pairs) {
  PartialInjection f(n);
  for (auto [x, y] : pairs) {
    if (f.defined_at(x) && f.image_[x] != y) {
      throw Error("partial injection: point mapped twice");
    }
    f.set(x, y);
  }
  return f;
}

PartialInjection PartialInjection::identity(std::size_t n) {
  PartialInjection f(n);
  for (std::size_t i = 0; i < n; ++i) {
    f.image_[i] = static_cast<Point>(i);
  }
  return f;
}

std::size_t PartialInjection::rank() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(image_.begin(), image_.end(), [](Point y) { return y != kUndefined; }));
}

void PartialInjection::set(Point x, Point y) {
  if (x >= image_.size() || y >= image_.size()) {
    throw Error("partial injection: point out of range");
  }
  for (std::size_t z = 0; z < image_.size(); ++z) {
    if (z != x && image_[z] == y) {
      throw Error("partial injection: map is not injective");
    }
  }
  image_[x] = y;
}

void PartialInjection::erase(Point x) {
  if (x < image_.size()) {
    image_[x] = kUndefined;
  }
}

bool PartialInjection::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) {
      return false;
    }
  }
  return true;
}

bool PartialInjection::is_partial_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != kUndefined && image_[i] != i) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<Point, Point>> PartialInjection::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != kUndefined) {
      out.emplace_back(static_cast<Point>(i), image_[i]);
    }
  }
  return out;
}

PartialInjection compose(PartialInjection const& f, PartialInjection const& g) {
  if (f.size() != g.size()) {
    throw Error("compose: partial injections of different sizes");
  }
  std::vector<Point> image(g.size(), PartialInjection::kUndefined);
  auto const&        fi = f.image();
  auto const&        gi = g.image();
  for (std::size_t x = 0; x < gi.size(); ++x) {
    if (gi[x] != PartialInjection::kUndefined) {
      image[x] = fi[gi[x]];
    }
  }
  // Injectivity is inherited from f and g.
  return PartialInjection(std::move(image), PartialInjection::Unchecked{});
}

PartialInjection inverse(PartialInjection const& f) {
  std::vector<Point> image(f.size(), PartialInjection::kUndefined);
  for (std::size_t x = 0; x < f.image_.size(); ++x) {
    if (f.image_[x] != PartialInjection::kUndefined) {
      image[f.image_[x]] = static_cast<Point>(x);
    }
  }
  return PartialInjection(std::move(image), PartialInjection::Unchecked{});
}

std::string to_string(PartialInjection const& f) {
  std::string out;
  for (auto [x, y] : f.pairs()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(x) + "->" + std::to_string(y);
  }
  return out;
}

}  // namespace groupcode
