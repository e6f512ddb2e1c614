#ifndef GROUPCODE_PARTIAL_INJECTION_HPP
#define GROUPCODE_PARTIAL_INJECTION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace groupcode {

using Point = std::uint32_t;

//! Injective partial self-map of {0, ..., n-1}.
//!
//! Stored as its image array; kUndefined marks points outside the domain.
//! The array doubles as the canonical key for equality, ordering and hashing.
class PartialInjection {
 public:
  static constexpr Point kUndefined = static_cast<Point>(-1);

  //! Empty map on n points.
  explicit PartialInjection(std::size_t n = 0) : image_(n, kUndefined) {}

  //! Throws Error if a defined image is out of range or repeated.
  explicit PartialInjection(std::vector<Point> image);

  //! Map with the given (x, y) pairs; throws Error if not injective.
  static PartialInjection from_pairs(std::size_t n,
                                     std::span<std::pair<Point, Point> const> pairs);
  static PartialInjection from_pairs(
      std::size_t n, std::initializer_list<std::pair<Point, Point>> pairs) {
    return from_pairs(n, std::span<std::pair<Point, Point> const>(pairs.begin(), pairs.size()));
  }
  static PartialInjection identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  std::optional<Point> operator()(Point x) const {
    if (x >= image_.size() || image_[x] == kUndefined) {
      return std::nullopt;
    }
    return image_[x];
  }
  bool defined_at(Point x) const noexcept {
    return x < image_.size() && image_[x] != kUndefined;
  }
  std::vector<Point> const& image() const noexcept { return image_; }
  std::size_t rank() const noexcept;

  //! Sets f(x) = y; throws Error if injectivity would break.
  void set(Point x, Point y);
  void erase(Point x);

  bool is_identity() const noexcept;
  bool is_partial_identity() const noexcept;
  bool is_idempotent() const noexcept { return is_partial_identity(); }

  //! Defined pairs (x, f(x)) in ascending x.
  std::vector<std::pair<Point, Point>> pairs() const;

  friend PartialInjection compose(PartialInjection const& f, PartialInjection const& g);
  friend PartialInjection inverse(PartialInjection const& f);

  friend bool operator==(PartialInjection const&, PartialInjection const&) = default;
  friend auto operator<=>(PartialInjection const& lhs, PartialInjection const& rhs) {
    return lhs.image_ <=> rhs.image_;
  }

 private:
  struct Unchecked {};
  PartialInjection(std::vector<Point> image, Unchecked) : image_(std::move(image)) {}

  std::vector<Point> image_;
};

//! (f o g)(x) = f(g(x)). Throws Error on size mismatch.
PartialInjection compose(PartialInjection const& f, PartialInjection const& g);

PartialInjection inverse(PartialInjection const& f);

//! `x->y x->y ...` in ascending x.
std::string to_string(PartialInjection const& f);

}  // namespace groupcode

template <>
struct std::hash<groupcode::PartialInjection> {
  std::size_t operator()(groupcode::PartialInjection const& f) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto y : f.image()) {
      h ^= y;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

#endif  // GROUPCODE_PARTIAL_INJECTION_HPP
