#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace capdist {

using Part = std::uint32_t;
using PartsView = std::span<const Part>;

/// A finite sequence of positive parts. The sum n is cached on construction.
class Composition {
 public:
  Composition() = default;
  /// Throws std::invalid_argument if any part is zero.
  explicit Composition(std::vector<Part> parts);
  Composition(std::initializer_list<Part> parts) : Composition(std::vector<Part>(parts)) {}
  explicit Composition(PartsView parts) : Composition(std::vector<Part>(parts.begin(), parts.end())) {}

  PartsView parts() const { return parts_; }
  operator PartsView() const { return parts_; }  // NOLINT(google-explicit-constructor)

  std::uint64_t n() const { return n_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Part operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<Part> parts_;
  std::uint64_t n_ = 0;
};

/// Statistic bundle of one composition.
struct StatProfile {
  std::uint64_t capacity = 0;
  std::uint64_t tau = 0;  // parts equal to 1
  std::uint64_t mu = 0;   // parts equal to 2
  /// Number of 2s plus, for each 2, the sum of the parts to its left.
  /// Only defined when every part is 1 or 2.
  std::optional<std::uint64_t> sigma = 0;
  int sign = 1;  // (-1)^capacity

  friend bool operator==(const StatProfile&, const StatProfile&) = default;
};

std::uint64_t sum_of(PartsView parts);
bool parts_in_one_two(PartsView parts);

/// Number of water cells of the bargraph: for each column, the amount by
/// which the lower of the tallest columns strictly to its left and right
/// exceeds its height.
std::uint64_t capacity(PartsView parts);

StatProfile stats(PartsView parts);

// Membership predicates on compositions with parts in {1,2}. Each throws
// std::invalid_argument when a part exceeds 2.

/// At least two 2s with at least one part strictly between the first and last.
bool in_K(PartsView parts);
/// Ends in 1.
bool in_U(PartsView parts);
/// At least two 2s and at least one 1 between the rightmost two 2s.
bool in_V(PartsView parts);
/// At least two 2s and the rightmost two 2s are adjacent.
bool in_W(PartsView parts);
/// Ends in 2,1.
bool in_X(PartsView parts);

namespace detail {

template <class Visitor>
void walk_B(std::vector<Part>& buf, std::uint64_t remaining, Visitor& visit) {
  if (remaining == 0) {
    visit(PartsView(buf));
    return;
  }
  buf.push_back(1);
  walk_B(buf, remaining - 1, visit);
  if (remaining >= 2) {
    buf.back() = 2;
    walk_B(buf, remaining - 2, visit);
  }
  buf.pop_back();
}

template <class Visitor>
void walk_D(std::vector<Part>& buf, std::uint64_t remaining, Visitor& visit) {
  if (remaining == 0) {
    visit(PartsView(buf));
    return;
  }
  const bool first = buf.empty();
  for (std::uint64_t v = 1; v <= remaining; ++v) {
    // v < remaining means more parts follow; a non-first such part is internal.
    if (v < remaining && !first && v % 2 != 0) continue;
    buf.push_back(static_cast<Part>(v));
    walk_D(buf, remaining - v, visit);
    buf.pop_back();
  }
}

}  // namespace detail

/// Visits every composition of n with parts in {1,2} whose first parts equal
/// `prefix`, in lexicographic order (1 < 2). The empty prefix visits all of B_n.
template <class Visitor>
void for_each_B(std::uint64_t n, PartsView prefix, Visitor&& visit) {
  std::vector<Part> buf(prefix.begin(), prefix.end());
  if (!parts_in_one_two(prefix)) throw std::invalid_argument("prefix parts must be 1 or 2");
  const std::uint64_t used = sum_of(prefix);
  if (used > n) return;
  buf.reserve(n);
  detail::walk_B(buf, n - used, visit);
}

template <class Visitor>
void for_each_B(std::uint64_t n, Visitor&& visit) {
  for_each_B(n, PartsView{}, visit);
}

/// Visits every composition of n whose internal parts are even, in
/// lexicographic order. n = 0 visits the empty composition once.
template <class Visitor>
void for_each_D(std::uint64_t n, Visitor&& visit) {
  std::vector<Part> buf;
  buf.reserve(n);
  detail::walk_D(buf, n, visit);
}

std::vector<Composition> enumerate_B(std::uint64_t n);
std::vector<Composition> enumerate_D(std::uint64_t n);

/// True when every part except the first and the last is even.
bool in_D(PartsView parts);

/// One text row per height level, top row first. '#' marks a filled cell,
/// '~' a water cell, ' ' an empty one. Trailing blanks are trimmed.
std::string render_bargraph(PartsView parts);

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Accepts compact digit strings ("21121"), comma-separated parts
/// ("3,1,2" or "(3,1,2)"), and "()" or "" for the empty composition.
Composition parse_composition(std::string_view text);

/// Compact form when every part is a single digit, otherwise comma-separated.
/// The empty composition prints as "()", a lone part above 9 as "(12)".
std::string format_composition(PartsView parts);

}  // namespace capdist
