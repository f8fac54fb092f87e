#include "capdist/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace capdist {

Composition::Composition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (Part p : parts_) {
    if (p == 0) throw std::invalid_argument("composition parts must be positive");
    n_ += p;
  }
}

std::uint64_t sum_of(PartsView parts) {
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

bool parts_in_one_two(PartsView parts) {
  return std::all_of(parts.begin(), parts.end(), [](Part p) { return p == 1 || p == 2; });
}

std::uint64_t capacity(PartsView parts) {
  const std::size_t m = parts.size();
  if (m < 3) return 0;
  std::vector<Part> right_max(m, 0);
  for (std::size_t i = m - 1; i > 0; --i) right_max[i - 1] = std::max(right_max[i], parts[i]);
  std::uint64_t cells = 0;
  Part left_max = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Part level = std::min(left_max, right_max[i]);
    if (level > parts[i]) cells += level - parts[i];
    left_max = std::max(left_max, parts[i]);
  }
  return cells;
}

StatProfile stats(PartsView parts) {
  StatProfile s;
  s.capacity = capacity(parts);
  s.sign = s.capacity % 2 == 0 ? 1 : -1;
  std::uint64_t partial = 0;
  std::uint64_t sigma = 0;
  bool defined = true;
  for (Part p : parts) {
    if (p == 1) {
      ++s.tau;
    } else if (p == 2) {
      ++s.mu;
      sigma += 1 + partial;
    } else {
      defined = false;
    }
    partial += p;
  }
  s.sigma = defined ? std::optional<std::uint64_t>(sigma) : std::nullopt;
  return s;
}

namespace {

void require_one_two(PartsView parts) {
  if (!parts_in_one_two(parts)) throw std::invalid_argument("parts must be 1 or 2");
}

// Indices of the last two 2s, or nullopt when fewer than two exist.
std::optional<std::pair<std::size_t, std::size_t>> last_two_twos(PartsView parts) {
  std::optional<std::size_t> last, before_last;
  for (std::size_t i = parts.size(); i-- > 0;) {
    if (parts[i] != 2) continue;
    if (!last) {
      last = i;
    } else {
      before_last = i;
      break;
    }
  }
  if (!before_last) return std::nullopt;
  return std::make_pair(*before_last, *last);
}

}  // namespace

bool in_K(PartsView parts) {
  require_one_two(parts);
  auto first = std::find(parts.begin(), parts.end(), Part{2});
  if (first == parts.end()) return false;
  auto last = std::find(parts.rbegin(), parts.rend(), Part{2}).base() - 1;
  return last - first >= 2;
}

bool in_U(PartsView parts) {
  require_one_two(parts);
  return !parts.empty() && parts.back() == 1;
}

bool in_V(PartsView parts) {
  require_one_two(parts);
  auto pair = last_two_twos(parts);
  return pair && pair->second - pair->first >= 2;
}

bool in_W(PartsView parts) {
  require_one_two(parts);
  auto pair = last_two_twos(parts);
  return pair && pair->second - pair->first == 1;
}

bool in_X(PartsView parts) {
  require_one_two(parts);
  const std::size_t m = parts.size();
  return m >= 2 && parts[m - 2] == 2 && parts[m - 1] == 1;
}

bool in_D(PartsView parts) {
  for (std::size_t i = 1; i + 1 < parts.size(); ++i) {
    if (parts[i] % 2 != 0) return false;
  }
  return true;
}

std::vector<Composition> enumerate_B(std::uint64_t n) {
  std::vector<Composition> out;
  for_each_B(n, [&](PartsView c) { out.emplace_back(c); });
  return out;
}

std::vector<Composition> enumerate_D(std::uint64_t n) {
  std::vector<Composition> out;
  for_each_D(n, [&](PartsView c) { out.emplace_back(c); });
  return out;
}

std::string render_bargraph(PartsView parts) {
  const std::size_t m = parts.size();
  if (m == 0) return {};
  const Part height = *std::max_element(parts.begin(), parts.end());

  std::vector<Part> water_level(m, 0);
  std::vector<Part> right_max(m, 0);
  for (std::size_t i = m - 1; i > 0; --i) right_max[i - 1] = std::max(right_max[i], parts[i]);
  Part left_max = 0;
  for (std::size_t i = 0; i < m; ++i) {
    water_level[i] = std::max(parts[i], std::min(left_max, right_max[i]));
    left_max = std::max(left_max, parts[i]);
  }

  std::string out;
  for (Part level = height; level >= 1; --level) {
    std::string row(m, ' ');
    for (std::size_t i = 0; i < m; ++i) {
      if (parts[i] >= level) {
        row[i] = '#';
      } else if (water_level[i] >= level) {
        row[i] = '~';
      }
    }
    row.erase(row.find_last_not_of(' ') + 1);
    out += row;
    out += '\n';
  }
  return out;
}

Composition parse_composition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  bool bracketed = false;
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parenthesis in composition");
    text = trim(text.substr(1, text.size() - 2));
    bracketed = true;
  }
  if (text.empty()) return Composition{};

  std::vector<Part> parts;
  if (bracketed || text.find(',') != std::string_view::npos) {
    while (true) {
      auto comma = text.find(',');
      std::string_view field = trim(text.substr(0, comma));
      Part value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value == 0) {
        throw ParseError("invalid part '" + std::string(field) + "'");
      }
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') {
        throw ParseError(std::string("invalid character '") + ch + "' in compact composition");
      }
      parts.push_back(static_cast<Part>(ch - '0'));
    }
  }
  return Composition(std::move(parts));
}

std::string format_composition(PartsView parts) {
  if (parts.empty()) return "()";
  const bool compact = std::all_of(parts.begin(), parts.end(), [](Part p) { return p <= 9; });
  std::string out;
  if (compact) {
    for (Part p : parts) out += static_cast<char>('0' + p);
    return out;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return parts.size() == 1 ? "(" + out + ")" : out;
}

}  // namespace capdist
