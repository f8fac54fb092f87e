#include "capdist/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace capdist {

namespace {

std::uint64_t leading_ones(PartsView parts) {
  return static_cast<std::uint64_t>(
      std::find_if(parts.begin(), parts.end(), [](Part p) { return p != 1; }) - parts.begin());
}

std::uint64_t trailing_ones(PartsView parts) {
  return static_cast<std::uint64_t>(
      std::find_if(parts.rbegin(), parts.rend(), [](Part p) { return p != 1; }) - parts.rbegin());
}

void append(std::vector<Part>& out, Part value, std::uint64_t times) {
  out.insert(out.end(), times, value);
}

}  // namespace

BnkCode encode_bnk(const Composition& c, std::uint64_t k) {
  if (!parts_in_one_two(c)) throw std::invalid_argument("encode_bnk: parts must be 1 or 2");
  if (k < 1) throw std::invalid_argument("encode_bnk: k must be >= 1");
  if (capacity(c) != k) {
    throw std::invalid_argument("encode_bnk: capacity of " + format_composition(c) + " is not " +
                                std::to_string(k));
  }
  BnkCode code;
  code.x = leading_ones(c);
  code.y = trailing_ones(c);
  const PartsView middle = c.parts().subspan(code.x, c.size() - code.x - code.y);
  std::uint64_t run = 0;
  for (Part p : middle) {
    if (p == 2) {
      ++run;
    } else {
      code.a.push_back(run);
      run = 0;
    }
  }
  code.a.push_back(run);
  return code;
}

Composition decode_bnk(std::uint64_t n, std::uint64_t k, const BnkCode& code) {
  if (k < 1) throw std::invalid_argument("decode_bnk: k must be >= 1");
  if (code.a.size() != k + 1) throw std::invalid_argument("decode_bnk: expected k+1 run lengths");
  if (code.a.front() < 1 || code.a.back() < 1) {
    throw std::invalid_argument("decode_bnk: first and last runs of 2s must be nonempty");
  }
  const std::uint64_t twos = std::accumulate(code.a.begin(), code.a.end(), std::uint64_t{0});
  if (code.x + code.y + 2 * twos + k != n) throw std::invalid_argument("decode_bnk: size mismatch");

  std::vector<Part> parts;
  parts.reserve(n);
  append(parts, 1, code.x);
  for (std::size_t i = 0; i < code.a.size(); ++i) {
    if (i) parts.push_back(1);
    append(parts, 2, code.a[i]);
  }
  append(parts, 1, code.y);
  return Composition(std::move(parts));
}

InvolutionStep involution_map(const Composition& c) {
  if (!parts_in_one_two(c) || !in_K(c)) {
    throw std::invalid_argument("involution_map: " + format_composition(c) + " is not in K_n");
  }
  const std::uint64_t x = leading_ones(c);
  const std::uint64_t y = trailing_ones(c);
  const PartsView alpha = c.parts().subspan(x + 1, c.size() - x - y - 2);
  const PartsView alpha_head = alpha.first(alpha.size() - 1);

  auto build = [](std::uint64_t ones_before, PartsView middle, Part middle_tail,
                  std::uint64_t ones_after) {
    std::vector<Part> parts;
    append(parts, 1, ones_before);
    parts.push_back(2);
    parts.insert(parts.end(), middle.begin(), middle.end());
    parts.push_back(middle_tail);
    parts.push_back(2);
    append(parts, 1, ones_after);
    return Composition(std::move(parts));
  };

  InvolutionStep step;
  if (alpha.back() == 2) {
    step.kind = InvolutionKind::stage1;
    step.partner = build(x + 1, alpha_head, 1, y);
    return step;
  }
  if (x >= 1) {
    step.kind = InvolutionKind::stage1;
    step.partner = build(x - 1, alpha_head, 2, y);
    return step;
  }

  // Survivor 2 alpha' 1 2 1^y, alpha' = alpha_head.
  if (alpha_head.empty()) {
    step.fixed_class = FixedClass::rho;
    return step;
  }
  const PartsView inner = alpha_head.first(alpha_head.size() - 1);  // alpha''
  if (alpha_head.back() == 2) {
    // 2 alpha'' 2 1 2 1^y -> 2 alpha'' 1 1 2 1^{y+1}
    std::vector<Part> mid(inner.begin(), inner.end());
    mid.push_back(1);
    step.kind = InvolutionKind::stage2;
    step.partner = build(0, mid, 1, y + 1);
    return step;
  }
  if (y >= 1) {
    // 2 alpha'' 1 1 2 1^y -> 2 alpha'' 2 1 2 1^{y-1}
    std::vector<Part> mid(inner.begin(), inner.end());
    mid.push_back(2);
    step.kind = InvolutionKind::stage2;
    step.partner = build(0, mid, 1, y - 1);
    return step;
  }
  step.fixed_class = FixedClass::terminal_double_one;
  return step;
}

BigInt knprime_signsum(std::uint64_t n) {
  if (n < 5) throw std::invalid_argument("knprime_signsum requires n >= 5");
  long sum = 0;
  for_each_B(n, [&](PartsView parts) {
    if (!in_K(parts)) return;
    const Composition c(parts);
    if (involution_map(c).kind == InvolutionKind::fixed) sum += capacity(parts) % 2 == 0 ? 1 : -1;
  });
  return BigInt(sum);
}

namespace {

void require_in_D(const Composition& c, std::uint64_t size, const char* what) {
  if (c.n() != size || !in_D(c)) {
    throw std::invalid_argument(std::string(what) + ": " + format_composition(c) +
                                " is not in D_" + std::to_string(size));
  }
}

}  // namespace

Composition d_rec2_map(const Composition& c, std::uint64_t n, int op) {
  if (n < 3) throw std::invalid_argument("d_rec2_map requires n >= 3");
  if (op != 1 && op != 2) throw std::invalid_argument("d_rec2_map: op must be 1 or 2");
  require_in_D(c, n - 2, "d_rec2_map");
  std::vector<Part> parts(c.parts().begin(), c.parts().end());
  const Part z = parts.back();
  if (op == 1) {
    parts.back() = z + 2;
  } else if (z % 2 == 0) {
    parts.push_back(2);
  } else {
    parts.back() = z + 1;
    parts.push_back(1);
  }
  return Composition(std::move(parts));
}

Composition d_rec2_exceptional(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("d_rec2_exceptional requires n >= 3");
  if (n % 2 == 1) return Composition{static_cast<Part>(n - 2), 2};
  return Composition{static_cast<Part>(n - 1), 1};
}

Composition d_rec1_map(const Composition& c, std::uint64_t n, int op) {
  if (n < 4) throw std::invalid_argument("d_rec1_map requires n >= 4");
  if (op != 1 && op != 2) throw std::invalid_argument("d_rec1_map: op must be 1 or 2");
  require_in_D(c, n - 2, "d_rec1_map");
  if (c.empty() || c.parts().back() != 1 || c.size() < 2) {
    throw std::invalid_argument("d_rec1_map: input must end in 1");
  }
  std::vector<Part> parts(c.parts().begin(), c.parts().end());
  if (op == 1) {
    parts.insert(parts.end() - 1, 2);
  } else {
    parts[parts.size() - 2] += 2;
  }
  return Composition(std::move(parts));
}

MarkedCounts marked_sets(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("marked_sets requires n >= 3");
  unsigned long all = 0;
  unsigned long outer = 0;
  for_each_B(n, [&](PartsView parts) {
    const auto ones = static_cast<unsigned long>(std::count(parts.begin(), parts.end(), Part{1}));
    all += ones;
    if (ones == parts.size()) {
      outer += ones;
    } else {
      outer += leading_ones(parts) + trailing_ones(parts);
    }
  });
  return {BigInt(all), BigInt(outer)};
}

}  // namespace capdist
