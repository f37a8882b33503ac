#include "ordia/dinfty.hpp"

#include <charconv>
#include <stdexcept>

namespace ordia {

namespace {

const DyadicRational kHalf = DyadicRational::pow2(-1);

DInfCode tail(const DInfCode& c, const DyadicRational& r) {
  return normalize(DInfCode{std::vector<std::uint64_t>(c.A.begin() + 1, c.A.end()), r});
}

}  // namespace

DInfCode normalize(const DInfCode& raw) {
  if (raw.r < DyadicRational(0) || raw.r > DyadicRational(1)) {
    throw std::invalid_argument("code height outside [0,1]: " + raw.r.to_string());
  }
  if (raw.r == DyadicRational(0)) return DInfCode::bottom();
  if (raw.r == DyadicRational(1)) return DInfCode::top();
  const std::size_t k = raw.r.exponent();
  if (raw.A.size() < k) {
    throw std::invalid_argument("branch address too short for height " + raw.r.to_string());
  }
  return DInfCode{std::vector<std::uint64_t>(raw.A.begin(), raw.A.begin() + static_cast<std::ptrdiff_t>(k)), raw.r};
}

bool is_canonical(const DInfCode& c) {
  if (c.A.empty()) return c.r == DyadicRational(0) || c.r == DyadicRational(1);
  return c.r > DyadicRational(0) && c.r < DyadicRational(1) && c.r.exponent() == c.A.size();
}

std::string to_string(const DInfCode& c) {
  std::string out = "A=[";
  for (std::size_t k = 0; k < c.A.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(c.A[k]);
  }
  return out + "];r=" + c.r.to_string();
}

DInfCode parse_dinf_code(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed D_inf code: " + std::string(text)); };
  if (text.substr(0, 3) != "A=[") throw bad();
  auto close = text.find("];r=");
  if (close == std::string_view::npos) throw bad();
  DInfCode c;
  std::string_view list = text.substr(3, close - 3);
  while (!list.empty()) {
    auto comma = list.find(',');
    std::string_view item = list.substr(0, comma);
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || p != item.data() + item.size()) throw bad();
    c.A.push_back(v);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
    if (list.empty()) throw bad();
  }
  c.r = DyadicRational(parse_rational(text.substr(close + 4)));
  return normalize(c);
}

DInfCode g_map(std::uint64_t i, bool plus, const DInfCode& c) {
  DInfCode out;
  out.A.reserve(c.A.size() + 1);
  out.A.push_back(i);
  out.A.insert(out.A.end(), c.A.begin(), c.A.end());
  out.r = plus ? (c.r + DyadicRational(1)).half() : c.r.half();
  return normalize(out);
}

DyadicRational dinf_dist(const DInfCode& x, const DInfCode& y) {
  if (x == y) return 0;
  if (x.is_pole() || y.is_pole()) return (x.r - y.r).abs();
  if (x.A[0] != y.A[0]) {
    DyadicRational s = x.r + y.r;
    return min(s, DyadicRational(2) - s);
  }
  if (x.r < kHalf && y.r < kHalf) {
    return dinf_dist(tail(x, x.r * 2), tail(y, y.r * 2)).half();
  }
  if (x.r > kHalf && y.r > kHalf) {
    return dinf_dist(tail(x, x.r * 2 - 1), tail(y, y.r * 2 - 1)).half();
  }
  return (x.r - y.r).abs();
}

DInfCode psi(const Vertex& v) {
  DInfCode c;
  switch (v.end.kind) {
    case Terminal::Kind::Top: c = DInfCode::top(); break;
    case Terminal::Kind::Bottom: c = DInfCode::bottom(); break;
    case Terminal::Kind::Hub: c = DInfCode{{v.end.hub}, kHalf}; break;
  }
  for (auto it = v.path.rbegin(); it != v.path.rend(); ++it) {
    if (it->kind == Slot::Kind::Branch) {
      c = g_map(it->index, it->plus, c);
    } else if (!c.is_pole()) {
      c.A[0] = cantor_pair(it->index, c.A[0]);
    }
  }
  return c;
}

DInfCode random_code(std::mt19937_64& rng, std::size_t max_depth, std::uint64_t width) {
  if (max_depth == 0 || max_depth > 60 || width == 0) throw std::invalid_argument("random_code: bad parameters");
  switch (rng() % 16) {
    case 0: return DInfCode::bottom();
    case 1: return DInfCode::top();
    default: break;
  }
  const std::size_t k = 1 + rng() % max_depth;
  DInfCode c;
  for (std::size_t j = 0; j < k; ++j) c.A.push_back(rng() % width);
  const std::uint64_t m = 2 * (rng() % (std::uint64_t{1} << (k - 1))) + 1;
  c.r = DyadicRational(Rational(mpz_class(std::to_string(m)), mpz_class(1) << static_cast<unsigned>(k)));
  return c;
}

}  // namespace ordia
