#include "ptl/perm.hpp"

#include <algorithm>
#include <sstream>

#include "ptl/errors.hpp"

namespace ptl {

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) fail(errc::degree_mismatch, "compose: degree mismatch");
  Perm out;
  out.img.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) out.img[i] = b.img[a.img[i]];
  return out;
}

Perm inverse(const Perm& a) {
  Perm out;
  out.img.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) out.img[a.img[i]] = std::uint32_t(i);
  return out;
}

std::vector<std::size_t> cycle_type(const Perm& a) {
  std::vector<bool> seen(a.degree(), false);
  std::vector<std::size_t> type;
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    std::uint32_t x = std::uint32_t(i);
    while (!seen[x]) {
      seen[x] = true;
      x = a.img[x];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

int sign(const Perm& a) {
  int s = 1;
  for (std::size_t len : cycle_type(a))
    if (len % 2 == 0) s = -s;
  return s;
}

std::vector<std::uint32_t> fixed_points(const Perm& a) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < a.degree(); ++i)
    if (a.img[i] == i) out.push_back(std::uint32_t(i));
  return out;
}

bool is_valid_perm(const std::vector<std::uint32_t>& img) {
  std::vector<bool> hit(img.size(), false);
  for (std::uint32_t x : img) {
    if (x >= img.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::string format_cycles(const Perm& a) {
  std::string out;
  std::vector<bool> seen(a.degree(), false);
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (seen[i] || a.img[i] == i) {
      seen[i] = true;
      continue;
    }
    out += "(";
    std::uint32_t x = std::uint32_t(i);
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = a.img[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm parse_perm(const std::string& text, std::size_t degree) {
  if (text.find('[') != std::string::npos) {
    std::string body = text.substr(text.find('[') + 1);
    body = body.substr(0, body.find(']'));
    std::vector<std::uint32_t> img;
    std::stringstream ss(body);
    std::string cell;
    while (std::getline(ss, cell, ','))
      try {
        img.push_back(std::uint32_t(std::stoul(cell)));
      } catch (const std::exception&) {
        fail(errc::parse_error, "bad image entry '" + cell + "'");
      }
    if (img.size() != degree || !is_valid_perm(img))
      fail(errc::parse_error, "image array is not a permutation of the right degree");
    return Perm(std::move(img));
  }
  // cycle notation
  Perm out(degree);
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto open = text.find('(', pos);
    if (open == std::string::npos) break;
    auto close = text.find(')', open);
    if (close == std::string::npos) fail(errc::parse_error, "unterminated cycle");
    std::stringstream ss(text.substr(open + 1, close - open - 1));
    std::vector<std::uint32_t> cyc;
    std::string cell;
    while (ss >> cell)
      try {
        cyc.push_back(std::uint32_t(std::stoul(cell)));
      } catch (const std::exception&) {
        fail(errc::parse_error, "bad cycle entry '" + cell + "'");
      }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] >= degree) fail(errc::parse_error, "cycle entry out of range");
      out.img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    pos = close + 1;
  }
  if (!is_valid_perm(out.img)) fail(errc::parse_error, "cycles overlap");
  return out;
}

}  // namespace ptl
