#include "frattini/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frattini/errors.hpp"

namespace frattini {

Perm::Perm(std::vector<uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t img : images_) {
    if (img >= images_.size() || seen[img]) {
      throw DomainError("image array is not a permutation");
    }
    seen[img] = true;
  }
}

Perm Perm::identity(uint32_t degree) {
  Perm p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), 0u);
  return p;
}

Perm Perm::from_cycles(const std::string& text, uint32_t degree) {
  Perm p = identity(degree);
  std::vector<bool> used(degree, false);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("malformed cycle: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<uint32_t> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError("malformed cycle: unterminated '(' in \"" + text + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("malformed cycle: unexpected character in \"" + text + "\"");
      }
      uint64_t point = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        point = point * 10 + static_cast<uint64_t>(text[i] - '0');
        ++i;
      }
      if (point == 0 || point > degree) {
        throw ParseError("cycle point " + std::to_string(point) + " out of range 1.." +
                         std::to_string(degree));
      }
      uint32_t zero_based = static_cast<uint32_t>(point - 1);
      if (used[zero_based]) {
        throw ParseError("malformed cycle: point " + std::to_string(point) + " repeated");
      }
      used[zero_based] = true;
      cycle.push_back(zero_based);
    }
    for (size_t k = 0; k + 1 < cycle.size(); ++k) p.images_[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) p.images_[cycle.back()] = cycle.front();
    any = true;
    skip_ws();
  }
  if (!any) throw ParseError("malformed cycle: empty string (use \"()\" for the identity)");
  return p;
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm out;
  out.images_.resize(images_.size());
  for (uint32_t i = 0; i < images_.size(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (uint32_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = i;
  return out;
}

Perm Perm::conjugated_by(const Perm& g) const { return g.inverse() * (*this * g); }

uint64_t Perm::element_order() const {
  // lcm of cycle lengths
  uint64_t order = 1;
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    uint64_t len = 0;
    uint32_t x = start;
    do {
      seen[x] = true;
      x = images_[x];
      ++len;
    } while (x != start);
    order = std::lcm(order, len);
  }
  return order;
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) {
      seen[start] = true;
      continue;
    }
    out << '(';
    uint32_t x = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << (x + 1);
      seen[x] = true;
      x = images_[x];
      first = false;
    } while (x != start);
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image words
  uint64_t h = 14695981039346656037ull;
  for (uint32_t img : p.images()) {
    h ^= img;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

}  // namespace frattini
