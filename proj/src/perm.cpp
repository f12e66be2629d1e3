#include "lact/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "lact/error.hpp"

namespace lact {

Perm::Perm(int degree) : images_(degree) {
  if (degree < 0) fail(Error::Kind::validation, "negative permutation degree");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int d = degree();
  std::vector<char> seen(d, 0);
  for (int x : images_) {
    if (x < 0 || x >= d) fail(Error::Kind::validation, "permutation image out of range");
    if (seen[x]) fail(Error::Kind::validation, "permutation image repeated");
    seen[x] = 1;
  }
}

Perm Perm::parse_cycles(const std::string& text, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size())
    fail(Error::Kind::parse, "empty permutation literal (use \"()\" for the identity)");
  bool any_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      fail(Error::Kind::parse, std::string("expected '(' at position ") + std::to_string(i) +
                                   " in \"" + text + "\"");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) fail(Error::Kind::parse, "unterminated cycle in \"" + text + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(Error::Kind::parse, std::string("unexpected character '") + text[i] + "' in \"" +
                                     text + "\"");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      if (value >= degree)
        fail(Error::Kind::parse, "point " + std::to_string(value) + " exceeds degree " +
                                     std::to_string(degree) + " in \"" + text + "\"");
      if (used[value])
        fail(Error::Kind::parse,
             "point " + std::to_string(value) + " repeated in \"" + text + "\"");
      used[value] = 1;
      cycle.push_back(value);
    }
    any_cycle = true;
    for (size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  if (!any_cycle) fail(Error::Kind::parse, "no cycles in \"" + text + "\"");
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < degree(); ++x) inv[images_[x]] = x;
  return Perm(std::move(inv));
}

int Perm::order() const {
  // lcm of cycle lengths
  const int d = degree();
  std::vector<char> seen(d, 0);
  long long result = 1;
  for (int x = 0; x < d; ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    result = std::lcm<long long>(result, len);
  }
  return static_cast<int>(result);
}

std::string Perm::cycles() const {
  const int d = degree();
  std::vector<char> seen(d, 0);
  std::ostringstream out;
  bool any = false;
  for (int x = 0; x < d; ++x) {
    if (seen[x] || images_[x] == x) {
      seen[x] = 1;
      continue;
    }
    any = true;
    out << '(';
    bool first = true;
    for (int y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      if (!first) out << ' ';
      out << y;
      first = false;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    fail(Error::Kind::validation, "degree mismatch in permutation product");
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[x] = p(q(x));
  return Perm(std::move(images));
}

}  // namespace lact
