#include "totalcolor/permutation.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace totalcolor {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
  const int n = degree();
  std::vector<bool> seen(n + 1, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[x])
      throw std::invalid_argument("permutation images are not a bijection on {1.." +
                                  std::to_string(n) + "}");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int degree)
{
  if (degree < 0)
    throw std::invalid_argument("negative permutation degree");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int degree, int a, int b)
{
  const int symbols[] = {a, b};
  return cycle(degree, symbols);
}

Permutation Permutation::cycle(int degree, std::span<const int> symbols)
{
  Permutation p = identity(degree);
  std::vector<bool> used(degree + 1, false);
  for (int s : symbols) {
    if (s < 1 || s > degree || used[s])
      throw std::invalid_argument("invalid cycle symbol " + std::to_string(s));
    used[s] = true;
  }
  for (std::size_t i = 0; i < symbols.size(); ++i)
    p.images_[symbols[i] - 1] = symbols[(i + 1) % symbols.size()];
  return p;
}

Permutation Permutation::long_cycle(int degree)
{
  std::vector<int> symbols(degree);
  std::iota(symbols.begin(), symbols.end(), 1);
  return cycle(degree, symbols);
}

Permutation Permutation::parse(std::string_view text, int degree)
{
  Permutation result = identity(degree);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_space();
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    skip_space();
    if (pos != text.size())
      throw std::invalid_argument("trailing characters after identity: " + std::string(text));
    return result;
  }
  bool any = false;
  while (true) {
    skip_space();
    if (pos == text.size())
      break;
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos)
      throw std::invalid_argument("unterminated cycle: " + std::string(text));
    std::string_view body = text.substr(pos, close - pos);
    pos = close + 1;

    const bool separated = body.find_first_of(" ,") != std::string_view::npos;
    std::vector<int> symbols;
    if (separated) {
      std::size_t i = 0;
      while (i < body.size()) {
        while (i < body.size() && (body[i] == ' ' || body[i] == ','))
          ++i;
        std::size_t j = i;
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j])))
          ++j;
        if (j == i) {
          if (i < body.size())
            throw std::invalid_argument("bad symbol in cycle: " + std::string(body));
          break;
        }
        symbols.push_back(std::stoi(std::string(body.substr(i, j - i))));
        i = j;
      }
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw std::invalid_argument("bad symbol in cycle: " + std::string(body));
        symbols.push_back(ch - '0');
      }
    }
    result = result * cycle(degree, symbols);
    any = true;
  }
  if (!any)
    throw std::invalid_argument("empty permutation text");
  return result;
}

bool Permutation::is_identity() const
{
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1)
      return false;
  return true;
}

bool Permutation::is_even() const
{
  // parity = (n - number of cycles) mod 2
  const int n = degree();
  std::vector<bool> seen(n + 1, false);
  int cycles = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[i])
      continue;
    ++cycles;
    for (int j = i; !seen[j]; j = images_[j - 1])
      seen[j] = true;
  }
  return (n - cycles) % 2 == 0;
}

int Permutation::order() const
{
  const int n = degree();
  std::vector<bool> seen(n + 1, false);
  int result = 1;
  for (int i = 1; i <= n; ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j - 1]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::extended(int new_degree) const
{
  if (new_degree < degree())
    throw std::invalid_argument("cannot shrink permutation degree");
  Permutation p = identity(new_degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

std::string Permutation::to_string() const
{
  const int n = degree();
  const bool compact = n <= 9;
  std::vector<bool> seen(n + 1, false);
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (seen[i] || images_[i - 1] == i)
      continue;
    out += '(';
    bool first = true;
    for (int j = i; !seen[j]; j = images_[j - 1]) {
      seen[j] = true;
      if (!first && !compact)
        out += ' ';
      out += std::to_string(j);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

Permutation compose(const Permutation& p, const Permutation& q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch in composition: " + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()));
  std::vector<int> images(p.degree());
  for (int i = 0; i < p.degree(); ++i)
    images[i] = p(q.images()[i]);
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p)
{
  std::vector<int> images(p.degree());
  for (int i = 0; i < p.degree(); ++i)
    images[p.images()[i] - 1] = i + 1;
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& a, const Permutation& b) { return compose(b, a); }

}  // namespace totalcolor
