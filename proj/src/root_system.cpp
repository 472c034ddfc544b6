#include "rook_orbits/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rook_orbits {

SystemKind SystemKind::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "g2") return g2();
  if (t == "f4") return f4();
  if (t.size() >= 2 && t[0] == 'a') {
    std::string digits = t.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int n = std::stoi(digits);
      if (n >= 1) return a(n);
    }
  }
  throw std::invalid_argument("unsupported root system '" + text + "'");
}

std::string SystemKind::name() const {
  switch (family) {
    case SystemFamily::A: return "A" + std::to_string(n);
    case SystemFamily::G2: return "G2";
    case SystemFamily::F4: return "F4";
  }
  return "?";
}

Root root_add(const Root& a, const Root& b) {
  if (a.size() != b.size()) throw std::invalid_argument("root dimension mismatch");
  Root r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Root root_sub(const Root& a, const Root& b) {
  if (a.size() != b.size()) throw std::invalid_argument("root dimension mismatch");
  Root r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Root root_neg(const Root& a) {
  Root r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool is_nonnegative(const Root& a) {
  return std::all_of(a.begin(), a.end(), [](int c) { return c >= 0; });
}

bool is_zero_root(const Root& a) {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

std::string format_root(const Root& r) {
  std::string s;
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(r[i]);
  }
  return s;
}

Root parse_root_coeffs(const std::string& text) {
  Root r;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size()) throw std::invalid_argument("bad root string '" + text + "'");
    r.push_back(v);
  }
  if (r.empty()) throw std::invalid_argument("empty root string");
  return r;
}

RootSystem::RootSystem(SystemKind kind) : kind_(kind) {
  switch (kind.family) {
    case SystemFamily::A:
      if (kind.n < 1) throw std::invalid_argument("A(n) needs n >= 1");
      rank_ = kind.n;
      gram_ = RationalMatrix::Zero(rank_, rank_);
      for (int i = 0; i < rank_; ++i) {
        gram_(i, i) = 2;
        if (i + 1 < rank_) gram_(i, i + 1) = gram_(i + 1, i) = -1;
      }
      break;
    case SystemFamily::G2:
      rank_ = 2;
      gram_.resize(2, 2);
      gram_ << Rational(1), Rational(-3, 2), Rational(-3, 2), Rational(3);
      break;
    case SystemFamily::F4:
      rank_ = 4;
      gram_ = RationalMatrix::Zero(4, 4);
      gram_(0, 0) = gram_(1, 1) = 2;
      gram_(2, 2) = gram_(3, 3) = 1;
      gram_(0, 1) = gram_(1, 0) = -1;
      gram_(1, 2) = gram_(2, 1) = -1;
      gram_(2, 3) = gram_(3, 2) = Rational(-1, 2);
      break;
    default:
      throw std::invalid_argument("unsupported root system kind");
  }
  generate_positive_roots();

  const int p = num_positive();
  inner_.assign(p, std::vector<Rational>(p));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) inner_[a][b] = inner_product(positive_[a], positive_[b]);

  leq_.assign(p, std::vector<bool>(p, false));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) leq_[a][b] = leq(positive_[a], positive_[b]);
}

// Root strings through each simple root: gamma + alpha_i is a root iff q - <gamma, alpha_i^v> > 0.
void RootSystem::generate_positive_roots() {
  std::vector<Root> found;
  std::map<Root, int> seen;
  std::vector<Root> frontier;
  for (int i = 0; i < rank_; ++i) {
    Root s = simple_root(i);
    seen[s] = 1;
    found.push_back(s);
    frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& r : frontier) {
      for (int i = 0; i < rank_; ++i) {
        Root s = simple_root(i);
        int q = 0;
        Root t = root_sub(r, s);
        while (seen.count(t)) {
          ++q;
          t = root_sub(t, s);
        }
        Rational pairing = cartan_pairing(i, r);
        if (Rational(q) - pairing > Rational(0)) {
          Root up = root_add(r, s);
          if (!seen.count(up)) {
            seen[up] = 1;
            found.push_back(up);
            next.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](const Root& a, const Root& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  positive_ = std::move(found);
  for (int i = 0; i < num_positive(); ++i) index_[positive_[i]] = i;
}

Root RootSystem::simple_root(int i) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("simple root index");
  Root r(rank_, 0);
  r[i] = 1;
  return r;
}

std::optional<int> RootSystem::index_of(const Root& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::height(int idx) const {
  const Root& r = positive_.at(idx);
  return std::accumulate(r.begin(), r.end(), 0);
}

Rational RootSystem::inner_product(const Root& a, const Root& b) const {
  if (static_cast<int>(a.size()) != rank_ || static_cast<int>(b.size()) != rank_)
    throw std::invalid_argument("root dimension mismatch");
  Rational s(0);
  for (int i = 0; i < rank_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j]) s += Rational(a[i] * b[j]) * gram_(i, j);
  }
  return s;
}

Rational RootSystem::cartan_pairing(int simple, const Root& b) const {
  Root s = simple_root(simple);
  return Rational(2) * inner_product(s, b) / gram_(simple, simple);
}

bool RootSystem::is_root(const Root& v) const { return index_.count(v) || index_.count(root_neg(v)); }

namespace {

// Multisets of positive roots (non-decreasing canonical index) summing to gamma.
void decompose(const RootSystem& sys, const Root& gamma, int min_idx, std::vector<int>& cur,
               std::vector<std::vector<int>>& out, bool first_only) {
  if (is_zero_root(gamma)) {
    out.push_back(cur);
    return;
  }
  for (int k = min_idx; k < sys.num_positive(); ++k) {
    Root rest = root_sub(gamma, sys.root(k));
    if (!is_nonnegative(rest)) continue;
    cur.push_back(k);
    decompose(sys, rest, k, cur, out, first_only);
    cur.pop_back();
    if (first_only && !out.empty()) return;
  }
}

}  // namespace

std::vector<std::vector<int>> RootSystem::sum_decompositions(const Root& gamma) const {
  if (static_cast<int>(gamma.size()) != rank_) throw std::invalid_argument("root dimension mismatch");
  std::vector<std::vector<int>> out;
  if (!is_nonnegative(gamma)) return out;
  std::vector<int> cur;
  decompose(*this, gamma, 0, cur, out, false);
  return out;
}

bool RootSystem::leq(const Root& a, const Root& b) const {
  Root d = root_sub(b, a);
  if (!is_nonnegative(d)) return false;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  decompose(*this, d, 0, cur, out, true);
  return !out.empty();
}

std::vector<int> RootSystem::singular_set(int beta) const {
  if (beta < 0 || beta >= num_positive()) throw std::invalid_argument("singular_set needs a positive root");
  std::vector<int> out;
  for (int a = 0; a < num_positive(); ++a)
    if (index_of(root_sub(positive_[beta], positive_[a]))) out.push_back(a);
  return out;
}

std::string RootSystem::root_string(int idx) const { return format_root(positive_.at(idx)); }

std::optional<int> RootSystem::parse_root(const std::string& text) const {
  Root r = parse_root_coeffs(text);
  if (static_cast<int>(r.size()) != rank_) return std::nullopt;
  return index_of(r);
}

}  // namespace rook_orbits
