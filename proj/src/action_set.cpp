#include "semibandit/action_set.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace semibandit {

ActionSet ActionSet::hypercube(int d) {
  if (d < 1) throw ConfigError("hypercube needs d >= 1");
  return ActionSet(SetKind::kHypercube, d, d, {});
}

ActionSet ActionSet::mset(int d, int m) {
  if (d < 2 || m < 1 || m > d - 1) {
    throw ConfigError("m-set needs 1 <= m <= d-1, got d=" + std::to_string(d) +
                      " m=" + std::to_string(m));
  }
  return ActionSet(SetKind::kMSet, d, m, {});
}

ActionSet ActionSet::enumerated(std::vector<Action> vertices) {
  if (vertices.empty()) throw ConfigError("enumerated action set is empty");
  const std::size_t d = vertices.front().size();
  if (d == 0) throw ConfigError("enumerated vertices have zero length");

  std::set<Action> seen;
  std::vector<Action> unique;
  unique.reserve(vertices.size());
  for (auto& v : vertices) {
    if (v.size() != d) throw DimensionError("enumerated vertices differ in length");
    for (auto b : v) {
      if (b > 1) throw ConfigError("enumerated vertex is not binary");
    }
    if (seen.insert(v).second) unique.push_back(std::move(v));
  }
  if (unique.size() > kMaxEnumeratedVertices) {
    throw ConfigError("enumerated action set exceeds 2^16 vertices");
  }
  int max_ones = 0;
  for (const auto& v : unique) {
    max_ones = std::max(max_ones, static_cast<int>(std::count(v.begin(), v.end(), 1)));
  }
  return ActionSet(SetKind::kEnumerated, static_cast<int>(d), max_ones, std::move(unique));
}

ActionSet ActionSet::load_enumerated(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open vertex file " + path.string());
  std::vector<Action> vertices;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    Action v;
    v.reserve(line.size());
    for (char c : line) {
      if (c != '0' && c != '1') {
        throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                          ": expected only '0'/'1' characters");
      }
      v.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    vertices.push_back(std::move(v));
  }
  return enumerated(std::move(vertices));
}

void ActionSet::check_dim(std::size_t n) const {
  if (n != static_cast<std::size_t>(d_)) {
    throw DimensionError("expected a vector of length " + std::to_string(d_) + ", got " +
                         std::to_string(n));
  }
}

bool ActionSet::contains(std::span<const std::uint8_t> v) const {
  check_dim(v.size());
  if (std::any_of(v.begin(), v.end(), [](auto b) { return b > 1; })) return false;
  switch (kind_) {
    case SetKind::kHypercube:
      return true;
    case SetKind::kMSet:
      return std::count(v.begin(), v.end(), 1) == m_;
    case SetKind::kEnumerated:
      return std::any_of(vertices_.begin(), vertices_.end(),
                         [&](const Action& u) { return std::equal(u.begin(), u.end(), v.begin()); });
  }
  return false;
}

std::size_t ActionSet::enumerated_argmin(std::span<const double> w) const {
  if (kind_ != SetKind::kEnumerated) throw UnsupportedError("enumerated_argmin on a structured set");
  check_dim(w.size());
  std::size_t best = 0;
  double best_value = 0.0;
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    double value = 0.0;
    for (int i = 0; i < d_; ++i) {
      if (vertices_[k][i]) value += w[i];
    }
    if (k == 0 || value < best_value) {
      best = k;
      best_value = value;
    }
  }
  return best;
}

Action ActionSet::linear_min_oracle(std::span<const double> w) const {
  check_dim(w.size());
  Action out(d_, 0);
  switch (kind_) {
    case SetKind::kHypercube:
      for (int i = 0; i < d_; ++i) out[i] = w[i] < 0.0 ? 1 : 0;
      break;
    case SetKind::kMSet: {
      std::vector<int> order(d_);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
      for (int k = 0; k < m_; ++k) out[order[k]] = 1;
      break;
    }
    case SetKind::kEnumerated:
      out = vertices_[enumerated_argmin(w)];
      break;
  }
  return out;
}

double ActionSet::hull_residual(std::span<const double> x) const {
  check_dim(x.size());
  double residual = 0.0;
  double sum = 0.0;
  for (double v : x) {
    residual = std::max({residual, -v, v - 1.0});
    sum += v;
  }
  if (kind_ == SetKind::kMSet) residual = std::max(residual, std::abs(sum - m_));
  return residual;
}

std::string ActionSet::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case SetKind::kHypercube:
      os << "hypercube(d=" << d_ << ")";
      break;
    case SetKind::kMSet:
      os << "mset(d=" << d_ << ",m=" << m_ << ")";
      break;
    case SetKind::kEnumerated:
      os << "enumerated(d=" << d_ << ",n=" << vertices_.size() << ")";
      break;
  }
  return os.str();
}

}  // namespace semibandit
