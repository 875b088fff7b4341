#include "onetri/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "onetri/error.hpp"

namespace onetri {

std::size_t TriangleType::alphabet_size() const noexcept {
  switch (kind_) {
    case TriangleKind::equilateral: return 1;
    case TriangleKind::isosceles: return 2;
    case TriangleKind::scalene: return 3;
  }
  return 0;
}

std::array<Label, 3> TriangleType::label_multiset() const noexcept {
  switch (kind_) {
    case TriangleKind::equilateral: return {0, 0, 0};
    case TriangleKind::isosceles: return {0, 0, 1};
    case TriangleKind::scalene: return {0, 1, 2};
  }
  return {0, 0, 0};
}

std::string TriangleType::label_name(Label label) const {
  if (kind_ == TriangleKind::equilateral) return "x";
  return "d" + std::to_string(static_cast<int>(label) + 1);
}

std::size_t edge_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  // Edges before row i: (n-1) + (n-2) + ... + (n-i).
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

EdgeLabeling::EdgeLabeling(std::size_t n, std::vector<Label> labels) : n_(n), labels_(std::move(labels)) {
  if (n_ < 2) throw PreconditionError("a labeling needs at least 2 vertices");
  if (labels_.size() != n_ * (n_ - 1) / 2) {
    throw PreconditionError("K_" + std::to_string(n_) + " has " + std::to_string(n_ * (n_ - 1) / 2) +
                            " edges, got " + std::to_string(labels_.size()) + " labels");
  }
}

EdgeLabeling EdgeLabeling::uniform(std::size_t n, Label label) {
  return EdgeLabeling(n, std::vector<Label>(n * (n - 1) / 2, label));
}

Label EdgeLabeling::label(std::size_t i, std::size_t j) const {
  if (i == j || i >= n_ || j >= n_) throw PreconditionError("invalid edge");
  return labels_[edge_index(n_, i, j)];
}

EdgeLabeling EdgeLabeling::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) throw PreconditionError("permutation size mismatch");
  std::vector<Label> out(labels_.size());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) out[edge_index(n_, perm[i], perm[j])] = label(i, j);
  }
  return EdgeLabeling(n_, std::move(out));
}

std::string EdgeLabeling::to_string(const TriangleType& type) const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!out.empty()) out += ' ';
      out += std::to_string(i) + "-" + std::to_string(j) + ":" + type.label_name(label(i, j));
    }
  }
  return out;
}

namespace {

bool triple_ok(Label x, Label y, Label z, const std::array<Label, 3>& want) {
  std::array<Label, 3> got{x, y, z};
  std::sort(got.begin(), got.end());
  return got == want;
}

class LabelingSearch {
 public:
  LabelingSearch(std::size_t n, TriangleType type)
      : n_(n), type_(type), want_(type.label_multiset()), labels_(n * (n - 1) / 2) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) order_.emplace_back(i, j);
    }
  }

  std::set<EdgeLabeling> run() {
    assign(0);
    return found_;
  }

 private:
  // Edge (b, c) is the last edge of every triangle (a, b, c) with a < b, so
  // those triangles are checked as soon as it is labeled.
  bool closes_cleanly(std::size_t b, std::size_t c) const {
    for (std::size_t a = 0; a < b; ++a) {
      if (!triple_ok(labels_[edge_index(n_, a, b)], labels_[edge_index(n_, a, c)],
                     labels_[edge_index(n_, b, c)], want_)) {
        return false;
      }
    }
    return true;
  }

  void assign(std::size_t k) {
    if (k == order_.size()) {
      found_.insert(canonical_form(EdgeLabeling(n_, labels_)));
      return;
    }
    auto [b, c] = order_[k];
    // Every class has a member whose edge 0-1 carries its smallest label.
    const Label floor = k == 0 ? Label{0} : labels_[0];
    for (Label l = floor; l < type_.alphabet_size(); ++l) {
      labels_[k] = l;
      if (closes_cleanly(b, c)) assign(k + 1);
    }
  }

  std::size_t n_;
  TriangleType type_;
  std::array<Label, 3> want_;
  std::vector<Label> labels_;
  std::vector<std::pair<std::size_t, std::size_t>> order_;
  std::set<EdgeLabeling> found_;
};

}  // namespace

bool triangle_constraint_holds(const EdgeLabeling& labeling, const TriangleType& type) {
  const auto want = type.label_multiset();
  const std::size_t n = labeling.vertices();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!triple_ok(labeling.label(a, b), labeling.label(a, c), labeling.label(b, c), want)) {
          return false;
        }
      }
    }
  }
  return true;
}

EdgeLabeling canonical_form(const EdgeLabeling& labeling) {
  const auto& labels = labeling.labels();
  if (std::adjacent_find(labels.begin(), labels.end(), std::not_equal_to<>()) == labels.end()) {
    return labeling;
  }
  const std::size_t n = labeling.vertices();
  if (n > kMaxEnumerationVertices) {
    throw PreconditionError("canonical form is brute force and limited to small n");
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeLabeling best = labeling;
  while (std::next_permutation(perm.begin(), perm.end())) {
    EdgeLabeling candidate = labeling.permuted(perm);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

EnumerationResult enumerate_one_triangle_labelings(std::size_t n, TriangleKind kind) {
  if (n < 3 || n > kMaxEnumerationVertices) {
    throw PreconditionError("enumeration supports 3 <= n <= " +
                            std::to_string(kMaxEnumerationVertices) + ", got " + std::to_string(n));
  }
  auto found = LabelingSearch(n, TriangleType(kind)).run();
  return {kind, n, std::vector<EdgeLabeling>(found.begin(), found.end())};
}

}  // namespace onetri
