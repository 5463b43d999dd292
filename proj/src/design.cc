// Copyright 2026 The d2dcache Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "d2dcache/design.h"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace d2dcache {

Design::Design(std::vector<std::string> points, std::vector<Block> blocks)
    : points_(std::move(points)), blocks_(std::move(blocks)) {
  if (points_.empty()) throw DesignError("design has no points");
  std::vector<std::string> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DesignError("duplicate point label");
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto& block = blocks_[i];
    if (block.empty()) {
      throw DesignError("block " + std::to_string(i) + " is empty");
    }
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
      throw DesignError("block " + std::to_string(i) + " repeats a point");
    }
    if (block.front() < 0 || block.back() >= v()) {
      throw DesignError("block " + std::to_string(i) +
                        " contains a point outside the point set");
    }
  }
}

int Design::PointIndex(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) throw DesignError("unknown point '" + label + "'");
  return static_cast<int>(it - points_.begin());
}

Resolution::Resolution(Design design, std::vector<std::vector<int>> classes)
    : design_(std::move(design)), classes_(std::move(classes)) {
  if (classes_.empty()) throw DesignError("resolution has no classes");
  std::vector<int> uses(design_.b(), 0);
  for (const auto& cls : classes_) {
    for (int idx : cls) {
      if (idx < 0 || idx >= design_.b()) {
        throw DesignError("class references unknown block " +
                          std::to_string(idx));
      }
      ++uses[idx];
    }
  }
  for (int i = 0; i < design_.b(); ++i) {
    if (uses[i] != 1) {
      throw DesignError("block " + std::to_string(i) + " appears in " +
                        std::to_string(uses[i]) +
                        " classes; expected exactly one");
    }
  }
  block_size_ = static_cast<int>(design_.block(classes_[0].at(0)).size());
  for (const auto& block : design_.blocks()) {
    if (static_cast<int>(block.size()) != block_size_) {
      throw DesignError("blocks of a resolution must share one size");
    }
  }
  membership_.assign(classes_.size(), std::vector<int>(design_.v(), -1));
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (std::size_t pos = 0; pos < classes_[c].size(); ++pos) {
      for (int x : design_.block(classes_[c][pos])) {
        if (membership_[c][x] != -1) {
          throw DesignError("class " + std::to_string(c + 1) +
                            " is not pairwise disjoint at point '" +
                            design_.points()[x] + "'");
        }
        membership_[c][x] = static_cast<int>(pos);
      }
    }
    for (int x = 0; x < design_.v(); ++x) {
      if (membership_[c][x] == -1) {
        throw DesignError("class " + std::to_string(c + 1) +
                          " does not cover point '" + design_.points()[x] +
                          "'");
      }
    }
  }
}

Resolution Resolution::FromClasses(
    std::vector<std::string> points,
    const std::vector<std::vector<std::vector<std::string>>>& classes) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    index.emplace(points[i], static_cast<int>(i));
  }
  std::vector<Block> blocks;
  std::vector<std::vector<int>> class_indices;
  for (const auto& cls : classes) {
    auto& ids = class_indices.emplace_back();
    for (const auto& labels : cls) {
      Block block;
      for (const auto& label : labels) {
        auto it = index.find(label);
        if (it == index.end()) {
          throw DesignError("block references unknown point '" + label + "'");
        }
        block.push_back(it->second);
      }
      ids.push_back(static_cast<int>(blocks.size()));
      blocks.push_back(std::move(block));
    }
  }
  return Resolution(Design(std::move(points), std::move(blocks)),
                    std::move(class_indices));
}

const Block& Resolution::block(int cls, int pos) const {
  return design_.block(classes_.at(cls).at(pos));
}

std::string Resolution::BlockLabel(int cls, int pos) const {
  const auto& labels = design_.points();
  const bool compact = std::all_of(labels.begin(), labels.end(),
                                   [](const auto& s) { return s.size() == 1; });
  std::string out;
  for (int x : block(cls, pos)) {
    if (!compact && !out.empty()) out += ',';
    out += labels[x];
  }
  return out;
}

Resolution GridMcrd(int n) {
  if (n < 2) throw DesignError("grid MCRD needs n >= 2");
  std::vector<std::string> points;
  for (int i = 1; i <= n * n; ++i) points.push_back(std::to_string(i));
  std::vector<Block> blocks;
  std::vector<std::vector<int>> classes(2);
  for (int row = 0; row < n; ++row) {
    Block block;
    for (int col = 0; col < n; ++col) block.push_back(row * n + col);
    classes[0].push_back(static_cast<int>(blocks.size()));
    blocks.push_back(std::move(block));
  }
  for (int col = 0; col < n; ++col) {
    Block block;
    for (int row = 0; row < n; ++row) block.push_back(row * n + col);
    classes[1].push_back(static_cast<int>(blocks.size()));
    blocks.push_back(std::move(block));
  }
  return Resolution(Design(std::move(points), std::move(blocks)),
                    std::move(classes));
}

Resolution DesignFromCode(const GeneratorMatrix& g) {
  const auto words = EnumerateCodewords(g);
  std::vector<std::string> points;
  for (std::size_t i = 0; i < words.size(); ++i) {
    points.push_back(std::to_string(i));
  }
  std::vector<Block> blocks;
  std::vector<std::vector<int>> classes(g.n());
  for (std::size_t coord = 0; coord < g.n(); ++coord) {
    for (PrimeField::Element a = 0; a < g.q(); ++a) {
      Block block;
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (words[j][coord] == a) block.push_back(static_cast<int>(j));
      }
      if (block.empty()) {
        // All-zero coordinate: nonzero values never occur.
        throw DesignError("coordinate " + std::to_string(coord + 1) +
                          " never takes value " + std::to_string(a));
      }
      classes[coord].push_back(static_cast<int>(blocks.size()));
      blocks.push_back(std::move(block));
    }
  }
  return Resolution(Design(std::move(points), std::move(blocks)),
                    std::move(classes));
}

namespace {

// Walks every tuple with one block from each chosen class and tracks the
// common intersection size. Returns false as soon as two sizes differ.
class IntersectionScan {
 public:
  IntersectionScan(const Resolution& res, const std::vector<int>& classes)
      : res_(res), classes_(classes) {}

  bool Run(std::optional<int>& common) {
    common_ = &common;
    std::vector<int> all(res_.v());
    for (int x = 0; x < res_.v(); ++x) all[x] = x;
    return Visit(0, all);
  }

 private:
  bool Visit(std::size_t depth, const std::vector<int>& current) {
    if (depth == classes_.size()) {
      const int size = static_cast<int>(current.size());
      if (!common_->has_value()) {
        *common_ = size;
        return true;
      }
      return **common_ == size;
    }
    const int cls = classes_[depth];
    for (int pos = 0; pos < res_.class_size(); ++pos) {
      const Block& block = res_.block(cls, pos);
      std::vector<int> next;
      std::set_intersection(current.begin(), current.end(), block.begin(),
                            block.end(), std::back_inserter(next));
      if (!Visit(depth + 1, next)) return false;
    }
    return true;
  }

  const Resolution& res_;
  const std::vector<int>& classes_;
  std::optional<int>* common_ = nullptr;
};

// Calls fn for every i-subset of {0..r-1} in lexicographic order; stops when
// fn returns false.
template <typename Fn>
bool ForEachSubset(int r, int i, Fn&& fn) {
  std::vector<int> subset(i);
  for (int j = 0; j < i; ++j) subset[j] = j;
  while (true) {
    if (!fn(subset)) return false;
    int j = i - 1;
    while (j >= 0 && subset[j] == r - i + j) --j;
    if (j < 0) return true;
    ++subset[j];
    for (int m = j + 1; m < i; ++m) subset[m] = subset[m - 1] + 1;
  }
}

}  // namespace

CrossProfile ComputeCrossProfile(const Resolution& res) {
  if (res.r() < 2) {
    throw DesignError("cross intersection numbers need at least 2 classes");
  }
  CrossProfile profile;
  profile.mu.assign(res.r() + 1, std::nullopt);
  for (int i = 2; i <= res.r(); ++i) {
    std::optional<int> common;
    const bool uniform = ForEachSubset(res.r(), i, [&](const auto& subset) {
      return IntersectionScan(res, subset).Run(common);
    });
    if (uniform && common.has_value() && *common != 0) {
      profile.mu[i] = common;
      profile.crn = i;
    }
  }
  profile.is_crd = profile.crn.has_value();
  profile.is_mcrd = profile.crn == res.r();
  return profile;
}

namespace {

class ResolutionSearch {
 public:
  ResolutionSearch(const Design& design, int per_class)
      : design_(design),
        per_class_(per_class),
        used_(design.b(), false),
        covered_(design.v(), false) {}

  std::optional<std::vector<std::vector<int>>> Run() {
    if (design_.b() % per_class_ != 0) return std::nullopt;
    if (OpenClass()) return classes_;
    return std::nullopt;
  }

 private:
  // Starts a new class with the smallest unused block.
  bool OpenClass() {
    int first = 0;
    while (first < design_.b() && used_[first]) ++first;
    if (first == design_.b()) return true;
    classes_.emplace_back();
    Take(first);
    if (Fill(first + 1)) return true;
    Release(first);
    classes_.pop_back();
    return false;
  }

  bool Fill(int from) {
    if (static_cast<int>(classes_.back().size()) == per_class_) {
      std::fill(covered_.begin(), covered_.end(), false);
      auto saved = classes_.back();
      if (OpenClass()) return true;
      for (int idx : saved) Mark(idx, true);
      return false;
    }
    for (int idx = from; idx < design_.b(); ++idx) {
      if (used_[idx] || !Disjoint(idx)) continue;
      Take(idx);
      if (Fill(idx + 1)) return true;
      Release(idx);
    }
    return false;
  }

  bool Disjoint(int idx) const {
    for (int x : design_.block(idx)) {
      if (covered_[x]) return false;
    }
    return true;
  }

  void Mark(int idx, bool value) {
    for (int x : design_.block(idx)) covered_[x] = value;
  }

  void Take(int idx) {
    used_[idx] = true;
    Mark(idx, true);
    classes_.back().push_back(idx);
  }

  void Release(int idx) {
    used_[idx] = false;
    Mark(idx, false);
    classes_.back().pop_back();
  }

  const Design& design_;
  int per_class_;
  std::vector<bool> used_;
  std::vector<bool> covered_;
  std::vector<std::vector<int>> classes_;
};

}  // namespace

std::optional<Resolution> FindResolution(const Design& design, int k) {
  if (k <= 0) throw DesignError("block size must be positive");
  for (int i = 0; i < design.b(); ++i) {
    if (static_cast<int>(design.block(i).size()) != k) {
      throw DesignError("block " + std::to_string(i) + " has size " +
                        std::to_string(design.block(i).size()) +
                        ", expected " + std::to_string(k));
    }
  }
  if (design.v() % k != 0) {
    throw DesignError("block size " + std::to_string(k) +
                      " does not divide v = " + std::to_string(design.v()));
  }
  if (design.b() == 0) return std::nullopt;
  auto classes = ResolutionSearch(design, design.v() / k).Run();
  if (!classes) return std::nullopt;
  return Resolution(design, std::move(*classes));
}

}  // namespace d2dcache
