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

// Combinatorial designs, resolutions into parallel classes and cross
// intersection numbers.
//
// Points carry arbitrary string labels externally and dense 0-based indices
// internally. A block is a sorted list of point indices. The block multiset
// may contain repeated contents; within a Resolution a block is identified by
// (class, position in class).

#ifndef D2DCACHE_DESIGN_H_
#define D2DCACHE_DESIGN_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "d2dcache/finite_field.h"

namespace d2dcache {

class DesignError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Block = std::vector<int>;

class Design {
 public:
  // Blocks are sorted on construction. Throws DesignError on duplicate point
  // labels, empty blocks, out-of-range or repeated points within a block.
  Design(std::vector<std::string> points, std::vector<Block> blocks);

  int v() const { return static_cast<int>(points_.size()); }
  int b() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(int i) const { return blocks_.at(i); }

  // Throws DesignError for unknown labels.
  int PointIndex(const std::string& label) const;

 private:
  std::vector<std::string> points_;
  std::vector<Block> blocks_;
};

// A design together with a partition of its blocks into parallel classes.
class Resolution {
 public:
  // `classes` lists design block indices per class. Throws DesignError unless
  // every block is used exactly once, blocks share one size k, and every
  // class partitions the point set.
  Resolution(Design design, std::vector<std::vector<int>> classes);

  // Builds the design from explicit classes of blocks over labeled points.
  static Resolution FromClasses(
      std::vector<std::string> points,
      const std::vector<std::vector<std::vector<std::string>>>& classes);

  const Design& design() const { return design_; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }

  int v() const { return design_.v(); }
  int b() const { return design_.b(); }
  int r() const { return static_cast<int>(classes_.size()); }
  int k() const { return block_size_; }
  int class_size() const { return v() / k(); }

  // Block `pos` of class `cls` (both 0-based).
  const Block& block(int cls, int pos) const;
  int DesignBlockIndex(int cls, int pos) const { return classes_[cls][pos]; }

  // Position within class `cls` of the block containing `point`.
  int BlockContaining(int cls, int point) const {
    return membership_[cls][point];
  }

  bool Contains(int cls, int pos, int point) const {
    return BlockContaining(cls, point) == pos;
  }

  // Renders a block as the concatenation (or comma join, if any label is
  // longer than one character) of its point labels.
  std::string BlockLabel(int cls, int pos) const;

 private:
  Design design_;
  std::vector<std::vector<int>> classes_;
  int block_size_ = 0;
  // membership_[cls][point] = position of the block in class cls holding point.
  std::vector<std::vector<int>> membership_;
};

struct CrossProfile {
  // mu[i] for i in 2..r; entries 0 and 1 are always empty.
  std::vector<std::optional<int>> mu;
  std::optional<int> crn;
  bool is_crd = false;
  bool is_mcrd = false;

  std::optional<int> Mu(int i) const {
    if (i < 0 || i >= static_cast<int>(mu.size())) return std::nullopt;
    return mu[i];
  }
};

// Two-class grid design on [n^2]: rows of the n x n grid, then columns.
// Point labels are "1".."n^2". Throws DesignError for n < 2.
Resolution GridMcrd(int n);

// Resolvable design from a linear code: point j is codeword j (message index
// order), and class i holds the blocks {j : codeword(j)_i = a} for a = 0..q-1.
Resolution DesignFromCode(const GeneratorMatrix& g);

// Exhaustive cross intersection numbers. Throws DesignError when r < 2.
CrossProfile ComputeCrossProfile(const Resolution& res);

// Lexicographically least partition of the blocks into parallel classes, or
// nullopt if none exists. Throws DesignError when block sizes differ from k
// or k does not divide v.
std::optional<Resolution> FindResolution(const Design& design, int k);

}  // namespace d2dcache

#endif  // D2DCACHE_DESIGN_H_
