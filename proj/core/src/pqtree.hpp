#pragma once

#include <memory>
#include <vector>

namespace nested2::detail {

// PQ-tree over leaves 0..n-1 representing the set of column orders reached
// so far. reduce(S) constrains the leaves of S to be consecutive in every
// represented order; it returns false (leaving the tree unusable) when no
// represented order satisfies the constraint.
//
// This is the Booth–Lueker template set (L1, P1–P6, Q1–Q3) applied with
// plain child vectors and full relabeling per reduction. Quadratic per
// reduce instead of amortized linear, which is the right trade at the input
// sizes this library targets.
class PQTree {
 public:
  explicit PQTree(int num_leaves);

  PQTree(const PQTree&) = delete;
  PQTree& operator=(const PQTree&) = delete;

  bool reduce(const std::vector<int>& leaves);

  // Leaves left to right; one witness of the represented orders.
  std::vector<int> frontier() const;

 private:
  struct Node {
    enum class Type { leaf, p, q };
    Type type;
    int leaf_id = -1;
    std::vector<Node*> children;
  };

  enum class Label { empty, full, partial, failed };

  Node* make(Node::Type type);
  Node* make_leaf(int id);

  int count_marked(Node* x) const;
  Label process(Node*& slot, bool pertinent_root);
  Label process_p(Node*& slot, bool pertinent_root, std::vector<Node*>& empties,
                  std::vector<Node*>& fulls, std::vector<Node*>& partials);
  Label process_q(Node*& slot, bool pertinent_root, const std::vector<Label>& labels);
  Node* group(std::vector<Node*>& nodes);
  void collect_frontier(const Node* x, std::vector<int>& out) const;

  std::vector<std::unique_ptr<Node>> pool_;
  Node* root_ = nullptr;
  std::vector<char> marked_;  // per-leaf membership in the current reduction set
};

}  // namespace nested2::detail
