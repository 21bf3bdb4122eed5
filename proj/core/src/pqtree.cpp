#include "pqtree.hpp"

#include <algorithm>
#include <stdexcept>

namespace nested2::detail {

PQTree::PQTree(int num_leaves) {
  if (num_leaves < 1) throw std::invalid_argument("PQTree: need at least one leaf");
  marked_.assign(static_cast<size_t>(num_leaves), 0);
  if (num_leaves == 1) {
    root_ = make_leaf(0);
    return;
  }
  root_ = make(Node::Type::p);
  for (int i = 0; i < num_leaves; ++i) root_->children.push_back(make_leaf(i));
}

PQTree::Node* PQTree::make(Node::Type type) {
  pool_.push_back(std::make_unique<Node>());
  pool_.back()->type = type;
  return pool_.back().get();
}

PQTree::Node* PQTree::make_leaf(int id) {
  Node* n = make(Node::Type::leaf);
  n->leaf_id = id;
  return n;
}

int PQTree::count_marked(Node* x) const {
  if (x->type == Node::Type::leaf) return marked_[x->leaf_id] ? 1 : 0;
  int c = 0;
  for (Node* ch : x->children) c += count_marked(ch);
  return c;
}

// Groups several same-label children into a single node (a new P-node when
// there are two or more).
PQTree::Node* PQTree::group(std::vector<Node*>& nodes) {
  if (nodes.size() == 1) return nodes.front();
  Node* p = make(Node::Type::p);
  p->children = nodes;
  return p;
}

bool PQTree::reduce(const std::vector<int>& leaves) {
  if (leaves.size() <= 1) return true;
  std::fill(marked_.begin(), marked_.end(), 0);
  for (int l : leaves) marked_[l] = 1;
  const int ss = static_cast<int>(leaves.size());

  // Pertinent root: deepest node whose subtree holds every marked leaf.
  Node** slot = &root_;
  for (;;) {
    Node* x = *slot;
    if (x->type == Node::Type::leaf) break;
    Node** next = nullptr;
    for (Node*& ch : x->children) {
      if (count_marked(ch) == ss) {
        next = &ch;
        break;
      }
    }
    if (!next) break;
    slot = next;
  }
  return process(*slot, true) != Label::failed;
}

PQTree::Label PQTree::process(Node*& slot, bool pertinent_root) {
  Node* x = slot;
  if (x->type == Node::Type::leaf)
    return marked_[x->leaf_id] ? Label::full : Label::empty;

  std::vector<Label> labels(x->children.size());
  for (size_t i = 0; i < x->children.size(); ++i) {
    labels[i] = process(x->children[i], false);
    if (labels[i] == Label::failed) return Label::failed;
  }

  if (x->type == Node::Type::p) {
    std::vector<Node*> empties, fulls, partials;
    for (size_t i = 0; i < x->children.size(); ++i) {
      switch (labels[i]) {
        case Label::empty: empties.push_back(x->children[i]); break;
        case Label::full: fulls.push_back(x->children[i]); break;
        default: partials.push_back(x->children[i]); break;
      }
    }
    return process_p(slot, pertinent_root, empties, fulls, partials);
  }
  return process_q(slot, pertinent_root, labels);
}

PQTree::Label PQTree::process_p(Node*& slot, bool pertinent_root,
                                std::vector<Node*>& empties, std::vector<Node*>& fulls,
                                std::vector<Node*>& partials) {
  Node* x = slot;
  // P1 and the trivial labels.
  if (partials.empty() && fulls.empty()) return Label::empty;
  if (partials.empty() && empties.empty()) return Label::full;

  if (pertinent_root) {
    if (partials.empty()) {
      // P2: fulls become consecutive under a fresh P-node.
      x->children = empties;
      x->children.push_back(group(fulls));
      return Label::full;
    }
    if (partials.size() == 1) {
      // P4: fulls join the full end of the partial child.
      Node* q = partials.front();
      if (!fulls.empty()) q->children.push_back(group(fulls));
      if (empties.empty()) {
        slot = q;
      } else {
        x->children = empties;
        x->children.push_back(q);
      }
      return Label::full;
    }
    if (partials.size() == 2) {
      // P6: both partial children merge around the grouped fulls.
      Node* q = partials[0];
      if (!fulls.empty()) q->children.push_back(group(fulls));
      Node* other = partials[1];
      q->children.insert(q->children.end(), other->children.rbegin(),
                         other->children.rend());
      if (empties.empty()) {
        slot = q;
      } else {
        x->children = empties;
        x->children.push_back(q);
      }
      return Label::full;
    }
    return Label::failed;
  }

  // Away from the pertinent root a P-node may keep only one "loose end".
  if (partials.empty()) {
    // P3: split into an empty group and a full group under a Q-node.
    Node* q = make(Node::Type::q);
    q->children.push_back(group(empties));
    q->children.push_back(group(fulls));
    slot = q;
    return Label::partial;
  }
  if (partials.size() == 1) {
    // P5: empties and fulls attach to the matching ends of the partial child.
    Node* q = partials.front();
    if (!empties.empty()) q->children.insert(q->children.begin(), group(empties));
    if (!fulls.empty()) q->children.push_back(group(fulls));
    slot = q;
    return Label::partial;
  }
  return Label::failed;
}

PQTree::Label PQTree::process_q(Node*& slot, bool pertinent_root,
                                const std::vector<Label>& labels_in) {
  Node* x = slot;
  bool any_empty = false, any_full = false, any_partial = false;
  for (Label l : labels_in) {
    any_empty |= l == Label::empty;
    any_full |= l == Label::full;
    any_partial |= l == Label::partial;
  }
  if (!any_full && !any_partial) return Label::empty;
  if (!any_empty && !any_partial) return Label::full;

  // Match children (as-is or reversed) against
  //   empties* [partial] fulls*                  (Q2, anywhere)
  //   empties* [partial] fulls* [partial] empties*   (Q3, root only)
  // Partial children are kept normalized with their empty side first, so
  // the first one splices in as-is and the second one reversed.
  std::vector<Node*> children = x->children;
  std::vector<Label> labels = labels_in;
  for (int attempt = 0; attempt < 2; ++attempt) {
    int p_first = -1, p_second = -1;
    int state = 0;  // 0 leading empties, 1 full block, 2 trailing empties
    bool ok = true;
    for (size_t i = 0; i < labels.size() && ok; ++i) {
      switch (labels[i]) {
        case Label::empty:
          if (state == 1) {
            // Trailing empties are legal only at the pertinent root.
            state = 2;
            ok = pertinent_root;
          }
          break;
        case Label::full:
          if (state == 0) state = 1;
          else if (state == 2) ok = false;
          break;
        case Label::partial:
          if (state == 0 && p_first < 0) {
            p_first = static_cast<int>(i);
            state = 1;
          } else if (state == 1 && p_second < 0 && pertinent_root) {
            p_second = static_cast<int>(i);
            state = 2;
          } else {
            ok = false;
          }
          break;
        default: ok = false;
      }
    }
    if (ok) {
      std::vector<Node*> spliced;
      for (size_t i = 0; i < children.size(); ++i) {
        if (static_cast<int>(i) == p_first) {
          spliced.insert(spliced.end(), children[i]->children.begin(),
                         children[i]->children.end());
        } else if (static_cast<int>(i) == p_second) {
          spliced.insert(spliced.end(), children[i]->children.rbegin(),
                         children[i]->children.rend());
        } else {
          spliced.push_back(children[i]);
        }
      }
      x->children = spliced;
      return pertinent_root ? Label::full : Label::partial;
    }
    std::reverse(children.begin(), children.end());
    std::reverse(labels.begin(), labels.end());
  }
  return Label::failed;
}

void PQTree::collect_frontier(const Node* x, std::vector<int>& out) const {
  if (x->type == Node::Type::leaf) {
    out.push_back(x->leaf_id);
    return;
  }
  for (const Node* ch : x->children) collect_frontier(ch, out);
}

std::vector<int> PQTree::frontier() const {
  std::vector<int> out;
  collect_frontier(root_, out);
  return out;
}

}  // namespace nested2::detail
