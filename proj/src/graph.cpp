// SPDX-License-Identifier: Apache-2.0
#include "gav/graph.hpp"

#include <unordered_set>

namespace gav {

GraphMode& graph_mode() {
    thread_local GraphMode mode;
    return mode;
}

Var make_leaf(Tensor val, bool requires_grad) {
    auto n = std::make_shared<Node>();
    n->val = std::move(val);
    n->requires_grad = requires_grad && graph_mode().grad;
    return n;
}

Var make_node(Tensor val, std::vector<Var> parents, std::function<void(Node&)> backward_fn) {
    auto n = std::make_shared<Node>();
    n->val = std::move(val);
    if (graph_mode().record) {
        n->parents = std::move(parents);
        if (graph_mode().grad) {
            for (const auto& p : n->parents)
                if (p->requires_grad) {
                    n->requires_grad = true;
                    break;
                }
        }
        if (n->requires_grad) n->backward = std::move(backward_fn);
    }
    return n;
}

namespace {

// Iterative post-order over parent edges; parents visited in stored order so
// traversal is deterministic.
void topo_order(Node* root, std::vector<Node*>& order) {
    std::unordered_set<Node*> visited;
    std::vector<std::pair<Node*, size_t>> stack;
    stack.push_back({root, 0});
    visited.insert(root);
    while (!stack.empty()) {
        auto& [node, idx] = stack.back();
        if (idx < node->parents.size()) {
            Node* p = node->parents[idx++].get();
            if (!visited.count(p)) {
                visited.insert(p);
                stack.push_back({p, 0});
            }
        } else {
            order.push_back(node);
            stack.pop_back();
        }
    }
}

}  // namespace

void backward(const Var& loss) {
    check_input(loss->val.numel() == 1, "backward requires a scalar loss");
    check_input(!loss->parents.empty() || loss->param, "backward on a non-recorded graph");
    std::vector<Node*> order;
    topo_order(loss.get(), order);

    loss->ensure_grad();
    loss->grad[0] = 1.0;

    // Reverse topological order: consumers before producers.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Node* n = *it;
        if (!n->requires_grad) continue;
        if (n->backward) {
            n->ensure_grad();
            n->backward(*n);
        }
        if (!n->param) {
            // Interior node: consumers are done with it, release storage.
            n->val = Tensor();
            n->grad = Tensor();
            n->backward = nullptr;
        }
    }
    // Break parent chains iteratively; recursive shared_ptr teardown would
    // otherwise recurse to the graph depth.
    for (Node* n : order) {
        n->parents.clear();
        n->backward = nullptr;
    }
}

void detach_graph(const std::vector<Var>& roots) {
    std::unordered_set<Node*> visited;
    std::vector<Node*> stack, order;
    for (const auto& v : roots)
        if (v && !visited.count(v.get())) {
            visited.insert(v.get());
            stack.push_back(v.get());
        }
    while (!stack.empty()) {
        Node* n = stack.back();
        stack.pop_back();
        order.push_back(n);
        for (const auto& p : n->parents)
            if (!visited.count(p.get())) {
                visited.insert(p.get());
                stack.push_back(p.get());
            }
    }
    for (Node* n : order) {
        n->parents.clear();
        n->backward = nullptr;
    }
}

std::vector<ParamInfo*> reachable_params(const std::vector<Var>& outputs) {
    std::unordered_set<Node*> visited;
    std::unordered_set<ParamInfo*> seen;
    std::vector<ParamInfo*> result;
    std::vector<Node*> stack;
    for (const auto& v : outputs)
        if (v && !visited.count(v.get())) {
            visited.insert(v.get());
            stack.push_back(v.get());
        }
    while (!stack.empty()) {
        Node* n = stack.back();
        stack.pop_back();
        if (n->param && !seen.count(n->param)) {
            seen.insert(n->param);
            result.push_back(n->param);
        }
        for (const auto& p : n->parents)
            if (!visited.count(p.get())) {
                visited.insert(p.get());
                stack.push_back(p.get());
            }
    }
    return result;
}

}  // namespace gav
