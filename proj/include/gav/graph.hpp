// SPDX-License-Identifier: Apache-2.0
#pragma once
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gav/tensor.hpp"

namespace gav {

enum class SideTag { EncoderOnly, DecoderShared };

// Metadata for leaf nodes bound to model parameters. Owned by ParamStore.
struct ParamInfo {
    std::string name;
    std::string module;  // codec module the parameter belongs to
    SideTag side = SideTag::DecoderShared;
    bool is_adapter = false;
    bool updatable = false;  // member of theta_u for the current session
};

struct Node;
using Var = std::shared_ptr<Node>;

// One value in the computation graph. Non-leaf nodes hold a backward closure
// that scatters this node's grad into its parents' grads.
struct Node {
    Tensor val;
    Tensor grad;  // allocated lazily; same dims as val
    bool requires_grad = false;
    ParamInfo* param = nullptr;  // non-null for parameter leaves
    std::vector<Var> parents;
    std::function<void(Node&)> backward;

    void ensure_grad() {
        if (grad.empty()) grad = Tensor::zeros(val.dims());
    }
    void zero_grad() {
        if (!grad.empty())
            for (size_t i = 0; i < grad.numel(); ++i) grad[i] = 0.0;
    }
};

// Graph recording is thread-local: worker threads over distinct GoPs each
// carry their own mode.
struct GraphMode {
    bool record = false;  // keep parent edges (needed for backward and audits)
    bool grad = false;    // propagate requires_grad through ops
};
GraphMode& graph_mode();

// RAII scope for switching modes.
class GraphModeScope {
public:
    GraphModeScope(bool record, bool grad) : saved_(graph_mode()) {
        graph_mode() = GraphMode{record, grad};
    }
    ~GraphModeScope() { graph_mode() = saved_; }

private:
    GraphMode saved_;
};

Var make_leaf(Tensor val, bool requires_grad = false);
Var make_node(Tensor val, std::vector<Var> parents, std::function<void(Node&)> backward);

// Reverse-mode sweep from a scalar loss. Frees intermediate values and grads
// as soon as they have been consumed; parameter leaves keep their grads.
void backward(const Var& loss);

// All parameter leaves reachable from the given outputs (the decode-path audit).
std::vector<ParamInfo*> reachable_params(const std::vector<Var>& outputs);

// Iteratively clears parent edges of a recorded graph that will not be
// backpropagated (e.g. after an audit), avoiding deep recursive destruction.
void detach_graph(const std::vector<Var>& roots);

}  // namespace gav
