#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace sepsense {

/// Partition of the state (and optionally control) space into s subsystems.
/// Subsystem j owns the contiguous coordinate range
/// [state_offset(j), state_offset(j) + state_dim(j)) and, when it is
/// actuated, the control range [control_offset(j), ...). Control dimension 0
/// marks an unactuated subsystem.
class BlockStructure {
public:
    BlockStructure(std::vector<int> state_dims, std::vector<int> control_dims)
        : state_dims_(std::move(state_dims)), control_dims_(std::move(control_dims)) {
        if (state_dims_.empty())
            throw std::invalid_argument("BlockStructure: need at least one subsystem");
        if (control_dims_.empty()) control_dims_.assign(state_dims_.size(), 0);
        if (control_dims_.size() != state_dims_.size())
            throw std::invalid_argument("BlockStructure: state/control dimension count mismatch");
        state_offsets_.resize(state_dims_.size() + 1, 0);
        control_offsets_.resize(state_dims_.size() + 1, 0);
        for (std::size_t j = 0; j < state_dims_.size(); ++j) {
            if (state_dims_[j] < 1)
                throw std::invalid_argument("BlockStructure: state dims must be >= 1");
            if (control_dims_[j] < 0)
                throw std::invalid_argument("BlockStructure: control dims must be >= 0");
            state_offsets_[j + 1] = state_offsets_[j] + state_dims_[j];
            control_offsets_[j + 1] = control_offsets_[j] + control_dims_[j];
        }
    }

    /// s subsystems of one state coordinate each, each with one control input.
    static BlockStructure scalar(int s, bool actuated = true) {
        return BlockStructure(std::vector<int>(s, 1),
                              std::vector<int>(s, actuated ? 1 : 0));
    }

    int size() const { return static_cast<int>(state_dims_.size()); }
    int state_dim() const { return state_offsets_.back(); }
    int control_dim() const { return control_offsets_.back(); }

    int state_dim(int j) const { return state_dims_.at(j); }
    int control_dim(int j) const { return control_dims_.at(j); }
    int state_offset(int j) const { return state_offsets_.at(j); }
    int control_offset(int j) const { return control_offsets_.at(j); }

    const std::vector<int>& state_dims() const { return state_dims_; }
    const std::vector<int>& control_dims() const { return control_dims_; }

private:
    std::vector<int> state_dims_;
    std::vector<int> control_dims_;
    std::vector<int> state_offsets_;
    std::vector<int> control_offsets_;
};

}  // namespace sepsense
