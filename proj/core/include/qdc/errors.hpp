#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdc {

// Thrown when a solution set is too large to enumerate explicitly.
// The standard remedy is to rerun with a larger BV run count p.
class DimensionTooLarge : public std::runtime_error {
public:
    DimensionTooLarge(std::size_t dimension, std::size_t cap)
        : std::runtime_error("solution-set dimension " + std::to_string(dimension) +
                             " exceeds enumeration cap " + std::to_string(cap) +
                             "; increase the run count p"),
          dimension_(dimension),
          cap_(cap) {}

    std::size_t dimension() const { return dimension_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t dimension_;
    std::size_t cap_;
};

// Thrown when a differential candidate touches more S-box groups than the
// key-guess loop is willing to enumerate.
class GuessSpaceTooLarge : public std::runtime_error {
public:
    GuessSpaceTooLarge(int groups, int max_groups)
        : std::runtime_error("candidate mask touches " + std::to_string(groups) +
                             " S-box groups, above the limit of " +
                             std::to_string(max_groups) +
                             "; restrict the mask or raise --max-groups"),
          groups_(groups),
          max_groups_(max_groups) {}

    int groups() const { return groups_; }
    int max_groups() const { return max_groups_; }

private:
    int groups_;
    int max_groups_;
};

}  // namespace qdc
