#ifndef SCHUB_COMPOSITION_HPP
#define SCHUB_COMPOSITION_HPP

#include <string>
#include <vector>

namespace schub {

// Finite sequence of nonnegative integers; trailing zeros permitted
// and preserved.
class Composition {
  public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const;

    // Largest index i with alpha_i != 0; 0 for the zero composition.
    int last_nonzero() const;

    // max{l, alpha_1, ..., alpha_l} with l = last_nonzero(); the number
    // of variables of the key polynomial and the grid size of the
    // skyline diagram.  0 for the zero composition.
    int ambient_size() const;

    bool is_weakly_decreasing() const;

    bool operator==(const Composition& other) const { return parts_ == other.parts_; }

    // Comma-separated, e.g. "3,2,1,0,1".
    std::string to_string() const;
    static Composition parse(const std::string& text);

  private:
    std::vector<int> parts_;
};

// All compositions with the given number of parts, each between 0 and
// max_part, in lexicographic order.
std::vector<Composition> all_compositions(int max_part, int length);

}  // namespace schub

#endif
