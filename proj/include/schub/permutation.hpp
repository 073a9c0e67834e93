#ifndef SCHUB_PERMUTATION_HPP
#define SCHUB_PERMUTATION_HPP

#include <string>
#include <vector>

namespace schub {

// Permutation of [n] in one-line notation, 1-based throughout.
class Permutation {
  public:
    // Validates that one_line is a bijection on [n].
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    // w_0 = n n-1 ... 2 1.
    static Permutation longest(int n);

    int size() const { return static_cast<int>(one_line_.size()); }
    int operator()(int i) const { return one_line_[i - 1]; }
    const std::vector<int>& one_line() const { return one_line_; }

    Permutation inverse() const;

    // w * s_i: swaps the values at positions i and i+1.
    Permutation swap_adjacent(int i) const;

    // Number of pairs i < j with w(i) > w(j).
    int inversions() const;

    // Positions i with w(i) < w(i+1), ascending.
    std::vector<int> ascents() const;

    bool operator==(const Permutation& other) const { return one_line_ == other.one_line_; }
    bool operator!=(const Permutation& other) const { return !(*this == other); }
    bool operator<(const Permutation& other) const { return one_line_ < other.one_line_; }

    // Digit string for n <= 9 ("41532"), comma-separated otherwise.
    std::string to_string() const;
    static Permutation parse(const std::string& text);

  private:
    std::vector<int> one_line_;
};

// All of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace schub

#endif
