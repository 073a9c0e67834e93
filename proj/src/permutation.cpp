#include "schub/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "schub/types.hpp"

namespace schub {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    int n = static_cast<int>(one_line_.size());
    std::vector<bool> seen(n, false);
    for (int v : one_line_) {
        if (v < 1 || v > n || seen[v - 1])
            throw MalformedInput("not a permutation of [" + std::to_string(n) + "]");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(one_line_.size());
    for (int i = 1; i <= size(); ++i) inv[one_line_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::swap_adjacent(int i) const {
    if (i < 1 || i + 1 > size())
        throw std::invalid_argument("transposition index out of range");
    std::vector<int> w = one_line_;
    std::swap(w[i - 1], w[i]);
    return Permutation(std::move(w));
}

int Permutation::inversions() const {
    int count = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (one_line_[i] > one_line_[j]) ++count;
    return count;
}

std::vector<int> Permutation::ascents() const {
    std::vector<int> out;
    for (int i = 1; i < size(); ++i)
        if (one_line_[i - 1] < one_line_[i]) out.push_back(i);
    return out;
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    if (size() <= 9) {
        for (int v : one_line_) out << v;
    } else {
        for (int i = 0; i < size(); ++i) {
            if (i) out << ",";
            out << one_line_[i];
        }
    }
    return out.str();
}

Permutation Permutation::parse(const std::string& text) {
    if (text.empty()) throw MalformedInput("empty permutation");
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(item, &pos);
                if (pos != item.size()) throw std::invalid_argument(item);
                w.push_back(v);
            } catch (const std::exception&) {
                throw MalformedInput("bad permutation entry '" + item + "'");
            }
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw MalformedInput("digit-string permutations use digits 1-9 only");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace schub
