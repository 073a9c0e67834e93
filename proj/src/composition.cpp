#include "schub/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "schub/types.hpp"

namespace schub {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw MalformedInput("composition parts must be nonnegative");
}

int Composition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Composition::last_nonzero() const {
    for (int i = static_cast<int>(parts_.size()); i >= 1; --i)
        if (parts_[i - 1] != 0) return i;
    return 0;
}

int Composition::ambient_size() const {
    int l = last_nonzero();
    int n = l;
    for (int i = 0; i < l; ++i) n = std::max(n, parts_[i]);
    return n;
}

bool Composition::is_weakly_decreasing() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i]) return false;
    return true;
}

std::string Composition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    return out.str();
}

Composition Composition::parse(const std::string& text) {
    if (text.empty()) throw MalformedInput("empty composition");
    std::vector<int> parts;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw MalformedInput("bad composition entry '" + item + "'");
        }
    }
    return Composition(std::move(parts));
}

std::vector<Composition> all_compositions(int max_part, int length) {
    std::vector<Composition> out;
    std::vector<int> parts(length, 0);
    while (true) {
        out.push_back(Composition(parts));
        int i = length - 1;
        while (i >= 0 && parts[i] == max_part) parts[i--] = 0;
        if (i < 0) break;
        ++parts[i];
    }
    return out;
}

}  // namespace schub
