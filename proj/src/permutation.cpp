#include "covhom/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace covhom {

Perm Perm::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img.size(); ++i)
        if (img[i] != static_cast<int>(i)) return false;
    return true;
}

bool Perm::is_valid() const {
    std::vector<bool> seen(img.size(), false);
    for (int x : img) {
        if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> inv(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) inv[static_cast<std::size_t>(img[i])] = static_cast<int>(i);
    return Perm(std::move(inv));
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> cs;
    std::vector<bool> seen(img.size(), false);
    for (int s = 0; s < degree(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> c;
        int t = s;
        do {
            seen[static_cast<std::size_t>(t)] = true;
            c.push_back(t);
            t = img[static_cast<std::size_t>(t)];
        } while (t != s);
        cs.push_back(std::move(c));
    }
    return cs;
}

int Perm::cycle_length_through(int s) const {
    int len = 0, t = s;
    do {
        t = img[static_cast<std::size_t>(t)];
        ++len;
    } while (t != s);
    return len;
}

Perm operator*(const Perm& p, const Perm& q) {
    std::vector<int> v(p.img.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = q.img[static_cast<std::size_t>(p.img[i])];
    return Perm(std::move(v));
}

bool transitive(const std::vector<Perm>& gens, int degree) {
    if (degree <= 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (const Perm& g : gens) {
            for (int t : {g(s), g.inverse()(s)}) {
                if (!seen[static_cast<std::size_t>(t)]) {
                    seen[static_cast<std::size_t>(t)] = true;
                    ++count;
                    stack.push_back(t);
                }
            }
        }
    }
    return count == degree;
}

}  // namespace covhom
