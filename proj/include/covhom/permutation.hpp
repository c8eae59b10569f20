// Plain permutations of {0,...,n-1}, acting on the right: s -> img[s].
#pragma once

#include <cstddef>
#include <vector>

namespace covhom {

struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(std::vector<int> v) : img(std::move(v)) {}
    static Perm identity(int n);

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int s) const { return img[static_cast<std::size_t>(s)]; }

    bool is_identity() const;
    bool is_valid() const;  // really a bijection
    Perm inverse() const;

    std::vector<std::vector<int>> cycles() const;  // each cycle starts at its minimum, sorted
    int cycle_length_through(int s) const;

    bool operator==(const Perm& o) const { return img == o.img; }
};

// s -> q(p(s)): apply p first, then q (right-action composition order).
Perm operator*(const Perm& p, const Perm& q);

// Orbit of the group generated by `gens` through 0 covers everything.
bool transitive(const std::vector<Perm>& gens, int degree);

}  // namespace covhom
