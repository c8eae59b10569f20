// Presentations of fundamental groups of closed oriented surfaces with
// marked points: words over {a_i, b_i, z_j}, free reduction, abelianization,
// and the algebraic intersection form on the base.
//
// Sign convention, fixed once for the whole toolkit: omega([a_i],[b_i]) = +1.
#pragma once

#include "covhom/exactmat.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace covhom {

struct SurfaceType {
    int genus = 0;   // g >= 0
    int marked = 0;  // number of marked points / branch values, n >= 0

    int num_generators() const { return 2 * genus + marked; }
    bool operator==(const SurfaceType& o) const { return genus == o.genus && marked == o.marked; }
};

enum class GenKind : std::uint8_t { A, B, Z };

struct Letter {
    GenKind kind = GenKind::A;
    int index = 1;  // 1-based
    int sign = 1;   // +1 or -1

    Letter() = default;
    Letter(GenKind k, int i, int s) : kind(k), index(i), sign(s) {}

    Letter inverse() const { return Letter(kind, index, -sign); }
    bool same_generator(const Letter& o) const { return kind == o.kind && index == o.index; }
    bool operator==(const Letter& o) const {
        return kind == o.kind && index == o.index && sign == o.sign;
    }

    // 0-based generator slot in the order a1,b1,...,ag,bg,z1,...,zn
    int slot(const SurfaceType& st) const;
    void validate(const SurfaceType& st) const;

    std::string token() const;
    static Letter parse_token(const std::string& tok);
};

struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
    static Word of(std::initializer_list<Letter> ls) { return Word(std::vector<Letter>(ls)); }

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    Word inverse() const;
    bool operator==(const Word& o) const { return letters == o.letters; }

    std::string str() const;                 // "a1 b1 A1 B1"
    static Word parse(const std::string&);   // inverse of str()
};

Word concat(const Word& u, const Word& v);
Word reduce(Word w);                     // free reduction, idempotent
Word word_pow(const Word& w, int k);     // w^k, k >= 0, reduced
Word conjugate(const Word& t, const Word& w);  // t w t^-1, reduced
Word commutator(const Word& u, const Word& v);

// Helpers for building words in generator letters.
Letter gen_a(int i, int sign = 1);
Letter gen_b(int i, int sign = 1);
Letter gen_z(int j, int sign = 1);

// prod_i [a_i,b_i] . z_1 ... z_n, freely reduced.
Word surface_relator(const SurfaceType& st);

// Abelianized class in Z^{2g}, basis ([a_1],[b_1],...,[a_g],[b_g]).
// z letters contribute 0.
ZVec base_class(const SurfaceType& st, const Word& w);

// sum_i (u_{a_i} v_{b_i} - u_{b_i} v_{a_i})
Int base_omega(const ZVec& u, const ZVec& v);

// gcd of entries is 1 (the zero vector is not primitive).
bool is_primitive(const ZVec& c);

// True iff the freely reduced w is conjugate, in the free group, to the
// surface relator (not its inverse): cyclic reduction then rotation match.
bool is_conjugate_to_relator(const SurfaceType& st, const Word& w);

}  // namespace covhom
