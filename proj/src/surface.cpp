#include "covhom/surface.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace covhom {

int Letter::slot(const SurfaceType& st) const {
    switch (kind) {
        case GenKind::A: return 2 * (index - 1);
        case GenKind::B: return 2 * (index - 1) + 1;
        case GenKind::Z: return 2 * st.genus + (index - 1);
    }
    return -1;
}

void Letter::validate(const SurfaceType& st) const {
    bool ok = (sign == 1 || sign == -1);
    if (kind == GenKind::Z)
        ok = ok && index >= 1 && index <= st.marked;
    else
        ok = ok && index >= 1 && index <= st.genus;
    if (!ok) throw std::invalid_argument("letter out of range for surface type: " + token());
}

std::string Letter::token() const {
    char c = kind == GenKind::A ? 'a' : kind == GenKind::B ? 'b' : 'z';
    if (sign < 0) c = static_cast<char>(std::toupper(c));
    return std::string(1, c) + std::to_string(index);
}

Letter Letter::parse_token(const std::string& tok) {
    if (tok.size() < 2) throw std::invalid_argument("bad letter token: '" + tok + "'");
    char c = tok[0];
    int sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    GenKind k;
    if (lc == 'a') k = GenKind::A;
    else if (lc == 'b') k = GenKind::B;
    else if (lc == 'z') k = GenKind::Z;
    else throw std::invalid_argument("bad letter token: '" + tok + "'");
    int idx = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw std::invalid_argument("bad letter token: '" + tok + "'");
        idx = idx * 10 + (tok[i] - '0');
    }
    if (idx < 1) throw std::invalid_argument("bad letter token: '" + tok + "'");
    return Letter(k, idx, sign);
}

Word Word::inverse() const {
    Word w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(it->inverse());
    return w;
}

std::string Word::str() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ' ';
        s += letters[i].token();
    }
    return s;
}

Word Word::parse(const std::string& text) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) w.letters.push_back(Letter::parse_token(tok));
    return w;
}

Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
}

Word reduce(Word w) {
    std::vector<Letter> out;
    out.reserve(w.letters.size());
    for (const Letter& l : w.letters) {
        if (!out.empty() && out.back().same_generator(l) && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    w.letters = std::move(out);
    return w;
}

Word word_pow(const Word& w, int k) {
    if (k < 0) throw std::invalid_argument("word_pow: negative exponent");
    Word r;
    for (int i = 0; i < k; ++i) r = concat(r, w);
    return reduce(r);
}

Word conjugate(const Word& t, const Word& w) { return reduce(concat(concat(t, w), t.inverse())); }

Word commutator(const Word& u, const Word& v) {
    return reduce(concat(concat(u, v), concat(u.inverse(), v.inverse())));
}

Letter gen_a(int i, int sign) { return Letter(GenKind::A, i, sign); }
Letter gen_b(int i, int sign) { return Letter(GenKind::B, i, sign); }
Letter gen_z(int j, int sign) { return Letter(GenKind::Z, j, sign); }

Word surface_relator(const SurfaceType& st) {
    Word w;
    for (int i = 1; i <= st.genus; ++i) {
        w.letters.push_back(gen_a(i));
        w.letters.push_back(gen_b(i));
        w.letters.push_back(gen_a(i, -1));
        w.letters.push_back(gen_b(i, -1));
    }
    for (int j = 1; j <= st.marked; ++j) w.letters.push_back(gen_z(j));
    return reduce(w);
}

ZVec base_class(const SurfaceType& st, const Word& w) {
    ZVec c(2 * static_cast<std::size_t>(st.genus));
    for (const Letter& l : w.letters) {
        l.validate(st);
        if (l.kind == GenKind::Z) continue;
        c[static_cast<std::size_t>(l.slot(st))] += l.sign;
    }
    return c;
}

Int base_omega(const ZVec& u, const ZVec& v) {
    if (u.size() != v.size() || u.size() % 2 != 0)
        throw std::invalid_argument("base_omega: classes of mismatched surface types");
    Int s = 0;
    for (std::size_t i = 0; i + 1 < u.size(); i += 2) s += u[i] * v[i + 1] - u[i + 1] * v[i];
    return s;
}

bool is_primitive(const ZVec& c) {
    Int g = 0;
    for (const Int& x : c) g = boost::multiprecision::gcd(g, x);
    return g == 1;
}

bool is_conjugate_to_relator(const SurfaceType& st, const Word& w) {
    Word r = reduce(w);
    // cyclic reduction
    while (r.letters.size() >= 2 && r.letters.front().same_generator(r.letters.back()) &&
           r.letters.front().sign == -r.letters.back().sign) {
        r.letters.erase(r.letters.begin());
        r.letters.pop_back();
    }
    Word rel = surface_relator(st);
    if (r.letters.size() != rel.letters.size()) return false;
    const std::size_t n = rel.letters.size();
    if (n == 0) return true;
    for (std::size_t s = 0; s < n; ++s) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i) match = r.letters[(s + i) % n] == rel.letters[i];
        if (match) return true;
    }
    return false;
}

}  // namespace covhom
