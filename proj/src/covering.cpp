#include "covhom/covering.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace covhom {

int PermutationRep::act(int sheet, const Letter& l) const {
    const std::size_t slot = static_cast<std::size_t>(l.slot(st));
    return l.sign > 0 ? perm[slot](sheet)
                      : (slot < perm_inv.size() ? perm_inv[slot](sheet) : perm[slot].inverse()(sheet));
}

int PermutationRep::act(int sheet, const Word& w) const {
    for (const Letter& l : w.letters) sheet = act(sheet, l);
    return sheet;
}

Perm PermutationRep::of_word(const Word& w) const {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int s = 0; s < degree; ++s) img[static_cast<std::size_t>(s)] = act(s, w);
    return Perm(std::move(img));
}

std::vector<int> PermutationRep::sheet_to_elem(int sheet) const {
    if (!regular) throw std::logic_error("sheet_to_elem: not a regular cover");
    std::vector<int> e(deck_moduli.size());
    for (std::size_t i = 0; i < deck_moduli.size(); ++i) {
        e[i] = sheet % deck_moduli[i];
        sheet /= deck_moduli[i];
    }
    return e;
}

int PermutationRep::elem_to_sheet(const std::vector<int>& elem) const {
    if (!regular) throw std::logic_error("elem_to_sheet: not a regular cover");
    if (elem.size() != deck_moduli.size()) throw std::invalid_argument("deck element size mismatch");
    int s = 0;
    for (std::size_t i = deck_moduli.size(); i-- > 0;) {
        int c = ((elem[i] % deck_moduli[i]) + deck_moduli[i]) % deck_moduli[i];
        s = s * deck_moduli[i] + c;
    }
    return s;
}

PermutationRep PermutationRep::forget_trivial_marked() const {
    PermutationRep r;
    r.st.genus = st.genus;
    r.degree = degree;
    r.regular = regular;
    r.deck_moduli = deck_moduli;
    r.deck_targets = deck_targets;
    r.id = id;
    for (int i = 0; i < 2 * st.genus; ++i) r.perm.push_back(perm[static_cast<std::size_t>(i)]);
    int kept = 0;
    for (int j = 0; j < st.marked; ++j) {
        const Perm& p = perm[static_cast<std::size_t>(2 * st.genus + j)];
        if (p.is_identity()) continue;
        r.perm.push_back(p);
        ++kept;
    }
    r.st.marked = kept;
    r.validate();
    return r;
}

void PermutationRep::validate() {
    if (degree < 1) throw std::invalid_argument("cover degree must be >= 1");
    if (st.genus < 0 || st.marked < 0) throw std::invalid_argument("bad surface type");
    if (perm.size() != static_cast<std::size_t>(st.num_generators()))
        throw std::invalid_argument("wrong number of generator permutations");
    for (const Perm& p : perm) {
        if (p.degree() != degree || !p.is_valid())
            throw std::invalid_argument("generator image is not a permutation of the sheets");
    }
    perm_inv.clear();
    perm_inv.reserve(perm.size());
    for (const Perm& p : perm) perm_inv.push_back(p.inverse());
    if (!of_word(surface_relator(st)).is_identity())
        throw std::invalid_argument("representation does not kill the surface relator");
    if (!transitive(perm, degree)) throw std::invalid_argument("cover disconnected");
}

namespace {

PermutationRep regular_rep(int genus, std::vector<int> moduli, ZMat targets, std::string id) {
    PermutationRep rep;
    rep.st = SurfaceType{genus, 0};
    rep.regular = true;
    rep.deck_moduli = std::move(moduli);
    rep.deck_targets = std::move(targets);
    rep.id = std::move(id);
    long long n = 1;
    for (int m : rep.deck_moduli) {
        if (m < 1) throw std::invalid_argument("moduli must be positive");
        n *= m;
        if (n > 1'000'000) throw std::invalid_argument("cover degree too large");
    }
    rep.degree = static_cast<int>(n);
    for (int l = 0; l < 2 * genus; ++l) {
        std::vector<int> img(static_cast<std::size_t>(rep.degree));
        for (int s = 0; s < rep.degree; ++s) {
            std::vector<int> e = rep.sheet_to_elem(s);
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = (e[i] + static_cast<int>(rep.deck_targets(static_cast<std::size_t>(l), i))) %
                       rep.deck_moduli[i];
            img[static_cast<std::size_t>(s)] = rep.elem_to_sheet(e);
        }
        rep.perm.push_back(Perm(std::move(img)));
    }
    rep.validate();
    return rep;
}

}  // namespace

PermutationRep mod_ell_rep(int genus, int ell) {
    if (genus < 1) throw std::invalid_argument("mod_ell_rep: genus must be >= 1");
    if (ell < 2) throw std::invalid_argument("mod_ell_rep: ell must be >= 2");
    std::vector<int> moduli(static_cast<std::size_t>(2 * genus), ell);
    ZMat targets(static_cast<std::size_t>(2 * genus), static_cast<std::size_t>(2 * genus));
    for (std::size_t i = 0; i < targets.rows; ++i) targets(i, i) = 1;
    std::ostringstream id;
    id << "mod_ell(g=" << genus << ",ell=" << ell << ")";
    return regular_rep(genus, std::move(moduli), std::move(targets), id.str());
}

PermutationRep abelian_rep(int genus, const std::vector<int>& moduli,
                           const std::vector<std::vector<int>>& targets) {
    if (genus < 1) throw std::invalid_argument("abelian_rep: genus must be >= 1");
    if (targets.size() != static_cast<std::size_t>(2 * genus))
        throw std::invalid_argument("abelian_rep: need one target per a_i, b_i");
    ZMat t(static_cast<std::size_t>(2 * genus), moduli.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i].size() != moduli.size())
            throw std::invalid_argument("abelian_rep: target has wrong number of components");
        for (std::size_t j = 0; j < moduli.size(); ++j)
            t(i, j) = ((targets[i][j] % moduli[j]) + moduli[j]) % moduli[j];
    }
    std::ostringstream id;
    id << "abelian(g=" << genus << ",A=";
    for (std::size_t j = 0; j < moduli.size(); ++j) id << (j ? "x" : "") << "Z/" << moduli[j];
    id << ")";
    PermutationRep rep;
    try {
        rep = regular_rep(genus, moduli, std::move(t), id.str());
    } catch (const std::invalid_argument& e) {
        if (std::string(e.what()) == "cover disconnected")
            throw std::invalid_argument("abelian_rep: targets do not generate A (cover disconnected)");
        throw;
    }
    return rep;
}

PermutationRep rep_from_perms(const SurfaceType& st, int degree, std::vector<Perm> perms,
                              const std::string& id) {
    PermutationRep rep;
    rep.st = st;
    rep.degree = degree;
    rep.perm = std::move(perms);
    rep.id = id.empty() ? "explicit" : id;
    rep.validate();
    return rep;
}

int CoverComplex::edge_head(int e) const {
    return rep.perm[static_cast<std::size_t>(edge_letter(e))](edge_tail(e));
}

long long CoverComplex::riemann_hurwitz_euler() const {
    long long chi = static_cast<long long>(rep.degree) * (2 - 2 * rep.st.genus - rep.st.marked);
    for (int j = 0; j < rep.st.marked; ++j)
        chi += static_cast<long long>(
            rep.perm[static_cast<std::size_t>(2 * rep.st.genus + j)].cycles().size());
    return chi;
}

CoverComplex build_complex(PermutationRep rep) {
    rep.validate();
    CoverComplex cx;
    cx.rep = std::move(rep);
    cx.num_letters = cx.rep.st.num_generators();
    cx.V = cx.rep.degree;
    cx.E = cx.rep.degree * cx.num_letters;

    const Word rel = surface_relator(cx.rep.st);

    // Lifted relator polygon over each sheet.
    for (int s = 0; s < cx.rep.degree; ++s) {
        std::vector<CoverComplex::Side> face;
        int cur = s;
        for (const Letter& l : rel.letters) {
            if (l.sign > 0) {
                face.push_back({cx.edge_index(l.slot(cx.rep.st), cur), +1});
                cur = cx.rep.act(cur, l);
            } else {
                cur = cx.rep.act(cur, l);
                face.push_back({cx.edge_index(l.slot(cx.rep.st), cur), -1});
            }
        }
        if (cur != s) throw std::logic_error("lifted relator polygon did not close");
        cx.faces.push_back(std::move(face));
    }

    // One cap disk per cycle of perm(z_j); boundary runs the z edges backward.
    for (int j = 0; j < cx.rep.st.marked; ++j) {
        int slot = 2 * cx.rep.st.genus + j;
        for (const std::vector<int>& cyc : cx.rep.perm[static_cast<std::size_t>(slot)].cycles()) {
            std::vector<CoverComplex::Side> face;
            for (std::size_t t = cyc.size(); t-- > 0;)
                face.push_back({cx.edge_index(slot, cyc[t]), -1});
            cx.cap_ram.push_back(static_cast<int>(cyc.size()));
            cx.faces.push_back(std::move(face));
        }
    }
    cx.F = static_cast<int>(cx.faces.size());

    // Every edge must be traversed exactly once in each direction.
    {
        std::vector<int> fwd(static_cast<std::size_t>(cx.E)), bwd(static_cast<std::size_t>(cx.E));
        for (const auto& f : cx.faces)
            for (const auto& s : f) ++(s.dir > 0 ? fwd : bwd)[static_cast<std::size_t>(s.edge)];
        for (int e = 0; e < cx.E; ++e)
            if (fwd[static_cast<std::size_t>(e)] != 1 || bwd[static_cast<std::size_t>(e)] != 1)
                throw std::logic_error("cover complex is not a closed oriented surface");
    }

    // Rotation system from polygon corners: the ccw successor of the dart
    // starting side p is the dart ending side p-1.
    auto start_dart = [](const CoverComplex::Side& s) { return 2 * s.edge + (s.dir > 0 ? 0 : 1); };
    auto end_dart = [](const CoverComplex::Side& s) { return 2 * s.edge + (s.dir > 0 ? 1 : 0); };
    cx.rot_next.assign(static_cast<std::size_t>(2 * cx.E), -1);
    for (const auto& f : cx.faces) {
        const std::size_t m = f.size();
        for (std::size_t p = 0; p < m; ++p) {
            int sd = start_dart(f[p]);
            int ed = end_dart(f[(p + m - 1) % m]);
            if (cx.rot_next[static_cast<std::size_t>(sd)] != -1)
                throw std::logic_error("dart assigned twice in rotation system");
            cx.rot_next[static_cast<std::size_t>(sd)] = ed;
        }
    }

    // Group darts by vertex following the rotation; each vertex's darts must
    // form a single ccw cycle (the link of the vertex is a circle).
    cx.vertex_darts.assign(static_cast<std::size_t>(cx.V), {});
    std::vector<bool> seen(static_cast<std::size_t>(2 * cx.E), false);
    std::vector<int> darts_at(static_cast<std::size_t>(cx.V), 0);
    for (int d = 0; d < 2 * cx.E; ++d) ++darts_at[static_cast<std::size_t>(cx.dart_vertex(d))];
    for (int d0 = 0; d0 < 2 * cx.E; ++d0) {
        if (seen[static_cast<std::size_t>(d0)]) continue;
        int v = cx.dart_vertex(d0);
        if (!cx.vertex_darts[static_cast<std::size_t>(v)].empty())
            throw std::logic_error("vertex link is not a single circle");
        int d = d0;
        do {
            if (cx.dart_vertex(d) != v) throw std::logic_error("rotation leaves its vertex");
            seen[static_cast<std::size_t>(d)] = true;
            cx.vertex_darts[static_cast<std::size_t>(v)].push_back(d);
            d = cx.rot_next[static_cast<std::size_t>(d)];
        } while (d != d0);
        if (static_cast<int>(cx.vertex_darts[static_cast<std::size_t>(v)].size()) !=
            darts_at[static_cast<std::size_t>(v)])
            throw std::logic_error("vertex link is not a single circle");
    }

    if (cx.euler() != cx.riemann_hurwitz_euler() || cx.euler() % 2 != 0)
        throw std::logic_error("Euler characteristic fails Riemann-Hurwitz bookkeeping");
    return cx;
}

Int chain_intersection(const CoverComplex& cx, const ZVec& x, const ZVec& y) {
    if (x.size() != static_cast<std::size_t>(cx.E) || y.size() != static_cast<std::size_t>(cx.E))
        throw std::invalid_argument("chain_intersection: chain size mismatch");
    Int total = 0;
    for (const auto& darts : cx.vertex_darts) {
        Int u = 0;
        for (int d : darts) {
            const std::size_t e = static_cast<std::size_t>(d / 2);
            const bool tail = d % 2 == 0;
            // In ccw order a tail dart presents (y-slot, x-slot): the first
            // chain rides the left side of the oriented edge ribbon.  A head
            // dart presents (x-slot, y-slot).
            if (tail) {
                if (y[e] != 0) total += u * y[e];
                u += x[e];
            } else {
                u -= x[e];
                if (y[e] != 0) total -= u * y[e];
            }
        }
        if (u != 0) throw std::invalid_argument("chain_intersection: input is not a cycle");
    }
    return total;
}

ZMat intersection_gram(const CoverComplex& cx, const ZMat& chains) {
    ZMat g(chains.rows, chains.rows);
    for (std::size_t i = 0; i < chains.rows; ++i)
        for (std::size_t j = 0; j < chains.rows; ++j) {
            if (i == j) continue;
            g(i, j) = chain_intersection(cx, chains.row(i), chains.row(j));
        }
    return g;
}

namespace {

// Signed tree-path chains from every vertex to the BFS root.
struct TreeData {
    std::vector<int> nontree;   // edge ids not in the tree, increasing
    std::vector<int> edge_to_k; // edge -> index in nontree, or -1
    std::vector<ZVec> to_root;  // per vertex, edge chain of path v -> root
};

TreeData spanning_tree(const CoverComplex& cx) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(cx.V));
    for (int e = 0; e < cx.E; ++e) {
        adj[static_cast<std::size_t>(cx.edge_tail(e))].push_back({e, cx.edge_head(e)});
        adj[static_cast<std::size_t>(cx.edge_head(e))].push_back({e, cx.edge_tail(e)});
    }
    std::vector<int> parent_edge(static_cast<std::size_t>(cx.V), -1);
    std::vector<bool> visited(static_cast<std::size_t>(cx.V), false);
    std::vector<bool> in_tree(static_cast<std::size_t>(cx.E), false);
    std::vector<int> order;
    visited[0] = true;
    order.push_back(0);
    for (std::size_t q = 0; q < order.size(); ++q) {
        int v = order[q];
        for (auto [e, w] : adj[static_cast<std::size_t>(v)]) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            visited[static_cast<std::size_t>(w)] = true;
            parent_edge[static_cast<std::size_t>(w)] = e;
            in_tree[static_cast<std::size_t>(e)] = true;
            order.push_back(w);
        }
    }
    for (bool v : visited)
        if (!v) throw std::logic_error("cover complex is disconnected");

    TreeData td;
    td.edge_to_k.assign(static_cast<std::size_t>(cx.E), -1);
    for (int e = 0; e < cx.E; ++e)
        if (!in_tree[static_cast<std::size_t>(e)]) {
            td.edge_to_k[static_cast<std::size_t>(e)] = static_cast<int>(td.nontree.size());
            td.nontree.push_back(e);
        }
    td.to_root.assign(static_cast<std::size_t>(cx.V), ZVec(static_cast<std::size_t>(cx.E)));
    for (int v : order) {
        if (v == 0) continue;
        int e = parent_edge[static_cast<std::size_t>(v)];
        int p = cx.edge_tail(e) == v ? cx.edge_head(e) : cx.edge_tail(e);
        ZVec chain = td.to_root[static_cast<std::size_t>(p)];
        // walking v -> p runs e against its orientation iff v is its head
        chain[static_cast<std::size_t>(e)] += cx.edge_head(e) == v ? -1 : 1;
        td.to_root[static_cast<std::size_t>(v)] = std::move(chain);
    }
    return td;
}

}  // namespace

H1Lattice homology_lattice(const CoverComplex& cx) {
    TreeData td = spanning_tree(cx);
    const std::size_t k = td.nontree.size();

    // Face boundaries in the cycle coordinates given by non-tree edges.
    ZMat b(cx.faces.size(), k);
    for (std::size_t f = 0; f < cx.faces.size(); ++f)
        for (const auto& s : cx.faces[f]) {
            int kidx = td.edge_to_k[static_cast<std::size_t>(s.edge)];
            if (kidx >= 0) b(f, static_cast<std::size_t>(kidx)) += s.dir;
        }

    SmithResult snf = smith(std::move(b));
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.diag[i] != 1)
            throw std::logic_error("torsion detected in H1 of a closed orientable surface");

    H1Lattice lat;
    lat.num_edges = cx.E;
    lat.nontree_edges = td.nontree;
    lat.edge_to_k = td.edge_to_k;
    lat.rank = k - snf.rank;
    if (static_cast<long long>(lat.rank) != 2 - cx.euler())
        throw std::logic_error("H1 rank disagrees with the Euler characteristic");
    if (lat.rank % 2 != 0) throw std::logic_error("H1 rank of a closed surface must be even");

    lat.class_map = ZMat(k, lat.rank);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < lat.rank; ++j) lat.class_map(i, j) = snf.col(i, snf.rank + j);

    // Basis cycles: rows r..k-1 of colInv, expanded to edge chains through
    // the tree-closed loops of the non-tree edges.
    lat.basis_chains = ZMat(lat.rank, static_cast<std::size_t>(cx.E));
    for (std::size_t i = 0; i < lat.rank; ++i) {
        ZVec chain(static_cast<std::size_t>(cx.E));
        for (std::size_t c = 0; c < k; ++c) {
            const Int& coef = snf.colInv(snf.rank + i, c);
            if (coef == 0) continue;
            int e = td.nontree[c];
            chain[static_cast<std::size_t>(e)] += coef;
            const ZVec& th = td.to_root[static_cast<std::size_t>(cx.edge_head(e))];
            const ZVec& tt = td.to_root[static_cast<std::size_t>(cx.edge_tail(e))];
            for (std::size_t j = 0; j < chain.size(); ++j) chain[j] += coef * (th[j] - tt[j]);
        }
        lat.basis_chains.set_row(i, chain);
    }

    lat.gram = intersection_gram(cx, lat.basis_chains);
    for (std::size_t i = 0; i < lat.rank; ++i) {
        if (chain_intersection(cx, lat.basis_chains.row(i), lat.basis_chains.row(i)) != 0)
            throw std::logic_error("intersection form has nonzero diagonal");
        for (std::size_t j = 0; j < lat.rank; ++j)
            if (lat.gram(i, j) != -lat.gram(j, i))
                throw std::logic_error("intersection form is not skew-symmetric");
    }
    Int d = det(lat.gram);
    if (d != 1 && d != -1)
        throw std::logic_error("intersection form is not unimodular on the closed cover");
    return lat;
}

ZVec H1Lattice::class_of_cycle(const ZVec& chain) const {
    ZVec kc(nontree_edges.size());
    for (std::size_t c = 0; c < nontree_edges.size(); ++c)
        kc[c] = chain[static_cast<std::size_t>(nontree_edges[c])];
    return vec_mat(kc, class_map);
}

Int H1Lattice::omega(const ZVec& x, const ZVec& y) const { return dot(x, mat_vec(gram, y)); }

LiftClassResult lift_class(const CoverComplex& cx, const H1Lattice& lat, const Word& w,
                           int start_sheet) {
    Word rw = reduce(w);
    if (rw.empty()) throw std::invalid_argument("lift_class: empty word");
    if (start_sheet < 0 || start_sheet >= cx.rep.degree)
        throw std::invalid_argument("lift_class: start sheet out of range");
    LiftClassResult res;
    res.m = cx.rep.of_word(rw).cycle_length_through(start_sheet);
    ZVec chain(static_cast<std::size_t>(cx.E));
    int cur = start_sheet;
    for (int t = 0; t < res.m; ++t)
        for (const Letter& l : rw.letters) {
            if (l.sign > 0) {
                chain[static_cast<std::size_t>(cx.edge_index(l.slot(cx.rep.st), cur))] += 1;
                cur = cx.rep.act(cur, l);
            } else {
                cur = cx.rep.act(cur, l);
                chain[static_cast<std::size_t>(cx.edge_index(l.slot(cx.rep.st), cur))] -= 1;
            }
        }
    if (cur != start_sheet) throw std::logic_error("lift_class: trace did not close");
    res.cls = lat.class_of_cycle(chain);
    return res;
}

ZMat deck_matrix(const CoverComplex& cx, const H1Lattice& lat, const std::vector<int>& elem) {
    if (!cx.rep.regular)
        throw std::invalid_argument("deck_matrix: cover is not regular (built by mod_ell/abelian)");
    const int n = cx.rep.degree;
    std::vector<int> sheet_image(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::vector<int> e = cx.rep.sheet_to_elem(s);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += elem[i];
        sheet_image[static_cast<std::size_t>(s)] = cx.rep.elem_to_sheet(e);
    }
    ZMat m(lat.rank, lat.rank);
    for (std::size_t i = 0; i < lat.rank; ++i) {
        ZVec chain(static_cast<std::size_t>(cx.E));
        for (int e = 0; e < cx.E; ++e) {
            const Int& c = lat.basis_chains(i, static_cast<std::size_t>(e));
            if (c == 0) continue;
            int te = cx.edge_index(cx.edge_letter(e), sheet_image[static_cast<std::size_t>(cx.edge_tail(e))]);
            chain[static_cast<std::size_t>(te)] += c;
        }
        ZVec cls = lat.class_of_cycle(chain);
        for (std::size_t r = 0; r < lat.rank; ++r) m(r, i) = cls[r];
    }
    return m;
}

}  // namespace covhom
