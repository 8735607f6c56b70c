//! Grafting and insertion operators on decorated trees.
//!
//! - [`graft`]: `σ ↷ᵃ τ`, attaching `σ` by a new kernel edge decorated `a`
//!   at every eligible vertex of `τ` (all vertices except noise leaves).
//! - [`deformed_graft`]: `σ ↷̂ᵃ τ`, the binomially weighted deformation that
//!   lowers the receiving vertex decoration together with the edge
//!   decoration: `Σ_v Σ_ℓ C(𝔫_v, ℓ) · σ ↷^{a−ℓ}_v (τ with 𝔫_v − ℓ)`,
//!   restricted to `ℓ ≤ a` and `ℓ ≤ 𝔫_v` (all other terms vanish by
//!   convention).
//! - [`up`] / [`up_marked`]: the insertion `↑ⁱ` adding `eᵢ` to one vertex
//!   decoration, summed over all eligible vertices, or over the marked
//!   vertices only.
//! - [`up_multi`]: `↑̃ᵏ`, summing over all decompositions `k = Σ_v k_v` of a
//!   vector across the marked vertices.
//! - [`planted_pre_lie`]: the products `I_a(σ) ↷ I_b(τ) = I_b(σ ↷ᵃ τ)` and
//!   the deformed analogue on planted trees.
//! - `t0_*`: the same circle of operators on [`T0Tree`]s, where attaching
//!   with decoration `a ≠ 0` consumes one monomial factor `X^a` at the
//!   receiving node instead of decorating the edge.
//!
//! All per-vertex sums are computed by structural recursion: a term is
//! produced for the root, then for every vertex of every kernel subtree,
//! with results re-canonicalized so that coefficients of isomorphic outcomes
//! accumulate. Marks on the input survive every operator here (decrementing
//! a decoration does not unmark a vertex).

use crate::dec::{self, DecVec};
use crate::lincomb::{rat, rat_u128, LinComb};
use crate::tree::{planted, DecoratedTree, EdgeDec, T0Tree};

fn node_marked(
    dec: DecVec,
    marked: bool,
    children: Vec<(EdgeDec, DecoratedTree)>,
) -> DecoratedTree {
    let mut t = DecoratedTree::node(dec, children);
    t.marked = marked;
    t
}

/// `σ ↷ᵃ τ`: graft `σ` at every eligible vertex of `τ` with a kernel edge
/// decorated `a`. Integer coefficients count coinciding outcomes.
pub fn graft(sigma: &DecoratedTree, a: &DecVec, tau: &DecoratedTree) -> LinComb<DecoratedTree> {
    assert_eq!(sigma.width(), tau.width(), "decoration width mismatch");
    let mut out = LinComb::zero();
    let mut at_root = tau.children.clone();
    at_root.push((EdgeDec::Kernel(a.clone()), sigma.clone()));
    out.add_term(node_marked(tau.dec.clone(), tau.marked, at_root), rat(1));
    for (idx, (e, c)) in tau.children.iter().enumerate() {
        if *e == EdgeDec::Noise {
            continue;
        }
        for (sub, coef) in graft(sigma, a, c).into_terms() {
            let mut children = tau.children.clone();
            children[idx].1 = sub;
            out.add_term(node_marked(tau.dec.clone(), tau.marked, children), coef);
        }
    }
    out
}

/// `σ ↷̂ᵃ τ`: deformed grafting. At each eligible vertex `v` with decoration
/// `𝔫_v`, sums over `ℓ ≤ min(a, 𝔫_v)` the attachment with edge decoration
/// `a − ℓ` onto `τ` with `𝔫_v` lowered by `ℓ`, weighted `C(𝔫_v, ℓ)`.
pub fn deformed_graft(
    sigma: &DecoratedTree,
    a: &DecVec,
    tau: &DecoratedTree,
) -> LinComb<DecoratedTree> {
    assert_eq!(sigma.width(), tau.width(), "decoration width mismatch");
    let mut out = LinComb::zero();
    for l in dec::grid_le(&dec::min(a, &tau.dec)) {
        let coef = dec::binom(&tau.dec, &l);
        let lowered = dec::checked_sub(&tau.dec, &l).unwrap();
        let edge = dec::checked_sub(a, &l).unwrap();
        let mut children = tau.children.clone();
        children.push((EdgeDec::Kernel(edge), sigma.clone()));
        out.add_term(node_marked(lowered, tau.marked, children), rat_u128(coef));
    }
    for (idx, (e, c)) in tau.children.iter().enumerate() {
        if *e == EdgeDec::Noise {
            continue;
        }
        for (sub, coef) in deformed_graft(sigma, a, c).into_terms() {
            let mut children = tau.children.clone();
            children[idx].1 = sub;
            out.add_term(node_marked(tau.dec.clone(), tau.marked, children), coef);
        }
    }
    out
}

/// `↑ⁱ τ`: adds `eᵢ` to one eligible vertex decoration, summed over all
/// eligible vertices.
pub fn up(i: usize, tau: &DecoratedTree) -> LinComb<DecoratedTree> {
    up_impl(i, tau, false)
}

/// `↑ⁱ` restricted to the marked vertices of `τ` (zero when nothing is
/// marked): the operator written `↑ⁱ_N` for a vertex subset `N`.
pub fn up_marked(i: usize, tau: &DecoratedTree) -> LinComb<DecoratedTree> {
    up_impl(i, tau, true)
}

fn up_impl(i: usize, tau: &DecoratedTree, marked_only: bool) -> LinComb<DecoratedTree> {
    let mut out = LinComb::zero();
    if !marked_only || tau.marked {
        let mut d = tau.dec.clone();
        d[i] += 1;
        out.add_term(node_marked(d, tau.marked, tau.children.clone()), rat(1));
    }
    for (idx, (e, c)) in tau.children.iter().enumerate() {
        if *e == EdgeDec::Noise {
            continue;
        }
        for (sub, coef) in up_impl(i, c, marked_only).into_terms() {
            let mut children = tau.children.clone();
            children[idx].1 = sub;
            out.add_term(node_marked(tau.dec.clone(), tau.marked, children), coef);
        }
    }
    out
}

/// `↑̃ᵏ τ`: sum over all decompositions `k = Σ_v k_v` across the marked
/// vertices of `τ`, adding `k_v` at `v`; multiplicities arise from distinct
/// decompositions with identical outcome. `k = 0` is the identity.
pub fn up_multi(k: &DecVec, tau: &DecoratedTree) -> LinComb<DecoratedTree> {
    if tau.marked_vertices() == 0 {
        return if dec::is_zero(k) {
            LinComb::single(tau.clone())
        } else {
            LinComb::zero()
        };
    }
    let root_choices = if tau.marked {
        dec::grid_le(k)
    } else {
        vec![dec::zero(k.len())]
    };
    let mut out = LinComb::zero();
    for k_root in root_choices {
        let rem = dec::checked_sub(k, &k_root).unwrap();
        for (children, coef) in distribute(&rem, &tau.children).into_terms() {
            out.add_term(
                node_marked(dec::add(&tau.dec, &k_root), tau.marked, children),
                coef,
            );
        }
    }
    out
}

/// All ways to split `rem` across the (marked vertices of the) child list.
fn distribute(
    rem: &DecVec,
    children: &[(EdgeDec, DecoratedTree)],
) -> LinComb<Vec<(EdgeDec, DecoratedTree)>> {
    match children.split_first() {
        None => {
            if dec::is_zero(rem) {
                LinComb::single(Vec::new())
            } else {
                LinComb::zero()
            }
        }
        Some(((e, c), rest)) => {
            let mut out = LinComb::zero();
            let choices = if c.marked_vertices() == 0 {
                vec![dec::zero(rem.len())]
            } else {
                dec::grid_le(rem)
            };
            for k_c in choices {
                let after = dec::checked_sub(rem, &k_c).unwrap();
                let here = up_multi(&k_c, c);
                if here.is_zero() {
                    continue;
                }
                for (tail, c2) in distribute(&after, rest).into_terms() {
                    for (sub, c1) in here.terms() {
                        let mut v = Vec::with_capacity(1 + tail.len());
                        v.push((e.clone(), sub.clone()));
                        v.extend(tail.iter().cloned());
                        out.add_term(v, c1 * &c2);
                    }
                }
            }
            out
        }
    }
}

/// `I_a(σ) ↷ I_b(τ) = I_b(σ ↷ᵃ τ)` and its deformed analogue: the pre-Lie
/// products of planted trees. Both arguments must be planted; the planted
/// root never receives a graft.
pub fn planted_pre_lie(
    p: &DecoratedTree,
    q: &DecoratedTree,
    deformed: bool,
) -> LinComb<DecoratedTree> {
    let (a, sigma) = p
        .as_planted()
        .expect("planted_pre_lie needs a planted left argument");
    let (b, tau) = q
        .as_planted()
        .expect("planted_pre_lie needs a planted right argument");
    let grafted = if deformed {
        deformed_graft(sigma, a, tau)
    } else {
        graft(sigma, a, tau)
    };
    grafted.map_basis(|t| planted(b.clone(), t.clone()))
}

/// Plain grafting on trees with node-level noise: attach `σ` below every
/// node of `τ` by a zero-decorated edge.
pub fn t0_graft(sigma: &T0Tree, tau: &T0Tree) -> LinComb<T0Tree> {
    let width = sigma.width().max(tau.width());
    let mut out = LinComb::zero();
    let mut at_root = tau.children.clone();
    at_root.push(sigma.clone());
    out.add_term(
        T0Tree::node_w(width, tau.monomials.clone(), at_root),
        rat(1),
    );
    for (idx, c) in tau.children.iter().enumerate() {
        for (sub, coef) in t0_graft(sigma, c).into_terms() {
            let mut children = tau.children.clone();
            children[idx] = sub;
            out.add_term(T0Tree::node_w(width, tau.monomials.clone(), children), coef);
        }
    }
    out
}

/// The deformed product on trees with node-level noise. For `a = 0` it is
/// plain grafting. For `a ≠ 0` only the fully deformed term survives: at
/// each node carrying the factor `X^a`, one copy is consumed and `σ` is
/// attached there; the coefficient is the number of copies.
pub fn t0_deformed_graft(sigma: &T0Tree, a: &DecVec, tau: &T0Tree) -> LinComb<T0Tree> {
    if dec::is_zero(a) {
        return t0_graft(sigma, tau);
    }
    let width = a.len();
    let mut out = LinComb::zero();
    let copies = tau.monomials.iter().filter(|m| *m == a).count();
    if copies > 0 {
        let mut monomials = tau.monomials.clone();
        let pos = monomials.iter().position(|m| m == a).unwrap();
        monomials.remove(pos);
        let mut children = tau.children.clone();
        children.push(sigma.clone());
        out.add_term(
            T0Tree::node_w(width, monomials, children),
            rat(copies as i64),
        );
    }
    for (idx, c) in tau.children.iter().enumerate() {
        for (sub, coef) in t0_deformed_graft(sigma, a, c).into_terms() {
            let mut children = tau.children.clone();
            children[idx] = sub;
            out.add_term(T0Tree::node_w(width, tau.monomials.clone(), children), coef);
        }
    }
    out
}

/// `↑ⁱ` on trees with node-level noise: at every node, either adjoin a new
/// factor `X^{eᵢ}` or raise one existing factor by `eᵢ`.
pub fn t0_up(i: usize, width: usize, tau: &T0Tree) -> LinComb<T0Tree> {
    let mut out = LinComb::zero();
    let mut adjoined = tau.monomials.clone();
    adjoined.push(dec::unit(width, i));
    out.add_term(
        T0Tree::node_w(width, adjoined, tau.children.clone()),
        rat(1),
    );
    for j in 0..tau.monomials.len() {
        let mut monomials = tau.monomials.clone();
        monomials[j][i] += 1;
        out.add_term(
            T0Tree::node_w(width, monomials, tau.children.clone()),
            rat(1),
        );
    }
    for (idx, c) in tau.children.iter().enumerate() {
        for (sub, coef) in t0_up(i, width, c).into_terms() {
            let mut children = tau.children.clone();
            children[idx] = sub;
            out.add_term(T0Tree::node_w(width, tau.monomials.clone(), children), coef);
        }
    }
    out
}
