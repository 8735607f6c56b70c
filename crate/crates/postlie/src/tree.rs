//! Decorated rooted trees.
//!
//! Two families are modelled:
//!
//! - [`DecoratedTree`]: nodes carry a decoration `ℓ ∈ ℕ^{d+1}` (the monomial
//!   `X^ℓ`), edges are either noise edges `Ξ` (terminal, zero-decorated leaf)
//!   or kernel edges `I` decorated by a vector `a`. Symbolically a tree is
//!   `τ = X^ℓ Ξ^m ∏ᵢ I_{aᵢ}(τᵢ)`.
//! - [`T0Tree`]: the variant with a noise at every node, all kernel edges
//!   decorated zero, and the node monomial kept as an *unsummed multiset* of
//!   factors `∏ⱼ X^{ℓⱼ}` (the multiset `{X^{(1,0)}, X^{(1,0)}}` differs from
//!   `X^{(2,0)}`).
//!
//! Trees are non-planar: children are stored sorted, so structural equality
//! is isomorphism of decorated trees. Nodes carry a transient `marked` flag
//! used by operations that must remember a vertex subset across grafting;
//! public results are unmarked unless a function documents otherwise.

use crate::dec::{self, DecVec, Scaling};

/// An edge decoration: the noise symbol `Ξ` (fixed decoration) or a kernel
/// symbol `I` with decoration `a ∈ ℕ^{d+1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum EdgeDec {
    Noise,
    Kernel(DecVec),
}

/// A decorated rooted tree in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct DecoratedTree {
    /// Node decoration ℓ (the factor `X^ℓ`); length d+1.
    pub dec: DecVec,
    /// Transient vertex mark; participates in ordering so that marked and
    /// unmarked trees never collide inside one linear combination.
    pub marked: bool,
    /// Children, sorted; noise children are bare zero-decorated leaves.
    pub children: Vec<(EdgeDec, DecoratedTree)>,
}

impl DecoratedTree {
    /// The empty tree `𝟙 = X^0`: a single node with zero decoration.
    pub fn one(width: usize) -> DecoratedTree {
        DecoratedTree::x_pow(dec::zero(width))
    }

    /// The single node `X^ℓ`.
    pub fn x_pow(l: DecVec) -> DecoratedTree {
        DecoratedTree {
            dec: l,
            marked: false,
            children: Vec::new(),
        }
    }

    /// The noise tree `Ξ`: a zero-decorated root with one noise edge.
    pub fn xi(width: usize) -> DecoratedTree {
        DecoratedTree::node(
            dec::zero(width),
            vec![(EdgeDec::Noise, DecoratedTree::one(width))],
        )
    }

    /// General node constructor; sorts children and checks the noise-leaf
    /// invariant. All public constructions go through here.
    pub fn node(dec: DecVec, mut children: Vec<(EdgeDec, DecoratedTree)>) -> DecoratedTree {
        for (e, c) in &children {
            assert_eq!(c.dec.len(), dec.len(), "decoration width mismatch");
            if *e == EdgeDec::Noise {
                assert!(
                    c.children.is_empty() && dec::is_zero(&c.dec) && !c.marked,
                    "noise edges must end in bare zero-decorated leaves"
                );
            }
            if let EdgeDec::Kernel(a) = e {
                assert_eq!(a.len(), dec.len(), "decoration width mismatch");
            }
        }
        children.sort();
        DecoratedTree {
            dec,
            marked: false,
            children,
        }
    }

    /// Width d+1 of all decorations in this tree.
    pub fn width(&self) -> usize {
        self.dec.len()
    }

    /// Number of edges.
    pub fn edges(&self) -> usize {
        self.children.iter().map(|(_, c)| 1 + c.edges()).sum()
    }

    /// Number of vertices eligible for grafting and insertion: all vertices
    /// except noise-edge leaves.
    pub fn eligible_vertices(&self) -> usize {
        1 + self
            .children
            .iter()
            .filter(|(e, _)| *e != EdgeDec::Noise)
            .map(|(_, c)| c.eligible_vertices())
            .sum::<usize>()
    }

    /// `I_a(τ)` view: the decoration and content when the tree is planted,
    /// i.e. a zero-decorated unmarked root with exactly one kernel edge.
    pub fn as_planted(&self) -> Option<(&DecVec, &DecoratedTree)> {
        if !dec::is_zero(&self.dec) || self.marked || self.children.len() != 1 {
            return None;
        }
        match &self.children[0] {
            (EdgeDec::Kernel(a), t) => Some((a, t)),
            _ => None,
        }
    }

    /// Re-sorts all child lists; the identity on trees built via [`node`].
    ///
    /// [`node`]: DecoratedTree::node
    pub fn canonicalize(&self) -> DecoratedTree {
        let children = self
            .children
            .iter()
            .map(|(e, c)| (e.clone(), c.canonicalize()))
            .collect();
        let mut t = DecoratedTree::node(self.dec.clone(), children);
        t.marked = self.marked;
        t
    }

    /// Sum over edges of the scaled norm of the edge decoration; noise edges
    /// contribute zero.
    pub fn grading(&self, s: &Scaling) -> u64 {
        self.children
            .iter()
            .map(|(e, c)| {
                let edge = match e {
                    EdgeDec::Noise => 0,
                    EdgeDec::Kernel(a) => dec::snorm(a, s),
                };
                edge + c.grading(s)
            })
            .sum()
    }

    /// Marks every eligible vertex (all vertices except noise leaves).
    pub fn mark_all(&self) -> DecoratedTree {
        let children = self
            .children
            .iter()
            .map(|(e, c)| {
                if *e == EdgeDec::Noise {
                    (e.clone(), c.clone())
                } else {
                    (e.clone(), c.mark_all())
                }
            })
            .collect();
        let mut t = DecoratedTree::node(self.dec.clone(), children);
        t.marked = true;
        t
    }

    /// Clears every mark.
    pub fn unmark_all(&self) -> DecoratedTree {
        let children = self
            .children
            .iter()
            .map(|(e, c)| (e.clone(), c.unmark_all()))
            .collect();
        DecoratedTree::node(self.dec.clone(), children)
    }

    /// Number of marked vertices.
    pub fn marked_vertices(&self) -> usize {
        usize::from(self.marked)
            + self
                .children
                .iter()
                .map(|(_, c)| c.marked_vertices())
                .sum::<usize>()
    }
}

/// The tree product: identifies the roots, summing the root decorations and
/// uniting the child multisets. Commutative and associative with unit `𝟙`.
pub fn tree_product(t1: &DecoratedTree, t2: &DecoratedTree) -> DecoratedTree {
    let mut children = t1.children.clone();
    children.extend(t2.children.iter().cloned());
    let mut t = DecoratedTree::node(dec::add(&t1.dec, &t2.dec), children);
    t.marked = t1.marked || t2.marked;
    t
}

/// `I_a(τ)`: grafts `τ` onto a fresh zero-decorated root along a kernel edge
/// decorated `a`.
pub fn planted(a: DecVec, t: DecoratedTree) -> DecoratedTree {
    let width = t.width();
    DecoratedTree::node(dec::zero(width), vec![(EdgeDec::Kernel(a), t)])
}

/// A tree with a noise at every node: node data is the unsummed multiset of
/// monomial factors, children hang on zero-decorated kernel edges.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct T0Tree {
    /// Monomial factors `X^{ℓⱼ}`, each `ℓⱼ ≠ 0`, sorted with multiplicity.
    pub monomials: Vec<DecVec>,
    /// Children, sorted.
    pub children: Vec<T0Tree>,
}

impl T0Tree {
    /// The bare noise node `Ξ`.
    pub fn xi(width: usize) -> T0Tree {
        T0Tree::node_w(width, Vec::new(), Vec::new())
    }

    /// Node constructor; sorts and checks that no factor is `X^0`
    /// (a zero factor has no multi-index counterpart and is excluded).
    pub fn node_w(width: usize, mut monomials: Vec<DecVec>, mut children: Vec<T0Tree>) -> T0Tree {
        for m in &monomials {
            assert_eq!(m.len(), width, "decoration width mismatch");
            assert!(!dec::is_zero(m), "zero monomial factors are not allowed");
        }
        for c in &children {
            let cw = c.width();
            assert!(cw == 0 || cw == width, "decoration width mismatch");
        }
        monomials.sort();
        children.sort();
        T0Tree {
            monomials,
            children,
        }
    }

    /// Width of the decorations occurring in the tree; 0 when none occur
    /// (monomial-free trees carry no dimension of their own).
    pub fn width(&self) -> usize {
        if let Some(m) = self.monomials.first() {
            return m.len();
        }
        self.children
            .iter()
            .map(T0Tree::width)
            .find(|w| *w != 0)
            .unwrap_or(0)
    }

    /// Total number of nodes.
    pub fn nodes(&self) -> usize {
        1 + self.children.iter().map(T0Tree::nodes).sum::<usize>()
    }

    /// Size for enumeration budgets: monomial factors at this node plus
    /// `1 + size(child)` per child.
    pub fn size(&self) -> usize {
        self.monomials.len() + self.children.iter().map(|c| 1 + c.size()).sum::<usize>()
    }
}

/// Width-aware wrapper: a `T0Tree` plus the ambient width, so bare noises in
/// different dimensions do not compare equal. Only needed when a tree may be
/// the bare `Ξ` (whose width is not recoverable from its content).
pub fn t0_width_or(t: &T0Tree, fallback: usize) -> usize {
    let w = t.width();
    if w == 0 {
        fallback
    } else {
        w
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dec::{unit, zero};

    fn k(a: DecVec, t: DecoratedTree) -> (EdgeDec, DecoratedTree) {
        (EdgeDec::Kernel(a), t)
    }

    #[test]
    fn product_merges_roots() {
        // X^α · (Ξ I_a(X^β)) = X^α Ξ I_a(X^β)
        let alpha = vec![1, 0];
        let beta = vec![0, 1];
        let a = vec![0, 1];
        let x_alpha = DecoratedTree::x_pow(alpha.clone());
        let body = DecoratedTree::node(
            zero(2),
            vec![
                (EdgeDec::Noise, DecoratedTree::one(2)),
                k(a.clone(), DecoratedTree::x_pow(beta.clone())),
            ],
        );
        let prod = tree_product(&x_alpha, &body);
        let expected = DecoratedTree::node(
            alpha,
            vec![
                (EdgeDec::Noise, DecoratedTree::one(2)),
                k(a, DecoratedTree::x_pow(beta)),
            ],
        );
        assert_eq!(prod, expected);
    }

    #[test]
    fn product_unit_comm_assoc() {
        let one = DecoratedTree::one(2);
        let t1 = DecoratedTree::xi(2);
        let t2 = planted(unit(2, 0), DecoratedTree::xi(2));
        let t3 = DecoratedTree::x_pow(vec![1, 1]);
        assert_eq!(tree_product(&one, &t1), t1);
        assert_eq!(tree_product(&t1, &t2), tree_product(&t2, &t1));
        assert_eq!(
            tree_product(&tree_product(&t1, &t2), &t3),
            tree_product(&t1, &tree_product(&t2, &t3))
        );
    }

    #[test]
    fn canonical_order_ignores_input_order() {
        let leaf_a = DecoratedTree::x_pow(vec![1, 0]);
        let leaf_b = DecoratedTree::x_pow(vec![0, 1]);
        let c1 = DecoratedTree::node(
            zero(2),
            vec![k(zero(2), leaf_a.clone()), k(zero(2), leaf_b.clone())],
        );
        let c2 = DecoratedTree::node(zero(2), vec![k(zero(2), leaf_b), k(zero(2), leaf_a)]);
        assert_eq!(c1, c2);
    }

    #[test]
    fn grading_examples() {
        let s = Scaling(vec![2, 1]);
        // Ξ · I_{(1,0)}(Ξ): the kernel edge contributes 2, noises contribute 0.
        let t = tree_product(
            &DecoratedTree::xi(2),
            &planted(vec![1, 0], DecoratedTree::xi(2)),
        );
        assert_eq!(t.grading(&s), 2);
        // X^α Ξ I_{(0,1)}(X^β): single kernel edge (0,1) ⇒ grading 1.
        let t2 = DecoratedTree::node(
            vec![1, 0],
            vec![
                (EdgeDec::Noise, DecoratedTree::one(2)),
                k(vec![0, 1], DecoratedTree::x_pow(vec![1, 1])),
            ],
        );
        assert_eq!(t2.grading(&s), 1);
        assert_eq!(DecoratedTree::x_pow(vec![1, 1]).grading(&s), 0);
    }

    #[test]
    fn grading_additive_under_product_and_planting() {
        let s = Scaling::parabolic(2);
        let t1 = planted(vec![1, 1], DecoratedTree::xi(2));
        let t2 = tree_product(&DecoratedTree::xi(2), &t1);
        assert_eq!(
            tree_product(&t1, &t2).grading(&s),
            t1.grading(&s) + t2.grading(&s)
        );
        let a = vec![0, 1];
        assert_eq!(
            planted(a.clone(), t2.clone()).grading(&s),
            t2.grading(&s) + dec::snorm(&a, &s)
        );
    }

    #[test]
    fn planted_view() {
        let t = planted(vec![1, 0], DecoratedTree::xi(2));
        let (a, content) = t.as_planted().unwrap();
        assert_eq!(a, &vec![1, 0]);
        assert_eq!(content, &DecoratedTree::xi(2));
        assert!(DecoratedTree::xi(2).as_planted().is_none());
        assert!(DecoratedTree::one(2).as_planted().is_none());
    }

    #[test]
    fn marks_round_trip() {
        let t = tree_product(
            &DecoratedTree::xi(2),
            &planted(vec![1, 0], DecoratedTree::xi(2)),
        );
        let m = t.mark_all();
        assert_eq!(m.marked_vertices(), t.eligible_vertices());
        assert_ne!(m, t, "marks participate in equality");
        assert_eq!(m.unmark_all(), t);
    }

    #[test]
    #[should_panic(expected = "noise")]
    fn decorated_noise_leaf_rejected() {
        DecoratedTree::node(
            zero(2),
            vec![(EdgeDec::Noise, DecoratedTree::x_pow(vec![1, 0]))],
        );
    }

    #[test]
    #[should_panic(expected = "zero monomial")]
    fn t0_zero_factor_rejected() {
        T0Tree::node_w(2, vec![zero(2)], vec![]);
    }

    #[test]
    fn t0_multiset_is_not_summed() {
        let two_ones = T0Tree::node_w(2, vec![vec![1, 0], vec![1, 0]], vec![]);
        let one_two = T0Tree::node_w(2, vec![vec![2, 0]], vec![]);
        assert_ne!(two_ones, one_two);
        assert_eq!(two_ones.nodes(), 1);
    }

    #[test]
    fn shuffled_children_canonicalize_identically() {
        // 100 deterministic shuffles of a 6-edge tree's child lists.
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let base = DecoratedTree::node(
            vec![1, 0],
            vec![
                (EdgeDec::Noise, DecoratedTree::one(2)),
                k(vec![1, 0], DecoratedTree::xi(2)),
                k(vec![0, 1], DecoratedTree::xi(2)),
            ],
        );
        let canonical = base.canonicalize();
        for _ in 0..100 {
            let mut kids = base.children.clone();
            kids.shuffle(&mut rng);
            // Bypass the sorting constructor to simulate foreign input.
            let shuffled = DecoratedTree {
                dec: base.dec.clone(),
                marked: false,
                children: kids,
            };
            assert_eq!(shuffled.canonicalize(), canonical);
        }
    }
}
