//! Planar decorated trees and left-most grafting.
//!
//! A planar tree is a node with a prefix of noise edges followed by an
//! ordered list of slots, each slot either a terminal `Xᵢ` edge or a kernel
//! branch `I_a(subtree)` ([`PlanarTree`]). Left-most grafting inserts the
//! grafted tree as a new first slot, right of the noise prefix, at every
//! node; one cannot graft on top of an `Xᵢ` edge, so `σ ▷̂_l Xᵢ = 0`.
//!
//! The non-planar algebra is the quotient by the relations
//!
//! ```text
//! Xᵢ Xⱼ = Xⱼ Xᵢ,   I_a(τ) I_b(σ) = I_b(σ) I_a(τ),
//! I_a(τ) Xᵢ = Xᵢ I_a(τ) + I_{a−eᵢ}(τ)
//! ```
//!
//! [`planar_normalize`] maps a planar tree into that quotient: it rewrites
//! every branch-before-X pair until each node reads `Ξ^m X^ℓ ∏ I_a(τ)`, then
//! reads the `X` run as the node decoration. [`check_left_equiv`] compares
//! the left-grafting route against the post-Lie product on the quotient, and
//! [`normalize_all_orders`] replays the rewriting in every possible order as
//! a confluence witness.

use crate::dec::{self, DecVec};
use crate::envelope::{post_gen, Gen};
use crate::lincomb::LinComb;
use crate::tree::{DecoratedTree, EdgeDec};
use crate::tree_postlie::{PlantedGen, TreePostLie};
use std::collections::BTreeMap;

/// One slot of a planar node: a terminal `Xᵢ` edge or a decorated branch.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum PSlot {
    X(usize),
    Branch(DecVec, PlanarTree),
}

/// A planar tree: `noises` noise edges followed by ordered slots.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PlanarTree {
    pub noises: usize,
    pub slots: Vec<PSlot>,
}

impl PlanarTree {
    pub fn leaf(noises: usize) -> Self {
        PlanarTree {
            noises,
            slots: Vec::new(),
        }
    }

    pub fn new(noises: usize, slots: Vec<PSlot>) -> Self {
        PlanarTree { noises, slots }
    }

    /// Total edge count: noises, `X` edges and branch edges.
    pub fn edges(&self) -> usize {
        self.noises
            + self
                .slots
                .iter()
                .map(|s| match s {
                    PSlot::X(_) => 1,
                    PSlot::Branch(_, t) => 1 + t.edges(),
                })
                .sum::<usize>()
    }
}

/// A generator of the planar algebra: `Xᵢ` or a planted planar tree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum PlanarGen {
    X(usize),
    Planted(DecVec, PlanarTree),
}

fn slot_of_gen(g: &PlanarGen) -> PSlot {
    match g {
        PlanarGen::X(i) => PSlot::X(*i),
        PlanarGen::Planted(a, t) => PSlot::Branch(a.clone(), t.clone()),
    }
}

/// Inserts `sigma` as the first slot of every node of `body` (one term per
/// node). Branch subtrees are grafting spots; `X` edges are not.
pub fn left_graft_body(sigma: &PSlot, body: &PlanarTree) -> LinComb<PlanarTree> {
    let mut out = LinComb::zero();
    let mut at_root = body.clone();
    at_root.slots.insert(0, sigma.clone());
    out.add_term(at_root, crate::lincomb::rat(1));
    for (j, slot) in body.slots.iter().enumerate() {
        if let PSlot::Branch(a, sub) = slot {
            for (t, c) in left_graft_body(sigma, sub).terms() {
                let mut host = body.clone();
                host.slots[j] = PSlot::Branch(a.clone(), t.clone());
                out.add_term(host, c.clone());
            }
        }
    }
    out
}

/// `σ ▷̂_l τ` on generators: zero on `X` targets, insertion into the body of
/// a planted target.
pub fn left_graft(sigma: &PlanarGen, tau: &PlanarGen) -> LinComb<PlanarGen> {
    match tau {
        PlanarGen::X(_) => LinComb::zero(),
        PlanarGen::Planted(b, body) => left_graft_body(&slot_of_gen(sigma), body)
            .map_basis(|t| PlanarGen::Planted(b.clone(), t.clone())),
    }
}

/// Maps a planar tree into the non-planar quotient, rewriting the left-most
/// branch-before-X pair at the root until none remains, then reading off the
/// node decoration and recursing into the branches.
pub fn planar_normalize(body: &PlanarTree, width: usize) -> LinComb<DecoratedTree> {
    for j in 0..body.slots.len().saturating_sub(1) {
        if let (PSlot::Branch(a, sub), PSlot::X(i)) = (&body.slots[j], &body.slots[j + 1]) {
            let mut swapped = body.clone();
            swapped.slots.swap(j, j + 1);
            let mut out = planar_normalize(&swapped, width);
            if a[*i] >= 1 {
                let lowered = dec::checked_sub(a, &dec::unit(width, *i)).expect("aᵢ ≥ 1");
                let mut merged = body.clone();
                merged.slots[j] = PSlot::Branch(lowered, sub.clone());
                merged.slots.remove(j + 1);
                out.add_assign(&planar_normalize(&merged, width));
            }
            return out;
        }
    }
    // The root reads X* Branch*: assemble the decorated node.
    let mut node_dec = dec::zero(width);
    let noise_children: Vec<(EdgeDec, DecoratedTree)> = (0..body.noises)
        .map(|_| (EdgeDec::Noise, DecoratedTree::one(width)))
        .collect();
    let mut acc: LinComb<Vec<(EdgeDec, DecoratedTree)>> = LinComb::single(noise_children);
    for slot in &body.slots {
        match slot {
            PSlot::X(i) => node_dec[*i] += 1,
            PSlot::Branch(a, sub) => {
                let sub_nf = planar_normalize(sub, width);
                acc = acc.flat_map(|children| {
                    sub_nf.map_basis(|t| {
                        let mut c = children.clone();
                        c.push((EdgeDec::Kernel(a.clone()), t.clone()));
                        c
                    })
                });
            }
        }
    }
    acc.map_basis(|children| DecoratedTree::node(node_dec.clone(), children.clone()))
}

/// A generator mapped into the quotient.
pub fn normalize_gen(g: &PlanarGen, width: usize) -> LinComb<Gen<PlantedGen>> {
    match g {
        PlanarGen::X(i) => LinComb::single(Gen::X(*i)),
        PlanarGen::Planted(a, body) => planar_normalize(body, width).map_basis(|t| {
            Gen::Ab(PlantedGen {
                a: a.clone(),
                tree: t.clone(),
            })
        }),
    }
}

/// The difference between the two routes from a planar generator pair to the
/// quotient: left-graft then normalize, versus normalize then apply the
/// post-Lie product. Zero iff they agree on this input.
pub fn check_left_equiv(
    sigma: &PlanarGen,
    tau: &PlanarGen,
    width: usize,
) -> LinComb<Gen<PlantedGen>> {
    let alg = TreePostLie::new(width);
    let planar_route = left_graft(sigma, tau).flat_map(|g| normalize_gen(g, width));
    let mut direct = LinComb::zero();
    for (gs, cs) in normalize_gen(sigma, width).terms() {
        for (gt, ct) in normalize_gen(tau, width).terms() {
            direct.add_assign(&post_gen(&alg, gs, gt).scale(&(cs * ct)));
        }
    }
    &planar_route - &direct
}

/// A rewrite position: the path of branch-slot indices leading to a node,
/// and the slot index of a branch-before-X pair at that node.
fn inversion_positions(body: &PlanarTree) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    collect_inversions(body, &mut Vec::new(), &mut out);
    out
}

fn collect_inversions(
    body: &PlanarTree,
    path: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, usize)>,
) {
    for j in 0..body.slots.len().saturating_sub(1) {
        if let (PSlot::Branch(..), PSlot::X(_)) = (&body.slots[j], &body.slots[j + 1]) {
            out.push((path.clone(), j));
        }
    }
    for (j, slot) in body.slots.iter().enumerate() {
        if let PSlot::Branch(_, sub) = slot {
            path.push(j);
            collect_inversions(sub, path, out);
            path.pop();
        }
    }
}

/// Applies the relation at one position: the swapped term plus the merged
/// correction when the branch decoration allows it.
fn rewrite_at(body: &PlanarTree, path: &[usize], j: usize, width: usize) -> Vec<PlanarTree> {
    if let Some((&head, rest)) = path.split_first() {
        let (a, sub) = match &body.slots[head] {
            PSlot::Branch(a, sub) => (a.clone(), sub),
            PSlot::X(_) => unreachable!("path descends into branches"),
        };
        return rewrite_at(sub, rest, j, width)
            .into_iter()
            .map(|t| {
                let mut host = body.clone();
                host.slots[head] = PSlot::Branch(a.clone(), t);
                host
            })
            .collect();
    }
    let (a, sub, i) = match (&body.slots[j], &body.slots[j + 1]) {
        (PSlot::Branch(a, sub), PSlot::X(i)) => (a.clone(), sub.clone(), *i),
        _ => unreachable!("position points at a branch-before-X pair"),
    };
    let mut swapped = body.clone();
    swapped.slots.swap(j, j + 1);
    let mut terms = vec![swapped];
    if a[i] >= 1 {
        let lowered = dec::checked_sub(&a, &dec::unit(width, i)).expect("aᵢ ≥ 1");
        let mut merged = body.clone();
        merged.slots[j] = PSlot::Branch(lowered, sub);
        merged.slots.remove(j + 1);
        terms.push(merged);
    }
    terms
}

/// Reads off an inversion-free planar tree as a decorated tree.
fn direct_map(body: &PlanarTree, width: usize) -> DecoratedTree {
    let mut node_dec = dec::zero(width);
    let mut children: Vec<(EdgeDec, DecoratedTree)> = (0..body.noises)
        .map(|_| (EdgeDec::Noise, DecoratedTree::one(width)))
        .collect();
    for slot in &body.slots {
        match slot {
            PSlot::X(i) => node_dec[*i] += 1,
            PSlot::Branch(a, sub) => {
                children.push((EdgeDec::Kernel(a.clone()), direct_map(sub, width)));
            }
        }
    }
    DecoratedTree::node(node_dec, children)
}

/// Normalizes by exploring *every* rewriting order, memoized, panicking if
/// any two orders disagree. Intended for desk-scale confluence certification.
pub fn normalize_all_orders(body: &PlanarTree, width: usize) -> LinComb<DecoratedTree> {
    let mut memo = BTreeMap::new();
    all_orders_rec(body, width, &mut memo)
}

fn all_orders_rec(
    body: &PlanarTree,
    width: usize,
    memo: &mut BTreeMap<PlanarTree, LinComb<DecoratedTree>>,
) -> LinComb<DecoratedTree> {
    if let Some(hit) = memo.get(body) {
        return hit.clone();
    }
    let positions = inversion_positions(body);
    let result = if positions.is_empty() {
        LinComb::single(direct_map(body, width))
    } else {
        let mut agreed: Option<LinComb<DecoratedTree>> = None;
        for (path, j) in &positions {
            let mut branch = LinComb::zero();
            for t in rewrite_at(body, path, *j, width) {
                branch.add_assign(&all_orders_rec(&t, width, memo));
            }
            match &agreed {
                None => agreed = Some(branch),
                Some(prev) => assert_eq!(
                    prev, &branch,
                    "rewriting orders disagree on {body:?} at {path:?}/{j}"
                ),
            }
        }
        agreed.unwrap()
    };
    memo.insert(body.clone(), result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graft::deformed_graft;
    use crate::lincomb::rat;
    use crate::tree::DecoratedTree as DT;

    fn b0(t: PlanarTree) -> PSlot {
        PSlot::Branch(vec![0], t)
    }

    fn leaf() -> PlanarTree {
        PlanarTree::leaf(0)
    }

    fn chain2() -> PlanarTree {
        PlanarTree::new(0, vec![b0(leaf())])
    }

    #[test]
    fn left_graft_four_node_example() {
        // • grafted leftmost onto the planar tree with a 2-chain on the left
        // and a leaf on the right: one term per node, order sensitive.
        let tau = PlanarTree::new(0, vec![b0(chain2()), b0(leaf())]);
        let got = left_graft_body(&b0(leaf()), &tau);
        let at_root = PlanarTree::new(0, vec![b0(leaf()), b0(chain2()), b0(leaf())]);
        let at_left = PlanarTree::new(
            0,
            vec![
                b0(PlanarTree::new(0, vec![b0(leaf()), b0(leaf())])),
                b0(leaf()),
            ],
        );
        let at_top = PlanarTree::new(
            0,
            vec![b0(PlanarTree::new(0, vec![b0(chain2())])), b0(leaf())],
        );
        let at_right = PlanarTree::new(0, vec![b0(chain2()), b0(chain2())]);
        let mut expected = LinComb::zero();
        for t in [at_root, at_left, at_top, at_right] {
            expected.add_term(t, rat(1));
        }
        assert_eq!(got, expected);
    }

    #[test]
    fn planar_order_distinguishes_until_normalized() {
        let left_heavy = PlanarTree::new(0, vec![b0(chain2()), b0(leaf())]);
        let right_heavy = PlanarTree::new(0, vec![b0(leaf()), b0(chain2())]);
        assert_ne!(left_heavy, right_heavy);
        assert_eq!(
            planar_normalize(&left_heavy, 1),
            planar_normalize(&right_heavy, 1)
        );
    }

    fn xi_body() -> PlanarTree {
        PlanarTree::leaf(1)
    }

    fn xi_tree(width: usize) -> DT {
        DT::xi(width)
    }

    #[test]
    fn normalize_swaps_branch_past_x_with_correction() {
        // Ξ I_a(Ξ) X₀ = Ξ X₀ I_a(Ξ) + Ξ I_{a−e₀}(Ξ) with a = (1,1).
        let body = PlanarTree::new(1, vec![PSlot::Branch(vec![1, 1], xi_body()), PSlot::X(0)]);
        let got = planar_normalize(&body, 2);
        let swapped = DT::node(
            vec![1, 0],
            vec![
                (EdgeDec::Noise, DT::one(2)),
                (EdgeDec::Kernel(vec![1, 1]), xi_tree(2)),
            ],
        );
        let corrected = DT::node(
            vec![0, 0],
            vec![
                (EdgeDec::Noise, DT::one(2)),
                (EdgeDec::Kernel(vec![0, 1]), xi_tree(2)),
            ],
        );
        let mut expected = LinComb::single(swapped);
        expected.add_term(corrected, rat(1));
        assert_eq!(got, expected);
    }

    #[test]
    fn left_graft_then_normalize_is_deformed_graft() {
        // I_a(Ξ) ▷̂_l (Ξ X₀) inserted left of the X edge, then normalized,
        // equals Ξ ↷̂^a (X^{e₀} Ξ).
        let a = vec![1, 1];
        let target_body = PlanarTree::new(1, vec![PSlot::X(0)]);
        let grafted = left_graft_body(&PSlot::Branch(a.clone(), xi_body()), &target_body);
        assert_eq!(grafted.len(), 1, "X edges accept no graft");
        let normalized = grafted.flat_map(|t| planar_normalize(t, 2));
        let direct_target = DT::node(vec![1, 0], vec![(EdgeDec::Noise, DT::one(2))]);
        assert_eq!(normalized, deformed_graft(&xi_tree(2), &a, &direct_target));
    }

    #[test]
    fn graft_onto_x_generator_vanishes() {
        let sigma = PlanarGen::Planted(vec![0, 0], xi_body());
        assert!(left_graft(&sigma, &PlanarGen::X(0)).is_zero());
        assert!(left_graft(&PlanarGen::X(1), &PlanarGen::X(0)).is_zero());
    }

    #[test]
    fn left_equivalence_on_generator_pairs() {
        let gens = vec![
            PlanarGen::X(0),
            PlanarGen::X(1),
            PlanarGen::Planted(vec![1, 0], xi_body()),
            PlanarGen::Planted(
                vec![0, 1],
                PlanarTree::new(1, vec![PSlot::Branch(vec![1, 1], xi_body()), PSlot::X(0)]),
            ),
            PlanarGen::Planted(
                vec![1, 1],
                PlanarTree::new(0, vec![PSlot::X(1), PSlot::X(1)]),
            ),
        ];
        for sigma in &gens {
            for tau in &gens {
                let diff = check_left_equiv(sigma, tau, 2);
                assert!(diff.is_zero(), "({sigma:?}) vs ({tau:?}): {diff:?}");
            }
        }
    }

    #[test]
    fn all_orders_agree_with_deterministic_normalization() {
        let bodies = vec![
            PlanarTree::new(
                1,
                vec![
                    PSlot::Branch(vec![2, 0], xi_body()),
                    PSlot::X(0),
                    PSlot::X(0),
                ],
            ),
            PlanarTree::new(
                0,
                vec![
                    PSlot::Branch(vec![1, 0], xi_body()),
                    PSlot::Branch(vec![0, 1], xi_body()),
                    PSlot::X(0),
                    PSlot::X(1),
                ],
            ),
            PlanarTree::new(
                1,
                vec![PSlot::Branch(
                    vec![1, 1],
                    PlanarTree::new(1, vec![PSlot::Branch(vec![1, 0], xi_body()), PSlot::X(0)]),
                )],
            ),
        ];
        for body in &bodies {
            assert_eq!(
                normalize_all_orders(body, 2),
                planar_normalize(body, 2),
                "on {body:?}"
            );
        }
    }

    #[test]
    fn noise_prefix_survives_insertion() {
        let body = PlanarTree::new(2, vec![PSlot::X(0)]);
        let got = left_graft_body(&PSlot::X(1), &body);
        assert_eq!(
            got,
            LinComb::single(PlanarTree::new(2, vec![PSlot::X(1), PSlot::X(0)]))
        );
    }
}
