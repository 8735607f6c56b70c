//! Deterministic enumeration of small algebra elements.
//!
//! Every verification suite sweeps a finite family: decorated trees up to an
//! edge budget, planted generators, monomial-decorated trees, multi-index
//! monomials and derivation generators, and envelope words over a generator
//! list. This module builds those families in a canonical, duplicate-free,
//! deterministic order, so identical [`EnumParams`] always produce identical
//! families (and identical suite reports).
//!
//! Exhaustive tuple sweeps over a family grow multiplicatively, so suites
//! combine a full sweep under a *combined* size budget with a seeded random
//! sample from the full per-element-bounded family; [`EnumParams::rng`]
//! hands out the reproducible generator.

use crate::dec::DecVec;
use crate::envelope::{EnvWord, Gen};
use crate::multiindex::{DerivGen, MIMonomial, Var};
use crate::tree::{DecoratedTree, EdgeDec, T0Tree};
use crate::tree_postlie::PlantedGen;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Bounds for all enumerated families plus the sampling seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumParams {
    /// Spatial dimension; decoration vectors have `d + 1` components.
    pub d: usize,
    /// Edge budget per decorated tree (and size budget per monomial tree).
    pub max_edges: usize,
    /// Componentwise bound on node and edge decorations.
    pub max_dec: u32,
    /// Noise edges allowed per node.
    pub max_noise: usize,
    /// Largest arity label `k` for the variables `z_k`.
    pub max_arity: u64,
    /// Monomial factors allowed per node of a monomial-decorated tree.
    pub max_support: usize,
    /// Seed for the sampled portion of each suite.
    pub seed: u64,
}

impl Default for EnumParams {
    fn default() -> Self {
        EnumParams {
            d: 1,
            max_edges: 3,
            max_dec: 1,
            max_noise: 1,
            max_arity: 3,
            max_support: 2,
            seed: 0,
        }
    }
}

impl EnumParams {
    pub fn width(&self) -> usize {
        self.d + 1
    }

    /// The reproducible generator used for sampled sweeps.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// All decoration vectors of the given width with components `≤ max_dec`,
/// in lexicographic order (the zero vector first).
pub fn all_decs(width: usize, max_dec: u32) -> Vec<DecVec> {
    let mut out = vec![vec![0u32; width]];
    for i in 0..width {
        let prev = std::mem::take(&mut out);
        for v in prev {
            for c in 0..=max_dec {
                let mut w = v.clone();
                w[i] = c;
                out.push(w);
            }
        }
    }
    out.sort();
    out
}

/// [`all_decs`] without the zero vector.
pub fn nonzero_decs(width: usize, max_dec: u32) -> Vec<DecVec> {
    all_decs(width, max_dec)
        .into_iter()
        .filter(|v| v.iter().any(|&c| c > 0))
        .collect()
}

/// Multisets of `items` (chosen by index, repetitions allowed) whose summed
/// `cost` stays within `budget`; `f` receives each multiset, including the
/// empty one.
fn for_multisets<T>(
    items: &[T],
    cost: impl Fn(&T) -> usize + Copy,
    budget: usize,
    max_size: usize,
    f: &mut impl FnMut(&[&T]),
) {
    fn rec<'a, T>(
        items: &'a [T],
        cost: impl Fn(&T) -> usize + Copy,
        budget: usize,
        max_size: usize,
        start: usize,
        cur: &mut Vec<&'a T>,
        f: &mut impl FnMut(&[&T]),
    ) {
        f(cur);
        if cur.len() == max_size {
            return;
        }
        for j in start..items.len() {
            let c = cost(&items[j]);
            if c <= budget {
                cur.push(&items[j]);
                rec(items, cost, budget - c, max_size, j, cur, f);
                cur.pop();
            }
        }
    }
    rec(items, cost, budget, max_size, 0, &mut Vec::new(), f);
}

/// All canonical decorated trees within the bounds, grouped by exact edge
/// count: `result[e]` holds the trees with `e` edges, sorted.
pub fn trees_by_edges(p: &EnumParams) -> Vec<Vec<DecoratedTree>> {
    let width = p.width();
    let decs = all_decs(width, p.max_dec);
    // upto holds every in-bounds tree with ≤ b edges after pass b.
    let mut upto: BTreeSet<DecoratedTree> = decs
        .iter()
        .map(|r| DecoratedTree::node(r.clone(), Vec::new()))
        .collect();
    for b in 1..=p.max_edges {
        let pool: Vec<DecoratedTree> = upto.iter().cloned().collect();
        let items: Vec<(DecVec, DecoratedTree)> = decs
            .iter()
            .flat_map(|a| pool.iter().map(move |t| (a.clone(), t.clone())))
            .collect();
        let mut next = upto.clone();
        for root in &decs {
            for noise in 0..=p.max_noise.min(b) {
                let noise_children: Vec<(EdgeDec, DecoratedTree)> = (0..noise)
                    .map(|_| (EdgeDec::Noise, DecoratedTree::one(width)))
                    .collect();
                for_multisets(
                    &items,
                    |(_, t)| 1 + t.edges(),
                    b - noise,
                    usize::MAX,
                    &mut |kids| {
                        let mut children = noise_children.clone();
                        children.extend(
                            kids.iter()
                                .map(|(a, t)| (EdgeDec::Kernel(a.clone()), t.clone())),
                        );
                        next.insert(DecoratedTree::node(root.clone(), children));
                    },
                );
            }
        }
        upto = next;
    }
    let mut grouped = vec![Vec::new(); p.max_edges + 1];
    for t in upto {
        let e = t.edges();
        if e <= p.max_edges {
            grouped[e].push(t);
        }
    }
    grouped
}

/// All canonical decorated trees within the bounds, flattened in
/// (edge count, canonical order).
pub fn enumerate_trees(p: &EnumParams) -> Vec<DecoratedTree> {
    trees_by_edges(p).into_iter().flatten().collect()
}

/// Planted generators `I_a(τ)` grouped by the edge count of `τ`.
pub fn planted_by_edges(p: &EnumParams) -> Vec<Vec<PlantedGen>> {
    let decs = all_decs(p.width(), p.max_dec);
    trees_by_edges(p)
        .into_iter()
        .map(|group| {
            group
                .iter()
                .flat_map(|t| {
                    decs.iter()
                        .map(move |a| PlantedGen::new(a.clone(), t.clone()))
                })
                .collect()
        })
        .collect()
}

/// The generators `X₀ … X_{width−1}` of the non-abelian sort.
pub fn x_gens<A: Ord + Clone>(width: usize) -> Vec<Gen<A>> {
    (0..width).map(Gen::X).collect()
}

/// Monomial-decorated trees grouped by size, where the size of a tree is its
/// root monomial-factor count plus `1 + size(child)` per child. Factors per
/// node are bounded by `max_support`, factor exponents by `max_dec`.
pub fn t0_by_size(p: &EnumParams) -> Vec<Vec<T0Tree>> {
    let width = p.width();
    let factors = nonzero_decs(width, p.max_dec);
    let mut upto: BTreeSet<T0Tree> = [T0Tree::xi(width)].into_iter().collect();
    for b in 1..=p.max_edges {
        let pool: Vec<T0Tree> = upto.iter().cloned().collect();
        let mut next = upto.clone();
        for_multisets(&factors, |_| 1, b, p.max_support, &mut |monos| {
            let used: usize = monos.len();
            let mono_vec: Vec<DecVec> = monos.iter().map(|m| (*m).clone()).collect();
            for_multisets(&pool, |t| 1 + t.size(), b - used, usize::MAX, &mut |kids| {
                let children: Vec<T0Tree> = kids.iter().map(|t| (*t).clone()).collect();
                next.insert(T0Tree::node_w(width, mono_vec.clone(), children));
            });
        });
        upto = next;
    }
    let mut grouped = vec![Vec::new(); p.max_edges + 1];
    for t in upto {
        let s = t.size();
        if s <= p.max_edges {
            grouped[s].push(t);
        }
    }
    grouped
}

/// The multi-index variables within bounds: arity variables `z_k` for
/// `k ≤ max_arity` and monomial variables `z_n` for nonzero `n` with
/// components `≤ label_bound`.
pub fn mi_vars(width: usize, max_arity: u64, label_bound: u32) -> Vec<Var> {
    let mut out: Vec<Var> = (0..=max_arity).map(Var::Arity).collect();
    out.extend(nonzero_decs(width, label_bound).into_iter().map(Var::Mono));
    out.sort();
    out
}

/// All monomials of total degree `≤ max_degree` over the given variables,
/// the constant monomial first.
pub fn mi_monomials(vars: &[Var], max_degree: usize) -> Vec<MIMonomial> {
    let mut out = Vec::new();
    for_multisets(vars, |_| 1, max_degree, usize::MAX, &mut |picked| {
        let mut m = MIMonomial::one();
        for v in picked {
            m = m.times(v);
        }
        out.push(m);
    });
    out.sort();
    out.dedup();
    out
}

/// Derivation generators within bounds: `∂ᵢ` plus `z^γ D⁽ⁿ⁾` with `γ` of
/// degree `≤ 1` over the in-bounds variables and `n` componentwise
/// `≤ max_dec`.
pub fn mi_gens(p: &EnumParams) -> Vec<Gen<DerivGen>> {
    let width = p.width();
    let mut out: Vec<Gen<DerivGen>> = x_gens(width);
    let coefs = mi_monomials(&mi_vars(width, p.max_arity, p.max_dec), 1);
    for n in all_decs(width, p.max_dec) {
        for coef in &coefs {
            out.push(Gen::Ab(DerivGen::new(coef.clone(), n.clone())));
        }
    }
    out
}

/// All envelope words of length `≤ max_len` over the given generators
/// (length counts the `X` exponent plus the factor count).
pub fn words_over<A: Ord + Clone>(
    gens: &[Gen<A>],
    width: usize,
    max_len: usize,
) -> Vec<EnvWord<A>> {
    let mut seen = BTreeSet::new();
    for_multisets(gens, |_| 1, max_len, usize::MAX, &mut |picked| {
        let mut w = EnvWord::<A>::one(width);
        for g in picked {
            match g {
                Gen::X(i) => w.x[*i] += 1,
                Gen::Ab(a) => w.factors.push(a.clone()),
            }
        }
        w.factors.sort();
        seen.insert(w);
    });
    seen.into_iter().collect()
}
