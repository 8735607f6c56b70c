//! The dictionary between zero-edge-decorated trees and multi-indices.
//!
//! A tree `τ = Ξ ∏ⱼ X^{ℓⱼ} ∏ᵢ I(τᵢ)` ([`crate::tree::T0Tree`]) maps to the
//! monomial
//!
//! ```text
//! Ψ(τ) = (k₁+k₂)! z_{k₁+k₂} ∏ⱼ (ℓⱼ!) z_{ℓⱼ} ∏ᵢ Ψ(τᵢ)
//! ```
//!
//! where `k₁` counts the monomial factors and `k₂` the children of the root.
//! The recursion needs no base case: a leaf has `k₁ = k₂ = 0` and yields
//! `z₀`. Planted trees extend it to coefficiented derivations by
//! `Ψ̂(I_a(σ)) = Ψ(σ) D⁽ᵃ⁾ / a!` and `Ψ̂(Xᵢ) = ∂ᵢ`; this is a post-Lie
//! morphism onto the multi-index side, and it extends word-by-word to the
//! envelopes ([`psi_hat_env`]).

use crate::dec::{self, DecVec};
use crate::envelope::{EnvElem, EnvWord, Gen, PostLie};
use crate::graft::{t0_deformed_graft, t0_up};
use crate::lincomb::{rat_u128, LinComb};
use crate::multiindex::{DerivGen, MIMonomial, Var};
use crate::tree::T0Tree;
use num::BigRational;

/// `Ψ(τ)`: a single scalar multiple of a single monomial by construction.
pub fn psi(t: &T0Tree) -> LinComb<MIMonomial> {
    let (c, m) = psi_term(t);
    LinComb::with_coef(m, c)
}

fn psi_term(t: &T0Tree) -> (BigRational, MIMonomial) {
    let k = (t.monomials.len() + t.children.len()) as u64;
    let mut coef = rat_u128(fact_u64(k));
    let mut mono = MIMonomial::var(Var::Arity(k));
    for l in &t.monomials {
        coef *= rat_u128(dec::factorial(l));
        mono = mono.times(&Var::Mono(l.clone()));
    }
    for c in &t.children {
        let (cc, cm) = psi_term(c);
        coef *= cc;
        mono = mono.mul(&cm);
    }
    (coef, mono)
}

fn fact_u64(k: u64) -> u128 {
    (1..=k as u128).product()
}

/// `Ψ̂(I_a(σ)) = Ψ(σ) D⁽ᵃ⁾ / a!` as a one-term combination.
pub fn psi_hat_planted(a: &DecVec, sigma: &T0Tree) -> LinComb<DerivGen> {
    let (c, m) = psi_term(sigma);
    LinComb::with_coef(DerivGen::new(m, a.clone()), c / rat_u128(dec::factorial(a)))
}

/// A planted zero-edge-decorated tree `I_a(τ)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct T0Planted {
    pub a: DecVec,
    pub tree: T0Tree,
}

/// The post-Lie algebra of planted zero-edge-decorated trees: the source of
/// the dictionary. Same shape as the decorated-tree instance, with grafting
/// replaced by its zero-edge-decoration form.
#[derive(Clone, Debug)]
pub struct T0PostLie {
    pub width: usize,
}

impl T0PostLie {
    pub fn new(width: usize) -> Self {
        assert!(width >= 1);
        T0PostLie { width }
    }
}

impl PostLie for T0PostLie {
    type Ab = T0Planted;

    fn width(&self) -> usize {
        self.width
    }

    fn post_x_ab(&self, i: usize, t: &T0Planted) -> LinComb<T0Planted> {
        t0_up(i, self.width, &t.tree).map_basis(|u| T0Planted {
            a: t.a.clone(),
            tree: u.clone(),
        })
    }

    fn post_ab_ab(&self, s: &T0Planted, t: &T0Planted) -> LinComb<T0Planted> {
        t0_deformed_graft(&s.tree, &s.a, &t.tree).map_basis(|u| T0Planted {
            a: t.a.clone(),
            tree: u.clone(),
        })
    }

    fn bracket0_ab_x(&self, t: &T0Planted, i: usize) -> LinComb<T0Planted> {
        match dec::checked_sub(&t.a, &dec::unit(self.width, i)) {
            Some(a) => LinComb::single(T0Planted {
                a,
                tree: t.tree.clone(),
            }),
            None => LinComb::zero(),
        }
    }
}

/// `Ψ̂` on generators: `Xᵢ ↦ ∂ᵢ`, `I_a(σ) ↦ Ψ(σ)D⁽ᵃ⁾/a!`.
pub fn psi_hat_gen(g: &Gen<T0Planted>) -> LinComb<Gen<DerivGen>> {
    match g {
        Gen::X(i) => LinComb::single(Gen::X(*i)),
        Gen::Ab(p) => psi_hat_planted(&p.a, &p.tree).map_basis(|d| Gen::Ab(d.clone())),
    }
}

/// `Ψ̂` on envelopes, word by word: `X^m t₁⋯tₙ ↦ ∂^m Ψ̂(t₁)⋯Ψ̂(tₙ)`. Each
/// planted factor maps to a single derivation, so PBW words map to PBW words
/// with a rational coefficient and no renormalisation is needed.
pub fn psi_hat_env(a: &EnvElem<T0Planted>) -> EnvElem<DerivGen> {
    let mut out = LinComb::zero();
    for (w, c) in a.terms() {
        let mut coef = c.clone();
        let mut factors = Vec::with_capacity(w.factors.len());
        for p in &w.factors {
            let image = psi_hat_planted(&p.a, &p.tree);
            let (d, dc) = image
                .terms()
                .next()
                .expect("planted image is a single term");
            coef *= dc;
            factors.push(d.clone());
        }
        factors.sort();
        out.add_term(
            EnvWord {
                x: w.x.clone(),
                factors,
            },
            coef,
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::{check_post_lie, post_gen};
    use crate::lincomb::{rat, ratio};
    use crate::multiindex::MIPostLie;
    use crate::tree::T0Tree;

    fn leaf() -> T0Tree {
        T0Tree::xi(2)
    }

    fn t0(monomials: Vec<Vec<u32>>, children: Vec<T0Tree>) -> T0Tree {
        T0Tree::node_w(2, monomials, children)
    }

    fn za(k: u64) -> Var {
        Var::Arity(k)
    }

    fn zm(n: Vec<u32>) -> Var {
        Var::Mono(n)
    }

    fn mono(vars: Vec<Var>) -> MIMonomial {
        let mut m = MIMonomial::one();
        for v in vars {
            m = m.times(&v);
        }
        m
    }

    #[test]
    fn psi_of_leaf_is_z0() {
        assert_eq!(psi(&leaf()), LinComb::single(mono(vec![za(0)])));
    }

    #[test]
    fn psi_of_monomial_node() {
        // Ψ(Ξ X^ℓ) = ℓ! z₁ z_ℓ with ℓ = (2,0).
        let t = t0(vec![vec![2, 0]], vec![]);
        assert_eq!(
            psi(&t),
            LinComb::with_coef(mono(vec![za(1), zm(vec![2, 0])]), rat(2))
        );
    }

    #[test]
    fn psi_of_unary_node() {
        // Ψ(Ξ I(Ξ)) = z₁ z₀.
        let t = t0(vec![], vec![leaf()]);
        assert_eq!(psi(&t), LinComb::single(mono(vec![za(1), za(0)])));
    }

    #[test]
    fn psi_of_cherry_counts_symmetry() {
        // Ψ(Ξ I(Ξ) I(Ξ)) = 2! z₂ z₀².
        let t = t0(vec![], vec![leaf(), leaf()]);
        assert_eq!(
            psi(&t),
            LinComb::with_coef(mono(vec![za(2), za(0), za(0)]), rat(2))
        );
    }

    #[test]
    fn psi_hat_divides_by_decoration_factorial() {
        // Ψ̂(I_{(2,0)}(Ξ)) = z₀ D^{(2,0)} / 2.
        let got = psi_hat_planted(&vec![2, 0], &leaf());
        assert_eq!(
            got,
            LinComb::with_coef(DerivGen::new(mono(vec![za(0)]), vec![2, 0]), ratio(1, 2))
        );
    }

    fn psi_hat_ab(l: &LinComb<T0Planted>) -> LinComb<Gen<DerivGen>> {
        l.flat_map(|p| psi_hat_gen(&Gen::Ab(p.clone())))
    }

    #[test]
    fn morphism_intertwines_up_with_partial() {
        // Ψ̂(Xᵢ ▷̂ I_a(σ)) = ∂ᵢ ▷̂ Ψ̂(I_a(σ)) on a small family.
        let src = T0PostLie::new(2);
        let dst = MIPostLie::new(2);
        let sigmas = vec![
            leaf(),
            t0(vec![vec![1, 0]], vec![]),
            t0(vec![], vec![leaf()]),
            t0(vec![vec![0, 1], vec![0, 1]], vec![leaf()]),
        ];
        for sigma in &sigmas {
            for a in [vec![0, 0], vec![1, 0]] {
                for i in 0..2 {
                    let p = T0Planted {
                        a: a.clone(),
                        tree: sigma.clone(),
                    };
                    let lhs = psi_hat_ab(&src.post_x_ab(i, &p));
                    let rhs = psi_hat_gen(&Gen::Ab(p)).flat_map(|g| post_gen(&dst, &Gen::X(i), g));
                    assert_eq!(lhs, rhs, "σ = {sigma:?}, a = {a:?}, i = {i}");
                }
            }
        }
    }

    #[test]
    fn morphism_intertwines_bracket() {
        // Ψ̂([I_a(σ), Xᵢ]₀) = [Ψ̂(I_a(σ)), ∂ᵢ]₀, including the vanishing side.
        let src = T0PostLie::new(2);
        let dst = MIPostLie::new(2);
        let sigma = t0(vec![vec![1, 1]], vec![leaf()]);
        for a in [vec![0, 0], vec![1, 0], vec![2, 1]] {
            for i in 0..2 {
                let p = T0Planted {
                    a: a.clone(),
                    tree: sigma.clone(),
                };
                let lhs = psi_hat_ab(&src.bracket0_ab_x(&p, i));
                let image = psi_hat_gen(&Gen::Ab(p));
                let rhs = image.flat_map(|g| match g {
                    Gen::Ab(d) => dst.bracket0_ab_x(d, i).map_basis(|u| Gen::Ab(u.clone())),
                    Gen::X(_) => unreachable!(),
                });
                assert_eq!(lhs, rhs, "a = {a:?}, i = {i}");
            }
        }
    }

    #[test]
    fn morphism_intertwines_grafting() {
        // Ψ̂(I_a(σ) ▷̂ I_b(τ)) = Ψ̂(I_a(σ)) ▶ Ψ̂(I_b(τ)).
        let src = T0PostLie::new(2);
        let dst = MIPostLie::new(2);
        let sigmas = vec![leaf(), t0(vec![vec![1, 0]], vec![])];
        // τ carries two X^{(1,0)} copies so the removal multiplicity matters.
        let taus = vec![
            t0(vec![vec![1, 0], vec![1, 0]], vec![]),
            t0(vec![vec![1, 0]], vec![t0(vec![vec![1, 0]], vec![])]),
            leaf(),
        ];
        for sigma in &sigmas {
            for tau in &taus {
                for a in [vec![0, 0], vec![1, 0]] {
                    let s = T0Planted {
                        a: a.clone(),
                        tree: sigma.clone(),
                    };
                    let t = T0Planted {
                        a: vec![0, 1],
                        tree: tau.clone(),
                    };
                    let lhs = psi_hat_ab(&src.post_ab_ab(&s, &t));
                    let si = psi_hat_gen(&Gen::Ab(s));
                    let ti = psi_hat_gen(&Gen::Ab(t));
                    let mut rhs = LinComb::zero();
                    for (gs, cs) in si.terms() {
                        for (gt, ct) in ti.terms() {
                            rhs.add_assign(&post_gen(&dst, gs, gt).scale(&(cs * ct)));
                        }
                    }
                    assert_eq!(lhs, rhs, "σ = {sigma:?}, τ = {tau:?}, a = {a:?}");
                }
            }
        }
    }

    #[test]
    fn envelope_image_multiplies_factor_coefficients() {
        let p1 = T0Planted {
            a: vec![2, 0],
            tree: leaf(),
        };
        let p2 = T0Planted {
            a: vec![0, 0],
            tree: t0(vec![], vec![leaf(), leaf()]),
        };
        let word = EnvWord {
            x: vec![1, 0],
            factors: vec![p1, p2],
        };
        let got = psi_hat_env(&LinComb::single(word));
        // Coefficients: 1/2 from a! = 2, and 2 from the cherry symmetry.
        let d1 = DerivGen::new(mono(vec![za(0)]), vec![2, 0]);
        let d2 = DerivGen::new(mono(vec![za(2), za(0), za(0)]), vec![0, 0]);
        let mut factors = vec![d1, d2];
        factors.sort();
        assert_eq!(
            got,
            LinComb::with_coef(
                EnvWord {
                    x: vec![1, 0],
                    factors
                },
                rat(1)
            )
        );
    }

    #[test]
    fn source_satisfies_post_lie_axioms_on_samples() {
        let alg = T0PostLie::new(2);
        let gens: Vec<Gen<T0Planted>> = vec![
            Gen::X(0),
            Gen::Ab(T0Planted {
                a: vec![1, 0],
                tree: leaf(),
            }),
            Gen::Ab(T0Planted {
                a: vec![0, 0],
                tree: t0(vec![vec![1, 0]], vec![]),
            }),
        ];
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    assert!(
                        check_post_lie(&alg, x, y, z).pass(),
                        "({x:?}, {y:?}, {z:?})"
                    );
                }
            }
        }
    }
}
