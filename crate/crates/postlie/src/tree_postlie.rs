//! The post-Lie algebra of decorated trees.
//!
//! Abelian generators are planted trees `I_a(τ)` ([`PlantedGen`]); the X sort
//! is the coordinate polynomials `Xᵢ`. The defining operations:
//!
//! - `Xᵢ ▷̂ I_a(τ) = I_a(↑ⁱ τ)` (raise the decoration of one vertex of τ);
//! - `I_a(σ) ▷̂ I_b(τ) = I_b(σ ↷̂ᵃ τ)` (deformed grafting inside the plant);
//! - `[I_a(τ), Xᵢ]₀ = I_{a−eᵢ}(τ)`, zero when `aᵢ = 0`;
//! - everything else vanishes by sort.
//!
//! [`star2`] is the companion action of an envelope word `X^k t₁⋯tₙ` on an
//! unplanted tree: graft the abelian factors onto a marked copy by the word
//! action, then distribute `k` as decoration increments over the marked
//! (original) vertices. [`verify_identification`] checks it against the
//! envelope action on the planted tree.

use crate::dec::{self, DecVec};
use crate::envelope::{post_word_gen, EnvWord, Gen, PostLie};
use crate::graft::{deformed_graft, up, up_multi};
use crate::lincomb::LinComb;
use crate::tree::{planted, DecoratedTree};

/// A planted tree `I_a(τ)`: a single edge decorated `a` into the root of τ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PlantedGen {
    pub a: DecVec,
    pub tree: DecoratedTree,
}

impl PlantedGen {
    pub fn new(a: DecVec, tree: DecoratedTree) -> Self {
        assert_eq!(a.len(), tree.width(), "decoration width mismatch");
        PlantedGen { a, tree }
    }

    /// The planted tree as an element of the unplanted family.
    pub fn as_tree(&self) -> DecoratedTree {
        planted(self.a.clone(), self.tree.clone())
    }
}

/// The decorated-tree post-Lie algebra in dimension `width`.
#[derive(Clone, Debug)]
pub struct TreePostLie {
    pub width: usize,
}

impl TreePostLie {
    pub fn new(width: usize) -> Self {
        assert!(width >= 1);
        TreePostLie { width }
    }
}

impl PostLie for TreePostLie {
    type Ab = PlantedGen;

    fn width(&self) -> usize {
        self.width
    }

    fn post_x_ab(&self, i: usize, t: &PlantedGen) -> LinComb<PlantedGen> {
        up(i, &t.tree).map_basis(|u| PlantedGen {
            a: t.a.clone(),
            tree: u.clone(),
        })
    }

    fn post_ab_ab(&self, s: &PlantedGen, t: &PlantedGen) -> LinComb<PlantedGen> {
        deformed_graft(&s.tree, &s.a, &t.tree).map_basis(|u| PlantedGen {
            a: t.a.clone(),
            tree: u.clone(),
        })
    }

    fn bracket0_ab_x(&self, t: &PlantedGen, i: usize) -> LinComb<PlantedGen> {
        match dec::checked_sub(&t.a, &dec::unit(t.a.len(), i)) {
            Some(a) => LinComb::single(PlantedGen {
                a,
                tree: t.tree.clone(),
            }),
            None => LinComb::zero(),
        }
    }
}

/// The action of an envelope word on an *unplanted* tree: the abelian factors
/// graft onto a marked copy of τ wrapped as `I_b(τ)` (so only original
/// vertices stay marked through the recursion), then the X exponents `k`
/// distribute as decoration increments over the marked vertices.
pub fn star2(
    alg: &TreePostLie,
    sigma: &EnvWord<PlantedGen>,
    tau: &DecoratedTree,
    b: &DecVec,
) -> LinComb<DecoratedTree> {
    let marked = tau.mark_all();
    let factors_only = EnvWord {
        x: dec::zero(alg.width),
        factors: sigma.factors.clone(),
    };
    let target = Gen::Ab(PlantedGen {
        a: b.clone(),
        tree: marked,
    });
    let grafted = post_word_gen(alg, &factors_only, &target);
    let mut out = LinComb::zero();
    for (g, c) in grafted.terms() {
        let t = match g {
            Gen::Ab(p) => {
                // Grafting into the plant never touches the plant decoration.
                assert_eq!(&p.a, b, "plant decoration changed under grafting");
                &p.tree
            }
            Gen::X(_) => unreachable!("word action on an abelian generator stays abelian"),
        };
        out.add_assign(&up_multi(&sigma.x, t).scale(c));
    }
    out.map_basis(|t| t.unmark_all())
}

/// The difference `I_b(σ ⋆₂ τ) − σ ▷̂ I_b(τ)` as envelope-side generator
/// combinations; zero iff the two actions agree on this input.
pub fn verify_identification(
    alg: &TreePostLie,
    sigma: &EnvWord<PlantedGen>,
    tau: &DecoratedTree,
    b: &DecVec,
) -> LinComb<Gen<PlantedGen>> {
    let lhs: LinComb<Gen<PlantedGen>> = star2(alg, sigma, tau, b).map_basis(|t| {
        Gen::Ab(PlantedGen {
            a: b.clone(),
            tree: t.clone(),
        })
    });
    let rhs = post_word_gen(
        alg,
        sigma,
        &Gen::Ab(PlantedGen {
            a: b.clone(),
            tree: tau.clone(),
        }),
    );
    &lhs - &rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::{bracket0_gen, env_of_gen, normal_form, star};
    use crate::lincomb::rat;
    use crate::tree::{DecoratedTree, EdgeDec};

    fn xi() -> DecoratedTree {
        DecoratedTree::xi(2)
    }

    fn plant(a: Vec<u32>, t: DecoratedTree) -> PlantedGen {
        PlantedGen::new(a, t)
    }

    #[test]
    fn x_post_plants_via_up() {
        // Xᵢ ▷̂ I_a(Ξ) = I_a(X^{eᵢ} Ξ).
        let alg = TreePostLie::new(2);
        let got = alg.post_x_ab(1, &plant(vec![1, 0], xi()));
        let mut raised = xi();
        raised.dec = vec![0, 1];
        assert_eq!(got, LinComb::single(plant(vec![1, 0], raised)));
    }

    #[test]
    fn plant_post_plant_is_deformed_graft_inside() {
        let alg = TreePostLie::new(2);
        let sigma = plant(vec![1, 0], xi());
        let tau = plant(vec![0, 1], xi());
        let got = alg.post_ab_ab(&sigma, &tau);
        // Ξ ↷̂^{(1,0)} Ξ has a single term: Ξ with a Kernel((1,0)) child Ξ.
        let grafted = DecoratedTree::node(
            vec![0, 0],
            vec![
                (EdgeDec::Noise, DecoratedTree::one(2)),
                (EdgeDec::Kernel(vec![1, 0]), xi()),
            ],
        );
        assert_eq!(got, LinComb::single(plant(vec![0, 1], grafted)));
    }

    #[test]
    fn bracket_lowers_plant_decoration() {
        let alg = TreePostLie::new(2);
        let t = plant(vec![1, 1], xi());
        assert_eq!(
            alg.bracket0_ab_x(&t, 0),
            LinComb::single(plant(vec![0, 1], xi()))
        );
        let zero_dec = plant(vec![0, 1], xi());
        assert!(alg.bracket0_ab_x(&zero_dec, 0).is_zero());
        // Antisymmetric extension on generators.
        let g = bracket0_gen(&alg, &Gen::X(0), &Gen::Ab(t));
        assert_eq!(
            g,
            LinComb::with_coef(Gen::Ab(plant(vec![0, 1], xi())), rat(-1))
        );
    }

    #[test]
    fn x_on_x_and_plant_on_x_vanish() {
        let alg = TreePostLie::new(2);
        let x0: Gen<PlantedGen> = Gen::X(0);
        let x1: Gen<PlantedGen> = Gen::X(1);
        assert!(crate::envelope::post_gen(&alg, &x0, &x1).is_zero());
        let p = Gen::Ab(plant(vec![0, 0], xi()));
        assert!(crate::envelope::post_gen(&alg, &p, &x0).is_zero());
    }

    #[test]
    fn normal_form_moves_x_past_plant() {
        // I_{(1,0)}(Ξ) · X₀ = X₀ · I_{(1,0)}(Ξ) + I_{(0,0)}(Ξ).
        let alg = TreePostLie::new(2);
        let p = plant(vec![1, 0], xi());
        let got = normal_form(&alg, &[Gen::Ab(p.clone()), Gen::X(0)]);
        let mut expected = LinComb::single(EnvWord {
            x: vec![1, 0],
            factors: vec![p],
        });
        expected.add_term(
            EnvWord {
                x: vec![0, 0],
                factors: vec![plant(vec![0, 0], xi())],
            },
            rat(1),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn star_of_x_with_plant() {
        // X₀ * I_a(τ) = X₀·I_a(τ) + I_a(↑⁰ τ).
        let alg = TreePostLie::new(2);
        let p = plant(vec![0, 1], xi());
        let got = star(
            &alg,
            &env_of_gen(2, &Gen::X(0)),
            &env_of_gen(2, &Gen::Ab(p.clone())),
        );
        let mut raised = xi();
        raised.dec = vec![1, 0];
        let mut expected = LinComb::single(EnvWord {
            x: vec![1, 0],
            factors: vec![p],
        });
        expected.add_term(
            EnvWord {
                x: vec![0, 0],
                factors: vec![plant(vec![0, 1], raised)],
            },
            rat(1),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn star2_of_single_x_is_up() {
        let alg = TreePostLie::new(2);
        let tau = DecoratedTree::node(
            vec![0, 0],
            vec![(EdgeDec::Kernel(vec![1, 0]), DecoratedTree::one(2))],
        );
        let sigma = EnvWord::<PlantedGen> {
            x: vec![1, 0],
            factors: vec![],
        };
        let got = star2(&alg, &sigma, &tau, &vec![0, 0]);
        assert_eq!(got, up(0, &tau));
    }

    #[test]
    fn star2_of_single_plant_is_deformed_graft() {
        let alg = TreePostLie::new(2);
        let tau = DecoratedTree::node(
            vec![1, 0],
            vec![(EdgeDec::Kernel(vec![0, 1]), DecoratedTree::one(2))],
        );
        let p = plant(vec![1, 0], xi());
        let sigma = EnvWord {
            x: vec![0, 0],
            factors: vec![p],
        };
        let got = star2(&alg, &sigma, &tau, &vec![0, 1]);
        assert_eq!(got, deformed_graft(&xi(), &vec![1, 0], &tau));
    }

    #[test]
    fn star2_of_unit_is_identity() {
        let alg = TreePostLie::new(2);
        let tau = xi();
        let sigma = EnvWord::<PlantedGen>::one(2);
        assert_eq!(star2(&alg, &sigma, &tau, &vec![0, 0]), LinComb::single(tau));
    }

    #[test]
    fn identification_on_word_cases() {
        let alg = TreePostLie::new(2);
        let tau = DecoratedTree::node(
            vec![0, 0],
            vec![(EdgeDec::Kernel(vec![1, 0]), DecoratedTree::one(2))],
        );
        let p = plant(vec![0, 1], xi());
        let cases: Vec<EnvWord<PlantedGen>> = vec![
            EnvWord::one(2),
            EnvWord {
                x: vec![1, 0],
                factors: vec![],
            },
            EnvWord {
                x: vec![0, 0],
                factors: vec![p.clone()],
            },
            EnvWord {
                x: vec![1, 1],
                factors: vec![p.clone()],
            },
            EnvWord {
                x: vec![0, 1],
                factors: vec![p.clone(), p.clone()],
            },
        ];
        for sigma in cases {
            let diff = verify_identification(&alg, &sigma, &tau, &vec![1, 0]);
            assert!(
                diff.is_zero(),
                "identification fails on {sigma:?}: {diff:?}"
            );
        }
    }

    #[test]
    fn post_lie_axioms_on_small_generator_triples() {
        let alg = TreePostLie::new(2);
        let gens: Vec<Gen<PlantedGen>> = vec![
            Gen::X(0),
            Gen::X(1),
            Gen::Ab(plant(vec![1, 0], xi())),
            Gen::Ab(plant(vec![0, 1], DecoratedTree::x_pow(vec![1, 0]))),
        ];
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    let check = crate::envelope::check_post_lie(&alg, x, y, z);
                    assert!(check.pass(), "axioms fail on ({x:?}, {y:?}, {z:?})");
                }
            }
        }
    }
}
