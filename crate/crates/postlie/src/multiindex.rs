//! Multi-index derivations: the polynomial ring ℚ[z_k, z_n] and the
//! coefficiented derivations `z^γ D⁽ⁿ⁾` and `∂ᵢ` acting on it.
//!
//! Variables come in two kinds ([`Var`]): arity variables `z_k`, `k ∈ ℕ`, and
//! monomial variables `z_n`, `n ∈ ℕ^{d+1} ∖ {0}`. The basic derivations are
//!
//! - `D⁽⁰⁾ = Σ_k (k+1) z_{k+1} ∂_{z_k}` (shift on arity variables),
//! - `D⁽ⁿ⁾ = ∂_{z_n}` for `n ≠ 0`,
//! - `∂ᵢ = Σ_n (nᵢ+1) z_{n+eᵢ} D⁽ⁿ⁾`, the sum including the `n = 0` term.
//!
//! [`derivation_action`] applies a generator to a monomial; [`matrix_coeff`]
//! is an independent closed-form implementation of the same matrices
//! `(z^γD⁽ⁿ⁾)^γ'_β` and `(∂ᵢ)^γ_β`, kept separate so the two can be checked
//! against each other. On the span `L̃` of the `z^γD⁽ⁿ⁾` the product
//! `x ▶ y` applies `x` to the coefficient of `y` ([`mi_pre_lie`]); adjoining
//! the `∂ᵢ` with `∂ᵢ ▶̂ z^γD⁽ⁿ⁾ = (∂ᵢ z^γ)D⁽ⁿ⁾`, `z^γD⁽ⁿ⁾ ▶̂ ∂ᵢ = 0` and
//! the bracket `[z^γD⁽ⁿ⁾, ∂ᵢ]₀ = nᵢ z^γ D⁽ⁿ⁻ᵉⁱ⁾` yields the post-Lie
//! structure [`MIPostLie`]. [`mi_bracket_full`] is the commutator of the
//! derivations themselves, with outputs projected to arity grade ≥ 0.

use crate::dec::{self, DecVec};
use crate::envelope::{Gen, PostLie};
use crate::lincomb::{rat, rat_u128, LinComb};
use num::BigRational;
use num::Zero;
use std::collections::BTreeMap;

/// A polynomial variable: `Arity(k)` is `z_k`; `Mono(n)` is `z_n` for a
/// nonzero decoration `n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Var {
    Arity(u64),
    Mono(DecVec),
}

/// A monomial in the `z` variables, kept canonical: no zero exponents and no
/// `Mono(0)` variable (the zero decoration is the arity direction `z_0`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct MIMonomial {
    exps: BTreeMap<Var, u32>,
}

impl MIMonomial {
    pub fn one() -> Self {
        MIMonomial {
            exps: BTreeMap::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut m = MIMonomial::one();
        for (v, e) in pairs {
            for _ in 0..e {
                m = m.times(&v);
            }
        }
        m
    }

    /// The single variable `v`.
    pub fn var(v: Var) -> Self {
        MIMonomial::one().times(&v)
    }

    pub fn times(&self, v: &Var) -> Self {
        if let Var::Mono(n) = v {
            assert!(
                !dec::is_zero(n),
                "Mono variables carry a nonzero decoration"
            );
        }
        let mut exps = self.exps.clone();
        *exps.entry(v.clone()).or_insert(0) += 1;
        MIMonomial { exps }
    }

    pub fn try_div(&self, v: &Var) -> Option<Self> {
        let mut exps = self.exps.clone();
        match exps.get_mut(v) {
            Some(e) if *e > 1 => *e -= 1,
            Some(_) => {
                exps.remove(v);
            }
            None => return None,
        }
        Some(MIMonomial { exps })
    }

    pub fn exp(&self, v: &Var) -> u32 {
        self.exps.get(v).copied().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = (&Var, u32)> {
        self.exps.iter().map(|(v, &e)| (v, e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            *exps.entry(v.clone()).or_insert(0) += e;
        }
        MIMonomial { exps }
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.values().sum()
    }

    /// The arity grade `[γ] = Σ_k k·γ(z_k) − Σ_{n≠0} γ(z_n)`.
    pub fn arity_grade(&self) -> i64 {
        let mut g: i64 = 0;
        for (v, e) in &self.exps {
            match v {
                Var::Arity(k) => g += (*k as i64) * (*e as i64),
                Var::Mono(_) => g -= *e as i64,
            }
        }
        g
    }
}

/// A coefficiented derivation `z^γ D⁽ⁿ⁾`; `n = 0` is the arity shift `D⁽⁰⁾`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct DerivGen {
    pub coef: MIMonomial,
    pub n: DecVec,
}

impl DerivGen {
    pub fn new(coef: MIMonomial, n: DecVec) -> Self {
        DerivGen { coef, n }
    }

    /// The bare derivation `D⁽ⁿ⁾`.
    pub fn bare(n: DecVec) -> Self {
        DerivGen {
            coef: MIMonomial::one(),
            n,
        }
    }
}

/// A generator of the full derivation space: `X(i)` is `∂ᵢ`, `Ab` a
/// coefficiented `z^γD⁽ⁿ⁾`.
pub type MIGen = Gen<DerivGen>;

/// `D⁽ⁿ⁾` applied to a monomial (`n = 0` is the arity shift).
fn d_part_action(n: &DecVec, m: &MIMonomial) -> LinComb<MIMonomial> {
    let mut out = LinComb::zero();
    if dec::is_zero(n) {
        for (v, e) in m.vars() {
            if let Var::Arity(k) = v {
                let rest = m.try_div(v).expect("variable present");
                out.add_term(
                    rest.times(&Var::Arity(k + 1)),
                    rat(e as i64) * rat_u128((k + 1) as u128),
                );
            }
        }
    } else {
        let v = Var::Mono(n.clone());
        let e = m.exp(&v);
        if e > 0 {
            out.add_term(m.try_div(&v).expect("exponent checked"), rat(e as i64));
        }
    }
    out
}

/// Applies a generator derivation to a monomial. `width` is the dimension
/// d+1 of the decorations (needed to form `z_{n+eᵢ}` for `∂ᵢ`).
pub fn derivation_action(g: &MIGen, m: &MIMonomial, width: usize) -> LinComb<MIMonomial> {
    match g {
        Gen::Ab(d) => d_part_action(&d.n, m).map_basis(|u| u.mul(&d.coef)),
        Gen::X(i) => {
            let mut out = LinComb::zero();
            // n = 0 term: z_{eᵢ} D⁽⁰⁾.
            let zero = dec::zero(width);
            let ei = Var::Mono(dec::unit(width, *i));
            out.add_assign(&d_part_action(&zero, m).map_basis(|u| u.times(&ei)));
            // n ≠ 0 terms: only variables present in m contribute.
            for (v, e) in m.vars() {
                if let Var::Mono(n) = v {
                    let raised = Var::Mono(dec::add(n, &dec::unit(width, *i)));
                    let rest = m.try_div(v).expect("variable present");
                    out.add_term(
                        rest.times(&raised),
                        rat(e as i64) * rat_u128((n[*i] + 1) as u128),
                    );
                }
            }
            out
        }
    }
}

/// Closed-form matrix coefficient `(g)^γ_β`: the coefficient of `z^β` in
/// `g(z^γ)`. Independent of [`derivation_action`] by construction.
pub fn matrix_coeff(g: &MIGen, gamma: &MIMonomial, beta: &MIMonomial, width: usize) -> BigRational {
    let mut total = BigRational::zero();
    match g {
        Gen::Ab(d) => {
            if dec::is_zero(&d.n) {
                // (z^γ'D⁽⁰⁾)^γ_β = Σ_k (k+1) γ(z_k) [β = γ − ē_k + ē_{k+1} + γ'].
                for (v, e) in gamma.vars() {
                    if let Var::Arity(k) = v {
                        let candidate = gamma
                            .try_div(v)
                            .expect("variable present")
                            .times(&Var::Arity(k + 1))
                            .mul(&d.coef);
                        if &candidate == beta {
                            total += rat(e as i64) * rat_u128((k + 1) as u128);
                        }
                    }
                }
            } else {
                // (z^γ'D⁽ⁿ⁾)^γ_β = γ(z_n) [β = γ − ē_n + γ'].
                let v = Var::Mono(d.n.clone());
                let e = gamma.exp(&v);
                if e > 0 {
                    let candidate = gamma.try_div(&v).expect("exponent checked").mul(&d.coef);
                    if &candidate == beta {
                        total += rat(e as i64);
                    }
                }
            }
        }
        Gen::X(i) => {
            let ei = dec::unit(width, *i);
            // Arity part: Σ_k (k+1) γ(z_k) [β = γ − ē_k + ē_{k+1} + ē_{eᵢ}].
            for (v, e) in gamma.vars() {
                match v {
                    Var::Arity(k) => {
                        let candidate = gamma
                            .try_div(v)
                            .expect("variable present")
                            .times(&Var::Arity(k + 1))
                            .times(&Var::Mono(ei.clone()));
                        if &candidate == beta {
                            total += rat(e as i64) * rat_u128((k + 1) as u128);
                        }
                    }
                    Var::Mono(n) => {
                        // Σ_{n≠0} (nᵢ+1) γ(z_n) [β = γ − ē_n + ē_{n+eᵢ}].
                        let candidate = gamma
                            .try_div(v)
                            .expect("variable present")
                            .times(&Var::Mono(dec::add(n, &ei)));
                        if &candidate == beta {
                            total += rat(e as i64) * rat_u128((n[*i] + 1) as u128);
                        }
                    }
                }
            }
        }
    }
    total
}

/// `x ▶ y`: `x` applied to the coefficient of `y`, the derivation part of `y`
/// untouched.
pub fn mi_pre_lie(x: &DerivGen, y: &DerivGen, width: usize) -> LinComb<DerivGen> {
    derivation_action(&Gen::Ab(x.clone()), &y.coef, width).map_basis(|c| DerivGen {
        coef: c.clone(),
        n: y.n.clone(),
    })
}

/// The multi-index post-Lie algebra in dimension `width`.
#[derive(Clone, Debug)]
pub struct MIPostLie {
    pub width: usize,
}

impl MIPostLie {
    pub fn new(width: usize) -> Self {
        assert!(width >= 1);
        MIPostLie { width }
    }
}

impl PostLie for MIPostLie {
    type Ab = DerivGen;

    fn width(&self) -> usize {
        self.width
    }

    fn post_x_ab(&self, i: usize, t: &DerivGen) -> LinComb<DerivGen> {
        derivation_action(&Gen::X(i), &t.coef, self.width).map_basis(|c| DerivGen {
            coef: c.clone(),
            n: t.n.clone(),
        })
    }

    fn post_ab_ab(&self, s: &DerivGen, t: &DerivGen) -> LinComb<DerivGen> {
        mi_pre_lie(s, t, self.width)
    }

    fn bracket0_ab_x(&self, t: &DerivGen, i: usize) -> LinComb<DerivGen> {
        let ni = t.n[i];
        if ni == 0 {
            return LinComb::zero();
        }
        let lowered = dec::checked_sub(&t.n, &dec::unit(self.width, i)).expect("nᵢ ≥ 1");
        LinComb::with_coef(
            DerivGen {
                coef: t.coef.clone(),
                n: lowered,
            },
            rat_u128(ni as u128),
        )
    }
}

/// Drops every `z^β D⁽ⁿ⁾` term with arity grade `[β] < 0`.
pub fn project_nonneg(l: LinComb<Gen<DerivGen>>) -> LinComb<Gen<DerivGen>> {
    l.into_terms()
        .into_iter()
        .filter(|(g, _)| match g {
            Gen::Ab(d) => d.coef.arity_grade() >= 0,
            Gen::X(_) => true,
        })
        .collect()
}

/// The commutator of two generator derivations, expressed in the generator
/// span, with `[β] ≥ 0` projection applied to every output term:
///
/// - `[z^γD⁽ⁿ⁾, z^γ'D⁽ⁿ'⁾] = (z^γD⁽ⁿ⁾ ▶ z^γ'D⁽ⁿ'⁾) − (z^γ'D⁽ⁿ'⁾ ▶ z^γD⁽ⁿ⁾)`;
/// - `[∂ᵢ, ∂ⱼ] = 0`;
/// - `[z^γD⁽ⁿ⁾, ∂ᵢ] = nᵢ z^γD⁽ⁿ⁻ᵉⁱ⁾ − (∂ᵢ z^γ)D⁽ⁿ⁾`.
pub fn mi_bracket_full(x: &MIGen, y: &MIGen, width: usize) -> LinComb<Gen<DerivGen>> {
    let raw = match (x, y) {
        (Gen::X(_), Gen::X(_)) => LinComb::zero(),
        (Gen::Ab(s), Gen::Ab(t)) => {
            let fwd = mi_pre_lie(s, t, width).map_basis(|d| Gen::Ab(d.clone()));
            let bwd = mi_pre_lie(t, s, width).map_basis(|d| Gen::Ab(d.clone()));
            &fwd - &bwd
        }
        (Gen::Ab(t), Gen::X(i)) => bracket_deriv_partial(t, *i, width),
        (Gen::X(i), Gen::Ab(t)) => -&bracket_deriv_partial(t, *i, width),
    };
    project_nonneg(raw)
}

fn bracket_deriv_partial(t: &DerivGen, i: usize, width: usize) -> LinComb<Gen<DerivGen>> {
    let mut out = LinComb::zero();
    if t.n[i] > 0 {
        let lowered = dec::checked_sub(&t.n, &dec::unit(width, i)).expect("nᵢ ≥ 1");
        out.add_term(
            Gen::Ab(DerivGen {
                coef: t.coef.clone(),
                n: lowered,
            }),
            rat_u128(t.n[i] as u128),
        );
    }
    let correction = derivation_action(&Gen::X(i), &t.coef, width).map_basis(|c| {
        Gen::Ab(DerivGen {
            coef: c.clone(),
            n: t.n.clone(),
        })
    });
    &out - &correction
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::{bracket0_gen, check_post_lie};

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
    fn arity_shift_on_arity_variable() {
        // D⁽⁰⁾ z₁ = 2 z₂.
        let g: MIGen = Gen::Ab(DerivGen::bare(vec![0, 0]));
        let got = derivation_action(&g, &mono(vec![za(1)]), 2);
        assert_eq!(got, LinComb::with_coef(mono(vec![za(2)]), rat(2)));
    }

    #[test]
    fn bare_derivative_on_its_variable() {
        // D⁽ⁿ⁾ z_n = 1.
        let n = vec![1, 2];
        let g: MIGen = Gen::Ab(DerivGen::bare(n.clone()));
        let got = derivation_action(&g, &mono(vec![zm(n)]), 2);
        assert_eq!(got, LinComb::single(MIMonomial::one()));
    }

    #[test]
    fn partial_on_mono_variable() {
        // ∂ᵢ z_n = (nᵢ+1) z_{n+eᵢ}.
        let got = derivation_action(&Gen::X(0), &mono(vec![zm(vec![1, 0])]), 2);
        assert_eq!(got, LinComb::with_coef(mono(vec![zm(vec![2, 0])]), rat(2)));
    }

    #[test]
    fn partial_on_arity_variable() {
        // ∂ᵢ z_k = (k+1) z_{eᵢ} z_{k+1}.
        let got = derivation_action(&Gen::X(1), &mono(vec![za(0)]), 2);
        assert_eq!(got, LinComb::single(mono(vec![za(1), zm(vec![0, 1])])));
    }

    #[test]
    fn leibniz_on_products() {
        // D⁽⁰⁾(z₀ z₁) = z₁² + 2 z₀ z₂.
        let g: MIGen = Gen::Ab(DerivGen::bare(vec![0, 0]));
        let got = derivation_action(&g, &mono(vec![za(0), za(1)]), 2);
        let mut expected = LinComb::single(mono(vec![za(1), za(1)]));
        expected.add_term(mono(vec![za(0), za(2)]), rat(2));
        assert_eq!(got, expected);
    }

    #[test]
    fn matrix_examples() {
        // (D⁽⁰⁾)^{ē_{z₁}}_{ē_{z₂}} = 2 and (D⁽ⁿ⁾)^{ē_{z_n}}_𝟙 = 1.
        let d0: MIGen = Gen::Ab(DerivGen::bare(vec![0, 0]));
        assert_eq!(
            matrix_coeff(&d0, &mono(vec![za(1)]), &mono(vec![za(2)]), 2),
            rat(2)
        );
        let n = vec![0, 1];
        let dn: MIGen = Gen::Ab(DerivGen::bare(n.clone()));
        assert_eq!(
            matrix_coeff(&dn, &mono(vec![zm(n)]), &MIMonomial::one(), 2),
            rat(1)
        );
    }

    #[test]
    fn matrix_matches_action_on_samples() {
        let gens: Vec<MIGen> = vec![
            Gen::X(0),
            Gen::X(1),
            Gen::Ab(DerivGen::bare(vec![0, 0])),
            Gen::Ab(DerivGen::bare(vec![1, 0])),
            Gen::Ab(DerivGen::new(mono(vec![za(2)]), vec![0, 1])),
        ];
        let monomials = vec![
            MIMonomial::one(),
            mono(vec![za(0)]),
            mono(vec![za(1), zm(vec![1, 0])]),
            mono(vec![zm(vec![0, 1]), zm(vec![0, 1])]),
            mono(vec![za(0), za(0), zm(vec![1, 1])]),
        ];
        for g in &gens {
            for gamma in &monomials {
                let image = derivation_action(g, gamma, 2);
                for (beta, c) in image.terms() {
                    assert_eq!(&matrix_coeff(g, gamma, beta, 2), c, "{g:?} on {gamma:?}");
                }
                // And a β outside the support gives 0.
                let outside = mono(vec![za(3), za(3)]);
                assert_eq!(matrix_coeff(g, gamma, &outside, 2), image.coef(&outside),);
            }
        }
    }

    #[test]
    fn pre_lie_replaces_coefficient() {
        // D⁽ⁿ⁾ ▶ z_n D⁽ⁿ'⁾ = D⁽ⁿ'⁾.
        let n = vec![1, 0];
        let np = vec![0, 2];
        let x = DerivGen::bare(n.clone());
        let y = DerivGen::new(mono(vec![zm(n)]), np.clone());
        assert_eq!(mi_pre_lie(&x, &y, 2), LinComb::single(DerivGen::bare(np)));
    }

    #[test]
    fn partial_post_raises_coefficient() {
        // ∂ᵢ ▶̂ z_n D⁽ⁿ'⁾ = (nᵢ+1) z_{n+eᵢ} D⁽ⁿ'⁾.
        let alg = MIPostLie::new(2);
        let y = DerivGen::new(mono(vec![zm(vec![1, 0])]), vec![0, 1]);
        let got = alg.post_x_ab(0, &y);
        assert_eq!(
            got,
            LinComb::with_coef(
                DerivGen::new(mono(vec![zm(vec![2, 0])]), vec![0, 1]),
                rat(2)
            )
        );
    }

    #[test]
    fn small_bracket_lowers_derivation_label() {
        // [z^γD⁽ⁿ⁾, ∂ᵢ]₀ = nᵢ z^γ D⁽ⁿ⁻ᵉⁱ⁾.
        let alg = MIPostLie::new(2);
        let t = DerivGen::new(mono(vec![za(1)]), vec![2, 0]);
        let got = alg.bracket0_ab_x(&t, 0);
        assert_eq!(
            got,
            LinComb::with_coef(DerivGen::new(mono(vec![za(1)]), vec![1, 0]), rat(2))
        );
        assert!(alg.bracket0_ab_x(&t, 1).is_zero());
        // Antisymmetry through the generator-level bracket.
        let g = bracket0_gen(&alg, &Gen::X(0), &Gen::Ab(t.clone()));
        assert_eq!(
            g,
            LinComb::with_coef(
                Gen::Ab(DerivGen::new(mono(vec![za(1)]), vec![1, 0])),
                rat(-2)
            )
        );
    }

    #[test]
    fn full_bracket_with_partial() {
        // [z^γD⁽ⁿ⁾, ∂ᵢ] = nᵢ z^γD⁽ⁿ⁻ᵉⁱ⁾ − (∂ᵢ z^γ) D⁽ⁿ⁾, with γ = z₁, n = (1,0).
        let t = DerivGen::new(mono(vec![za(1)]), vec![1, 0]);
        let got = mi_bracket_full(&Gen::Ab(t), &Gen::X(0), 2);
        let mut expected = LinComb::single(Gen::Ab(DerivGen::new(mono(vec![za(1)]), vec![0, 0])));
        // ∂₀ z₁ = 2 z₂ z_{(1,0)}.
        expected.add_term(
            Gen::Ab(DerivGen::new(mono(vec![za(2), zm(vec![1, 0])]), vec![1, 0])),
            rat(-2),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn full_bracket_projects_negative_grades() {
        // An artificial coefficient with [γ] < 0 after the correction term:
        // t = z_{(1,0)} D⁽⁰⁾ has [γ] = −1 already; the bracket with ∂₀
        // produces only terms of grade ≤ −1, so everything is dropped.
        let t = DerivGen::new(mono(vec![zm(vec![1, 0])]), vec![0, 0]);
        let got = mi_bracket_full(&Gen::Ab(t.clone()), &Gen::X(0), 2);
        assert!(got.is_zero(), "got {got:?}");
        // The unprojected pieces are nonzero: the correction (∂₀ z_{(1,0)})D⁽⁰⁾
        // exists, so the projection did real work here.
        let correction = derivation_action(&Gen::X(0), &t.coef, 2);
        assert!(!correction.is_zero());
    }

    #[test]
    fn commutation_of_d_with_partial_on_samples() {
        // D⁽ⁿ⁾∘∂ᵢ − ∂ᵢ∘D⁽ⁿ⁾ = nᵢ D⁽ⁿ⁻ᵉⁱ⁾ as operators.
        let n = vec![2, 0];
        let dn: MIGen = Gen::Ab(DerivGen::bare(n.clone()));
        let dlow: MIGen = Gen::Ab(DerivGen::bare(vec![1, 0]));
        let samples = vec![
            mono(vec![zm(vec![1, 0])]),
            mono(vec![zm(vec![2, 0])]),
            mono(vec![za(0), zm(vec![1, 0])]),
            mono(vec![zm(vec![2, 0]), zm(vec![1, 1])]),
        ];
        for m in samples {
            let first =
                derivation_action(&Gen::X(0), &m, 2).flat_map(|u| derivation_action(&dn, u, 2));
            let second =
                derivation_action(&dn, &m, 2).flat_map(|u| derivation_action(&Gen::X(0), u, 2));
            let rhs = derivation_action(&dlow, &m, 2).scale(&rat(2));
            assert_eq!(&first - &second, rhs, "fails on {m:?}");
        }
    }

    #[test]
    fn arity_grade_examples() {
        assert_eq!(mono(vec![za(3)]).arity_grade(), 3);
        assert_eq!(mono(vec![zm(vec![1, 0])]).arity_grade(), -1);
        assert_eq!(
            mono(vec![za(2), zm(vec![0, 1]), zm(vec![1, 1])]).arity_grade(),
            0
        );
    }

    #[test]
    fn post_lie_axioms_on_small_triples() {
        let alg = MIPostLie::new(2);
        let gens: Vec<MIGen> = vec![
            Gen::X(0),
            Gen::X(1),
            Gen::Ab(DerivGen::bare(vec![1, 0])),
            Gen::Ab(DerivGen::new(mono(vec![za(1)]), vec![0, 0])),
            Gen::Ab(DerivGen::new(mono(vec![zm(vec![0, 1])]), vec![0, 1])),
        ];
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    let check = check_post_lie(&alg, x, y, z);
                    assert!(check.pass(), "axioms fail on ({x:?}, {y:?}, {z:?})");
                }
            }
        }
    }
}
