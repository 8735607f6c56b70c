//! Universal-envelope machinery over a two-sorted post-Lie algebra.
//!
//! The input structure is a vector space spanned by generators of two sorts:
//! an abelian sort (planted trees, or coefficiented derivations) and an
//! X-sort indexed by coordinates `0..width`. The bracket `[·,·]₀` vanishes
//! within each sort; its only nonzero values are `[t, Xᵢ]₀` for `t` abelian,
//! and these land back in the abelian sort. The post-Lie product `▷` obeys
//! `Xᵢ ▷ Xⱼ = 0` and `t ▷ Xᵢ = 0`.
//!
//! Under these assumptions the envelope has a partially symmetric
//! Poincaré–Birkhoff–Witt basis: words `X^m · t₁ ⋯ tₙ` with the X part in
//! front and the abelian factors an unordered multiset ([`EnvWord`]).
//! This module implements:
//!
//! - [`normal_form`]: rewriting arbitrary generator words into that basis
//!   using `t · Xᵢ = Xᵢ · t + [t, Xᵢ]₀`;
//! - [`coproduct`]: the cocommutative coproduct with all generators
//!   primitive, extended multiplicatively;
//! - [`post_word_gen`] / [`post_ext`]: the extension of `▷` to the envelope
//!   via `x ▷ 𝟙 = 0`, `𝟙 ▷ A = A`, `xA ▷ y = x ▷ (A ▷ y) − (x ▷ A) ▷ y`,
//!   and `A ▷ BC = Σ (A⁽¹⁾ ▷ B)(A⁽²⁾ ▷ C)`;
//! - [`star`]: the associative product `A * B = Σ A⁽¹⁾ (A⁽²⁾ ▷ B)`;
//! - [`induced_rep`]: the representation `ρ(x)(A) = x ▷ A + x·A`;
//! - [`check_post_lie`] / [`derived_bracket`]: the two post-Lie axioms and
//!   the bracket `[[x, y]] = [x, y]₀ + x ▷ y − y ▷ x` on generators;
//! - [`rewrite_all_orders`]: a rewriting oracle that explores every
//!   rewriting order and demands they agree (the confluence witness).

use crate::dec::{self, DecVec};
use crate::lincomb::{rat_u128, LinComb};
use num::BigRational;
use std::collections::BTreeMap;

/// A two-sorted post-Lie algebra presented on generators.
///
/// `post_x_ab` is `Xᵢ ▷ t`, `post_ab_ab` is `s ▷ t`, and `bracket0_ab_x` is
/// `[t, Xᵢ]₀`; all other sort combinations of `▷` and `[·,·]₀` vanish
/// identically and are supplied by the envelope layer.
pub trait PostLie {
    type Ab: Clone + Ord + std::fmt::Debug;
    /// Width d+1 of the X-sort index space and of all decorations.
    fn width(&self) -> usize;
    fn post_x_ab(&self, i: usize, t: &Self::Ab) -> LinComb<Self::Ab>;
    fn post_ab_ab(&self, s: &Self::Ab, t: &Self::Ab) -> LinComb<Self::Ab>;
    fn bracket0_ab_x(&self, t: &Self::Ab, i: usize) -> LinComb<Self::Ab>;
}

/// A generator of either sort.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Gen<A> {
    X(usize),
    Ab(A),
}

/// `x ▷ y` on generators.
pub fn post_gen<P: PostLie>(alg: &P, x: &Gen<P::Ab>, y: &Gen<P::Ab>) -> LinComb<Gen<P::Ab>> {
    match (x, y) {
        (_, Gen::X(_)) => LinComb::zero(),
        (Gen::X(i), Gen::Ab(t)) => alg.post_x_ab(*i, t).map_basis(|u| Gen::Ab(u.clone())),
        (Gen::Ab(s), Gen::Ab(t)) => alg.post_ab_ab(s, t).map_basis(|u| Gen::Ab(u.clone())),
    }
}

/// `x ▷ t` landing in the abelian sort (the only sort `▷` can produce from
/// an abelian right argument).
fn post_gen_ab<P: PostLie>(alg: &P, x: &Gen<P::Ab>, t: &P::Ab) -> LinComb<P::Ab> {
    match x {
        Gen::X(i) => alg.post_x_ab(*i, t),
        Gen::Ab(s) => alg.post_ab_ab(s, t),
    }
}

/// `[x, y]₀` on generators.
pub fn bracket0_gen<P: PostLie>(alg: &P, x: &Gen<P::Ab>, y: &Gen<P::Ab>) -> LinComb<Gen<P::Ab>> {
    match (x, y) {
        (Gen::Ab(t), Gen::X(i)) => alg.bracket0_ab_x(t, *i).map_basis(|u| Gen::Ab(u.clone())),
        (Gen::X(i), Gen::Ab(t)) => (-&alg.bracket0_ab_x(t, *i)).map_basis(|u| Gen::Ab(u.clone())),
        _ => LinComb::zero(),
    }
}

/// A PBW basis word `X^m · t₁ ⋯ tₙ`: exponents of the X part followed by the
/// sorted multiset of abelian factors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct EnvWord<A: Ord + Clone> {
    pub x: DecVec,
    pub factors: Vec<A>,
}

/// An envelope element: a rational combination of PBW words.
pub type EnvElem<A> = LinComb<EnvWord<A>>;

impl<A: Ord + Clone> EnvWord<A> {
    /// The empty word `𝟙`.
    pub fn one(width: usize) -> Self {
        EnvWord {
            x: dec::zero(width),
            factors: Vec::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        dec::is_zero(&self.x) && self.factors.is_empty()
    }

    /// The length-1 word of a generator.
    pub fn of_gen(width: usize, g: &Gen<A>) -> Self {
        match g {
            Gen::X(i) => EnvWord {
                x: dec::unit(width, *i),
                factors: Vec::new(),
            },
            Gen::Ab(t) => EnvWord {
                x: dec::zero(width),
                factors: vec![t.clone()],
            },
        }
    }

    /// Total letter count.
    pub fn len(&self) -> usize {
        self.x.iter().sum::<u32>() as usize + self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_one()
    }

    /// Splits off the left-most letter: the first X generator if the X part
    /// is nonzero (X generators commute), otherwise the first abelian factor
    /// (they commute too). `None` on the empty word.
    pub fn split_left(&self) -> Option<(Gen<A>, EnvWord<A>)> {
        if let Some(i) = self.x.iter().position(|&e| e > 0) {
            let mut rest = self.clone();
            rest.x[i] -= 1;
            return Some((Gen::X(i), rest));
        }
        if self.factors.is_empty() {
            return None;
        }
        let mut rest = self.clone();
        let first = rest.factors.remove(0);
        Some((Gen::Ab(first), rest))
    }

    /// The letters of the word, X part first.
    pub fn letters(&self) -> Vec<Gen<A>> {
        let mut out = Vec::with_capacity(self.len());
        for (i, &e) in self.x.iter().enumerate() {
            for _ in 0..e {
                out.push(Gen::X(i));
            }
        }
        out.extend(self.factors.iter().cloned().map(Gen::Ab));
        out
    }
}

/// The element `𝟙`.
pub fn env_one<A: Ord + Clone>(width: usize) -> EnvElem<A> {
    LinComb::single(EnvWord::one(width))
}

/// A generator as an envelope element.
pub fn env_of_gen<A: Ord + Clone>(width: usize, g: &Gen<A>) -> EnvElem<A> {
    LinComb::single(EnvWord::of_gen(width, g))
}

/// Multiplies a normalized element by one generator on the right, staying in
/// the PBW basis. Appending an abelian factor inserts it into the multiset;
/// appending `Xᵢ` moves it through the abelian factors, emitting the
/// `[tⱼ, Xᵢ]₀` replacement term at each transposition.
pub fn append_gen<P: PostLie>(alg: &P, elem: &EnvElem<P::Ab>, g: &Gen<P::Ab>) -> EnvElem<P::Ab> {
    let mut out = LinComb::zero();
    for (w, c) in elem.terms() {
        match g {
            Gen::Ab(t) => {
                let mut factors = w.factors.clone();
                factors.push(t.clone());
                factors.sort();
                out.add_term(
                    EnvWord {
                        x: w.x.clone(),
                        factors,
                    },
                    c.clone(),
                );
            }
            Gen::X(i) => {
                let mut x = w.x.clone();
                x[*i] += 1;
                out.add_term(
                    EnvWord {
                        x,
                        factors: w.factors.clone(),
                    },
                    c.clone(),
                );
                for j in 0..w.factors.len() {
                    for (b, cb) in alg.bracket0_ab_x(&w.factors[j], *i).terms() {
                        let mut factors = w.factors.clone();
                        factors[j] = b.clone();
                        factors.sort();
                        out.add_term(
                            EnvWord {
                                x: w.x.clone(),
                                factors,
                            },
                            c * cb,
                        );
                    }
                }
            }
        }
    }
    out
}

/// Rewrites an arbitrary generator word into the PBW basis.
pub fn normal_form<P: PostLie>(alg: &P, word: &[Gen<P::Ab>]) -> EnvElem<P::Ab> {
    let mut elem = env_one(alg.width());
    for g in word {
        elem = append_gen(alg, &elem, g);
    }
    elem
}

/// The concatenation product of normalized elements.
pub fn mul<P: PostLie>(alg: &P, a: &EnvElem<P::Ab>, b: &EnvElem<P::Ab>) -> EnvElem<P::Ab> {
    let mut out = LinComb::zero();
    for (w, c) in b.terms() {
        let mut acc = a.scale(c);
        for g in w.letters() {
            acc = append_gen(alg, &acc, &g);
        }
        out.add_assign(&acc);
    }
    out
}

/// The coproduct on a PBW word: all generators are primitive, extended
/// multiplicatively; on the basis this is the binomial splitting of the X
/// exponents times the multiset splitting of the abelian factors.
pub fn coproduct<A: Ord + Clone>(w: &EnvWord<A>) -> LinComb<(EnvWord<A>, EnvWord<A>)> {
    let width = w.x.len();
    let mut parts: Vec<(EnvWord<A>, EnvWord<A>, BigRational)> =
        vec![(EnvWord::one(width), EnvWord::one(width), rat_u128(1))];
    for (i, &e) in w.x.iter().enumerate() {
        let mut next = Vec::with_capacity(parts.len() * (e as usize + 1));
        for (l, r, c) in &parts {
            for j in 0..=e {
                let mut l2 = l.clone();
                let mut r2 = r.clone();
                l2.x[i] = j;
                r2.x[i] = e - j;
                next.push((l2, r2, c * rat_u128(dec::binom(&[e], &[j]))));
            }
        }
        parts = next;
    }
    // Group identical abelian factors and split each group binomially.
    let mut groups: Vec<(A, u32)> = Vec::new();
    for f in &w.factors {
        match groups.last_mut() {
            Some((g, n)) if g == f => *n += 1,
            _ => groups.push((f.clone(), 1)),
        }
    }
    for (f, n) in groups {
        let mut next = Vec::with_capacity(parts.len() * (n as usize + 1));
        for (l, r, c) in &parts {
            for j in 0..=n {
                let mut l2 = l.clone();
                let mut r2 = r.clone();
                l2.factors
                    .extend(std::iter::repeat(f.clone()).take(j as usize));
                r2.factors
                    .extend(std::iter::repeat(f.clone()).take((n - j) as usize));
                next.push((l2, r2, c * rat_u128(dec::binom(&[n], &[j]))));
            }
        }
        parts = next;
    }
    parts.into_iter().map(|(l, r, c)| ((l, r), c)).collect()
}

/// `w ▷ y` of a PBW word on a single generator; lands in the generator span.
/// Recursion: `𝟙 ▷ y = y`; `xA ▷ y = x ▷ (A ▷ y) − (x ▷ A) ▷ y`, where
/// `x ▷ A` acts by the Leibniz rule on the letters of `A` (killing X letters
/// and keeping the word length, so the recursion terminates).
pub fn post_word_gen<P: PostLie>(
    alg: &P,
    w: &EnvWord<P::Ab>,
    y: &Gen<P::Ab>,
) -> LinComb<Gen<P::Ab>> {
    match w.split_left() {
        None => LinComb::single(y.clone()),
        Some((x, rest)) => {
            let mut out = LinComb::zero();
            for (g, c) in post_word_gen(alg, &rest, y).terms() {
                out.add_assign(&post_gen(alg, &x, g).scale(c));
            }
            for (w2, c) in post_letter_word(alg, &x, &rest).terms() {
                let minus = -c;
                out.add_assign(&post_word_gen(alg, w2, y).scale(&minus));
            }
            out
        }
    }
}

/// `x ▷ A` for a generator `x` and a PBW word `A`, by the Leibniz rule.
/// X letters of `A` are annihilated; each abelian factor is replaced in turn,
/// so the result is a combination of PBW words of the same length.
fn post_letter_word<P: PostLie>(alg: &P, x: &Gen<P::Ab>, w: &EnvWord<P::Ab>) -> EnvElem<P::Ab> {
    let mut out = LinComb::zero();
    for j in 0..w.factors.len() {
        for (g, c) in post_gen_ab(alg, x, &w.factors[j]).terms() {
            let mut factors = w.factors.clone();
            factors[j] = g.clone();
            factors.sort();
            out.add_term(
                EnvWord {
                    x: w.x.clone(),
                    factors,
                },
                c.clone(),
            );
        }
    }
    out
}

fn post_word_word<P: PostLie>(alg: &P, w: &EnvWord<P::Ab>, v: &EnvWord<P::Ab>) -> EnvElem<P::Ab> {
    let width = alg.width();
    if v.is_one() {
        // A ▷ 𝟙 = ε(A) 𝟙.
        return if w.is_one() {
            env_one(width)
        } else {
            LinComb::zero()
        };
    }
    let (y, rest) = v.split_left().expect("nonempty word");
    if rest.is_one() {
        return post_word_gen(alg, w, &y).map_basis(|g| EnvWord::of_gen(width, g));
    }
    let mut out = LinComb::zero();
    for ((w1, w2), c) in coproduct(w).terms() {
        let left = post_word_gen(alg, w1, &y).map_basis(|g| EnvWord::of_gen(width, g));
        if left.is_zero() {
            continue;
        }
        let right = post_word_word(alg, w2, &rest);
        if right.is_zero() {
            continue;
        }
        out.add_assign(&mul(alg, &left, &right).scale(c));
    }
    out
}

/// `A ▷ B` on envelope elements.
pub fn post_ext<P: PostLie>(alg: &P, a: &EnvElem<P::Ab>, b: &EnvElem<P::Ab>) -> EnvElem<P::Ab> {
    let mut out = LinComb::zero();
    for (w, cw) in a.terms() {
        for (v, cv) in b.terms() {
            out.add_assign(&post_word_word(alg, w, v).scale(&(cw * cv)));
        }
    }
    out
}

/// `A * B = Σ A⁽¹⁾ (A⁽²⁾ ▷ B)`: the associative product whose envelope this
/// construction models.
pub fn star<P: PostLie>(alg: &P, a: &EnvElem<P::Ab>, b: &EnvElem<P::Ab>) -> EnvElem<P::Ab> {
    let mut out = LinComb::zero();
    for (w, cw) in a.terms() {
        for ((w1, w2), cd) in coproduct(w).terms() {
            let right = post_word_word_elem(alg, w2, b);
            if right.is_zero() {
                continue;
            }
            let left = LinComb::single(w1.clone());
            out.add_assign(&mul(alg, &left, &right).scale(&(cw * cd)));
        }
    }
    out
}

fn post_word_word_elem<P: PostLie>(
    alg: &P,
    w: &EnvWord<P::Ab>,
    b: &EnvElem<P::Ab>,
) -> EnvElem<P::Ab> {
    let mut out = LinComb::zero();
    for (v, cv) in b.terms() {
        out.add_assign(&post_word_word(alg, w, v).scale(cv));
    }
    out
}

/// `ρ(x)(A) = x ▷ A + x·A`: the representation of the generator span on the
/// envelope.
pub fn induced_rep<P: PostLie>(alg: &P, x: &Gen<P::Ab>, a: &EnvElem<P::Ab>) -> EnvElem<P::Ab> {
    let xe = env_of_gen(alg.width(), x);
    &post_ext(alg, &xe, a) + &mul(alg, &xe, a)
}

/// Extends `▷` on generators linearly in the right argument.
pub fn post_gen_lin<P: PostLie>(
    alg: &P,
    x: &Gen<P::Ab>,
    l: &LinComb<Gen<P::Ab>>,
) -> LinComb<Gen<P::Ab>> {
    l.flat_map(|g| post_gen(alg, x, g))
}

/// Extends `[·,·]₀` bilinearly.
pub fn bracket0_lin<P: PostLie>(
    alg: &P,
    l: &LinComb<Gen<P::Ab>>,
    m: &LinComb<Gen<P::Ab>>,
) -> LinComb<Gen<P::Ab>> {
    let mut out = LinComb::zero();
    for (x, cx) in l.terms() {
        for (y, cy) in m.terms() {
            out.add_assign(&bracket0_gen(alg, x, y).scale(&(cx * cy)));
        }
    }
    out
}

/// The differences of the two post-Lie axioms on a generator triple; the
/// triple passes iff both are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PostLieCheck<A: Ord + Clone> {
    /// `x ▷ [y,z]₀ − [x ▷ y, z]₀ − [y, x ▷ z]₀`.
    pub leibniz: LinComb<Gen<A>>,
    /// `[x,y]₀ ▷ z − a_▷(x,y,z) + a_▷(y,x,z)`.
    pub torsion: LinComb<Gen<A>>,
}

impl<A: Ord + Clone> PostLieCheck<A> {
    pub fn pass(&self) -> bool {
        self.leibniz.is_zero() && self.torsion.is_zero()
    }
}

/// Evaluates both post-Lie axioms exactly on a generator triple.
pub fn check_post_lie<P: PostLie>(
    alg: &P,
    x: &Gen<P::Ab>,
    y: &Gen<P::Ab>,
    z: &Gen<P::Ab>,
) -> PostLieCheck<P::Ab> {
    let gy = LinComb::single(y.clone());
    let gz = LinComb::single(z.clone());
    let leibniz = {
        let lhs = post_gen_lin(alg, x, &bracket0_gen(alg, y, z));
        let r1 = bracket0_lin(alg, &post_gen(alg, x, y), &gz);
        let r2 = bracket0_lin(alg, &gy, &post_gen(alg, x, z));
        &(&lhs - &r1) - &r2
    };
    let torsion = {
        let lhs = bracket0_gen(alg, x, y).flat_map(|g| post_gen_lin(alg, g, &gz));
        let assoc = |u: &Gen<P::Ab>, v: &Gen<P::Ab>| -> LinComb<Gen<P::Ab>> {
            let nested = post_gen_lin(alg, u, &post_gen(alg, v, z));
            let grouped = post_gen(alg, u, v).flat_map(|g| post_gen_lin(alg, g, &gz));
            &nested - &grouped
        };
        &(&lhs - &assoc(x, y)) + &assoc(y, x)
    };
    PostLieCheck { leibniz, torsion }
}

/// `[[x, y]] = [x, y]₀ + x ▷ y − y ▷ x` on generators.
pub fn derived_bracket<P: PostLie>(alg: &P, x: &Gen<P::Ab>, y: &Gen<P::Ab>) -> LinComb<Gen<P::Ab>> {
    &(&bracket0_gen(alg, x, y) + &post_gen(alg, x, y)) - &post_gen(alg, y, x)
}

fn raw_rewrite_positions<A: Ord + Clone>(word: &[Gen<A>]) -> Vec<usize> {
    let mut out = Vec::new();
    for j in 0..word.len().saturating_sub(1) {
        let needs = match (&word[j], &word[j + 1]) {
            (Gen::Ab(_), Gen::X(_)) => true,
            (Gen::X(i), Gen::X(k)) => i > k,
            (Gen::Ab(s), Gen::Ab(t)) => s > t,
            (Gen::X(_), Gen::Ab(_)) => false,
        };
        if needs {
            out.push(j);
        }
    }
    out
}

/// Normalizes a raw word by exploring *every* rewriting order and asserting
/// that all of them agree; panics on any disagreement. Exponential in the
/// word length; intended for desk-scale confluence certification only.
pub fn rewrite_all_orders<P: PostLie>(alg: &P, word: &[Gen<P::Ab>]) -> EnvElem<P::Ab> {
    let mut memo: BTreeMap<Vec<Gen<P::Ab>>, EnvElem<P::Ab>> = BTreeMap::new();
    rewrite_rec(alg, word.to_vec(), &mut memo)
}

fn rewrite_rec<P: PostLie>(
    alg: &P,
    word: Vec<Gen<P::Ab>>,
    memo: &mut BTreeMap<Vec<Gen<P::Ab>>, EnvElem<P::Ab>>,
) -> EnvElem<P::Ab> {
    if let Some(hit) = memo.get(&word) {
        return hit.clone();
    }
    let positions = raw_rewrite_positions(&word);
    let result = if positions.is_empty() {
        let width = alg.width();
        let mut x = dec::zero(width);
        let mut factors = Vec::new();
        for g in &word {
            match g {
                Gen::X(i) => x[*i] += 1,
                Gen::Ab(t) => factors.push(t.clone()),
            }
        }
        LinComb::single(EnvWord { x, factors })
    } else {
        let mut agreed: Option<EnvElem<P::Ab>> = None;
        for &j in &positions {
            let mut branch: EnvElem<P::Ab> = LinComb::zero();
            // Swap is always a term; the bracket correction replaces the
            // pair by a single abelian letter.
            let mut swapped = word.clone();
            swapped.swap(j, j + 1);
            branch.add_assign(&rewrite_rec(alg, swapped, memo));
            if let (Gen::Ab(t), Gen::X(i)) = (&word[j], &word[j + 1]) {
                for (b, c) in alg.bracket0_ab_x(t, *i).terms() {
                    let mut shorter: Vec<Gen<P::Ab>> = Vec::with_capacity(word.len() - 1);
                    shorter.extend(word[..j].iter().cloned());
                    shorter.push(Gen::Ab(b.clone()));
                    shorter.extend(word[j + 2..].iter().cloned());
                    branch.add_assign(&rewrite_rec(alg, shorter, memo).scale(c));
                }
            }
            match &agreed {
                None => agreed = Some(branch),
                Some(prev) => assert_eq!(
                    prev, &branch,
                    "rewriting orders disagree on {word:?} at position {j}"
                ),
            }
        }
        agreed.unwrap()
    };
    memo.insert(word, result.clone());
    result
}
