//! Evaluation of parsed expressions into library values.
//!
//! The same surface grammar serves four semantic contexts:
//!
//! - [`as_trees`]: a combination of decorated trees; factors multiply by
//!   merging at the root.
//! - [`as_gens`]: a combination of post-Lie generators; each term must be a
//!   single `X_i` (or unit-vector `X^(n)`) or a single planted tree.
//! - [`as_env`]: an element of the envelope; `;`-separated letters multiply
//!   in the written order and the result is straightened into the PBW basis.
//! - [`as_t0`]: a combination of noise trees (one noise per node, children
//!   on zero-decorated edges, node monomials kept as unsummed factors).

use crate::syntax::{format_dec, Expr, Factor};
use postlie::dec::{self, DecVec};
use postlie::envelope::{normal_form, EnvElem, Gen};
use postlie::lincomb::LinComb;
use postlie::tree::{planted, tree_product, DecoratedTree, T0Tree};
use postlie::tree_postlie::{PlantedGen, TreePostLie};
use std::fmt;

/// A semantic error: a well-formed expression that does not denote a value
/// of the required kind at the required width.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError(pub String);

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for EvalError {}

fn check_dec(n: &[u32], width: usize) -> Result<(), EvalError> {
    if n.len() == width {
        Ok(())
    } else {
        Err(EvalError(format!(
            "decoration {} has {} components, but width is {width} (dim {})",
            format_dec(n),
            n.len(),
            width - 1
        )))
    }
}

fn check_idx(i: usize, width: usize) -> Result<(), EvalError> {
    if i < width {
        Ok(())
    } else {
        Err(EvalError(format!(
            "direction index {i} out of range for width {width} (dim {})",
            width - 1
        )))
    }
}

/// Evaluates to a combination of decorated trees.
pub fn as_trees(e: &Expr, width: usize) -> Result<LinComb<DecoratedTree>, EvalError> {
    let mut out = LinComb::zero();
    for term in &e.terms {
        let mut acc = LinComb::single(DecoratedTree::one(width));
        for f in &term.factors {
            acc = match f {
                Factor::One => acc,
                Factor::Xi => acc.map_basis(|t| tree_product(t, &DecoratedTree::xi(width))),
                Factor::X(i) => {
                    check_idx(*i, width)?;
                    let x = DecoratedTree::x_pow(dec::unit(width, *i));
                    acc.map_basis(|t| tree_product(t, &x))
                }
                Factor::XPow(n) => {
                    check_dec(n, width)?;
                    let x = DecoratedTree::x_pow(n.clone());
                    acc.map_basis(|t| tree_product(t, &x))
                }
                Factor::Plant(a, body) => {
                    check_dec(a, width)?;
                    let bodies = as_trees(body, width)?;
                    acc.flat_map(|t| {
                        bodies.map_basis(|s| tree_product(t, &planted(a.clone(), s.clone())))
                    })
                }
            };
        }
        out.add_assign(&acc.scale(&term.coef));
    }
    Ok(out)
}

/// Evaluates to a combination of post-Lie generators.
pub fn as_gens(e: &Expr, width: usize) -> Result<LinComb<Gen<PlantedGen>>, EvalError> {
    let mut out = LinComb::zero();
    for term in &e.terms {
        let single: LinComb<Gen<PlantedGen>> = match term.factors.as_slice() {
            [Factor::X(i)] => {
                check_idx(*i, width)?;
                LinComb::single(Gen::X(*i))
            }
            [Factor::XPow(n)] => {
                check_dec(n, width)?;
                let total: u32 = n.iter().sum();
                if total != 1 {
                    return Err(EvalError(format!(
                        "X^{} is not a generator; generators are X_i and I[a](tree)",
                        format_dec(n)
                    )));
                }
                let i = n.iter().position(|&c| c == 1).unwrap();
                LinComb::single(Gen::X(i))
            }
            [Factor::Plant(a, body)] => {
                check_dec(a, width)?;
                as_trees(body, width)?.map_basis(|t| Gen::Ab(PlantedGen::new(a.clone(), t.clone())))
            }
            _ => {
                return Err(EvalError(
                    "each term must be a single generator: X_i or I[a](tree); \
                     products live in the envelope (star, normalize)"
                        .to_string(),
                ))
            }
        };
        out.add_assign(&single.scale(&term.coef));
    }
    Ok(out)
}

/// One letter of an envelope word as generator sequences.
fn as_sequences(e: &Expr, width: usize) -> Result<LinComb<Vec<Gen<PlantedGen>>>, EvalError> {
    let mut out = LinComb::zero();
    for term in &e.terms {
        let mut acc: LinComb<Vec<Gen<PlantedGen>>> = LinComb::single(Vec::new());
        let push = |acc: LinComb<Vec<Gen<PlantedGen>>>,
                    g: Gen<PlantedGen>|
         -> LinComb<Vec<Gen<PlantedGen>>> {
            acc.map_basis(|seq| {
                let mut s = seq.clone();
                s.push(g.clone());
                s
            })
        };
        for f in &term.factors {
            acc = match f {
                Factor::One => acc,
                Factor::Xi => {
                    return Err(EvalError(
                        "the noise is not an envelope letter; write it planted, I[a](Xi)"
                            .to_string(),
                    ))
                }
                Factor::X(i) => {
                    check_idx(*i, width)?;
                    push(acc, Gen::X(*i))
                }
                Factor::XPow(n) => {
                    check_dec(n, width)?;
                    let mut a = acc;
                    for (i, &e) in n.iter().enumerate() {
                        for _ in 0..e {
                            a = push(a, Gen::X(i));
                        }
                    }
                    a
                }
                Factor::Plant(a, body) => {
                    check_dec(a, width)?;
                    let bodies = as_trees(body, width)?;
                    acc.flat_map(|seq| {
                        bodies.map_basis(|t| {
                            let mut s = seq.clone();
                            s.push(Gen::Ab(PlantedGen::new(a.clone(), t.clone())));
                            s
                        })
                    })
                }
            };
        }
        out.add_assign(&acc.scale(&term.coef));
    }
    Ok(out)
}

/// Evaluates a `;`-separated word to an envelope element in PBW normal form.
pub fn as_env(letters: &[Expr], width: usize) -> Result<EnvElem<PlantedGen>, EvalError> {
    let alg = TreePostLie::new(width);
    let mut seqs: LinComb<Vec<Gen<PlantedGen>>> = LinComb::single(Vec::new());
    for letter in letters {
        let next = as_sequences(letter, width)?;
        seqs = seqs.flat_map(|left| {
            next.map_basis(|right| {
                let mut s = left.clone();
                s.extend(right.iter().cloned());
                s
            })
        });
    }
    let mut out = LinComb::zero();
    for (seq, c) in seqs.terms() {
        out.add_assign(&normal_form(&alg, seq).scale(c));
    }
    Ok(out)
}

/// Evaluates to a combination of noise trees (the Ψ domain).
pub fn as_t0(e: &Expr, width: usize) -> Result<LinComb<T0Tree>, EvalError> {
    let mut out = LinComb::zero();
    for term in &e.terms {
        let mut noises = 0usize;
        let mut monomials: Vec<DecVec> = Vec::new();
        let mut children: LinComb<Vec<T0Tree>> = LinComb::single(Vec::new());
        for f in &term.factors {
            match f {
                Factor::Xi => noises += 1,
                Factor::One => {
                    return Err(EvalError(
                        "1 is not a noise tree; every node carries exactly one noise".to_string(),
                    ))
                }
                Factor::X(i) => {
                    check_idx(*i, width)?;
                    monomials.push(dec::unit(width, *i));
                }
                Factor::XPow(n) => {
                    check_dec(n, width)?;
                    if n.iter().all(|&c| c == 0) {
                        return Err(EvalError(
                            "zero monomial factors are excluded from noise trees".to_string(),
                        ));
                    }
                    monomials.push(n.clone());
                }
                Factor::Plant(a, body) => {
                    check_dec(a, width)?;
                    if a.iter().any(|&c| c != 0) {
                        return Err(EvalError(format!(
                            "noise-tree children hang on zero-decorated edges, found I[{}]",
                            format_dec(a)
                        )));
                    }
                    let sub = as_t0(body, width)?;
                    children = children.flat_map(|v| {
                        sub.map_basis(|c| {
                            let mut v2 = v.clone();
                            v2.push(c.clone());
                            v2
                        })
                    });
                }
            }
        }
        if noises != 1 {
            return Err(EvalError(format!(
                "every node of a noise tree carries exactly one Xi, found {noises}"
            )));
        }
        let built = children.map_basis(|v| T0Tree::node_w(width, monomials.clone(), v.clone()));
        out.add_assign(&built.scale(&term.coef));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{format_env_word, format_lincomb, format_tree, parse_expr, parse_word};

    #[test]
    fn trees_merge_factors_at_the_root() {
        let e = parse_expr("X^(1,0) Xi I[(0,1)](Xi)").unwrap();
        let l = as_trees(&e, 2).unwrap();
        assert_eq!(format_lincomb(&l, format_tree), "X^(1,0) Xi I[(0,1)](Xi)");
    }

    #[test]
    fn envelope_words_straighten_to_the_basis() {
        let w = parse_word("I[(1,0)](Xi) ; X_0").unwrap();
        let l = as_env(&w, 2).unwrap();
        assert_eq!(
            format_lincomb(&l, format_env_word),
            "I[(0,0)](Xi) + X^(1,0) I[(1,0)](Xi)"
        );
        let already = parse_word("X_0 ; I[(1,0)](Xi)").unwrap();
        assert_eq!(
            format_lincomb(&as_env(&already, 2).unwrap(), format_env_word),
            "X^(1,0) I[(1,0)](Xi)"
        );
    }

    #[test]
    fn generator_context_rejects_products() {
        let e = parse_expr("X_0 I[(1,0)](Xi)").unwrap();
        assert!(as_gens(&e, 2).unwrap_err().0.contains("envelope"));
    }

    #[test]
    fn width_mismatch_is_reported() {
        let e = parse_expr("I[(1,0)](Xi)").unwrap();
        let err = as_trees(&e, 1).unwrap_err();
        assert!(err.0.contains("width is 1"), "{err}");
    }

    #[test]
    fn noise_trees_keep_factors_unsummed() {
        let e = parse_expr("X^(1,0) X^(1,0) Xi I[(0,0)](Xi)").unwrap();
        let l = as_t0(&e, 2).unwrap();
        let (t, _) = l.terms().next().unwrap();
        assert_eq!(t.monomials, vec![vec![1, 0], vec![1, 0]]);
        assert_eq!(t.children.len(), 1);
        assert!(as_t0(&parse_expr("1").unwrap(), 2).is_err());
        assert!(as_t0(&parse_expr("Xi Xi").unwrap(), 2).is_err());
    }
}
