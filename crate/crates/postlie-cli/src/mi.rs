//! Surface syntax for multi-index monomials and derivation generators.
//!
//! Grammar (coefficients and `+` as in the tree language):
//!
//! ```text
//! gens  := gterm ("+" gterm)*
//! gterm := [rational "*"] ("d_" idx | mono? "D^" nvec)
//! monos := mterm ("+" mterm)*
//! mterm := [rational "*"] ("1" | mivar+)
//! mivar := "z_" (int | nvec) ["^" uint]
//! ```
//!
//! `z_k` with an integer subscript is the arity variable of arity `k`;
//! `z_(n)` is the variable of the derivation label `n` (which is never the
//! zero vector). `d_i` is the direction derivation, `D^(n)` the labelled
//! derivation, optionally multiplied by a monomial coefficient on its left.

use crate::syntax::{Cursor, ParseError};
use postlie::envelope::Gen;
use postlie::lincomb::LinComb;
use postlie::multiindex::{DerivGen, MIGen, MIMonomial, Var};

/// Parses a combination of monomials in the `z` variables.
pub fn parse_monomials(src: &str) -> Result<LinComb<MIMonomial>, ParseError> {
    let mut c = Cursor::new(src);
    let mut out = LinComb::zero();
    loop {
        let coef = c.coefficient()?;
        out.add_term(mono_term(&mut c)?, coef);
        if !c.eat(b'+') {
            break;
        }
    }
    c.finish()?;
    Ok(out)
}

/// Parses a combination of derivation generators.
pub fn parse_gens(src: &str) -> Result<LinComb<MIGen>, ParseError> {
    let mut c = Cursor::new(src);
    let mut out = LinComb::zero();
    loop {
        let coef = c.coefficient()?;
        out.add_term(gen_term(&mut c)?, coef);
        if !c.eat(b'+') {
            break;
        }
    }
    c.finish()?;
    Ok(out)
}

fn mono_term(c: &mut Cursor) -> Result<MIMonomial, ParseError> {
    if c.eat(b'1') {
        return Ok(MIMonomial::one());
    }
    let mut m = MIMonomial::one();
    let mut any = false;
    while c.peek() == Some(b'z') {
        let (v, e) = mivar(c)?;
        m = m.mul(&MIMonomial::from_pairs([(v, e)]));
        any = true;
    }
    if any {
        Ok(m)
    } else {
        c.err("expected a monomial: 1 or z variables")
    }
}

fn mivar(c: &mut Cursor) -> Result<(Var, u32), ParseError> {
    c.expect(b'z')?;
    c.expect(b'_')?;
    let v = if c.peek() == Some(b'(') {
        let n = c.nvec()?;
        if n.iter().all(|&x| x == 0) {
            return c.err("the zero label has no variable");
        }
        Var::Mono(n)
    } else {
        Var::Arity(c.uint("an arity")?)
    };
    let e = if c.eat(b'^') {
        let e: u32 = c.uint("an exponent")?;
        if e == 0 {
            return c.err("exponents are positive");
        }
        e
    } else {
        1
    };
    Ok((v, e))
}

fn gen_term(c: &mut Cursor) -> Result<MIGen, ParseError> {
    if c.peek() == Some(b'd') {
        c.pos += 1;
        c.expect(b'_')?;
        return Ok(Gen::X(c.uint("a direction index")?));
    }
    let mut coef = MIMonomial::one();
    while c.peek() == Some(b'z') {
        let (v, e) = mivar(c)?;
        coef = coef.mul(&MIMonomial::from_pairs([(v, e)]));
    }
    if c.peek() == Some(b'D') {
        c.pos += 1;
        c.expect(b'^')?;
        let n = c.nvec()?;
        Ok(Gen::Ab(DerivGen::new(coef, n)))
    } else {
        c.err("expected a generator: d_i or [monomial] D^(n)")
    }
}

// ---------------------------------------------------------------------------
// Canonical formatting.

pub fn format_var(v: &Var) -> String {
    match v {
        Var::Arity(k) => format!("z_{k}"),
        Var::Mono(n) => format!("z_{}", crate::syntax::format_dec(n)),
    }
}

pub fn format_monomial(m: &MIMonomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    m.vars()
        .map(|(v, e)| {
            if e == 1 {
                format_var(v)
            } else {
                format!("{}^{e}", format_var(v))
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn format_gen(g: &MIGen) -> String {
    match g {
        Gen::X(i) => format!("d_{i}"),
        Gen::Ab(d) => {
            if d.coef.is_one() {
                format!("D^{}", crate::syntax::format_dec(&d.n))
            } else {
                format!(
                    "{} D^{}",
                    format_monomial(&d.coef),
                    crate::syntax::format_dec(&d.n)
                )
            }
        }
    }
}

/// Validates that every decoration in the combination has the given width.
pub fn check_gen_widths(l: &LinComb<MIGen>, width: usize) -> Result<(), String> {
    for (g, _) in l.terms() {
        match g {
            Gen::X(i) if *i >= width => {
                return Err(format!(
                    "direction index {i} out of range for width {width}"
                ))
            }
            Gen::Ab(d) => {
                check_mono_width(&d.coef, width)?;
                if d.n.len() != width {
                    return Err(dim_error(&d.n, width));
                }
            }
            _ => {}
        }
    }
    Ok(())
}

/// Validates monomial variable widths.
pub fn check_mono_widths(l: &LinComb<MIMonomial>, width: usize) -> Result<(), String> {
    for (m, _) in l.terms() {
        check_mono_width(m, width)?;
    }
    Ok(())
}

fn check_mono_width(m: &MIMonomial, width: usize) -> Result<(), String> {
    for (v, _) in m.vars() {
        if let Var::Mono(n) = v {
            if n.len() != width {
                return Err(dim_error(n, width));
            }
        }
    }
    Ok(())
}

fn dim_error(n: &[u32], width: usize) -> String {
    format!(
        "decoration {} has {} components, but width is {width} (dim {})",
        crate::syntax::format_dec(n),
        n.len(),
        width - 1
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials_round_trip() {
        for src in ["1", "z_0", "z_1^2 z_(1,0)", "z_0 z_2^3 z_(0,1)^2"] {
            let l = parse_monomials(src).unwrap();
            assert_eq!(crate::syntax::format_lincomb(&l, format_monomial), src);
        }
    }

    #[test]
    fn generators_round_trip() {
        for src in [
            "d_0",
            "D^(1,0)",
            "z_0 D^(0,1)",
            "d_1 + 2 * z_(1,0)^2 D^(1,1)",
        ] {
            let l = parse_gens(src).unwrap();
            assert_eq!(crate::syntax::format_lincomb(&l, format_gen), src);
        }
    }

    #[test]
    fn zero_label_and_zero_exponent_are_rejected() {
        assert!(parse_monomials("z_(0,0)")
            .unwrap_err()
            .msg
            .contains("zero label"));
        assert!(parse_monomials("z_0^0")
            .unwrap_err()
            .msg
            .contains("positive"));
        assert!(parse_gens("z_0")
            .unwrap_err()
            .msg
            .contains("expected a generator"));
    }
}
