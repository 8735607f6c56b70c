//! Decoration vectors in ℕ^{d+1} and the elementary combinatorial
//! quantities attached to them: componentwise binomials, factorials, and
//! scaled norms.
//!
//! A decoration vector always has length d+1 where d is the spatial
//! dimension; mixing lengths is a bug and is asserted against.

/// A decoration vector `n ∈ ℕ^{d+1}`. Length is d+1 for ambient dimension d.
pub type DecVec = Vec<u32>;

/// The zero vector of the given width.
pub fn zero(width: usize) -> DecVec {
    vec![0; width]
}

/// The unit vector `eᵢ` of the given width.
pub fn unit(width: usize, i: usize) -> DecVec {
    assert!(i < width, "unit index {i} out of range for width {width}");
    let mut v = vec![0; width];
    v[i] = 1;
    v
}

pub fn is_zero(a: &[u32]) -> bool {
    a.iter().all(|&x| x == 0)
}

/// Componentwise sum.
pub fn add(a: &[u32], b: &[u32]) -> DecVec {
    assert_eq!(a.len(), b.len(), "decoration width mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Componentwise difference, `None` if any component would go negative.
/// Callers map `None` onto their "vanishes by convention" outcome.
pub fn checked_sub(a: &[u32], b: &[u32]) -> Option<DecVec> {
    assert_eq!(a.len(), b.len(), "decoration width mismatch");
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

/// Componentwise `a ≤ b`.
pub fn leq(a: &[u32], b: &[u32]) -> bool {
    assert_eq!(a.len(), b.len(), "decoration width mismatch");
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Componentwise minimum.
pub fn min(a: &[u32], b: &[u32]) -> DecVec {
    assert_eq!(a.len(), b.len(), "decoration width mismatch");
    a.iter().zip(b).map(|(x, y)| (*x).min(*y)).collect()
}

/// All vectors `ℓ ≤ bound` componentwise, in lexicographic order.
pub fn grid_le(bound: &[u32]) -> Vec<DecVec> {
    let mut out = vec![Vec::with_capacity(bound.len())];
    for &b in bound {
        let mut next = Vec::with_capacity(out.len() * (b as usize + 1));
        for prefix in &out {
            for v in 0..=b {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn binom_scalar(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k as u128 {
        acc = acc * (n as u128 - j) / (j + 1);
    }
    acc
}

/// Componentwise product of binomial coefficients `∏ᵢ C(nᵢ, ℓᵢ)`;
/// zero whenever `ℓ ≤ n` fails in some component.
pub fn binom(n: &[u32], l: &[u32]) -> u128 {
    assert_eq!(n.len(), l.len(), "decoration width mismatch");
    n.iter().zip(l).map(|(a, b)| binom_scalar(*a, *b)).product()
}

/// Componentwise factorial product `a! = ∏ᵢ aᵢ!`.
pub fn factorial(a: &[u32]) -> u128 {
    a.iter()
        .map(|&x| (1..=x as u128).product::<u128>())
        .product()
}

/// A scaling `𝔰 ∈ ℕ^{d+1}` with every weight ≥ 1, used to grade decorations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scaling(pub Vec<u32>);

impl Scaling {
    /// The parabolic scaling (2, 1, ..., 1): time counts twice.
    pub fn parabolic(width: usize) -> Scaling {
        assert!(width >= 1);
        let mut w = vec![1; width];
        w[0] = 2;
        Scaling(w)
    }

    /// The Euclidean scaling (1, ..., 1).
    pub fn euclidean(width: usize) -> Scaling {
        Scaling(vec![1; width])
    }

    pub fn new(weights: Vec<u32>) -> Scaling {
        assert!(
            weights.iter().all(|&w| w >= 1),
            "scaling weights must be ≥ 1"
        );
        Scaling(weights)
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }
}

/// The scaled norm `|n|_𝔰 = Σᵢ sᵢ nᵢ`.
pub fn snorm(n: &[u32], s: &Scaling) -> u64 {
    assert_eq!(n.len(), s.0.len(), "decoration width mismatch");
    n.iter().zip(&s.0).map(|(a, w)| *a as u64 * *w as u64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binom_componentwise() {
        assert_eq!(binom(&[2, 1], &[1, 0]), 2);
        assert_eq!(binom(&[1, 1], &[2, 0]), 0);
        assert_eq!(binom(&[1, 0], &[0, 0]) + binom(&[1, 0], &[1, 0]), 2);
        assert_eq!(binom(&[2, 0], &[1, 0]), 2);
        assert_eq!(binom(&[0, 0], &[0, 0]), 1);
    }

    #[test]
    fn snorm_examples() {
        assert_eq!(snorm(&[1, 1], &Scaling(vec![2, 1])), 3);
        assert_eq!(snorm(&[0, 0], &Scaling::parabolic(2)), 0);
        assert_eq!(snorm(&[3, 2], &Scaling(vec![1, 1])), 5);
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(&[0, 0]), 1);
        assert_eq!(factorial(&[2, 1]), 2);
        assert_eq!(factorial(&[3, 2]), 12);
    }

    #[test]
    fn grid_le_enumerates_boxes() {
        assert_eq!(grid_le(&[]), vec![Vec::<u32>::new()]);
        assert_eq!(
            grid_le(&[1, 2]).len(),
            6,
            "box (0..=1)x(0..=2) has 6 points"
        );
        let g = grid_le(&[1, 1]);
        assert_eq!(g, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn pascal_rule_exhaustive() {
        // binom(n, ℓ−eᵢ) + binom(n, ℓ) = binom(n+eᵢ, ℓ) for ℓᵢ ≥ 1,
        // all components ≤ 4, widths 1..=3.
        for width in 1..=3usize {
            for n in grid_le(&vec![4; width]) {
                for l in grid_le(&vec![4; width]) {
                    for i in 0..width {
                        if l[i] == 0 {
                            continue;
                        }
                        let l_minus = checked_sub(&l, &unit(width, i)).unwrap();
                        let n_plus = add(&n, &unit(width, i));
                        assert_eq!(
                            binom(&n, &l_minus) + binom(&n, &l),
                            binom(&n_plus, &l),
                            "Pascal fails at n={n:?} l={l:?} i={i}"
                        );
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn checked_sub_inverts_add(a in proptest::collection::vec(0u32..50, 3),
                                   b in proptest::collection::vec(0u32..50, 3)) {
            let s = add(&a, &b);
            prop_assert_eq!(checked_sub(&s, &b).unwrap(), a);
        }

        #[test]
        fn snorm_additive(a in proptest::collection::vec(0u32..50, 2),
                          b in proptest::collection::vec(0u32..50, 2)) {
            let s = Scaling::parabolic(2);
            prop_assert_eq!(snorm(&add(&a, &b), &s), snorm(&a, &s) + snorm(&b, &s));
        }
    }
}
