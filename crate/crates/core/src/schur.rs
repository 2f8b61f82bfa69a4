//! Schur characters, Weyl dimensions, and the plethysm `S_γ(A⊗B)` for
//! `dim A = dim B = 2`.
//!
//! Two independent routes compute plethysm multiplicities:
//!
//! * [`pleth_mult`] counts Gelfand–Tsetlin patterns to get torus weight
//!   multiplicities of `S_γ(A⊗B)` restricted to `GL(A)×GL(B)`, then applies
//!   the Weyl-denominator alternation. It is fast enough for the large
//!   degrees reached by stabilization arguments.
//! * [`plethysm_2x2`] evaluates `s_γ` at the four products `x_i y_j` as an
//!   explicit [`LaurentChar`] and peels off leading Schur products in
//!   lexicographic order. It serves as the brute-force oracle.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{HypermatError, Result};
use crate::laurent::LaurentChar;
use crate::weights::{TripleWeight, Weight};

/// Dimension of the irreducible `GL_m`-representation `S_λ`, by the Weyl
/// dimension formula. `λ` must be dominant.
pub fn weyl_dimension(lambda: &Weight) -> BigInt {
    let l = lambda.entries();
    let m = l.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        for j in (i + 1)..m {
            num *= BigInt::from(l[i] - l[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    num / den
}

/// Visit every Gelfand–Tsetlin pattern with top row `top` (a partition),
/// passing the content vector `(e_1, ..., e_m)` of the corresponding
/// semistandard tableau.
fn for_each_gt_pattern(top: &[i64], visit: &mut dyn FnMut(&[i64])) {
    let m = top.len();
    let mut content = vec![0i64; m];
    fn rec(row: &[i64], content: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
        let k = row.len();
        let size: i64 = row.iter().sum();
        if k == 1 {
            content[0] = size;
            visit(content);
            return;
        }
        let mut below = vec![0i64; k - 1];
        fn fill(
            i: usize,
            row: &[i64],
            below: &mut Vec<i64>,
            size: i64,
            content: &mut Vec<i64>,
            visit: &mut dyn FnMut(&[i64]),
        ) {
            if i == below.len() {
                let s: i64 = below.iter().sum();
                content[row.len() - 1] = size - s;
                let b = below.clone();
                rec(&b, content, visit);
                return;
            }
            for v in row[i + 1]..=row[i] {
                below[i] = v;
                fill(i + 1, row, below, size, content, visit);
            }
        }
        fill(0, row, &mut below, size, content, visit);
    }
    if m == 0 {
        visit(&content);
        return;
    }
    rec(top, &mut content, visit);
}

/// The Schur polynomial `s_λ(x_1, ..., x_m)` with `m = rank(λ)`, as a sum
/// over semistandard tableaux. Negative entries are handled by computing
/// `s_{λ+k}` and dividing by `(x_1⋯x_m)^k`.
pub fn schur_char(lambda: &Weight) -> Result<LaurentChar> {
    if !lambda.is_dominant() {
        return Err(HypermatError::NotDominant(lambda.to_string()));
    }
    let m = lambda.rank();
    let shift = lambda.entries().last().copied().unwrap_or(0).min(0);
    let top = lambda.twist(-shift);
    let mut counts: HashMap<Vec<i64>, u64> = HashMap::new();
    for_each_gt_pattern(top.entries(), &mut |e| {
        *counts
            .entry(e.iter().map(|x| x + shift).collect())
            .or_insert(0) += 1;
    });
    let mut ch = LaurentChar::zero(m);
    for (e, c) in counts {
        ch.add_term(e, BigInt::from(c));
    }
    Ok(ch)
}

/// Kostka number `K_{λ,e}`: the multiplicity of the torus weight `e` in
/// `S_λ`, computed by Gelfand–Tsetlin enumeration. Used as an oracle.
pub fn kostka(lambda: &Weight, e: &[i64]) -> u64 {
    let mut count = 0;
    for_each_gt_pattern(lambda.entries(), &mut |c| {
        if c == e {
            count += 1;
        }
    });
    count
}

/// Multiplicity of the `GL(A)×GL(B)` torus weight `(a_1, d-a_1; b_1, d-b_1)`
/// in `S_γ(A⊗B)` for a partition `γ` with four parts.
///
/// Order the variables of `A⊗B` as `x_1y_1, x_1y_2, x_2y_1, x_2y_2`. A
/// Gelfand–Tsetlin pattern `γ ⊵ μ ⊵ ν ⊵ (s)` has content
/// `(s, |ν|-s, |μ|-|ν|, d-|μ|)`, and the restriction fixes `|ν| = a_1` and
/// `s = a_1 + b_1 - |μ|`. For each middle row `μ` the admissible `ν` form an
/// interval in `ν_2`, counted in closed form.
pub fn restricted_weight_mult(gamma: &[i64; 4], a1: i64, b1: i64) -> i64 {
    let d: i64 = gamma.iter().sum();
    if a1 < 0 || b1 < 0 || a1 > d || b1 > d {
        return 0;
    }
    let [g1, g2, g3, g4] = *gamma;
    let mut total = 0i64;
    for m1 in g2..=g1 {
        for m2 in g3..=g2 {
            for m3 in g4..=g3 {
                let s = a1 + b1 - (m1 + m2 + m3);
                if s < 0 {
                    continue;
                }
                let lo = m3.max(a1 - m1);
                let hi = m2.min(a1 - m2).min(s).min(a1 - s);
                if hi >= lo {
                    total += hi - lo + 1;
                }
            }
        }
    }
    total
}

/// Pad a weight with at most four entries to exactly four.
fn to_four(gamma: &Weight) -> Result<[i64; 4]> {
    let e = gamma.entries();
    if e.len() > 4 && (e[4..].iter().any(|&x| x != 0) || e[3] < 0) {
        return Err(HypermatError::TooManyParts(gamma.to_string()));
    }
    let mut out = [0i64; 4];
    for (i, x) in e.iter().take(4).enumerate() {
        out[i] = *x;
    }
    if e.len() < 4 && e.last().copied().unwrap_or(0) < 0 {
        return Err(HypermatError::TooManyParts(format!(
            "{gamma} has negative entries at rank below 4; pass it at rank 4"
        )));
    }
    Ok(out)
}

/// `[S_γ(A⊗B) : S_αA ⊗ S_βB]` by weight counting and Weyl alternation.
///
/// `γ` is a dominant weight of `GL(A⊗B) = GL_4` (rank at most 4; shorter
/// weights are padded with zeros). Negative entries are removed by a
/// determinant twist: `S_γ(A⊗B) = S_{γ-c}(A⊗B) ⊗ (det A)^{2c} ⊗ (det B)^{2c}`.
pub fn pleth_mult(gamma: &Weight, alpha: &Weight, beta: &Weight) -> Result<u64> {
    if !gamma.is_dominant() {
        return Err(HypermatError::NotDominant(gamma.to_string()));
    }
    if alpha.rank() != 2 || beta.rank() != 2 {
        return Err(HypermatError::RankMismatch(
            "α and β must have rank 2".into(),
        ));
    }
    let g = to_four(gamma)?;
    if !alpha.is_dominant() || !beta.is_dominant() {
        return Ok(0);
    }
    let c = g[3];
    let g = [g[0] - c, g[1] - c, g[2] - c, 0];
    let a = alpha.twist(-2 * c);
    let b = beta.twist(-2 * c);
    let d: i64 = g.iter().sum();
    if a.size() != d || b.size() != d || a.entries()[1] < 0 || b.entries()[1] < 0 {
        return Ok(0);
    }
    let (a1, b1) = (a.entries()[0], b.entries()[0]);
    let m = |x, y| restricted_weight_mult(&g, x, y);
    let v = m(a1, b1) - m(a1 + 1, b1) - m(a1, b1 + 1) + m(a1 + 1, b1 + 1);
    debug_assert!(v >= 0, "alternation produced a negative multiplicity");
    Ok(v.max(0) as u64)
}

/// A decomposition of a `GL(A)×GL(B)`-representation into irreducibles
/// `S_αA ⊗ S_βB`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecompResult {
    pub terms: BTreeMap<(Weight, Weight), u64>,
}

impl DecompResult {
    pub fn mult(&self, alpha: &Weight, beta: &Weight) -> u64 {
        self.terms
            .get(&(alpha.clone(), beta.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// `Σ mult · dim S_α · dim S_β`.
    pub fn total_dimension(&self) -> BigInt {
        self.terms
            .iter()
            .map(|((a, b), m)| weyl_dimension(a) * weyl_dimension(b) * BigInt::from(*m))
            .sum()
    }
}

#[derive(Serialize)]
struct DecompEntry<'a> {
    a: &'a Weight,
    b: &'a Weight,
    mult: u64,
}

impl Serialize for DecompResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<DecompEntry> = self
            .terms
            .iter()
            .map(|((a, b), m)| DecompEntry { a, b, mult: *m })
            .collect();
        v.serialize(s)
    }
}

/// The character `s_α(x_1,x_2)·s_β(y_1,y_2)` in the variables
/// `(x_1, x_2, y_1, y_2)`.
fn product_char(alpha: &Weight, beta: &Weight) -> LaurentChar {
    let mut ch = LaurentChar::zero(4);
    for i in 0..=(alpha.entries()[0] - alpha.entries()[1]) {
        for j in 0..=(beta.entries()[0] - beta.entries()[1]) {
            ch.add_term(
                vec![
                    alpha.entries()[0] - i,
                    alpha.entries()[1] + i,
                    beta.entries()[0] - j,
                    beta.entries()[1] + j,
                ],
                BigInt::one(),
            );
        }
    }
    ch
}

/// Split a `GL_2 × GL_2` character into irreducibles by repeatedly removing
/// the Schur product whose highest weight is the lexicographically largest
/// monomial.
pub fn peel_gl2_gl2(mut ch: LaurentChar) -> Result<DecompResult> {
    assert_eq!(ch.nvars(), 4, "expected a character in (x1, x2, y1, y2)");
    let mut out = DecompResult::default();
    while let Some((e, c)) = ch.leading_term() {
        let alpha = Weight::from(vec![e[0], e[1]]);
        let beta = Weight::from(vec![e[2], e[3]]);
        if !alpha.is_dominant() || !beta.is_dominant() {
            return Err(HypermatError::NotDominant(format!(
                "leading monomial {alpha}x{beta} of a GL2xGL2 character"
            )));
        }
        let mult = c
            .to_u64()
            .ok_or_else(|| HypermatError::Unsupported("negative leading coefficient".into()))?;
        let piece = product_char(&alpha, &beta).scale(&BigInt::from(mult));
        ch = &ch - &piece;
        out.terms.insert((alpha, beta), mult);
    }
    Ok(out)
}

/// Full decomposition of `S_γ(A⊗B)` by character evaluation and peeling.
pub fn plethysm_2x2(gamma: &Weight) -> Result<DecompResult> {
    if !gamma.is_dominant() {
        return Err(HypermatError::NotDominant(gamma.to_string()));
    }
    let g = Weight::from(to_four(gamma)?.to_vec());
    let s = schur_char(&g)?;
    // x_i y_j in the order (x1y1, x1y2, x2y1, x2y2).
    let images = vec![
        vec![1, 0, 1, 0],
        vec![1, 0, 0, 1],
        vec![0, 1, 1, 0],
        vec![0, 1, 0, 1],
    ];
    peel_gl2_gl2(s.substitute_monomials(&images, 4))
}

/// Full decomposition of `S_γ(A⊗B)` using [`pleth_mult`] on every candidate
/// pair `(α, β)`.
pub fn plethysm_2x2_fast(gamma: &Weight) -> Result<DecompResult> {
    let g = to_four(gamma)?;
    let c = g[3];
    let d: i64 = g.iter().map(|x| x - c).sum();
    let mut out = DecompResult::default();
    for a2 in 0..=d / 2 {
        for b2 in 0..=d / 2 {
            let a = Weight::from(vec![d - a2 + 2 * c, a2 + 2 * c]);
            let b = Weight::from(vec![d - b2 + 2 * c, b2 + 2 * c]);
            let m = pleth_mult(gamma, &a, &b)?;
            if m > 0 {
                out.terms.insert((a, b), m);
            }
        }
    }
    Ok(out)
}

/// Multiplicity of `S_αA ⊗ S_βB ⊗ S_γC` in `Sym(A⊗B⊗C)`. By the Cauchy
/// formula this is `[S_γ(A⊗B) : S_αA⊗S_βB]` when `γ` is a partition with at
/// most four nonzero parts and all degrees agree, and zero otherwise.
pub fn sym_multiplicity(t: &TripleWeight) -> u64 {
    if !t.is_balanced() || !t.c.is_partition() || t.c.length() > 4 {
        return 0;
    }
    if !t.a.is_partition() || !t.b.is_partition() {
        return 0;
    }
    let g = Weight::from(t.c.padded(4).entries()[..4].to_vec());
    pleth_mult(&g, &t.a, &t.b).expect("inputs validated")
}

/// Default stabilization cap past `k₀`; overridden by `HYPERMAT_STAB_CAP`.
pub const DEFAULT_STAB_CAP: i64 = 32;

/// The stabilization cap in effect.
pub fn stabilization_cap() -> i64 {
    std::env::var("HYPERMAT_STAB_CAP")
        .ok()
        .and_then(|s| s.trim().parse::<i64>().ok())
        .filter(|&c| c >= 0)
        .unwrap_or(DEFAULT_STAB_CAP)
}

/// Evaluate `f(k)` for `k ≫ 0`: start at `k₀`, accept when `f(k) = f(k+1)`,
/// otherwise advance `k` by 4, giving up past `k₀ + cap`.
pub fn stabilize(k0: i64, cap: i64, f: impl Fn(i64) -> i64) -> Result<i64> {
    let mut ks = Vec::new();
    let mut values = Vec::new();
    let mut k = k0;
    while k <= k0 + cap {
        let v0 = f(k);
        let v1 = f(k + 1);
        ks.extend([k, k + 1]);
        values.extend([v0, v1]);
        if v0 == v1 {
            return Ok(v0);
        }
        k += 4;
    }
    Err(HypermatError::Stabilization { ks, values })
}

/// Starting point of stabilization for a weight: `|t|_∞ + 8`.
pub fn stabilization_start(t: &TripleWeight) -> i64 {
    t.max_abs() + 8
}

/// The weight `(3,3)×(3,3)×(2,2,2)` of the degree-6 semi-invariant at `n = 3`.
pub fn semi_invariant_weight() -> TripleWeight {
    TripleWeight::new([3, 3], [3, 3], [2, 2, 2])
}

/// Multiplicity of `t` in the localization `S_f`: the stable value of the
/// multiplicity of `t + kσ` in `S`, where `σ` is the weight of `f`.
pub fn localization_multiplicity(t: &TripleWeight, sigma: &TripleWeight) -> Result<u64> {
    if t.n() != sigma.n() {
        return Err(HypermatError::RankMismatch(
            "t and σ must have the same n".into(),
        ));
    }
    let k0 = stabilization_start(t);
    let v = stabilize(k0, stabilization_cap(), |k| {
        sym_multiplicity(&t.add(&sigma.scale(k))) as i64
    })?;
    Ok(v as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w<const N: usize>(v: [i64; N]) -> Weight {
        Weight::from(v)
    }

    #[test]
    fn schur_char_small_cases() {
        let s1 = schur_char(&w([1, 0])).unwrap();
        assert_eq!(s1.len(), 2);
        assert_eq!(s1.coeff(&[1, 0]), BigInt::one());
        let s11 = schur_char(&w([1, 1])).unwrap();
        assert_eq!(s11.len(), 1);
        assert_eq!(s11.coeff(&[1, 1]), BigInt::one());
        let s21 = schur_char(&w([2, 1, 0])).unwrap();
        assert_eq!(s21.eval_at_ones(), BigInt::from(8));
        assert!(schur_char(&w([0, 1])).is_err());
        let neg = schur_char(&w([0, -1])).unwrap();
        assert_eq!(neg.coeff(&[0, -1]), BigInt::one());
        assert_eq!(neg.coeff(&[-1, 0]), BigInt::one());
    }

    #[test]
    fn dimensions_match_characters() {
        for lam in [w([3, 1, 0]), w([2, 2, 1, 0]), w([4, 0]), w([1, -2, -2])] {
            assert_eq!(
                schur_char(&lam).unwrap().eval_at_ones(),
                weyl_dimension(&lam)
            );
        }
    }

    #[test]
    fn kostka_matches_character() {
        let lam = w([3, 2, 1, 0]);
        let ch = schur_char(&lam).unwrap();
        for (e, c) in ch.terms() {
            assert_eq!(BigInt::from(kostka(&lam, e)), *c);
        }
    }

    #[test]
    fn sym_square_is_cauchy() {
        let d = plethysm_2x2(&w([2])).unwrap();
        assert_eq!(d.terms.len(), 2);
        assert_eq!(d.mult(&w([2, 0]), &w([2, 0])), 1);
        assert_eq!(d.mult(&w([1, 1]), &w([1, 1])), 1);
    }

    #[test]
    fn fast_route_matches_oracle_on_small_shapes() {
        for g in [
            w([3, 1, 0, 0]),
            w([2, 2, 1, 0]),
            w([4, 2, 1, 1]),
            w([2, 1, -1, -1]),
        ] {
            assert_eq!(
                plethysm_2x2(&g).unwrap(),
                plethysm_2x2_fast(&g).unwrap(),
                "γ = {g}"
            );
        }
    }

    #[test]
    fn quoted_multiplicities() {
        assert_eq!(
            pleth_mult(&w([18, 1, 1, 0]), &w([17, 3]), &w([17, 3])).unwrap(),
            1
        );
        assert_eq!(
            pleth_mult(&w([11, 1, 0, 0]), &w([8, 4]), &w([6, 6])).unwrap(),
            0
        );
    }

    #[test]
    fn sym_multiplicity_examples() {
        assert_eq!(
            sym_multiplicity(&TripleWeight::new([1, 0], [1, 0], [1, 0, 0])),
            1
        );
        assert_eq!(
            sym_multiplicity(&TripleWeight::new([2, 0], [1, 0], [1, 0, 0])),
            0
        );
        assert_eq!(sym_multiplicity(&semi_invariant_weight()), 1);
        assert_eq!(
            sym_multiplicity(&TripleWeight::new([1, 0], [1, 0], [1, 0, 0, 0, 0])),
            1
        );
    }

    #[test]
    fn stabilize_reports_failure() {
        assert_eq!(stabilize(0, 8, |k| k.min(5)).unwrap(), 5);
        assert!(matches!(
            stabilize(0, 8, |k| k),
            Err(HypermatError::Stabilization { .. })
        ));
    }
}
