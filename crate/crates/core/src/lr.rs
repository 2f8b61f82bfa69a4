//! Littlewood–Richardson coefficients by enumeration of LR tableaux, and the
//! plethysm `S_μ(B⊗C)` restricted to `GL(B)×GL(C)` with `dim B = 2`.

use std::collections::BTreeMap;

use crate::error::{HypermatError, Result};
use crate::weights::{partitions, Weight};

/// Strip trailing zeros of a partition.
fn trimmed(p: &[i64]) -> Vec<i64> {
    let mut v = p.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Decompose the skew Schur function `s_{outer/inner}` into Schur functions
/// `s_ν` with `ν` having at most `max_rows` rows. Keys are partitions padded
/// to `max_rows`.
///
/// Enumerates Littlewood–Richardson tableaux: fillings that are weakly
/// increasing along rows, strictly increasing down columns, and whose reverse
/// reading word (rows top to bottom, each row right to left) is a lattice
/// word.
pub fn skew_decompose(outer: &[i64], inner: &[i64], max_rows: usize) -> BTreeMap<Weight, u64> {
    let outer = trimmed(outer);
    let rows = outer.len();
    let mut inn = inner.to_vec();
    inn.resize(rows.max(inn.len()), 0);
    let mut out = BTreeMap::new();
    if inn.len() > rows && inn[rows..].iter().any(|&x| x != 0) {
        return out;
    }
    if (0..rows).any(|r| inn[r] > outer[r]) {
        return out;
    }
    // Cells in reading order; each row right to left.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 0..rows {
        for c in (inn[r] as usize..outer[r] as usize).rev() {
            cells.push((r, c));
        }
    }
    let width = outer.first().copied().unwrap_or(0) as usize;
    let mut grid = vec![vec![0usize; width]; rows];
    let mut content = vec![0i64; max_rows + 1];

    #[allow(clippy::too_many_arguments)]
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        inn: &[i64],
        outer: &[i64],
        grid: &mut Vec<Vec<usize>>,
        content: &mut Vec<i64>,
        max_rows: usize,
        out: &mut BTreeMap<Weight, u64>,
    ) {
        if idx == cells.len() {
            let key = Weight(content[1..].to_vec());
            *out.entry(key).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[idx];
        // Row weakly increasing: value at most the right neighbour (if filled).
        let mut hi = max_rows;
        if (c + 1) < outer[r] as usize {
            hi = hi.min(grid[r][c + 1]);
        }
        // Column strict: value greater than the cell above, if that cell is skew.
        let mut lo = 1;
        if r > 0 && c >= inn[r - 1] as usize {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        // Lattice word: a value v > 1 needs content[v] < content[v-1].
        for v in lo..=hi {
            if v > 1 && content[v] >= content[v - 1] {
                continue;
            }
            grid[r][c] = v;
            content[v] += 1;
            go(idx + 1, cells, inn, outer, grid, content, max_rows, out);
            content[v] -= 1;
        }
        grid[r][c] = 0;
    }
    go(
        0,
        &cells,
        &inn,
        &outer,
        &mut grid,
        &mut content,
        max_rows,
        &mut out,
    );
    out
}

/// `c^λ_{μν}` for partitions.
pub fn lr_coefficient(lambda: &[i64], mu: &[i64], nu: &[i64]) -> u64 {
    let nu_t = trimmed(nu);
    let rows = nu_t.len().max(1);
    let mut key = nu_t.clone();
    key.resize(rows, 0);
    let m = skew_decompose(lambda, mu, rows);
    m.get(&Weight(key)).copied().unwrap_or(0)
}

/// Decomposition of `S_λ ⊗ S_μ` for `GL_m`, with `λ, μ` dominant of rank `m`.
/// Negative entries are handled by determinant twists.
pub fn lr_decompose(lambda: &Weight, mu: &Weight, m: usize) -> Result<BTreeMap<Weight, u64>> {
    if lambda.rank() != m || mu.rank() != m {
        return Err(HypermatError::RankMismatch(format!(
            "{lambda} and {mu} at rank {m}"
        )));
    }
    if !lambda.is_dominant() {
        return Err(HypermatError::NotDominant(lambda.to_string()));
    }
    if !mu.is_dominant() {
        return Err(HypermatError::NotDominant(mu.to_string()));
    }
    let cl = lambda.entries().last().copied().unwrap_or(0);
    let cm = mu.entries().last().copied().unwrap_or(0);
    let l = lambda.twist(-cl);
    let u = mu.twist(-cm);
    let d = l.size() + u.size();
    let mut out = BTreeMap::new();
    // ν ⊇ λ with ν_i <= λ_i + μ_1, at most m rows.
    for nu in partitions(d, m) {
        let ok = nu
            .entries()
            .iter()
            .zip(l.entries())
            .all(|(n, x)| n >= x && *n <= x + u.entries()[0]);
        if !ok {
            continue;
        }
        let skew = skew_decompose(nu.entries(), l.entries(), m);
        if let Some(&c) = skew.get(&u) {
            out.insert(nu.twist(cl + cm), c);
        }
    }
    Ok(out)
}

/// `[S_μ(B⊗C) : S_βB ⊗ S_γC]` for `dim B = 2`, `dim C = m`, with `μ` a
/// dominant weight of `GL(B⊗C) = GL_{2m}`.
///
/// As a `GL(C)`-representation graded by the torus of `GL(B)`,
/// `S_μ(C·y_1 ⊕ C·y_2) = ⊕ c^μ_{κν} S_κC ⊗ S_νC · y_1^{|κ|} y_2^{|ν|}`, so the
/// multiplicity of `S_γC` at `B`-weight `(b_1, b_2)` is
/// `M(b) = Σ_{κ,ν} c^μ_{κν} c^γ_{κν}`; the `GL(B)` multiplicity is
/// `M(β) - M(β_1+1, β_2-1)`. Determinant twists use
/// `det(B⊗C) = (det B)^m (det C)^2`.
pub fn gl2_glm_plethysm_mult(mu: &Weight, beta: &Weight, gamma: &Weight) -> Result<u64> {
    let m = gamma.rank();
    if mu.rank() != 2 * m || beta.rank() != 2 {
        return Err(HypermatError::RankMismatch(format!(
            "μ has rank {}, β rank {}, γ rank {m}",
            mu.rank(),
            beta.rank()
        )));
    }
    if !mu.is_dominant() {
        return Err(HypermatError::NotDominant(mu.to_string()));
    }
    if !beta.is_dominant() || !gamma.is_dominant() {
        return Ok(0);
    }
    let c = mu.entries()[2 * m - 1];
    let mu = mu.twist(-c);
    let beta = beta.twist(-(m as i64) * c);
    let gamma = gamma.twist(-2 * c);
    let d = mu.size();
    if beta.size() != d || gamma.size() != d || !beta.is_partition() || !gamma.is_partition() {
        return Ok(0);
    }
    let big_m = |b1: i64, b2: i64| -> u64 {
        if b1 < 0 || b2 < 0 {
            return 0;
        }
        let mut total = 0;
        for kappa in partitions(b1, m) {
            if kappa
                .entries()
                .iter()
                .zip(gamma.entries())
                .any(|(k, g)| k > g)
            {
                continue;
            }
            if kappa.entries().iter().zip(mu.entries()).any(|(k, u)| k > u) {
                continue;
            }
            let from_gamma = skew_decompose(gamma.entries(), kappa.entries(), m);
            if from_gamma.is_empty() {
                continue;
            }
            let from_mu = skew_decompose(mu.entries(), kappa.entries(), m);
            for (nu, cg) in &from_gamma {
                if let Some(cm) = from_mu.get(nu) {
                    total += cg * cm;
                }
            }
        }
        total
    };
    let (b1, b2) = (beta.entries()[0], beta.entries()[1]);
    let v = big_m(b1, b2) as i64 - big_m(b1 + 1, b2 - 1) as i64;
    debug_assert!(v >= 0);
    Ok(v.max(0) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentChar;
    use crate::schur::schur_char;
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    /// Peel a symmetric `GL_m` character into Schur functions (lex-leading).
    fn peel(mut ch: LaurentChar) -> BTreeMap<Weight, u64> {
        let mut out = BTreeMap::new();
        while let Some((e, c)) = ch.leading_term() {
            let lam = Weight(e.clone());
            let mult = c.to_u64().unwrap();
            let s = schur_char(&lam).unwrap().scale(&BigInt::from(mult));
            ch = &ch - &s;
            out.insert(lam, mult);
        }
        out
    }

    #[test]
    fn box_times_box() {
        let d = lr_decompose(&w(&[1, 0]), &w(&[1, 0]), 2).unwrap();
        assert_eq!(d, BTreeMap::from([(w(&[2, 0]), 1), (w(&[1, 1]), 1)]));
    }

    #[test]
    fn pieri_rows() {
        let (a, t) = (20, 3);
        let d = lr_decompose(&w(&[2, 0]), &w(&[a - t, t]), 2).unwrap();
        let expected = BTreeMap::from([
            (w(&[a - t + 2, t]), 1),
            (w(&[a - t + 1, t + 1]), 1),
            (w(&[a - t, t + 2]), 1),
        ]);
        assert_eq!(d, expected);
        let a = 7;
        let d = lr_decompose(&w(&[1, 1, 0, 0]), &w(&[a, 0, 0, 0]), 4).unwrap();
        assert_eq!(
            d,
            BTreeMap::from([(w(&[a, 1, 1, 0]), 1), (w(&[a + 1, 1, 0, 0]), 1)])
        );
    }

    #[test]
    fn lr_matches_character_multiplication() {
        let cases = [
            (vec![2, 1, 0], vec![2, 1, 0]),
            (vec![3, 1, 0], vec![1, 1, 0]),
            (vec![2, 2, 0], vec![2, 1, 1]),
            (vec![1, 0, -1], vec![2, 0, 0]),
        ];
        for (l, u) in cases {
            let (l, u) = (w(&l), w(&u));
            let prod = &schur_char(&l).unwrap() * &schur_char(&u).unwrap();
            assert_eq!(lr_decompose(&l, &u, 3).unwrap(), peel(prod), "{l} ⊗ {u}");
        }
    }

    #[test]
    fn classic_coefficient() {
        assert_eq!(lr_coefficient(&[3, 2, 1], &[2, 1], &[2, 1]), 2);
        assert_eq!(lr_coefficient(&[4, 2], &[2, 1], &[2, 1]), 1);
    }

    #[test]
    fn gl2_glm_matches_character_oracle() {
        // S_μ(B⊗C) for dim C = 2 via explicit characters.
        for mu in [w(&[2, 1, 0, 0]), w(&[2, 2, 1, 0]), w(&[3, 1, 1, 0])] {
            let ch = schur_char(&mu).unwrap();
            let images = vec![
                vec![1, 0, 1, 0],
                vec![1, 0, 0, 1],
                vec![0, 1, 1, 0],
                vec![0, 1, 0, 1],
            ];
            let restricted = ch.substitute_monomials(&images, 4);
            let oracle = crate::schur::peel_gl2_gl2(restricted).unwrap();
            for ((b, g), mult) in &oracle.terms {
                assert_eq!(
                    gl2_glm_plethysm_mult(&mu, b, g).unwrap(),
                    *mult,
                    "μ={mu} β={b} γ={g}"
                );
            }
            let total: u64 = oracle.terms.values().sum();
            let d = mu.size();
            let mut again = 0;
            for b in partitions(d, 2) {
                for g in partitions(d, 2) {
                    again += gl2_glm_plethysm_mult(&mu, &b, &g).unwrap();
                }
            }
            assert_eq!(again, total);
        }
    }
}
