//! Integer weights of `GL` factors, dominance, and Bott normalization.
//!
//! A weight always carries its full rank: trailing zeros are significant,
//! because the same entries mean different things on groups of different
//! rank once Bott's algorithm reorders them.

use std::fmt;

use serde::{Deserialize, Serialize};

/// An integer weight of `GL_m`, stored at its full rank `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    /// The constant weight `(c, ..., c)` of rank `m`.
    pub fn constant(c: i64, m: usize) -> Self {
        Weight(vec![c; m])
    }

    /// `(0, ..., 0)` of rank `m`.
    pub fn zero(m: usize) -> Self {
        Self::constant(0, m)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Sum of the entries, written `|λ|`.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Weakly decreasing entries.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Dominant with nonnegative last entry.
    pub fn is_partition(&self) -> bool {
        self.is_dominant() && self.0.last().is_none_or(|&x| x >= 0)
    }

    /// Number of nonzero entries of a partition.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&x| x != 0).count()
    }

    /// The dual weight `λ* = (-λ_m, ..., -λ_1)`.
    pub fn dual(&self) -> Self {
        Weight(self.0.iter().rev().map(|x| -x).collect())
    }

    /// Entrywise shift by a constant (tensoring with a power of `det`).
    pub fn twist(&self, c: i64) -> Self {
        Weight(self.0.iter().map(|x| x + c).collect())
    }

    pub fn add(&self, other: &Weight) -> Self {
        assert_eq!(
            self.rank(),
            other.rank(),
            "rank mismatch in weight addition"
        );
        Weight(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        Weight(self.0.iter().map(|x| x * k).collect())
    }

    /// Largest absolute value of an entry.
    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    /// Pad a partition with zeros up to rank `m` (no-op if already that long).
    pub fn padded(&self, m: usize) -> Self {
        let mut v = self.0.clone();
        v.resize(m.max(v.len()), 0);
        Weight(v)
    }

    /// `ρ = (m-1, ..., 1, 0)`.
    pub fn rho(m: usize) -> Self {
        Weight((0..m).rev().map(|i| i as i64).collect())
    }

    /// `λ + (r^I)`: add `r` to the entries indexed by the (0-based) set `indices`.
    pub fn plus_on(&self, r: i64, indices: &[usize]) -> Self {
        let mut v = self.0.clone();
        for &i in indices {
            v[i] += r;
        }
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.to_vec())
    }
}

/// A weight `(α, β, γ)` of `GL(A) × GL(B) × GL(C)` with ranks `(2, 2, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TripleWeight {
    pub a: Weight,
    pub b: Weight,
    pub c: Weight,
}

impl TripleWeight {
    pub fn new(a: impl Into<Weight>, b: impl Into<Weight>, c: impl Into<Weight>) -> Self {
        let t = TripleWeight {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        };
        debug_assert!(
            t.has_valid_ranks(),
            "triple weight must have ranks (2,2,n), n >= 2"
        );
        t
    }

    pub fn n(&self) -> usize {
        self.c.rank()
    }

    pub fn has_valid_ranks(&self) -> bool {
        self.a.rank() == 2 && self.b.rank() == 2 && self.c.rank() >= 2
    }

    pub fn is_dominant(&self) -> bool {
        self.a.is_dominant() && self.b.is_dominant() && self.c.is_dominant()
    }

    /// `|α| = |β| = |γ|`, the only triples that can occur in a polynomial ring
    /// graded by total degree.
    pub fn is_balanced(&self) -> bool {
        self.a.size() == self.b.size() && self.b.size() == self.c.size()
    }

    pub fn max_abs(&self) -> i64 {
        self.a.max_abs().max(self.b.max_abs()).max(self.c.max_abs())
    }

    pub fn add(&self, other: &TripleWeight) -> Self {
        TripleWeight {
            a: self.a.add(&other.a),
            b: self.b.add(&other.b),
            c: self.c.add(&other.c),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        TripleWeight {
            a: self.a.scale(k),
            b: self.b.scale(k),
            c: self.c.scale(k),
        }
    }

    /// Exchange the roles of `A` and `B`.
    pub fn swap_ab(&self) -> Self {
        TripleWeight {
            a: self.b.clone(),
            b: self.a.clone(),
            c: self.c.clone(),
        }
    }

    /// The weight map induced by the Fourier transform: each factor is
    /// dualized and twisted by the determinant of `V*` restricted to it,
    /// `α ↦ (-α₂-2n, -α₁-2n)`, `γ ↦ (-γ_n-4, ..., -γ₁-4)`.
    pub fn fourier(&self) -> Self {
        let n = self.n() as i64;
        TripleWeight {
            a: self.a.dual().twist(-2 * n),
            b: self.b.dual().twist(-2 * n),
            c: self.c.dual().twist(-4),
        }
    }
}

impl fmt::Display for TripleWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}", self.a, self.b, self.c)
    }
}

/// The outcome of Bott normalization: either zero, or a sign times a
/// dominant weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SignedWeight {
    Zero,
    Nonzero { sign: i64, weight: Weight },
}

impl SignedWeight {
    pub fn is_zero(&self) -> bool {
        matches!(self, SignedWeight::Zero)
    }

    pub fn sign(&self) -> i64 {
        match self {
            SignedWeight::Zero => 0,
            SignedWeight::Nonzero { sign, .. } => *sign,
        }
    }

    pub fn weight(&self) -> Option<&Weight> {
        match self {
            SignedWeight::Zero => None,
            SignedWeight::Nonzero { weight, .. } => Some(weight),
        }
    }
}

/// Sort `v` into weakly decreasing order and return the number of
/// inversions the stable sort removed.
fn sort_desc_counting_inversions(v: &mut [i64]) -> usize {
    let mut inversions = 0;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            inversions += 1;
            j -= 1;
        }
    }
    inversions
}

/// Bott's algorithm on a single weight: returns zero if `λ+ρ` has a repeated
/// entry, and otherwise `(sgn σ, sort(λ+ρ) - ρ)` with `σ` the sorting
/// permutation.
pub fn bott_normalize(lambda: &Weight) -> SignedWeight {
    bott_normalize_with_length(lambda).0
}

/// Like [`bott_normalize`], also reporting the length of the sorting
/// permutation (the cohomological degree in Bott's theorem).
pub fn bott_normalize_with_length(lambda: &Weight) -> (SignedWeight, usize) {
    let m = lambda.rank();
    let rho = Weight::rho(m);
    let mut v: Vec<i64> = lambda.add(&rho).0;
    let inv = sort_desc_counting_inversions(&mut v);
    if v.windows(2).any(|w| w[0] == w[1]) {
        return (SignedWeight::Zero, inv);
    }
    let weight = Weight(v.iter().zip(&rho.0).map(|(x, r)| x - r).collect());
    let sign = if inv.is_multiple_of(2) { 1 } else { -1 };
    (SignedWeight::Nonzero { sign, weight }, inv)
}

/// Factorwise Bott normalization of a triple: a sign and a dominant triple,
/// or `None` when any factor normalizes to zero.
pub fn triple_normalize(t: &TripleWeight) -> Option<(i64, TripleWeight)> {
    let (sa, a) = match bott_normalize(&t.a) {
        SignedWeight::Zero => return None,
        SignedWeight::Nonzero { sign, weight } => (sign, weight),
    };
    let (sb, b) = match bott_normalize(&t.b) {
        SignedWeight::Zero => return None,
        SignedWeight::Nonzero { sign, weight } => (sign, weight),
    };
    let (sc, c) = match bott_normalize(&t.c) {
        SignedWeight::Zero => return None,
        SignedWeight::Nonzero { sign, weight } => (sign, weight),
    };
    Some((sa * sb * sc, TripleWeight { a, b, c }))
}

/// All `k`-element subsets of `0..m` in lexicographic order.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= m {
        go(0, m, k, &mut Vec::new(), &mut out);
    }
    out
}

/// All dominant weights of rank `m` with entries in `[lo, hi]` and size `d`.
pub fn dominant_weights_of_size(m: usize, lo: i64, hi: i64, d: i64) -> Vec<Weight> {
    fn go(m: usize, lo: i64, cap: i64, remaining: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        let left = m - cur.len();
        if left == 0 {
            if remaining == 0 {
                out.push(Weight(cur.clone()));
            }
            return;
        }
        // Entries remaining are all in [lo, x], so the sum lies in [left*lo, left*x].
        let mut x = cap;
        while x >= lo {
            let max_rest = x * (left as i64 - 1);
            let min_rest = lo * (left as i64 - 1);
            if remaining - x > max_rest {
                break;
            }
            if remaining - x >= min_rest {
                cur.push(x);
                go(m, lo, x, remaining - x, cur, out);
                cur.pop();
            }
            x -= 1;
        }
    }
    let mut out = Vec::new();
    if m > 0 && lo <= hi {
        go(m, lo, hi, d, &mut Vec::new(), &mut out);
    }
    out
}

/// All dominant weights of rank `m` with entries in `[lo, hi]`.
pub fn dominant_weights_in_box(m: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    for d in (lo * m as i64)..=(hi * m as i64) {
        out.extend(dominant_weights_of_size(m, lo, hi, d));
    }
    out
}

/// All partitions of `d` with at most `rows` parts, padded to rank `rows`.
pub fn partitions(d: i64, rows: usize) -> Vec<Weight> {
    if d < 0 {
        return Vec::new();
    }
    dominant_weights_of_size(rows, 0, d, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominant_weight_is_fixed() {
        assert_eq!(
            bott_normalize(&Weight::from([2, 1, 0])),
            SignedWeight::Nonzero {
                sign: 1,
                weight: Weight::from([2, 1, 0])
            }
        );
    }

    #[test]
    fn repeated_entry_gives_zero() {
        assert!(bott_normalize(&Weight::from([-1, 0])).is_zero());
    }

    #[test]
    fn shifted_subset_example() {
        // (-1,-1,-2) + (5^{1,3}) = (4,-1,3) normalizes to -(4,2,0).
        let lam = Weight::from([-1, -1, -2]).plus_on(5, &[0, 2]);
        assert_eq!(lam, Weight::from([4, -1, 3]));
        assert_eq!(
            bott_normalize(&lam),
            SignedWeight::Nonzero {
                sign: -1,
                weight: Weight::from([4, 2, 0])
            }
        );
    }

    #[test]
    fn triple_examples() {
        let t = TripleWeight::new([1, 0], [1, 0], [1, 0, 0]);
        assert_eq!(triple_normalize(&t), Some((1, t.clone())));
        assert_eq!(
            triple_normalize(&TripleWeight::new([-1, 0], [2, 2], [3, 2, 1])),
            None
        );
        // (0,1) + ρ = (1,1) repeats, so this triple is zero.
        assert_eq!(
            triple_normalize(&TripleWeight::new([0, 1], [0, 1], [1, 0, 0])),
            None
        );
        // A genuine double swap: (0,2) -> -(1,1) on both factors.
        let (s, w) = triple_normalize(&TripleWeight::new([0, 2], [0, 2], [1, 0, 0])).unwrap();
        assert_eq!(s, 1);
        assert_eq!(w, TripleWeight::new([1, 1], [1, 1], [1, 0, 0]));
    }

    #[test]
    fn fourier_is_involution_and_matches_dual_witnesses() {
        let n = 5;
        let d2 = TripleWeight::new(
            [-n - 2, -2 * n + 2],
            [-n - 2, -2 * n + 2],
            vec![-3; n as usize],
        );
        let d8 = TripleWeight::new([-2, 2 - n], [-2, 2 - n], vec![-1; n as usize]);
        assert_eq!(d2.fourier(), d8);
        assert_eq!(d8.fourier(), d2);
    }

    #[test]
    fn enumerations() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(partitions(4, 2).len(), 3);
        assert_eq!(partitions(5, 3).len(), 5);
        assert!(dominant_weights_of_size(3, -2, 2, 0)
            .iter()
            .all(|w| w.is_dominant() && w.size() == 0));
        assert_eq!(dominant_weights_in_box(2, 0, 1).len(), 3);
    }
}
