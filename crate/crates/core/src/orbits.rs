//! The orbits of `GL(A)×GL(B)×GL(C)` on `A⊗B⊗C`, the simple equivariant
//! D-module labels, and the static geometric data attached to them.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{HypermatError, Result};

/// An orbit `O_i`, `0 ≤ i ≤ 9`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbit(pub u8);

impl Orbit {
    pub fn index(self) -> u8 {
        self.0
    }

    /// `dim O_i` as a function of `n`.
    pub fn dim(self, n: usize) -> usize {
        match self.0 {
            0 => 0,
            1 => n + 2,
            2 => n + 3,
            3 | 4 => 2 * n + 1,
            5 => 2 * n + 3,
            6 => 2 * n + 4,
            7 => 3 * n + 2,
            8 => 3 * n + 3,
            9 => 4 * n,
            _ => unreachable!("orbit index out of range"),
        }
    }

    /// Codimension of the closure in `V = A⊗B⊗C` (`dim V = 4n`).
    pub fn codim(self, n: usize) -> usize {
        4 * n - self.dim(n)
    }

    pub fn exists(self, n: usize) -> bool {
        self.0 <= 8 || n >= 4
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{}", self.0)
    }
}

impl Serialize for Orbit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Orbit {
    type Err = HypermatError;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['O', 'o']);
        match t.parse::<u8>() {
            Ok(i) if i <= 9 => Ok(Orbit(i)),
            _ => Err(HypermatError::UnknownLabel(s.to_string())),
        }
    }
}

/// All orbits present for a given `n`.
pub fn orbits(n: usize) -> Vec<Orbit> {
    (0..=9).map(Orbit).filter(|o| o.exists(n)).collect()
}

/// Simple equivariant D-modules and the composite labels used in ledgers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleLabel {
    /// `D_i`: the intersection homology module of `Ō_i` with trivial local system.
    D(u8),
    /// `D_6'`: supported on `Ō_6`, nontrivial local system.
    D6Prime,
    /// The simple supported at the origin (`= D_0`).
    E,
    /// The polynomial ring (`= D_8` at `n = 3`, `D_9` for `n ≥ 4`).
    S,
    /// `Q_1 = [D_2] + [D_0]`.
    Q1,
    /// `Q_2 = [D_6] + [D_2] + [D_0]`.
    Q2,
    /// `Q_3 = [D_8] + [D_6] + [D_2] + [D_0]`.
    Q3,
}

impl SimpleLabel {
    /// The basic simples (no aliases or composites) present for `n`, in
    /// canonical order `D0, D1, ..., D6, D6', D7, D8, (D9)`.
    pub fn simples(n: usize) -> Vec<SimpleLabel> {
        let mut v: Vec<SimpleLabel> = (0..=6).map(SimpleLabel::D).collect();
        v.push(SimpleLabel::D6Prime);
        v.push(SimpleLabel::D(7));
        v.push(SimpleLabel::D(8));
        if n >= 4 {
            v.push(SimpleLabel::D(9));
        }
        v
    }

    pub fn is_basic(self) -> bool {
        matches!(self, SimpleLabel::D(_) | SimpleLabel::D6Prime)
    }

    /// Resolve `E` and `S` to basic labels.
    pub fn resolve(self, n: usize) -> SimpleLabel {
        match self {
            SimpleLabel::E => SimpleLabel::D(0),
            SimpleLabel::S => SimpleLabel::D(if n == 3 { 8 } else { 9 }),
            other => other,
        }
    }

    /// Expand to basic composition factors (with repetition).
    pub fn expand(self, n: usize) -> Vec<SimpleLabel> {
        use SimpleLabel::*;
        match self {
            Q1 => vec![D(2), D(0)],
            Q2 => vec![D(6), D(2), D(0)],
            Q3 => vec![D(8), D(6), D(2), D(0)],
            other => vec![other.resolve(n)],
        }
    }

    /// The orbit whose closure supports this simple.
    pub fn support(self, n: usize) -> Option<Orbit> {
        match self.resolve(n) {
            SimpleLabel::D(i) => Some(Orbit(i)),
            SimpleLabel::D6Prime => Some(Orbit(6)),
            _ => None,
        }
    }

    pub fn is_valid_for(self, n: usize) -> bool {
        match self {
            SimpleLabel::D(9) => n >= 4,
            SimpleLabel::D(i) => i <= 9,
            _ => true,
        }
    }

    /// Parse labels like `D5`, `D6'`, `D6p`, `E`, `S`, `Q2`.
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleLabel::D(i) => write!(f, "D{i}"),
            SimpleLabel::D6Prime => write!(f, "D6'"),
            SimpleLabel::E => write!(f, "E"),
            SimpleLabel::S => write!(f, "S"),
            SimpleLabel::Q1 => write!(f, "Q1"),
            SimpleLabel::Q2 => write!(f, "Q2"),
            SimpleLabel::Q3 => write!(f, "Q3"),
        }
    }
}

impl Serialize for SimpleLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for SimpleLabel {
    type Err = HypermatError;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "E" => return Ok(SimpleLabel::E),
            "S" => return Ok(SimpleLabel::S),
            "Q1" => return Ok(SimpleLabel::Q1),
            "Q2" => return Ok(SimpleLabel::Q2),
            "Q3" => return Ok(SimpleLabel::Q3),
            "D6'" | "D6p" | "D6prime" | "D6′" => return Ok(SimpleLabel::D6Prime),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix('D') {
            if let Ok(i) = rest.parse::<u8>() {
                if i <= 9 {
                    return Ok(SimpleLabel::D(i));
                }
            }
        }
        Err(HypermatError::UnknownLabel(s.to_string()))
    }
}

/// The orbit permutation induced by the Fourier transform (projective
/// duality of orbit closures): `n = 3` swaps `(0,8), (1,7), (2,6)`; `n ≥ 4`
/// swaps `(0,9), (1,7), (2,8)`; all other orbits are fixed.
pub fn fourier_orbit(o: Orbit, n: usize) -> Orbit {
    let pairs: &[(u8, u8)] = if n == 3 {
        &[(0, 8), (1, 7), (2, 6)]
    } else {
        &[(0, 9), (1, 7), (2, 8)]
    };
    for &(a, b) in pairs {
        if o.0 == a {
            return Orbit(b);
        }
        if o.0 == b {
            return Orbit(a);
        }
    }
    o
}

/// The Fourier transform on simple labels. `D3`, `D4`, `D5` and `D6'` are
/// fixed (and `D6` for `n ≥ 4`).
pub fn fourier(s: SimpleLabel, n: usize) -> Result<SimpleLabel> {
    if n < 3 {
        return Err(HypermatError::BadN(n));
    }
    if !s.is_valid_for(n) {
        return Err(HypermatError::UnknownLabel(format!("{s} at n = {n}")));
    }
    Ok(match s.resolve(n) {
        SimpleLabel::D(i) => SimpleLabel::D(fourier_orbit(Orbit(i), n).0),
        other => other,
    })
}

/// Supports of the characteristic cycle (all multiplicities one).
pub fn conormal_cycle(s: SimpleLabel, n: usize) -> Vec<Orbit> {
    match s.resolve(n) {
        SimpleLabel::D(5) => vec![Orbit(5), Orbit(4), Orbit(3)],
        SimpleLabel::D6Prime if n == 3 => vec![Orbit(6), Orbit(5), Orbit(2)],
        SimpleLabel::D6Prime => vec![Orbit(6), Orbit(5)],
        SimpleLabel::D(i) => vec![Orbit(i)],
        _ => Vec::new(),
    }
}

/// Determinantal description of an orbit closure.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DeterminantalId {
    /// The flattening, e.g. `"(A⊗B) vs C"`.
    pub flattening: String,
    /// The closure is the rank `≤ p` locus of that flattening.
    pub rank_at_most: usize,
}

/// One row of the orbit catalog.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitEntry {
    pub label: Orbit,
    pub dim: usize,
    pub codim: usize,
    pub representative: &'static str,
    pub closure_covers: Vec<Orbit>,
    pub subspace_id: Option<[usize; 3]>,
    pub determinantal_id: Option<DeterminantalId>,
    /// `Ō_3` and `Ō_4` are each a rank locus of a single flattening, but the
    /// rank conditions on the `4×n` matrix `X` and on `XᵗX` only cut out
    /// their union.
    pub cut_out_by_rank_conditions: bool,
    pub component_group: &'static str,
    pub dual_orbit: Option<Orbit>,
    pub fourier_image: Orbit,
    pub dense: bool,
    pub hypersurface: bool,
    pub provenance: &'static str,
}

/// Hasse diagram edges `(larger, smaller)` of orbit closures for `n ≥ 4`.
pub const HASSE_EDGES: [(u8, u8); 11] = [
    (9, 8),
    (8, 7),
    (7, 6),
    (6, 5),
    (5, 4),
    (5, 2),
    (5, 3),
    (4, 1),
    (2, 1),
    (3, 1),
    (1, 0),
];

/// Hasse edges present for `n` (orbit 9 removed at `n = 3`).
pub fn hasse_edges(n: usize) -> Vec<(Orbit, Orbit)> {
    HASSE_EDGES
        .iter()
        .filter(|(a, _)| Orbit(*a).exists(n))
        .map(|&(a, b)| (Orbit(a), Orbit(b)))
        .collect()
}

const REPRESENTATIVES: [&str; 10] = [
    "0",
    "a1⊗b1⊗c1",
    "a1⊗b1⊗c1 + a2⊗b2⊗c1",
    "a1⊗b1⊗c1 + a1⊗b2⊗c2",
    "a1⊗b1⊗c1 + a2⊗b1⊗c2",
    "a1⊗(b1⊗c1 + b2⊗c2) + a2⊗b1⊗c2",
    "a1⊗b1⊗c1 + a2⊗b2⊗c2",
    "a1⊗(b1⊗c1 + b2⊗c3) + a2⊗b1⊗c2",
    "a1⊗(b1⊗c1 + b2⊗c2) + a2⊗(b1⊗c2 + b2⊗c3)",
    "a1⊗(b1⊗c1 + b2⊗c3) + a2⊗(b1⊗c2 + b2⊗c4)",
];

fn subspace_id(o: Orbit) -> Option<[usize; 3]> {
    match o.0 {
        1 => Some([1, 1, 1]),
        2 => Some([2, 2, 1]),
        3 => Some([1, 2, 2]),
        4 => Some([2, 1, 2]),
        6 => Some([2, 2, 2]),
        8 => Some([2, 2, 3]),
        9 => Some([2, 2, 4]),
        _ => None,
    }
}

fn determinantal_id(o: Orbit, n: usize) -> Option<DeterminantalId> {
    let main = |p: usize| {
        Some(DeterminantalId {
            flattening: if n == 3 {
                "(A⊗B) vs C".into()
            } else {
                "C vs (A⊗B)".into()
            },
            rank_at_most: p,
        })
    };
    match o.0 {
        0 => main(0),
        2 => main(1),
        6 => main(2),
        8 => main(3),
        9 => main(4),
        3 => Some(DeterminantalId {
            flattening: "A vs (B⊗C)".into(),
            rank_at_most: 1,
        }),
        4 => Some(DeterminantalId {
            flattening: "B vs (A⊗C)".into(),
            rank_at_most: 1,
        }),
        _ => None,
    }
}

/// The complete orbit catalog for `n ≥ 3`.
pub fn orbit_catalog(n: usize) -> Result<Vec<OrbitEntry>> {
    if n < 3 {
        return Err(HypermatError::BadN(n));
    }
    let edges = hasse_edges(n);
    let dense = if n == 3 { 8 } else { 9 };
    Ok(orbits(n)
        .into_iter()
        .map(|o| OrbitEntry {
            label: o,
            dim: o.dim(n),
            codim: o.codim(n),
            representative: REPRESENTATIVES[o.0 as usize],
            closure_covers: edges
                .iter()
                .filter(|(a, _)| *a == o)
                .map(|(_, b)| *b)
                .collect(),
            subspace_id: subspace_id(o),
            determinantal_id: determinantal_id(o, n),
            cut_out_by_rank_conditions: !matches!(o.0, 3 | 4),
            component_group: if o.0 == 6 { "Z/2" } else { "trivial" },
            dual_orbit: match o.0 {
                1 => Some(Orbit(7)),
                7 => Some(Orbit(1)),
                _ => None,
            },
            fourier_image: fourier_orbit(o, n),
            dense: o.0 == dense,
            hypersurface: o.codim(n) == 1,
            provenance: "orbit-classification",
        })
        .collect())
}

/// Hasse diagram in Graphviz DOT format.
pub fn hasse_dot(n: usize) -> Result<String> {
    let cat = orbit_catalog(n)?;
    let mut s = format!("graph hasse_n{n} {{\n  rankdir=BT;\n");
    for e in &cat {
        s.push_str(&format!(
            "  {} [label=\"{} (dim {})\"];\n",
            e.label, e.label, e.dim
        ));
    }
    for (a, b) in hasse_edges(n) {
        s.push_str(&format!("  {b} -- {a};\n"));
    }
    s.push_str("}\n");
    Ok(s)
}

/// Constants of the degree-6 semi-invariant `f` at `n = 3`.
#[derive(Clone, Debug, Serialize)]
pub struct SemiInvariant {
    pub degree: i64,
    pub weight: crate::weights::TripleWeight,
    /// Roots of the b-function `(s+1)²(s+3/2)²(s+2)²` as `(numerator,
    /// denominator, multiplicity)` of `-root`.
    pub b_function_roots: Vec<(i64, i64, u32)>,
    pub provenance: &'static str,
}

pub fn semi_invariant_n3() -> SemiInvariant {
    SemiInvariant {
        degree: 6,
        weight: crate::schur::semi_invariant_weight(),
        b_function_roots: vec![(1, 1, 2), (3, 2, 2), (2, 1, 2)],
        provenance: "semi-invariant-n3",
    }
}

/// Singularity facts recorded as metadata.
pub fn o7_closure_is_normal(_n: usize) -> bool {
    false
}

pub fn o7_closure_is_cohen_macaulay(n: usize) -> bool {
    n < 4
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_and_flags() {
        let cat = orbit_catalog(5).unwrap();
        assert_eq!(cat.iter().find(|e| e.label == Orbit(5)).unwrap().dim, 13);
        let cat4 = orbit_catalog(4).unwrap();
        assert!(
            cat4.iter()
                .find(|e| e.label == Orbit(8))
                .unwrap()
                .hypersurface
        );
        let cat3 = orbit_catalog(3).unwrap();
        assert_eq!(cat3.len(), 9);
        assert!(cat3.iter().find(|e| e.label == Orbit(8)).unwrap().dense);
        assert!(
            cat3.iter()
                .find(|e| e.label == Orbit(7))
                .unwrap()
                .hypersurface
        );
        for n in 3..=7 {
            for e in orbit_catalog(n).unwrap() {
                assert_eq!(e.component_group == "Z/2", e.label == Orbit(6));
                assert_eq!(
                    e.hypersurface,
                    (n == 3 && e.label == Orbit(7)) || (n == 4 && e.label == Orbit(8))
                );
            }
        }
        assert!(orbit_catalog(2).is_err());
    }

    #[test]
    fn hasse_edges_decrease_dimension() {
        for n in 3..=8 {
            for (a, b) in hasse_edges(n) {
                assert!(a.dim(n) > b.dim(n));
            }
        }
        assert_eq!(hasse_edges(3).len(), 10);
    }

    #[test]
    fn fourier_labels() {
        use SimpleLabel::*;
        assert_eq!(fourier(D(2), 3).unwrap(), D(6));
        assert_eq!(fourier(D(0), 4).unwrap(), D(9));
        for n in 3..=6 {
            assert_eq!(fourier(D(3), n).unwrap(), D(3));
            for s in SimpleLabel::simples(n) {
                assert_eq!(fourier(fourier(s, n).unwrap(), n).unwrap(), s);
            }
        }
        assert!(fourier(D(9), 3).is_err());
    }

    #[test]
    fn cycles_are_compatible_with_fourier() {
        for n in 3..=6 {
            for s in SimpleLabel::simples(n) {
                let mut lhs: Vec<Orbit> = conormal_cycle(fourier(s, n).unwrap(), n);
                let mut rhs: Vec<Orbit> = conormal_cycle(s, n)
                    .into_iter()
                    .map(|o| fourier_orbit(o, n))
                    .collect();
                lhs.sort();
                rhs.sort();
                assert_eq!(lhs, rhs, "{s} at n = {n}");
            }
        }
    }

    #[test]
    fn label_parsing() {
        assert_eq!("D6'".parse::<SimpleLabel>().unwrap(), SimpleLabel::D6Prime);
        assert_eq!("D6p".parse::<SimpleLabel>().unwrap(), SimpleLabel::D6Prime);
        assert_eq!("D4".parse::<SimpleLabel>().unwrap(), SimpleLabel::D(4));
        assert!("D10".parse::<SimpleLabel>().is_err());
        assert_eq!("O7".parse::<Orbit>().unwrap(), Orbit(7));
        assert_eq!(SimpleLabel::Q3.expand(4).len(), 4);
        assert_eq!(SimpleLabel::S.resolve(3), SimpleLabel::D(8));
    }
}
