//! Quivers with relations for the category of equivariant D-modules on
//! `2×2×n` hypermatrices, path spaces modulo relations, symmetry checks, and
//! string modules for the finite-type case.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{HypermatError, Result};
use crate::orbits::{fourier, SimpleLabel};

/// Longest path length explored before declaring a path space infinite.
pub const DEPTH_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub name: String,
    pub source: SimpleLabel,
    pub target: SimpleLabel,
}

/// A path as a sequence of arrow indices, composed left to right.
pub type Path = Vec<usize>;

/// `Σ c·path = 0`; every path shares source and target.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Relation {
    pub terms: Vec<(i64, Path)>,
}

impl Relation {
    pub fn monomial(p: Path) -> Self {
        Relation {
            terms: vec![(1, p)],
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn normalized(mut self) -> Self {
        self.terms.sort_by(|a, b| a.1.cmp(&b.1));
        if let Some(&(c, _)) = self.terms.first() {
            if c < 0 {
                for t in &mut self.terms {
                    t.0 = -t.0;
                }
            }
        }
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Quiver {
    pub n: usize,
    pub vertices: Vec<SimpleLabel>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub provenance: &'static str,
}

fn v(i: u8) -> SimpleLabel {
    SimpleLabel::D(i)
}

const P6: SimpleLabel = SimpleLabel::D6Prime;

struct Builder {
    arrows: Vec<Arrow>,
}

impl Builder {
    fn pair(&mut self, a: &str, b: &str, x: SimpleLabel, y: SimpleLabel) {
        self.arrows.push(Arrow {
            name: a.into(),
            source: x,
            target: y,
        });
        self.arrows.push(Arrow {
            name: b.into(),
            source: y,
            target: x,
        });
    }
}

impl Quiver {
    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    fn path_by_names(&self, names: &[&str]) -> Path {
        names
            .iter()
            .map(|s| self.arrow_index(s).expect("known arrow"))
            .collect()
    }

    /// The unique arrow `x → y`, if any.
    pub fn arrow_between(&self, x: SimpleLabel, y: SimpleLabel) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&i| self.arrows[i].source == x && self.arrows[i].target == y)
            .collect()
    }

    fn is_path(&self, p: &[usize]) -> bool {
        p.windows(2)
            .all(|w| self.arrows[w[0]].target == self.arrows[w[1]].source)
    }

    fn endpoints(&self, p: &[usize]) -> (SimpleLabel, SimpleLabel) {
        (
            self.arrows[p[0]].source,
            self.arrows[*p.last().unwrap()].target,
        )
    }

    /// Every 2-cycle `x → y → x` as a monomial relation.
    fn two_cycles(&self) -> Vec<Relation> {
        let mut out = Vec::new();
        for i in 0..self.arrows.len() {
            for j in self.arrow_between(self.arrows[i].target, self.arrows[i].source) {
                out.push(Relation::monomial(vec![i, j]));
            }
        }
        out
    }

    /// All length-two paths through the given arrows.
    fn length_two_paths(&self) -> Vec<Path> {
        let mut out = Vec::new();
        for i in 0..self.arrows.len() {
            for j in 0..self.arrows.len() {
                if self.arrows[i].target == self.arrows[j].source {
                    out.push(vec![i, j]);
                }
            }
        }
        out
    }

    /// Check that relations are well-formed paths sharing endpoints.
    pub fn validate(&self) -> Result<()> {
        for r in &self.relations {
            let mut ends = BTreeSet::new();
            for (_, p) in &r.terms {
                if p.is_empty() || !self.is_path(p) {
                    return Err(HypermatError::Unsupported(format!(
                        "relation term {p:?} is not a path"
                    )));
                }
                ends.insert(self.endpoints(p));
            }
            if ends.len() != 1 {
                return Err(HypermatError::Unsupported(
                    "relation terms have different endpoints".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn path_names(&self, p: &[usize]) -> Vec<String> {
        p.iter().map(|&i| self.arrows[i].name.clone()).collect()
    }

    /// Graphviz DOT rendering.
    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph quiver_n{} {{\n", self.n);
        for x in &self.vertices {
            s.push_str(&format!("  \"{x}\";\n"));
        }
        for a in &self.arrows {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                a.source, a.target, a.name
            ));
        }
        s.push_str("}\n");
        s
    }
}

fn quiver_n3() -> Quiver {
    let mut b = Builder { arrows: Vec::new() };
    b.pair("a1", "b1", v(0), v(1));
    b.pair("a2", "b2", v(1), v(2));
    b.pair("a3", "b3", v(3), P6);
    b.pair("a4", "b4", P6, v(4));
    b.pair("a5", "b5", v(2), v(5));
    b.pair("a6", "b6", v(5), v(6));
    b.pair("a7", "b7", v(6), v(7));
    b.pair("a8", "b8", v(7), v(8));
    b.pair("a1'", "b1'", v(1), P6);
    b.pair("a7'", "b7'", P6, v(7));
    let mut q = Quiver {
        n: 3,
        vertices: SimpleLabel::simples(3),
        arrows: b.arrows,
        relations: Vec::new(),
        provenance: "quiver-n3",
    };
    let mut rels = q.two_cycles();
    let listed: [[&str; 2]; 24] = [
        ["a1", "a2"],
        ["b2", "b1"],
        ["a2", "a5"],
        ["b5", "b2"],
        ["a5", "a6"],
        ["b6", "b5"],
        ["a6", "a7"],
        ["b7", "b6"],
        ["a7", "a8"],
        ["b8", "b7"],
        ["b2", "a1'"],
        ["b1'", "a2"],
        ["a7", "b7'"],
        ["a7'", "b7"],
        ["a1'", "b3"],
        ["a3", "b1'"],
        ["a1'", "a4"],
        ["b4", "b1'"],
        ["b7'", "b3"],
        ["a3", "a7'"],
        ["b7'", "a4"],
        ["b4", "a7'"],
        ["b2", "a2"],
        ["a7", "b7"],
    ];
    for names in listed {
        rels.push(Relation::monomial(q.path_by_names(&names)));
    }
    q.relations = dedup(rels);
    q
}

fn quiver_n4() -> Quiver {
    let mut b = Builder { arrows: Vec::new() };
    b.pair("a02", "a20", v(0), v(2));
    b.pair("a26", "a62", v(2), v(6));
    b.pair("a68", "a86", v(6), v(8));
    b.pair("a89", "a98", v(8), v(9));
    b.pair("a12", "a21", v(1), v(2));
    b.pair("a56", "a65", v(5), v(6));
    b.pair("a78", "a87", v(7), v(8));
    b.pair("a36'", "a6'3", v(3), P6);
    b.pair("a6'4", "a46'", P6, v(4));
    let mut q = Quiver {
        n: 4,
        vertices: SimpleLabel::simples(4),
        arrows: b.arrows,
        relations: Vec::new(),
        provenance: "quiver-n4",
    };
    let mut rels = q.two_cycles();
    let special = [v(1), v(5), v(7)];
    for p in q.length_two_paths() {
        let (s, t) = q.endpoints(&p);
        if special.contains(&s) || special.contains(&t) {
            rels.push(Relation::monomial(p));
        }
    }
    q.relations = dedup(rels);
    q
}

fn quiver_n5(n: usize) -> Quiver {
    let mut b = Builder { arrows: Vec::new() };
    b.pair("a12", "a21", v(1), v(2));
    b.pair("a56", "a65", v(5), v(6));
    b.pair("a78", "a87", v(7), v(8));
    b.pair("a36'", "a6'3", v(3), P6);
    b.pair("a6'4", "a46'", P6, v(4));
    let mut q = Quiver {
        n,
        vertices: SimpleLabel::simples(n),
        arrows: b.arrows,
        relations: Vec::new(),
        provenance: "quiver-n-at-least-5",
    };
    q.relations = dedup(q.two_cycles());
    q
}

fn dedup(rels: Vec<Relation>) -> Vec<Relation> {
    let set: BTreeSet<Relation> = rels.into_iter().map(Relation::normalized).collect();
    set.into_iter().collect()
}

pub fn build_quiver(n: usize) -> Result<Quiver> {
    let q = match n {
        0..=2 => return Err(HypermatError::BadN(n)),
        3 => quiver_n3(),
        4 => quiver_n4(),
        _ => quiver_n5(n),
    };
    q.validate()?;
    Ok(q)
}

/// Residue classes of paths `i → j` modulo the relation ideal.
#[derive(Clone, Debug, Serialize)]
pub struct PathSpace {
    pub source: SimpleLabel,
    pub target: SimpleLabel,
    /// Standard monomials, by arrow name; the empty path is the trivial path.
    pub basis: Vec<Vec<String>>,
    pub dim: usize,
    pub provenance: &'static str,
}

/// All paths of length exactly `len` (as arrow sequences).
fn paths_of_length(q: &Quiver, len: usize) -> Vec<Path> {
    let mut layer: Vec<Path> = (0..q.arrows.len()).map(|i| vec![i]).collect();
    for _ in 1..len {
        let mut next = Vec::new();
        for p in &layer {
            let end = q.arrows[*p.last().unwrap()].target;
            for (j, a) in q.arrows.iter().enumerate() {
                if a.source == end {
                    let mut np = p.clone();
                    np.push(j);
                    next.push(np);
                }
            }
        }
        layer = next;
    }
    layer
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Row-reduce integer vectors; returns the pivot columns.
fn pivots(mut rows: Vec<Vec<i128>>) -> BTreeSet<usize> {
    let mut piv = BTreeSet::new();
    let width = rows.first().map_or(0, |r| r.len());
    let mut r0 = 0;
    for c in 0..width {
        let Some(k) = (r0..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r0, k);
        for k in 0..rows.len() {
            if k != r0 && rows[k][c] != 0 {
                let (a, b) = (rows[r0][c], rows[k][c]);
                let row0 = rows[r0].clone();
                for (x, y) in rows[k].iter_mut().zip(row0) {
                    *x = *x * a - y * b;
                }
                let g = rows[k].iter().fold(0, |g, &x| gcd(g, x));
                if g > 1 {
                    rows[k].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        piv.insert(c);
        r0 += 1;
    }
    piv
}

/// Standard monomials of length `len` from `i` to `j`: paths not in the
/// span of `u·r·w` for relations `r`. Monomial relations reduce to
/// subword avoidance; binomial ones go through exact row reduction.
fn residue_paths(
    q: &Quiver,
    len: usize,
    i: Option<SimpleLabel>,
    j: Option<SimpleLabel>,
) -> Vec<Path> {
    let all: Vec<Path> = paths_of_length(q, len)
        .into_iter()
        .filter(|p| {
            let (s, t) = q.endpoints(p);
            i.is_none_or(|x| x == s) && j.is_none_or(|y| y == t)
        })
        .collect();
    if q.relations.iter().all(Relation::is_monomial) {
        let forbidden: Vec<&Path> = q.relations.iter().map(|r| &r.terms[0].1).collect();
        return all
            .into_iter()
            .filter(|p| {
                !forbidden
                    .iter()
                    .any(|f| p.windows(f.len()).any(|w| w == f.as_slice()))
            })
            .collect();
    }
    let index: BTreeMap<&Path, usize> = all.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut rows = Vec::new();
    for r in &q.relations {
        let rl = r.terms[0].1.len();
        if rl > len {
            continue;
        }
        for pre in 0..=len - rl {
            let post = len - rl - pre;
            // Enumerate u·r·w by embedding the first term and swapping it out.
            for p in &all {
                if p[pre..pre + rl] != r.terms[0].1[..] {
                    continue;
                }
                let mut row = vec![0i128; all.len()];
                let mut ok = true;
                for (c, t) in &r.terms {
                    let mut np = p[..pre].to_vec();
                    np.extend(t);
                    np.extend(&p[pre + rl..pre + rl + post]);
                    match index.get(&np) {
                        Some(&k) => row[k] += *c as i128,
                        None => ok = false,
                    }
                }
                if ok {
                    rows.push(row);
                }
            }
        }
    }
    // Reverse column order so that pivots fall on the largest paths and
    // the standard monomials are the smallest ones.
    let n = all.len();
    let rev: Vec<Vec<i128>> = rows
        .into_iter()
        .map(|r| r.into_iter().rev().collect())
        .collect();
    let piv = pivots(rev);
    (0..n)
        .filter(|k| !piv.contains(&(n - 1 - k)))
        .map(|k| all[k].clone())
        .collect()
}

/// Basis of the path space `i → j` modulo relations.
pub fn path_space(q: &Quiver, i: SimpleLabel, j: SimpleLabel) -> Result<PathSpace> {
    for x in [i, j] {
        if !q.vertices.contains(&x) {
            return Err(HypermatError::UnknownLabel(format!(
                "vertex {x} at n = {}",
                q.n
            )));
        }
    }
    let mut basis: Vec<Vec<String>> = Vec::new();
    if i == j {
        basis.push(Vec::new());
    }
    for len in 1..=DEPTH_CAP + 1 {
        let global = residue_paths(q, len, None, None);
        if global.is_empty() {
            let dim = basis.len();
            return Ok(PathSpace {
                source: i,
                target: j,
                basis,
                dim,
                provenance: "path-algebra-modulo-relations",
            });
        }
        if len > DEPTH_CAP {
            break;
        }
        for p in residue_paths(q, len, Some(i), Some(j)) {
            basis.push(q.path_names(&p));
        }
    }
    Err(HypermatError::DepthCap(DEPTH_CAP))
}

/// Length of the longest nonzero path, or a depth-cap error.
pub fn longest_nonzero_path(q: &Quiver) -> Result<usize> {
    for len in 1..=DEPTH_CAP + 1 {
        if residue_paths(q, len, None, None).is_empty() {
            return Ok(len - 1);
        }
    }
    Err(HypermatError::DepthCap(DEPTH_CAP))
}

/// Outcome of checking that a vertex permutation is a quiver automorphism.
#[derive(Clone, Debug, Serialize)]
pub struct SymmetryCheck {
    pub name: String,
    pub vertex_map: Vec<(SimpleLabel, SimpleLabel)>,
    pub arrow_map: Vec<(String, String)>,
    pub holds: bool,
    pub involution: bool,
    pub failure: Option<String>,
}

fn arrow_map_for(
    q: &Quiver,
    perm: &BTreeMap<SimpleLabel, SimpleLabel>,
    reverse: bool,
) -> Result<Vec<usize>> {
    q.arrows
        .iter()
        .map(|a| {
            let (s, t) = (perm[&a.source], perm[&a.target]);
            let (s, t) = if reverse { (t, s) } else { (s, t) };
            match q.arrow_between(s, t)[..] {
                [k] => Ok(k),
                _ => Err(HypermatError::Unsupported(format!(
                    "no unique arrow {s} -> {t} as the image of {}",
                    a.name
                ))),
            }
        })
        .collect()
}

fn check_map(
    q: &Quiver,
    name: &str,
    perm: BTreeMap<SimpleLabel, SimpleLabel>,
    reverse: bool,
) -> SymmetryCheck {
    let vertex_map: Vec<(SimpleLabel, SimpleLabel)> = perm.iter().map(|(&a, &b)| (a, b)).collect();
    let fail = |msg: String, arrow_map: Vec<(String, String)>| SymmetryCheck {
        name: name.into(),
        vertex_map: vertex_map.clone(),
        arrow_map,
        holds: false,
        involution: false,
        failure: Some(msg),
    };
    let amap = match arrow_map_for(q, &perm, reverse) {
        Ok(m) => m,
        Err(e) => return fail(e.to_string(), Vec::new()),
    };
    let names: Vec<(String, String)> = amap
        .iter()
        .enumerate()
        .map(|(i, &j)| (q.arrows[i].name.clone(), q.arrows[j].name.clone()))
        .collect();
    let bijective = amap.iter().collect::<BTreeSet<_>>().len() == amap.len();
    if !bijective {
        return fail("arrow map is not a bijection".into(), names);
    }
    let original: BTreeSet<Relation> = q.relations.iter().cloned().collect();
    for r in &q.relations {
        let image = Relation {
            terms: r
                .terms
                .iter()
                .map(|(c, p)| {
                    let mut np: Path = p.iter().map(|&i| amap[i]).collect();
                    if reverse {
                        np.reverse();
                    }
                    (*c, np)
                })
                .collect(),
        }
        .normalized();
        if !original.contains(&image) {
            let shown: Vec<Vec<String>> = r.terms.iter().map(|(_, p)| q.path_names(p)).collect();
            return fail(
                format!("relation {shown:?} is not mapped to a relation"),
                names,
            );
        }
    }
    let involution = (0..amap.len()).all(|i| amap[amap[i]] == i);
    SymmetryCheck {
        name: name.into(),
        vertex_map,
        arrow_map: names,
        holds: true,
        involution,
        failure: None,
    }
}

/// The automorphisms and anti-automorphisms checked for each quiver:
/// the Fourier vertex permutation, the Fourier permutation composed with
/// the exchange of `(3)` and `(4)`, and arrow reversal (duality).
pub fn check_symmetries(q: &Quiver) -> Result<Vec<SymmetryCheck>> {
    let n = q.n;
    let mut f = BTreeMap::new();
    for &x in &q.vertices {
        f.insert(x, fourier(x, n)?);
    }
    let mut f34 = f.clone();
    f34.insert(v(3), v(4));
    f34.insert(v(4), v(3));
    let id: BTreeMap<SimpleLabel, SimpleLabel> = q.vertices.iter().map(|&x| (x, x)).collect();
    Ok(vec![
        check_map(q, "fourier", f, false),
        check_map(q, "fourier-with-3-4-exchange", f34, false),
        check_map(q, "arrow-reversal", id, true),
    ])
}

/// A connected component of the underlying graph.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<SimpleLabel>,
    /// `isolated`, `doubled-A{k}` (a path of `k` vertices with one arrow in
    /// each direction per edge), or `other`.
    pub kind: String,
    pub arrows: usize,
}

pub fn components(q: &Quiver) -> Vec<Component> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &q.vertices {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for a in &q.arrows {
                for (p, r) in [(a.source, a.target), (a.target, a.source)] {
                    if p == x && comp.insert(r) {
                        stack.push(r);
                    }
                }
            }
        }
        seen.extend(comp.iter().copied());
        let arrows: Vec<&Arrow> = q
            .arrows
            .iter()
            .filter(|a| comp.contains(&a.source))
            .collect();
        let edges: BTreeSet<(SimpleLabel, SimpleLabel)> = arrows
            .iter()
            .map(|a| (a.source.min(a.target), a.source.max(a.target)))
            .collect();
        let doubled = edges.iter().all(|&(x, y)| {
            arrows
                .iter()
                .filter(|a| a.source == x && a.target == y)
                .count()
                == 1
                && arrows
                    .iter()
                    .filter(|a| a.source == y && a.target == x)
                    .count()
                    == 1
        }) && arrows.len() == 2 * edges.len();
        let degrees_ok = comp
            .iter()
            .all(|&x| edges.iter().filter(|e| e.0 == x || e.1 == x).count() <= 2);
        let is_path = edges.len() + 1 == comp.len() && degrees_ok;
        let kind = if comp.len() == 1 && arrows.is_empty() {
            "isolated".to_string()
        } else if doubled && is_path {
            format!("doubled-A{}", comp.len())
        } else {
            "other".to_string()
        };
        out.push(Component {
            vertices: comp.into_iter().collect(),
            kind,
            arrows: arrows.len(),
        });
    }
    out
}

/// A representation: a vector space dimension per vertex and a matrix per
/// arrow (rows = target dimension).
#[derive(Clone, Debug, Serialize)]
pub struct Representation {
    pub dims: BTreeMap<SimpleLabel, usize>,
    pub maps: BTreeMap<String, Vec<Vec<i64>>>,
}

fn mat_mul(
    b: &[Vec<i64>],
    a: &[Vec<i64>],
    inner: usize,
    rows: usize,
    cols: usize,
) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| (0..inner).map(|k| b[r][k] * a[k][c]).sum())
                .collect()
        })
        .collect()
}

impl Representation {
    fn map(&self, q: &Quiver, i: usize) -> Vec<Vec<i64>> {
        let a = &q.arrows[i];
        let (ds, dt) = (
            self.dims.get(&a.source).copied().unwrap_or(0),
            self.dims.get(&a.target).copied().unwrap_or(0),
        );
        self.maps
            .get(&a.name)
            .cloned()
            .unwrap_or_else(|| vec![vec![0; ds]; dt])
    }

    fn path_matrix(&self, q: &Quiver, p: &[usize]) -> Vec<Vec<i64>> {
        let d0 = self.dims.get(&q.arrows[p[0]].source).copied().unwrap_or(0);
        let mut m: Vec<Vec<i64>> = (0..d0)
            .map(|r| (0..d0).map(|c| i64::from(r == c)).collect())
            .collect();
        let mut cur = d0;
        for &i in p {
            let next = self.dims.get(&q.arrows[i].target).copied().unwrap_or(0);
            m = mat_mul(&self.map(q, i), &m, cur, next, d0);
            cur = next;
        }
        m
    }

    /// Relations violated by this representation.
    pub fn violated(&self, q: &Quiver) -> Vec<Vec<Vec<String>>> {
        let mut bad = Vec::new();
        for r in &q.relations {
            let mats: Vec<(i64, Vec<Vec<i64>>)> = r
                .terms
                .iter()
                .map(|(c, p)| (*c, self.path_matrix(q, p)))
                .collect();
            let rows = mats[0].1.len();
            let cols = mats[0].1.first().map_or(0, |x| x.len());
            let zero = (0..rows).all(|i| {
                (0..cols).all(|j| mats.iter().map(|(c, m)| c * m[i][j]).sum::<i64>() == 0)
            });
            if !zero {
                bad.push(
                    r.terms
                        .iter()
                        .map(|(_, p)| q.path_names(p))
                        .collect::<Vec<_>>()
                        .concat(),
                );
            }
        }
        bad.into_iter().map(|v| vec![v]).collect()
    }
}

/// The representation of `S_f` at `n = 3`: one-dimensional spaces along
/// `(0) → (1) → (6') → (7) → (8)` with identity maps.
pub fn sf_representation(q: &Quiver) -> Result<Representation> {
    if q.n != 3 {
        return Err(HypermatError::Unsupported(
            "the S_f representation is recorded for n = 3".into(),
        ));
    }
    let dims = [v(0), v(1), P6, v(7), v(8)]
        .into_iter()
        .map(|x| (x, 1))
        .collect();
    let maps = ["a1", "a1'", "a7'", "a8"]
        .into_iter()
        .map(|s| (s.to_string(), vec![vec![1]]))
        .collect();
    Ok(Representation { dims, maps })
}

/// The path of `S_f` and whether it survives modulo relations.
pub fn sf_path_nonzero(q: &Quiver) -> Result<bool> {
    let ps = path_space(q, v(0), v(8))?;
    let want: Vec<String> = ["a1", "a1'", "a7'", "a8"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Ok(ps.basis.contains(&want))
}

/// A string: a walk of direct and inverse arrows avoiding relations,
/// up to inversion. Trivial strings are single vertices.
#[derive(Clone, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct StringModule {
    pub start: SimpleLabel,
    /// `(arrow name, direct?)` letters.
    pub letters: Vec<(String, bool)>,
}

/// String modules of the quiver, for quivers with monomial length-two
/// relations. Every indecomposable of a representation-finite string
/// algebra is a string module.
pub fn string_modules(q: &Quiver) -> Result<Vec<StringModule>> {
    if !q
        .relations
        .iter()
        .all(|r| r.is_monomial() && r.terms[0].1.len() == 2)
    {
        return Err(HypermatError::Unsupported(
            "string enumeration needs monomial length-two relations".into(),
        ));
    }
    let zero: BTreeSet<(usize, usize)> = q
        .relations
        .iter()
        .map(|r| (r.terms[0].1[0], r.terms[0].1[1]))
        .collect();
    // A letter is (arrow, direct). Walking a direct letter goes source → target.
    let ends = |l: (usize, bool)| {
        let a = &q.arrows[l.0];
        if l.1 {
            (a.source, a.target)
        } else {
            (a.target, a.source)
        }
    };
    let allowed = |x: (usize, bool), y: (usize, bool)| {
        if x.0 == y.0 && x.1 != y.1 {
            return false;
        }
        match (x.1, y.1) {
            (true, true) => !zero.contains(&(x.0, y.0)),
            (false, false) => !zero.contains(&(y.0, x.0)),
            _ => true,
        }
    };
    let letters: Vec<(usize, bool)> = (0..q.arrows.len())
        .flat_map(|i| [(i, true), (i, false)])
        .collect();
    let mut found: BTreeSet<Vec<(usize, bool)>> = BTreeSet::new();
    let mut layer: Vec<Vec<(usize, bool)>> = letters.iter().map(|&l| vec![l]).collect();
    let mut len = 1;
    while !layer.is_empty() {
        if len > 2 * DEPTH_CAP {
            return Err(HypermatError::DepthCap(2 * DEPTH_CAP));
        }
        let mut next = Vec::new();
        for w in layer {
            let inv: Vec<(usize, bool)> = w.iter().rev().map(|&(i, d)| (i, !d)).collect();
            found.insert(w.clone().min(inv));
            let last = *w.last().unwrap();
            for &l in &letters {
                if ends(last).1 == ends(l).0 && allowed(last, l) {
                    let mut nw = w.clone();
                    nw.push(l);
                    next.push(nw);
                }
            }
        }
        layer = next;
        len += 1;
    }
    let mut out: Vec<StringModule> = q
        .vertices
        .iter()
        .map(|&x| StringModule {
            start: x,
            letters: Vec::new(),
        })
        .collect();
    for w in found {
        out.push(StringModule {
            start: ends(w[0]).0,
            letters: w
                .iter()
                .map(|&(i, d)| (q.arrows[i].name.clone(), d))
                .collect(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrow_counts() {
        assert_eq!(build_quiver(3).unwrap().arrows.len(), 20);
        assert_eq!(build_quiver(4).unwrap().arrows.len(), 18);
        for n in 5..=7 {
            assert_eq!(build_quiver(n).unwrap().arrows.len(), 10);
        }
        assert!(build_quiver(2).is_err());
    }

    #[test]
    fn sf_path_survives_and_satisfies_relations() {
        let q = build_quiver(3).unwrap();
        assert!(sf_path_nonzero(&q).unwrap());
        assert!(sf_representation(&q).unwrap().violated(&q).is_empty());
    }

    #[test]
    fn quoted_path_spaces() {
        let q5 = build_quiver(5).unwrap();
        assert_eq!(path_space(&q5, v(5), v(5)).unwrap().dim, 1);
        let q4 = build_quiver(4).unwrap();
        let ps = path_space(&q4, v(3), v(4)).unwrap();
        assert_eq!(ps.dim, 1);
        assert_eq!(ps.basis[0], vec!["a36'".to_string(), "a6'4".to_string()]);
    }

    #[test]
    fn symmetries_hold() {
        for n in 3..=6 {
            let q = build_quiver(n).unwrap();
            for c in check_symmetries(&q).unwrap() {
                assert!(c.holds, "{} at n = {n}: {:?}", c.name, c.failure);
                assert!(c.involution);
            }
        }
    }

    #[test]
    fn census_for_large_n() {
        let q = build_quiver(5).unwrap();
        let kinds: Vec<String> = components(&q).into_iter().map(|c| c.kind).collect();
        assert_eq!(kinds.iter().filter(|k| *k == "isolated").count(), 2);
        assert_eq!(kinds.iter().filter(|k| *k == "doubled-A2").count(), 3);
        assert_eq!(kinds.iter().filter(|k| *k == "doubled-A3").count(), 1);
    }

    #[test]
    fn binomial_relations_reduce() {
        let mut q = build_quiver(5).unwrap();
        // Replace the two 2-cycles at (6') by their difference.
        let a = q.path_by_names(&["a6'3", "a36'"]);
        let b = q.path_by_names(&["a6'4", "a46'"]);
        q.relations
            .retain(|r| r.terms[0].1 != a && r.terms[0].1 != b);
        q.relations.push(Relation {
            terms: vec![(1, a), (-1, b)],
        });
        let ps = path_space(&q, P6, P6);
        // The remaining 2-cycles at (3) and (4) kill every length-four path.
        assert_eq!(ps.unwrap().dim, 2);
    }

    #[test]
    fn strings_of_doubled_a2() {
        let q = build_quiver(5).unwrap();
        let s = string_modules(&q).unwrap();
        let in12 = s
            .iter()
            .filter(|m| m.start == v(1) || m.start == v(2))
            .count();
        assert_eq!(in12, 4);
    }
}
