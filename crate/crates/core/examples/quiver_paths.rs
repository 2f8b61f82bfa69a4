//! Quivers with relations: the nonzero path carrying the localization at
//! n = 3, and the symmetry checks.

use hypermat::orbits::SimpleLabel;
use hypermat::quiver::{build_quiver, check_symmetries, components, path_space};

fn main() {
    let q = build_quiver(3).unwrap();
    let ps = path_space(&q, SimpleLabel::D(0), SimpleLabel::D(8)).unwrap();
    println!("paths (0) -> (8): {:?}", ps.basis);
    for c in check_symmetries(&q).unwrap() {
        println!("{}: holds = {}", c.name, c.holds);
    }
    for c in components(&build_quiver(5).unwrap()) {
        println!(
            "{:?}: {}",
            c.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            c.kind
        );
    }
}
